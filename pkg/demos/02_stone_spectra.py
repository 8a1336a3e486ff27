"""Stone spectra: quasipoints, basic open sets and complete distributivity.

A quasipoint is a maximal dual ideal (filter); in a finite lattice these are
exactly the up-sets of atoms, so the spectrum is as small as the atom count.

Run:  python3 demos/02_stone_spectra.py
"""

from stonespec import (boolean_lattice, chain_lattice,
                       is_completely_distributive, mo_lattice,
                       principal_dual_ideal, stone_space)

for label, lat in [("boolean(3)", boolean_lattice(3)),
                   ("MO(2)", mo_lattice(2)),
                   ("chain(3)", chain_lattice(3))]:
    space = stone_space(lat)
    print(f"== {label}: {space.n_points} quasipoints ==")
    for k in range(space.n_points):
        print("  ", space.point_name(k))
    print("   open sets of the spectrum:", len(space.opens()))
    print()

print("== basic sets multiply like meets ==")
mo2 = mo_lattice(2)
space = stone_space(mo2)
qa, qb = space.q("a"), space.q("b")
print("Q_a =", bin(qa), " Q_b =", bin(qb), " Q_(a&b) =",
      bin(space.q(mo2.meet2(mo2.eid("a"), mo2.eid("b")))))

print()
print("== MO(2) is not completely distributive ==")
ok, witness = is_completely_distributive(mo2)
print("closure law holds for every family?", ok)
print("first failing family:", witness)
u = 0
for name in witness:
    u |= space.q(name)
print("  union of the basic sets:", bin(u), "-> closure:", bin(space.closure(u)))
print("  basic set of the join (the top):", bin(space.q("1")))

print()
print("== the principal filter at a chain top is not an intersection of quasipoints ==")
c3 = chain_lattice(3)
print("H_1 =", principal_dual_ideal(c3, "1").element_names())
print("the only quasipoint:", stone_space(c3).point_name(0))
