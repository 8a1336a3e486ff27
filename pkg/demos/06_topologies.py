"""Continuous functions as strongly regular families, and the point calculus.

Over a topology, the level-set family takes interiors; continuity of the
point function corresponds exactly to strong regularity of the family (every
step value closed).  On discrete spaces the spectrum reproduces the space and
point functions transfer to an exact function algebra on it.

Run:  python3 demos/06_topologies.py
"""

from fractions import Fraction

from stonespec import (ObservableFunction, TopSpace, all_topologies,
                       completely_increasing_check, f_star, induced_function,
                       is_continuous, is_strongly_regular, pt_structure,
                       r_function, spectral_family_of_continuous,
                       star_condition_check, stone_space)

print("== the two-point space with opens {}, {1}, {1,2} ==")
s = TopSpace.from_sets(("1", "2"), [[], ["1"], ["1", "2"]])
step = (Fraction(0), Fraction(1))
print("is the step function continuous?", is_continuous(s, step))
e = spectral_family_of_continuous(s, step)
print("its level-set family:", e)
ok, witness = is_strongly_regular(s, e)
print("strongly regular?", ok, " witness pair:", witness)
print("regular opens of the space:", [s.set_name(m) for m in s.regular_opens()])

print()
print("== on a discrete space everything matches up ==")
d = TopSpace.discrete(("1", "2", "3"))
ramp = (Fraction(0), Fraction(1, 2), Fraction(1))
e2 = spectral_family_of_continuous(d, ramp)
print("continuous?", is_continuous(d, ramp),
      " strongly regular?", is_strongly_regular(d, e2)[0])
print("induced function returns the input:", induced_function(d, e2) == ramp)

print()
print("== quasipoints over points ==")
p = pt_structure(d)
print("fibres:", p.fibres())
g = f_star(d, ramp, (0, 0, 0))
for k, x in sorted(p.pt.items()):
    print(f"  f*(phi) at the quasipoint over {d.points[x]} = {g.value(k)}")

print()
print("== the completely increasing calculus ==")
st = stone_space(d.r_lattice())
g2 = ObservableFunction(st, [Fraction(0), Fraction(2), Fraction(1)])
r = r_function(d, g2)
lat = d.r_lattice()
for e_id in sorted(r):
    print(f"  r({lat.names[e_id]}) = {r[e_id]}")
print("completely increasing:", completely_increasing_check(lat, r)[0])
print("infimum condition:", star_condition_check(d, g2)[0])

print()
print("== the topology zoo ==")
for n in (1, 2, 3, 4):
    print(f"  topologies on {n} labeled points:", len(all_topologies(n)))
