"""Finite bounded lattices: construction, validation, meets and joins.

Run:  python3 demos/01_finite_lattices.py
"""

from stonespec import Lattice, boolean_lattice, chain_lattice, mo_lattice

print("== the power set of {x, y} ==")
b2 = boolean_lattice(2)
print("elements:", ", ".join(b2.names))
print("meet(x, y) =", b2.names[b2.meet(["x", "y"])])
print("join(x, y) =", b2.names[b2.join(["x", "y"])])
print("validation:", b2.validate())

print()
print("== MO(2): orthomodular but not distributive ==")
mo2 = mo_lattice(2)
print("elements:", ", ".join(mo2.names))
print("a' =", mo2.names[mo2.ortho_of("a")])
ok, witness = mo2.is_distributive()
print("distributive?", ok, "witness:", witness)
a, b, c = (mo2.eid(x) for x in witness)
lhs = mo2.names[mo2.meet2(a, mo2.join2(b, c))]
rhs = mo2.names[mo2.join2(mo2.meet2(a, b), mo2.meet2(a, c))]
print(f"  {witness[0]} & ({witness[1]} | {witness[2]}) = {lhs}  but  "
      f"({witness[0]} & {witness[1]}) | ({witness[0]} & {witness[2]}) = {rhs}")

print()
print("== the pentagon, flagged distributive, is caught by validate ==")
n5 = Lattice(["0", "a", "c", "b", "1"],
             [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
             flags=("distributive",))
print(n5.validate())

print()
print("== chains are distributive and carry no orthocomplement ==")
c4 = chain_lattice(4)
print("elements:", ", ".join(c4.names))
print("distributive?", c4.is_distributive()[0])
print("atoms:", [c4.names[a] for a in c4.atoms()])
