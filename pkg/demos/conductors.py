"""Orders, residues and conductors of a few small functions.

    python3 demos/conductors.py
"""

from pcovers.field import FieldSpec
from pcovers.series import Place, Poly, RationalFunction, all_places, divisor, dlog_residue
from pcovers.torsors import Group, TorsorSpec, as_reduce, bad_places, conductor_residue
from pcovers.series import expand_at

F = FieldSpec(3)
x = RationalFunction.x(F)
zero = Place.finite(0)

# 1/x^6 + 1/x^2 over F_3: the order 6 term is the cube of a = 1/x^2, and
# u - (a^3 - a) = 2/x^2, so the Artin-Schreier conductor at 0 is 2.
u = x ** -6 + x ** -2
red, m = as_reduce(expand_at(u, zero, 1))
print(f"u = {u}")
print(f"  reduced principal part starts at z^{red.valuation}, conductor m = {m}")

for g in (Group.ETALE, Group.ALPHA_P, Group.MU_P):
    spec = TorsorSpec(g, u)
    print(f"  {g.name:8s} (m, h) at 0: ({(r := conductor_residue(spec, zero)).m}, {r.h})")

# residues of du/u are the orders mod p
w = x ** 5 * RationalFunction(Poly(F, (1, 1)))
print(f"\nw = {w}, divisor {divisor(w)}")
for P in all_places(F):
    print(f"  res at {P}: {dlog_residue(w, P)}")

print("\nplaces where y^3 - y = u is not an unramified torsor:")
for P, cr in bad_places(TorsorSpec(Group.ETALE, u)):
    print(f"  {P}: m = {cr.m}")
