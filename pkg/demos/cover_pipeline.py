"""A three-component cover over F_2 run through the whole construction chain.

The chain is etale y^2 - y = 1/x, meeting a MuP component with chart x,
which meets a second MuP component with chart x^3/(x - 1)^3 at a node
where both conductors vanish.

    python3 demos/cover_pipeline.py
"""

from pcovers.covers import (CoverGraph, DualGraph, check_H1_H2, conductor_table,
                            validate_cover)
from pcovers.field import FieldSpec
from pcovers.hurwitz import check_adapted, validate_hurwitz
from pcovers.series import Place, Poly, RationalFunction
from pcovers.torsors import Group
from pcovers.transforms import (PreconditionError, base_thickness, eliminate_mu_p, pipeline,
                                stabilize, synthesize_hurwitz)

F = FieldSpec(2)
x = RationalFunction.x(F)
x1 = RationalFunction(Poly(F, (1, 1)))          # x - 1
ZERO, ONE, INF = Place.finite(0), Place.finite(1), Place.infinity()

Y = DualGraph({"y0": 0, "y1": 0, "y2": 0}, {"a": ("y0", "y1"), "b": ("y1", "y2")})
X = DualGraph({"x0": 0, "x1": 0, "x2": 0}, {"A": ("x0", "x1"), "B": ("x1", "x2")})
cover = CoverGraph(
    F, Y, X, {"y0": "x0", "y1": "x1", "y2": "x2"}, {"a": "A", "b": "B"},
    {"y0": (Group.ETALE, x ** -1), "y1": (Group.MU_P, x), "y2": (Group.MU_P, x ** 3 / x1 ** 3)},
    {"a": (ZERO, ONE), "b": (ZERO, ZERO)},
    (("y1", INF), ("y2", ONE)))


def show(title, c):
    print(f"== {title}")
    for v, (g, u) in sorted(c.vertex_data.items()):
        print(f"  {v}: {g.name:8s} u = {u}")
    for k, r in sorted(conductor_table(c).items(), key=str):
        print(f"  (m, h) at {k}: ({r.m}, {r.h})")
    print(f"  valid: {validate_cover(c).ok}, (H1)/(H2) clauses failing: "
          f"{sorted(check_H1_H2(c).clauses()) or 'none'}")


show("input", cover)
c1 = eliminate_mu_p(cover)
show("after removing the MuP charts", c1)
c2 = stabilize(c1)
show("after stabilizing", c2)

H = synthesize_hurwitz(c2)
print("== Hurwitz data")
print(f"  eps = {H.eps}")
print(f"  d   = {H.d}")
t = base_thickness(H, c2)
print(f"  base thickness p*eps = {t}")
print(f"  axioms hold: {validate_hurwitz(H).ok}, adapted: {check_adapted(H, c2, t).ok}")

# Over F_8 with y1 = x^5 the point (y2, 1) reaches order 5 after elimination.
# Its leaf carries five points of order 1, and du on a line leaves four more
# zeros unmarked, so the Hurwitz axioms fail at the leaf.
F8 = FieldSpec(2, 3)
x8 = RationalFunction.x(F8)
x8_1 = RationalFunction(Poly(F8, (1, 1)))
chain = CoverGraph(
    F8, Y, X, cover.vmap, cover.emap,
    {"y0": (Group.ETALE, x8 ** -1), "y1": (Group.MU_P, x8 ** 5),
     "y2": (Group.MU_P, x8 ** 3 / x8_1 ** 3)},
    cover.edge_places, cover.exceptional)
print("== the same chain over F_8 with y1 = x^5")
try:
    pipeline(chain)
except PreconditionError as exc:
    print(f"  pipeline stops: clauses {sorted(exc.report.clauses())}")
