"""Small hand-built covers with known conductors, shared by several test files.

Every X component is named after the Y component over it ("x_" + id) and
every X edge after a Y edge over it ("b_" + id).
"""

from pcovers.covers import CoverGraph, DualGraph
from pcovers.field import FieldSpec
from pcovers.series import Place, Poly, RationalFunction
from pcovers.torsors import Group

F2 = FieldSpec(2)
ZERO, ONE, INFTY = Place.finite(0), Place.finite(1), Place.infinity()


def x(F=F2):
    return RationalFunction.x(F)


def x_minus(F, c):
    return RationalFunction(Poly(F, (F.neg(c), 1)))


def tree_cover(F, comps, edges, exceptional=(), over=None):
    """comps: {v: (genus, group, u)}; edges: {e: (a, b, place at a, place at b)}.

    over optionally maps Y vertices (resp. edges) to shared X ids, for split fibres.
    """
    over = over or {}
    Yv = {v: g for v, (g, _, _) in comps.items()}
    Ye = {e: (a, b) for e, (a, b, _, _) in edges.items()}
    vmap = {v: over.get(v, "x_" + v) for v in comps}
    emap = {e: over.get(e, "b_" + e) for e in edges}
    Xv = {xv: 0 for xv in vmap.values()}
    Xe = {}
    for e, (a, b) in Ye.items():
        Xe.setdefault(emap[e], (vmap[a], vmap[b]))
    data = {v: (grp, u) for v, (_, grp, u) in comps.items()}
    places = {e: (Pa, Pb) for e, (_, _, Pa, Pb) in edges.items()}
    return CoverGraph(F, DualGraph(Yv, Ye), DualGraph(Xv, Xe), vmap, emap, data, places,
                      tuple(sorted(exceptional)))


def two_vertex(alpha_exp=3, second=Group.ALPHA_P):
    """Etale x^-3 (m = 3 at 0) meeting y1 over F_2 at 0.

    With the default AlphaP x^3 the far side has m = -3 and the pole at
    infinity (order -3 = 1 - 2*2) is the one exceptional point.
    """
    comps = {"y0": (1, Group.ETALE, x() ** -3),
             "y1": (0, second, x() ** alpha_exp)}
    edges = {"e0": ("y0", "y1", ZERO, ZERO)}
    return tree_cover(F2, comps, edges, [("y1", INFTY)])


def path_cover():
    """Etale 1/x -- AlphaP x -- etale 1/x over F_2; d = (0, 1, 0), eps = (1, 1)."""
    comps = {"v0": (0, Group.ETALE, x() ** -1),
             "v1": (0, Group.ALPHA_P, x()),
             "v2": (0, Group.ETALE, x() ** -1)}
    edges = {"a1": ("v0", "v1", ZERO, ZERO),
             "a2": ("v1", "v2", ONE, ZERO)}
    return tree_cover(F2, comps, edges, [("v1", INFTY)])


def fraction_chain():
    """etale -- AlphaP (m = 1 in) -- AlphaP (m = -1 in) -- etale, over F_2.

    Before clearing denominators eps = (1, 1/2, 1/2) and d = (0, 1, 1/2, 0).
    """
    comps = {"v0": (0, Group.ETALE, x() ** -1),
             "v1": (0, Group.ALPHA_P, x()),
             "v2": (0, Group.ALPHA_P, x() ** -1),
             "v3": (0, Group.ETALE, x() ** -1)}
    edges = {"a1": ("v0", "v1", ZERO, ZERO),
             "a2": ("v1", "v2", ONE, ZERO),
             "a3": ("v2", "v3", INFTY, ZERO)}
    return tree_cover(F2, comps, edges, [("v1", INFTY)])


def mu_chain(F=FieldSpec(2, 3)):
    """Etale 1/x -- MuP x^5 -- MuP x^3/(x-1)^3, the last edge with m = 0.

    The MuP root y1 has order 5 at the node, so elimination must give y2
    order -5 there: u' = x^-8 u for the coordinate with divisor 0 - 1.
    """
    comps = {"y0": (0, Group.ETALE, x(F) ** -1),
             "y1": (0, Group.MU_P, x(F) ** 5),
             "y2": (0, Group.MU_P, x(F) ** 3 / x_minus(F, 1) ** 3)}
    edges = {"a": ("y0", "y1", ZERO, ONE),
             "b": ("y1", "y2", ZERO, ZERO)}
    return tree_cover(F, comps, edges, [("y1", INFTY), ("y2", ONE)])


def split_cover():
    """An etale root over F_2 meeting two disjoint copies of an AlphaP line.

    The root y^2 - y = 1/(x(x+1)) is ramified at 0 and 1 (m = 1 each) and
    splits over infinity, where the two copies s0, s1 are attached.
    """
    u = (x() * x_minus(F2, 1)) ** -1
    comps = {"r": (1, Group.ETALE, u),
             "s0": (0, Group.SPLIT, None),
             "s1": (0, Group.SPLIT, None),
             "a": (0, Group.ALPHA_P, x()),
             "b": (0, Group.ALPHA_P, x())}
    edges = {"f0": ("r", "s0", INFTY, ZERO),
             "f1": ("r", "s1", INFTY, ZERO),
             "ra": ("r", "a", ZERO, ZERO),
             "rb": ("r", "b", ONE, ZERO)}
    over = {"s0": "x_s", "s1": "x_s", "f0": "b_f", "f1": "b_f"}
    return tree_cover(F2, comps, edges, [("a", INFTY), ("b", INFTY)], over)


def mu_single():
    """Etale 1/x meeting MuP x^3/(x-1)^3 at infinity, where m = -1 on the MuP side."""
    comps = {"y0": (0, Group.ETALE, x() ** -1),
             "y1": (0, Group.MU_P, x() ** 3 / x_minus(F2, 1) ** 3)}
    edges = {"a": ("y0", "y1", ZERO, INFTY)}
    return tree_cover(F2, comps, edges)


def mu_pipeline():
    """Etale 1/x -- MuP x -- MuP x^3/(x-1)^3 over F_2, ready for the whole pipeline.

    Elimination turns the second chart into (x-1)/x, whose marked point 1
    then already has order 1 = 1 - 2*0.
    """
    comps = {"y0": (0, Group.ETALE, x() ** -1),
             "y1": (0, Group.MU_P, x()),
             "y2": (0, Group.MU_P, x() ** 3 / x_minus(F2, 1) ** 3)}
    edges = {"a": ("y0", "y1", ZERO, ONE),
             "b": ("y1", "y2", ZERO, ZERO)}
    return tree_cover(F2, comps, edges, [("y1", INFTY), ("y2", ONE)])
