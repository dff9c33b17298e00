from dataclasses import replace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pcovers.covers import (DualGraph, arithmetic_genus, check_H1_H2, conductor_table,
                            validate_cover)
from pcovers.hurwitz import check_adapted, validate_hurwitz
from pcovers.series import RationalFunction, diff_ord, divisor, ord_at
from pcovers.torsors import Group
from pcovers.transforms import (PreconditionError, base_thickness, decompose_n,
                                eliminate_mu_p, pipeline, stabilize, synthesize_hurwitz)

import fixtures as fx
from covergen import cover_corpus
from fixtures import F2, INFTY, ONE, ZERO, x


# -- decompose_n --

def test_decompose_examples():
    d = decompose_n(-3, 2)
    assert (d.q, d.parts) == (1, (2,))
    d = decompose_n(3, 2)
    assert (d.q, d.parts) == (3, (0, 0, 0))
    d = decompose_n(0, 3)
    assert (d.q, d.parts) == (3, (1, 0, 0))


@given(st.integers(-100, 100), st.sampled_from([2, 3, 5]))
def test_decompose_invariants(n, p):
    d = decompose_n(n, p)
    assert d.q > 0 and len(d.parts) == d.q
    assert all(k >= 0 for k in d.parts)
    assert d.total(p) == n
    assert d.q % p == n % p
    if n <= 0:
        assert d.q <= p


# -- eliminate_mu_p --

def test_eliminate_keeps_u_away_from_m_zero_edges():
    c = fx.mu_single()
    out = eliminate_mu_p(c)
    assert out.vertex_data["y1"] == (Group.ALPHA_P, c.vertex_data["y1"][1])
    before, after = conductor_table(c), conductor_table(out)
    assert before[("a", 1)].m == -1 and after[("a", 1)].m == -1
    assert validate_cover(out).ok


def test_eliminate_chain_shifts_by_a_pth_power():
    c = fx.mu_chain()
    out = eliminate_mu_p(c)
    F = c.field
    t = RationalFunction.coordinate(F, ZERO, ONE)
    u2 = c.vertex_data["y2"][1]
    assert out.vertex_data["y1"] == (Group.ALPHA_P, c.vertex_data["y1"][1])
    assert out.vertex_data["y2"] == (Group.ALPHA_P, u2 * t ** -8)
    assert ord_at(out.vertex_data["y2"][1], ZERO) == -5
    tab = conductor_table(out)
    assert tab[("b", 0)].m == -5 and tab[("b", 1)].m == 5
    assert validate_cover(out).ok and check_H1_H2(out).clauses() <= {"H2"}


def test_eliminate_without_mu_is_identity():
    for make in (fx.two_vertex, fx.path_cover, fx.split_cover):
        c = make()
        assert eliminate_mu_p(c) is c


def test_eliminate_needs_a_tree():
    c = fx.mu_chain()
    X = DualGraph(c.X.vertices, {**c.X.edges, "extra": ("x_y0", "x_y2")})
    bad = replace(c, X=X, Y=DualGraph(c.Y.vertices, {**c.Y.edges, "extra": ("y0", "y2")}),
                  emap={**c.emap, "extra": "extra"},
                  edge_places={**c.edge_places, "extra": (INFTY, INFTY)})
    with pytest.raises((ValueError, PreconditionError)):
        eliminate_mu_p(bad)


def test_eliminate_rejects_invalid_input():
    with pytest.raises(PreconditionError):
        eliminate_mu_p(fx.two_vertex(5))


CORPUS = cover_corpus(60, seed=4)


@pytest.mark.parametrize("i", range(len(CORPUS)))
def test_eliminate_properties(i):
    c = CORPUS[i]
    out = eliminate_mu_p(c)
    assert not any(g is Group.MU_P for g, _ in out.vertex_data.values())
    assert validate_cover(out).ok
    assert "H1" not in check_H1_H2(out).clauses()
    before, after = conductor_table(c), conductor_table(out)
    for k, r in before.items():
        if r.m:
            assert after[k].m == r.m
    assert eliminate_mu_p(out) is out


# -- stabilize --

def _etale_point(u, P, genus=1):
    return fx.tree_cover(F2, {"v": (genus, Group.ETALE, u)}, {}, [("v", P)])


def test_stabilize_pole_of_order_three():
    c = _etale_point(x() ** -3, ZERO)
    out = stabilize(c)
    u = out.vertex_data["v@0"]
    assert u[0] is Group.ALPHA_P
    assert divisor(u[1]) == [(ZERO, 3), (ONE, -3)]
    assert out.edge_places["v@0"] == (ZERO, ZERO)
    assert out.exceptional == (("v@0", ONE),)
    assert validate_cover(out).ok and check_H1_H2(out).ok
    assert arithmetic_genus(out.Y) == arithmetic_genus(c.Y) == 1
    assert arithmetic_genus(out.X) == arithmetic_genus(c.X) == 0


def test_stabilize_order_one():
    c = _etale_point(x() ** -3 * fx.x_minus(F2, 1), ONE)
    out = stabilize(c)
    assert divisor(out.vertex_data["v@1"][1]) == [(ZERO, 1), (ONE, -1)]


def test_stabilize_without_points_is_identity():
    c = replace(fx.path_cover(), exceptional=())
    assert stabilize(c) is c
    c = fx.two_vertex()          # its point already has order 1 - 2n
    assert stabilize(c) is c


def test_stabilize_needs_H1():
    with pytest.raises(PreconditionError) as exc:
        stabilize(fx.mu_chain())
    assert "H1" in exc.value.report.clauses()


def test_stabilize_enlarge_field():
    c = eliminate_mu_p(fx.mu_chain(F2))
    with pytest.raises(ValueError, match="enlarge field"):
        stabilize(c)


@pytest.mark.parametrize("i", range(len(CORPUS)))
def test_stabilize_properties(i):
    c = eliminate_mu_p(CORPUS[i])
    out = stabilize(c)
    assert validate_cover(out).ok
    assert check_H1_H2(out).ok
    assert arithmetic_genus(out.Y) == arithmetic_genus(c.Y)
    assert arithmetic_genus(out.X) == arithmetic_genus(c.X)
    assert stabilize(out) is out


def test_leaf_with_several_points_keeps_extra_zeros_of_du():
    """A leaf built for order n > 1 satisfies (H2) at its marked points only.

    After elimination the chain's point (y2, 1) has order 5, so the leaf
    needs q = 5 points of order 1.  On a line du has degree -2 and the
    marked places account for -q - 1 of it, leaving q - 1 = 4 zeros where
    the chart is not a torsor.
    """
    c = stabilize(eliminate_mu_p(fx.mu_chain()))
    assert validate_cover(c).ok and check_H1_H2(c).ok
    u = c.vertex_data["y2@1"][1]
    marked = {P for P, _ in c.places_at("y2@1")}
    assert len(marked) == 6
    assert sum(diff_ord(u, P) for P in marked) == -6
    with pytest.raises(PreconditionError) as exc:
        synthesize_hurwitz(c)
    assert "2" in exc.value.report.clauses()


@pytest.mark.xfail(strict=True, raises=PreconditionError,
                   reason="a leaf with q > 1 prescribed points has unmarked non-torsor points")
def test_pipeline_on_a_point_of_order_five():
    pipeline(fx.mu_chain())


# -- synthesize_hurwitz --

def test_synthesize_path():
    H = synthesize_hurwitz(fx.path_cover())
    assert H.d == {"v0": 0, "v1": 1, "v2": 0, "v1@inf": 2}
    assert H.eps == {"a1": 1, "a2": 1, "v1@inf": 1}


def test_synthesize_leaf():
    c = stabilize(_etale_point(x() ** -3, ZERO))
    H = synthesize_hurwitz(c)
    assert H.d["v"] == 0 and H.d["v@0"] == 3
    assert H.eps["v@0"] == 1
    # the double point model gives d_t = e m (p - 1) = 3
    assert H.d["v@0"] - H.d["v"] == H.eps["v@0"] * 3 * (2 - 1)
    assert check_adapted(H, c, base_thickness(H, c)).ok


def test_synthesize_fraction_chain():
    H = synthesize_hurwitz(fx.fraction_chain())
    assert [H.eps[e] for e in ("a1", "a2", "a3")] == [2, 1, 1]
    assert [H.d[v] for v in ("v0", "v1", "v2", "v3")] == [0, 2, 1, 0]
    assert validate_hurwitz(H).ok


def test_synthesize_split_cover():
    c, H = pipeline(fx.split_cover())
    assert H.eps["f0"] == H.eps["f1"] == 1
    assert H.d["s0"] == H.d["s1"] == 0
    assert validate_hurwitz(H).ok


def test_synthesize_preconditions():
    with pytest.raises(PreconditionError):
        synthesize_hurwitz(fx.mu_chain())
    c = fx.tree_cover(F2, {"v": (0, Group.ALPHA_P, x() ** -3 * fx.x_minus(F2, 1))}, {}, [])
    with pytest.raises(PreconditionError, match="no etale component"):
        synthesize_hurwitz(c)


def test_pipeline_with_mu_components():
    c, H = pipeline(fx.mu_pipeline())
    assert H.eps == {"a": 2, "b": 1, "y1@inf": 2, "y2@1": 1}
    assert H.d == {"y0": 0, "y1": 2, "y2": 1, "y1@inf": 4, "y2@1": 0}
    assert validate_hurwitz(H).ok
    assert check_adapted(H, c, base_thickness(H, c)).ok


@pytest.mark.parametrize("i", range(len(CORPUS)))
def test_synthesize_properties(i):
    c, H = pipeline(CORPUS[i])
    p = c.p
    assert validate_hurwitz(H).ok
    assert check_adapted(H, c, base_thickness(H, c)).ok
    for e in c.Y.edges:
        assert isinstance(H.eps[e], int) and H.eps[e] >= 1
    for v, dv in H.d.items():
        assert dv % (p - 1) == 0 and dv >= 0
    for v in c.Y.vertices:
        assert (H.d[v] == 0) == (c.group(v) in (Group.ETALE, Group.SPLIT))
