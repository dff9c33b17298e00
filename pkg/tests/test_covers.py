import random
from dataclasses import replace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pcovers.covers import (CoverGraph, DualGraph, arithmetic_genus, check_H1_H2,
                            conductor_table, is_one_minus_pn, stability_check,
                            validate_cover)
from pcovers.series import Place, ord_at
from pcovers.torsors import Group, ConductorResidue

import fixtures as fx
from covergen import cover_corpus
from fixtures import F2, INFTY, ONE, ZERO, x


# -- dual graphs --

def test_arithmetic_genus_examples():
    assert arithmetic_genus(DualGraph({"a": 1, "b": 1}, {"e": ("a", "b")})) == 2
    assert arithmetic_genus(DualGraph({"a": 0}, {"e": ("a", "a")})) == 1
    tri = DualGraph({"a": 0, "b": 0, "c": 0},
                    {"e1": ("a", "b"), "e2": ("b", "c"), "e3": ("c", "a")})
    assert arithmetic_genus(tri) == 1


def test_arithmetic_genus_needs_connected_graph():
    with pytest.raises(ValueError, match="not connected"):
        arithmetic_genus(DualGraph({"a": 0, "b": 0}, {}))


def test_stability_examples():
    assert not stability_check(DualGraph({"a": 0, "b": 1, "c": 1},
                                         {"e1": ("a", "b"), "e2": ("a", "c")}))
    assert stability_check(DualGraph({"a": 1, "b": 1}, {"e": ("a", "b")}))
    assert stability_check(DualGraph({"a": 2}, {}))
    # a self-loop counts twice
    assert stability_check(DualGraph({"a": 0, "b": 1}, {"l": ("a", "a"), "e": ("a", "b")}))


@st.composite
def connected_graphs(draw):
    n = draw(st.integers(1, 6))
    vs = {f"v{i}": draw(st.integers(0, 3)) for i in range(n)}
    es = {f"t{i}": (f"v{draw(st.integers(0, i - 1))}", f"v{i}") for i in range(1, n)}
    for k in range(draw(st.integers(0, 3))):
        es[f"c{k}"] = (f"v{draw(st.integers(0, n - 1))}", f"v{draw(st.integers(0, n - 1))}")
    return DualGraph(vs, es)


@given(connected_graphs(), st.data())
def test_genus_unchanged_by_a_rational_leaf(G, data):
    v = data.draw(st.sampled_from(sorted(G.vertices)))
    H = DualGraph({**G.vertices, "leaf": 0}, {**G.edges, "new": (v, "leaf")})
    assert arithmetic_genus(H) == arithmetic_genus(G)


@given(connected_graphs())
def test_genus_is_first_betti_number_plus_genera(G):
    loops = len(G.edges) - len(G.vertices) + 1
    assert loops >= 0
    assert arithmetic_genus(G) == sum(G.vertices.values()) + loops


# -- conductor tables --

def _single(group, u, P):
    return fx.tree_cover(F2, {"v": (0, group, u)}, {}, [("v", P)])


def test_conductor_table_examples():
    t = conductor_table(_single(Group.ALPHA_P, x() ** -3, ZERO))
    assert t == {("v", ZERO): ConductorResidue(3, 0)}
    t = conductor_table(_single(Group.MU_P, x(), ZERO))
    assert t == {("v", ZERO): ConductorResidue(0, 1)}


def test_unramified_edges_are_not_in_the_table():
    t = conductor_table(fx.split_cover())
    assert not any(k[0] in ("f0", "f1") for k in t)
    assert t[("ra", 0)] == ConductorResidue(1, 0)
    assert t[("ra", 1)] == ConductorResidue(-1, 0)


def test_two_vertex_table():
    t = conductor_table(fx.two_vertex())
    assert t[("e0", 0)].m == 3 and t[("e0", 1)].m == -3
    assert t[("y1", INFTY)].m == 3


@pytest.mark.parametrize("c", cover_corpus(30, seed=7), ids=lambda c: f"p{c.p}")
def test_conductor_table_respects_group_laws(c):
    for key, r in conductor_table(c).items():
        v = c.Y.edges[key[0]][key[1]] if key[0] in c.Y.edges else key[0]
        g = c.group(v)
        if g is Group.MU_P:
            n = ord_at(c.vertex_data[v][1], key[1] if key[0] not in c.Y.edges
                       else c.edge_places[key[0]][key[1]])
            assert (r.m == 0) == (n % c.p != 0) and r.h == n % c.p
        elif g is Group.ETALE:
            assert r.m >= 0 and r.h == 0
        else:
            assert r.h == 0
        assert r.m == 0 or r.m % c.p


# -- validation --

def test_validate_examples():
    assert validate_cover(fx.two_vertex()).ok
    rep = validate_cover(fx.two_vertex(5))
    assert rep.clauses() == {"c"}
    assert [v.location for v in rep.violations] == ["e0"]
    rep = validate_cover(fx.two_vertex(-3, Group.ETALE))
    msgs = [v.message for v in rep.violations if v.clause == "c"]
    assert any("radiciel" in m for m in msgs)


def test_fixtures_are_valid():
    for make in (fx.path_cover, fx.fraction_chain, fx.mu_chain, fx.split_cover,
                 fx.mu_single, fx.mu_pipeline):
        assert validate_cover(make()).ok, make.__name__


def test_trivial_chart_is_rejected():
    c = fx.two_vertex()
    c = c.with_vertex_data({"y1": (Group.ALPHA_P, x() ** 2)})
    assert "b" in validate_cover(c).clauses()


def test_repeated_place_is_flagged():
    c = fx.path_cover()
    c = replace(c, edge_places={**c.edge_places, "a2": (ZERO, ZERO)})
    assert "places" in validate_cover(c).clauses()


def test_point_on_a_node_place_is_flagged():
    c = replace(fx.path_cover(), exceptional=(("v1", ONE), ("v1", INFTY)))
    assert "places" in validate_cover(c).clauses()


def test_split_fibre_shares_places():
    c = fx.split_cover()
    assert validate_cover(c).ok
    bad = replace(c, edge_places={**c.edge_places, "f1": (ONE, ZERO)})
    assert "places" in validate_cover(bad).clauses()


def test_unramified_node_needs_unramified_etale_chart():
    c = fx.split_cover()
    # the root ramifies at 0, so the copies cannot sit there
    bad = replace(c, edge_places={**c.edge_places, "f0": (ZERO, ZERO), "f1": (ZERO, ZERO)})
    assert "c" in validate_cover(bad).clauses()


def test_structure_errors_are_reported_not_raised():
    c = fx.path_cover()
    bad = replace(c, vmap={**c.vmap, "v2": "nowhere"})
    assert "a" in validate_cover(bad).clauses()
    bad = replace(c, Y=DualGraph(c.Y.vertices, {"a1": c.Y.edges["a1"]}),
                  emap={"a1": "b_a1"})
    assert "a" in validate_cover(bad).clauses()


def _shuffled(c, rng):
    def sh(d):
        items = list(d.items())
        rng.shuffle(items)
        return dict(items)
    exc = list(c.exceptional)
    rng.shuffle(exc)
    return CoverGraph(c.field, DualGraph(sh(c.Y.vertices), sh(c.Y.edges)),
                      DualGraph(sh(c.X.vertices), sh(c.X.edges)), sh(c.vmap), sh(c.emap),
                      sh(c.vertex_data), sh(c.edge_places), tuple(exc))


def test_validation_is_order_independent():
    rng = random.Random(5)
    cases = [fx.two_vertex(5), fx.two_vertex(-3, Group.ETALE), fx.split_cover()]
    cases += cover_corpus(20, seed=3)
    for c in cases:
        want = validate_cover(c).as_dict()
        for _ in range(3):
            assert validate_cover(_shuffled(c, rng)).as_dict() == want


# -- (H1) and (H2) --

def test_H1_H2_examples():
    assert "H1" in check_H1_H2(fx.mu_chain()).clauses()
    assert check_H1_H2(fx.two_vertex()).ok          # order -3 = 1 - 2*2
    c = _single(Group.ALPHA_P, x() ** 2 / fx.x_minus(F2, 1), ZERO)      # order 2 at 0
    rep = check_H1_H2(c)
    assert rep.clauses() == {"H2"}


def test_H2_needs_an_additive_component():
    c = replace(fx.path_cover(), exceptional=(("v0", INFTY),))
    assert "H2" in check_H1_H2(c).clauses()


@given(st.integers(-50, 50), st.sampled_from([2, 3, 5, 7]))
def test_one_minus_pn(k, p):
    assert is_one_minus_pn(k, p) == any(k == 1 - p * n for n in range(0, 60))


def test_corpus_covers_are_valid():
    for c in cover_corpus(40, seed=11):
        assert validate_cover(c).ok
        assert all(isinstance(P, Place) for _, P in c.exceptional)
