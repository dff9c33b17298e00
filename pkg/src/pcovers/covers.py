"""Degree-p covers of semi-stable curves with per-component torsor data.

Each component of Y lies over a component of X, which is a projective line
with a fixed coordinate.  A fixed component carries a torsor chart
(G_v, u_v) on that line.  A component whose fibre has p elements is one of
p disjoint copies (group tag Split, no chart).  Nodes and exceptional
smooth points are recorded as places on the chart of each component they
touch.
"""

from collections import Counter, deque
from dataclasses import dataclass, field, replace

from .series import Place, RationalFunction, ord_at
from .torsors import (RADICIEL, Group, TorsorSpec, conductor_residue,
                      is_trivial)


@dataclass(frozen=True)
class DualGraph:
    vertices: dict      # id -> genus
    edges: dict         # id -> (endpoint, endpoint); a loop repeats its vertex

    def degree(self, v):
        return sum((a == v) + (b == v) for a, b in self.edges.values())

    def neighbours(self, v):
        out = []
        for e, (a, b) in sorted(self.edges.items()):
            if a == v:
                out.append((e, b))
            if b == v and a != v:
                out.append((e, a))
        return out

    def is_connected(self):
        if not self.vertices:
            return False
        start = min(self.vertices)
        seen, todo = {start}, [start]
        while todo:
            v = todo.pop()
            for _, w in self.neighbours(v):
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.vertices)

    def is_tree(self):
        return self.is_connected() and len(self.edges) == len(self.vertices) - 1


def arithmetic_genus(G):
    if not G.is_connected():
        raise ValueError("graph is not connected")
    return sum(G.vertices.values()) + len(G.edges) - len(G.vertices) + 1


def stability_check(G):
    """Genus-0 vertices need degree >= 3 and genus-1 vertices degree >= 1."""
    for v, g in G.vertices.items():
        d = G.degree(v)
        if (g == 0 and d < 3) or (g == 1 and d < 1):
            return False
    return True


def place_label(P):
    return "inf" if P.is_infinity else str(P.c)


def point_id(v, P):
    """Name of the leaf that an exceptional point (v, P) becomes in a skeleton."""
    return f"{v}@{place_label(P)}"


@dataclass(frozen=True)
class Violation:
    clause: str
    location: str
    message: str

    def as_dict(self):
        return {"clause": self.clause, "location": self.location, "message": self.message}


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.violations

    def add(self, clause, location, message):
        self.violations.append(Violation(clause, str(location), message))

    def extend(self, other):
        self.violations.extend(other.violations)

    def clauses(self):
        return {v.clause for v in self.violations}

    def as_dict(self):
        vs = sorted(self.violations, key=lambda v: (v.clause, v.location, v.message))
        out = {"ok": self.ok, "violations": [v.as_dict() for v in vs]}
        if self.notes:
            out["notes"] = self.notes
        return out


@dataclass(frozen=True)
class CoverGraph:
    field: object
    Y: DualGraph
    X: DualGraph
    vmap: dict          # Y vertex -> X vertex
    emap: dict          # Y edge -> X edge
    vertex_data: dict   # Y vertex -> (Group, RationalFunction or None)
    edge_places: dict   # Y edge -> (place at first endpoint, place at second)
    exceptional: tuple = ()     # ((Y vertex, Place), ...)

    @property
    def p(self):
        return self.field.p

    def vertex_fibre(self, x):
        return sorted(v for v, w in self.vmap.items() if w == x)

    def edge_fibre(self, ex):
        return sorted(e for e, w in self.emap.items() if w == ex)

    def is_fixed_vertex(self, v):
        return len(self.vertex_fibre(self.vmap[v])) == 1

    def is_ramified(self, e):
        return len(self.edge_fibre(self.emap[e])) == 1

    def ramified_edges(self):
        return sorted(e for e in self.Y.edges if self.is_ramified(e))

    def group(self, v):
        return self.vertex_data[v][0]

    def spec(self, v):
        g, u = self.vertex_data[v]
        if g is Group.SPLIT:
            raise ValueError(f"vertex {v} has no torsor chart")
        return TorsorSpec(g, u)

    def marks(self, v):
        """[(Place, description, X edge below, or None for a point)] on the chart of v."""
        out = []
        for e, (a, b) in sorted(self.Y.edges.items()):
            pl = self.edge_places.get(e)
            if pl is None:
                continue
            if a == v:
                out.append((pl[0], f"edge {e}[0]", self.emap.get(e)))
            if b == v:
                out.append((pl[1], f"edge {e}[1]", self.emap.get(e)))
        for w, P in self.exceptional:
            if w == v:
                out.append((P, f"point {point_id(w, P)}", None))
        return out

    def places_at(self, v):
        """Every marked place on the chart of v: [(Place, description)]."""
        return [(P, what) for P, what, _ in self.marks(v)]

    def with_vertex_data(self, updates):
        vd = dict(self.vertex_data)
        vd.update(updates)
        return replace(self, vertex_data=vd)


def conductor_table(c):
    """(m, h) on each orientation of each ramified edge and at each exceptional point.

    Keys are (edge, side) for the orientation leaving endpoint `side`, and
    (vertex, Place) for exceptional points.
    """
    table = {}
    for e in c.ramified_edges():
        ends = c.Y.edges[e]
        for side in (0, 1):
            table[(e, side)] = conductor_residue(c.spec(ends[side]), c.edge_places[e][side])
    for v, P in c.exceptional:
        table[(v, P)] = conductor_residue(c.spec(v), P)
    return table


def _check_structure(c, rep):
    Y, X, p = c.Y, c.X, c.p
    if set(c.vmap) != set(Y.vertices):
        rep.add("a", "vmap", "vmap must be defined on exactly the vertices of Y")
    if set(c.emap) != set(Y.edges):
        rep.add("a", "emap", "emap must be defined on exactly the edges of Y")
    if not rep.ok:
        return False
    for v, x in sorted(c.vmap.items()):
        if x not in X.vertices:
            rep.add("a", v, f"vertex maps to unknown X vertex {x}")
    for e, ex in sorted(c.emap.items()):
        if ex not in X.edges:
            rep.add("a", e, f"edge maps to unknown X edge {ex}")
    for name, G in (("Y", Y), ("X", X)):
        for e, (a, b) in sorted(G.edges.items()):
            if a not in G.vertices or b not in G.vertices:
                rep.add("a", e, f"edge of {name} has an unknown endpoint")
        if not G.is_connected():
            rep.add("a", name, f"{name} is not connected")
    if not rep.ok:
        return False
    for x, g in sorted(X.vertices.items()):
        if g != 0:
            rep.add("a", x, "X components must be projective lines (genus 0)")
    for e, (a, b) in sorted(Y.edges.items()):
        xa, xb = X.edges[c.emap[e]]
        if Counter((c.vmap[a], c.vmap[b])) != Counter((xa, xb)):
            rep.add("a", e, "emap does not commute with incidence")
    for x in sorted(X.vertices):
        n = len(c.vertex_fibre(x))
        if n not in (1, p):
            rep.add("a", x, f"vertex fibre has {n} elements, expected 1 or {p}")
    for ex in sorted(X.edges):
        n = len(c.edge_fibre(ex))
        if n not in (1, p):
            rep.add("a", ex, f"edge fibre has {n} elements, expected 1 or {p}")
    for v in sorted(Y.vertices):
        datum = c.vertex_data.get(v)
        if datum is None:
            rep.add("a", v, "missing vertex datum")
            continue
        g, u = datum
        fixed = c.is_fixed_vertex(v)
        if g is Group.SPLIT:
            if fixed:
                rep.add("a", v, "a fixed component needs a torsor chart")
            if u is not None:
                rep.add("a", v, "a split component carries no chart")
        elif g in (Group.ETALE, Group.ALPHA_P, Group.MU_P):
            if not fixed:
                rep.add("a", v, "a component with p preimage copies must be Split")
            if not isinstance(u, RationalFunction) or u.field != c.field:
                rep.add("a", v, "chart is not a rational function over the cover's field")
        else:
            rep.add("a", v, f"unsupported group {g!r}")
    for e in sorted(Y.edges):
        pl = c.edge_places.get(e)
        if pl is None or len(pl) != 2:
            rep.add("a", e, "edge needs a place on each endpoint's chart")
            continue
        if c.is_ramified(e) and not all(c.is_fixed_vertex(w) for w in Y.edges[e]):
            rep.add("a", e, "a fixed edge must join fixed components")
    for v, P in c.exceptional:
        if v not in Y.vertices:
            rep.add("a", point_id(v, P), "exceptional point on an unknown vertex")
        elif c.vertex_data.get(v, (None,))[0] is Group.SPLIT:
            rep.add("a", point_id(v, P), "exceptional point on a split component")
    return rep.ok


def _check_places(c, rep):
    q = c.field.q
    for v in sorted(c.Y.vertices):
        seen = {}
        for P, what, base in c.marks(v):
            if not isinstance(P, Place) or (not P.is_infinity and not 0 <= P.c < q):
                rep.add("places", f"{v}: {what}", "not a rational place of the chart")
                continue
            if P in seen:
                # the p edges over one X edge meet a fixed component at one place
                if base is None or seen[P][1] != base:
                    rep.add("places", f"{v}: {what}",
                            f"place {place_label(P)} already used by {seen[P][0]}")
            else:
                seen[P] = (what, base)
    if len(set(c.exceptional)) != len(c.exceptional):
        rep.add("places", "exceptional", "repeated exceptional point")
    # edges over the same X edge sit at the same places of the base
    for ex in sorted(c.X.edges):
        xa, xb = c.X.edges[ex]
        marks = set()
        for e in c.edge_fibre(ex):
            a, b = c.Y.edges[e]
            pa, pb = c.edge_places[e]
            if c.vmap[a] == xa and c.vmap[b] == xb:
                marks.add((pa, pb))
            else:
                marks.add((pb, pa))
        if len(marks) > 1:
            rep.add("places", ex, "edges over one X edge are marked at different places")


def validate_cover(c):
    rep = ValidationReport()
    if not _check_structure(c, rep):
        return rep
    _check_places(c, rep)
    p = c.p
    for v in sorted(c.Y.vertices):
        g, u = c.vertex_data[v]
        if g is Group.SPLIT:
            continue
        if g is Group.MU_P and u.is_zero():
            rep.add("b", v, "a MuP chart must be a nonzero function")
            continue
        try:
            if is_trivial(TorsorSpec(g, u)):
                rep.add("b", v, "chart defines the trivial torsor")
        except ValueError as exc:
            rep.add("b", v, str(exc))
    for e in c.ramified_edges():
        a, b = c.Y.edges[e]
        if not ({c.group(a), c.group(b)} & set(RADICIEL)):
            rep.add("c", e, "a ramified edge needs a radiciel endpoint")
        try:
            m0 = conductor_residue(c.spec(a), c.edge_places[e][0])
            m1 = conductor_residue(c.spec(b), c.edge_places[e][1])
        except (ValueError, ArithmeticError) as exc:
            rep.add("c", e, str(exc))
            continue
        if m0.m != -m1.m or (m0.h + m1.h) % p:
            rep.add("c", e, f"incompatible conductors: (m, h) = ({m0.m}, {m0.h}) "
                            f"against ({m1.m}, {m1.h})")
    # a node with p preimages lies where the chart of a fixed end is etale and unramified
    for e in sorted(c.Y.edges):
        if c.is_ramified(e):
            continue
        for side, w in enumerate(c.Y.edges[e]):
            if not c.is_fixed_vertex(w):
                continue
            if c.group(w) is not Group.ETALE:
                rep.add("c", e, f"unramified node at {w}, whose chart is not etale")
            elif conductor_residue(c.spec(w), c.edge_places[e][side]).m:
                rep.add("c", e, f"the chart of {w} ramifies at an unramified node")
    for v, P in c.exceptional:
        try:
            conductor_residue(c.spec(v), P)
        except (ValueError, ArithmeticError) as exc:
            rep.add("c", point_id(v, P), str(exc))
    return rep


def is_one_minus_pn(k, p):
    """Whether k = 1 - p*n for some n >= 0."""
    return k <= 1 and (1 - k) % p == 0


def check_H1_H2(c):
    rep = ValidationReport()
    for v in sorted(c.Y.vertices):
        if c.group(v) is Group.MU_P:
            rep.add("H1", v, "MuP component")
    for v, P in c.exceptional:
        loc = point_id(v, P)
        if c.group(v) is not Group.ALPHA_P:
            rep.add("H2", loc, "exceptional point on a component that is not AlphaP")
            continue
        k = ord_at(c.vertex_data[v][1], P)
        if not is_one_minus_pn(k, c.p):
            rep.add("H2", loc, f"order {k} is not of the form 1 - {c.p}n with n >= 0")
    return rep


def bfs_order(G, root):
    """Vertices of G by breadth-first search, with the edge used to reach each."""
    seen, order, todo = {root}, [(root, None, None)], deque([root])
    while todo:
        v = todo.popleft()
        for e, w in G.neighbours(v):
            if w not in seen:
                seen.add(w)
                order.append((w, e, v))
                todo.append(w)
    return order
