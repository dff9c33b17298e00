"""Hurwitz graphs: oriented graphs with a p-cyclic action and data (eps, g, d, m, h).

Each edge is stored once with an orientation (o, t).  Its conductor and
residue m, h refer to that orientation; the opposite orientation carries
-m, -h unless an explicit override is given.  Only fixed edges carry m, h.

Vertices listed in `points` are the leaves produced by exceptional smooth
points of a cover.  They are checked through the edge law only, not
through the genus formulas of component vertices.
"""

from dataclasses import dataclass, field
from enum import Enum

from .covers import ValidationReport, conductor_table, point_id
from .torsors import Group, bad_places as _torsor_bad_places


class VertexClass(Enum):
    ETALE = "Etale"
    ADDITIF = "Additif"
    MULTIPLICATIF = "Multiplicatif"


@dataclass(frozen=True)
class HurwitzGraph:
    p: int
    vertices: dict              # id -> genus
    edges: dict                 # id -> (o, t)
    sigma_v: dict               # vertex -> vertex
    sigma_e: dict               # edge -> (edge, flip)
    nu_p: object = None         # None stands for +infinity
    eps: dict = field(default_factory=dict)
    d: dict = field(default_factory=dict)
    m: dict = field(default_factory=dict)       # fixed edge -> m of the stored orientation
    h: dict = field(default_factory=dict)
    m_rev: dict = field(default_factory=dict)   # optional data on the opposite orientation
    h_rev: dict = field(default_factory=dict)
    points: frozenset = frozenset()

    def is_fixed_vertex(self, v):
        return self.sigma_v.get(v) == v

    def is_fixed_edge(self, e):
        return self.sigma_e.get(e) == (e, False)

    def fixed_edges(self):
        return sorted(e for e in self.edges if self.is_fixed_edge(e))

    def opposite(self, e):
        return (self.m_rev.get(e, -self.m[e]), self.h_rev.get(e, (-self.h.get(e, 0)) % self.p))

    def orientations_out(self, v):
        """[(edge, side, m, h)] over the fixed orientations leaving v."""
        out = []
        for e in self.fixed_edges():
            o, t = self.edges[e]
            if e not in self.m:
                continue
            if o == v:
                out.append((e, 0, self.m[e], self.h.get(e, 0) % self.p))
            if t == v:
                mr, hr = self.opposite(e)
                out.append((e, 1, mr, hr % self.p))
        return out


def classify_vertex(H, v):
    d = H.d[v]
    if d == 0:
        return VertexClass.ETALE
    if H.nu_p is not None and d == H.nu_p:
        return VertexClass.MULTIPLICATIF
    return VertexClass.ADDITIF


def _orbit_constant(H, rep, name, values, perm, keyfn=lambda x: x):
    for k in sorted(values):
        img = keyfn(perm[k])
        if img in values and values[img] != values[k]:
            rep.add("structure", k, f"{name} is not constant on the orbit")


def _check_structure(H, rep):
    p = H.p
    V, E = H.vertices, H.edges
    if set(H.sigma_v) != set(V) or sorted(H.sigma_v.values()) != sorted(V):
        rep.add("structure", "sigma", "sigma is not a permutation of the vertices")
        return False
    if set(H.sigma_e) != set(E) or sorted(s for s, _ in H.sigma_e.values()) != sorted(E):
        rep.add("structure", "sigma", "sigma is not a permutation of the edges")
        return False
    for e, (o, t) in sorted(E.items()):
        if o not in V or t not in V:
            rep.add("structure", e, "edge has an unknown endpoint")
    if not rep.ok:
        return False
    for v in sorted(V):
        w = v
        for _ in range(p):
            w = H.sigma_v[w]
        if w != v:
            rep.add("structure", v, f"sigma^{p} is not the identity on vertices")
    for e, (o, t) in sorted(E.items()):
        img, flip = H.sigma_e[e]
        so, st = H.sigma_v[o], H.sigma_v[t]
        if E[img] != ((st, so) if flip else (so, st)):
            rep.add("structure", e, "sigma does not respect incidence")
        if img == e and flip:
            rep.add("structure", e, "sigma inverts this edge")
        cur, fl = e, False
        for _ in range(p):
            nxt, f = H.sigma_e[cur]
            cur, fl = nxt, fl ^ f
        if (cur, fl) != (e, False):
            rep.add("structure", e, f"sigma^{p} is not the identity on edges")
    _orbit_constant(H, rep, "genus", V, H.sigma_v)
    _orbit_constant(H, rep, "d", H.d, H.sigma_v)
    _orbit_constant(H, rep, "eps", H.eps, H.sigma_e, lambda x: x[0])
    for v in sorted(V):
        if V[v] < 0:
            rep.add("structure", v, "negative genus")
        if v not in H.d:
            rep.add("structure", v, "d is unset")
            continue
        dv = H.d[v]
        if not isinstance(dv, int) or dv < 0 or dv % (p - 1):
            rep.add("structure", v, f"d = {dv} is not in (p-1)N")
        elif H.nu_p is not None and dv > H.nu_p:
            rep.add("structure", v, f"d = {dv} exceeds nu(p) = {H.nu_p}")
    for e in sorted(E):
        if e not in H.eps:
            rep.add("structure", e, "eps is unset")
        elif not isinstance(H.eps[e], int) or H.eps[e] < 0:
            rep.add("structure", e, "eps must be a nonnegative integer")
    for e in sorted(E):
        fixed = H.is_fixed_edge(e)
        if fixed and e not in H.m:
            rep.add("structure", e, "fixed edge without conductor")
        if not fixed and (e in H.m or e in H.h):
            rep.add("structure", e, "conductor on an edge that is not fixed")
        ms = [H.m[e]] if e in H.m else []
        ms += [H.m_rev[e]] if e in H.m_rev else []
        for mv in ms:
            if mv and mv % p == 0:
                rep.add("structure", e, f"conductor {mv} is divisible by p")
        for hv in (H.h.get(e), H.h_rev.get(e)):
            if hv is not None and not 0 <= hv < p:
                rep.add("structure", e, "residue is not an element of F_p")
    for v in sorted(H.points):
        if v not in V:
            rep.add("structure", v, "unknown point-vertex")
    return rep.ok


def hurwitz_genus_witness(p, g, ms):
    """The g' with 2g - 2 = p(2g' - 2) + sum (m + 1)(p - 1), or None if none exists."""
    num = 2 * g - 2 + 2 * p - sum((mv + 1) * (p - 1) for mv in ms)
    if num % (2 * p) or num < 0:
        return None
    return num // (2 * p)


def validate_hurwitz(H):
    rep = ValidationReport()
    if not _check_structure(H, rep):
        return rep
    p = H.p
    witnesses = {}
    for v in sorted(H.vertices):
        if not H.is_fixed_vertex(v) or v in H.points:
            continue
        outs = H.orientations_out(v)
        ms = [mv for _, _, mv, _ in outs]
        if classify_vertex(H, v) is VertexClass.ETALE:
            for e, side, mv, _ in outs:
                if mv <= 0:
                    rep.add("1", f"{v}: {e}[{side}]", f"conductor {mv} out of an etale vertex")
            g1 = hurwitz_genus_witness(p, H.vertices[v], ms)
            if g1 is None:
                rep.add("1", v, "no integer g' >= 0 satisfies the Hurwitz formula")
            else:
                witnesses[v] = g1
        else:
            total = sum(mv + 1 for mv in ms)
            if total != 2 - 2 * H.vertices[v]:
                rep.add("2", v, f"sum of (m + 1) is {total}, expected {2 - 2 * H.vertices[v]}")
            if sum(hv for _, _, _, hv in outs) % p:
                rep.add("2", v, "residues do not sum to zero")
    for e in H.fixed_edges():
        o, t = H.edges[e]
        mv, hv = H.m[e], H.h.get(e, 0)
        mr, hr = H.opposite(e)
        if mr != -mv or (hr + hv) % p:
            rep.add("3", e, "opposite orientation breaks m(a) = -m(a'), h(a) = -h(a')")
        if H.d[t] - H.d[o] != mv * H.eps[e] * (p - 1):
            rep.add("3", e, f"d(t) - d(o) = {H.d[t] - H.d[o]}, expected "
                            f"{mv * H.eps[e] * (p - 1)}")
    if witnesses:
        rep.notes["genus_witness"] = witnesses
    return rep


def _split_cycles(c):
    """A p-cyclic action on Y compatible with incidence, or ValueError."""
    sv = {}
    X = c.X
    # visit X vertices so that each split orbit is reached from an assigned neighbour when possible
    todo = sorted(X.vertices)
    while todo:
        progressed = False
        for x in list(todo):
            fib = c.vertex_fibre(x)
            if len(fib) == 1:
                sv[fib[0]] = fib[0]
                todo.remove(x)
                progressed = True
                continue
            for ex, y in X.neighbours(x):
                yfib = c.vertex_fibre(y)
                if len(yfib) == 1 or yfib[0] not in sv or len(c.edge_fibre(ex)) != c.p:
                    continue
                link = {}
                for e in c.edge_fibre(ex):
                    a, b = c.Y.edges[e]
                    if c.vmap[a] == x:
                        a, b = b, a
                    link[a] = b
                inv = {b: a for a, b in link.items()}
                for b in fib:
                    sv[b] = link[sv[inv[b]]]
                break
            else:
                continue
            todo.remove(x)
            progressed = True
        if not progressed:
            x = todo.pop(0)
            fib = c.vertex_fibre(x)
            for i, v in enumerate(fib):
                sv[v] = fib[(i + 1) % len(fib)]
    se = {}
    for e, (a, b) in sorted(c.Y.edges.items()):
        fib = c.edge_fibre(c.emap[e])
        if len(fib) == 1:
            se[e] = (e, False)
            continue
        sa, sb = sv[a], sv[b]
        hits = [(f, c.Y.edges[f] != (sa, sb)) for f in fib
                if c.Y.edges[f] in ((sa, sb), (sb, sa)) and f not in [s for s, _ in se.values()]]
        if not hits:
            raise ValueError("cannot choose a compatible p-cyclic action")
        se[e] = hits[0]
    return sv, se


def skeleton_from_cover(c):
    """The Hurwitz skeleton of a cover, with eps and d left unset."""
    table = conductor_table(c)
    sv, se = _split_cycles(c)
    vertices = dict(c.Y.vertices)
    edges = dict(c.Y.edges)
    m, h, m_rev, h_rev = {}, {}, {}, {}
    p = c.p
    for e in c.ramified_edges():
        r0, r1 = table[(e, 0)], table[(e, 1)]
        m[e], h[e] = r0.m, r0.h
        if r1.m != -r0.m:
            m_rev[e] = r1.m
        if (r1.h + r0.h) % p:
            h_rev[e] = r1.h
    points = set()
    for v, P in c.exceptional:
        pid = point_id(v, P)
        points.add(pid)
        vertices[pid] = 0
        edges[pid] = (v, pid)
        sv[pid] = pid
        se[pid] = (pid, False)
        r = table[(v, P)]
        m[pid], h[pid] = r.m, r.h
    return HurwitzGraph(p, vertices, edges, sv, se, None, {}, {}, m, h, m_rev, h_rev,
                        frozenset(points))


def check_adapted(H, c, x_thickness):
    rep = ValidationReport()
    want_v = dict(c.Y.vertices)
    want_e = {e: ends for e, ends in c.Y.edges.items()}
    pts = {}
    for v, P in c.exceptional:
        pid = point_id(v, P)
        want_v[pid] = 0
        want_e[pid] = (v, pid)
        pts[pid] = (v, P)
    if set(H.vertices) != set(want_v):
        missing = sorted(set(want_v) - set(H.vertices))
        extra = sorted(set(H.vertices) - set(want_v))
        rep.add("adapted", "vertices", f"vertex set mismatch (missing {missing}, extra {extra})")
    if set(H.points) != set(pts):
        rep.add("adapted", "points", "point-vertices do not match the exceptional points")
    for v in sorted(set(H.vertices) & set(want_v)):
        if H.vertices[v] != want_v[v]:
            rep.add("adapted", v, f"genus {H.vertices[v]}, expected {want_v[v]}")
    if set(H.edges) != set(want_e):
        rep.add("adapted", "edges", "edge set mismatch")
    table = conductor_table(c)
    for e in sorted(set(H.edges) & set(want_e)):
        ends = H.edges[e]
        if sorted(ends) != sorted(want_e[e]):
            rep.add("adapted", e, "edge endpoints differ from the cover")
            continue
        if e in pts:
            fixed, key = True, pts[e]
            flipped = ends != want_e[e]
        else:
            fixed = c.is_ramified(e)
            flipped = ends != want_e[e]
            key = (e, 1 if flipped else 0)
            t = x_thickness.get(c.emap[e])
            eps = H.eps.get(e)
            if eps is None or eps < 1:
                rep.add("adapted", e, "node edges need eps >= 1")
            elif t is None or c.p * eps != t:
                rep.add("adapted", e, f"p * eps = {c.p * eps} but the base thickness is {t}")
        if fixed != H.is_fixed_edge(e):
            rep.add("adapted", e, "fixed edges differ from the cover's ramified edges")
            continue
        if not fixed or e not in H.m:
            continue
        got = (H.m[e], H.h.get(e, 0) % c.p)
        if e in pts and flipped:
            got = H.opposite(e)
        want = table[key]
        if (got[0], got[1] % c.p) != (want.m, want.h % c.p):
            rep.add("adapted", e, f"(m, h) = {got}, the cover gives ({want.m}, {want.h})")
    for v in sorted(c.Y.vertices):
        if v in H.sigma_v and H.is_fixed_vertex(v) != c.is_fixed_vertex(v):
            rep.add("adapted", v, "fixed vertices differ from the cover")
    # every point where a chart fails to be a torsor must be a node or a declared point
    for v in sorted(c.Y.vertices):
        g = c.group(v)
        if g is Group.SPLIT:
            continue
        marked = {P for P, _ in c.places_at(v)}
        try:
            bad = _torsor_bad_places(c.spec(v))
        except ValueError as exc:
            rep.add("adapted", v, str(exc))
            continue
        for P, cr in bad:
            if P not in marked:
                rep.add("bad locus", point_id(v, P),
                        f"chart is not a torsor here (m = {cr.m}) but the point is not marked")
    return rep
