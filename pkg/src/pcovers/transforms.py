"""Constructions on covers over a tree of projective lines.

eliminate_mu_p   rewrite every MuP chart as an AlphaP chart with the same conductors
stabilize        replace bad exceptional points by new AlphaP leaves
synthesize_hurwitz  fill eps and d on the skeleton by a walk over the base tree
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from math import lcm

from .covers import (CoverGraph, DualGraph, ValidationReport, bfs_order,
                     check_H1_H2, is_one_minus_pn, point_id, place_label,
                     validate_cover)
from .hurwitz import check_adapted, skeleton_from_cover, validate_hurwitz
from .series import RationalFunction, all_places, divisor, ord_at
from .torsors import Group, conductor_residue


class PreconditionError(ValueError):
    """An input that fails a step's precondition; carries the failing report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report if report is not None else ValidationReport()


def _require_valid(c):
    rep = validate_cover(c)
    if not rep.ok:
        raise PreconditionError("input cover is not valid", rep)


def _require_tree(c):
    if not c.X.is_tree() or any(c.X.vertices.values()):
        raise ValueError("base not of genus 0")


# -- removing multiplicative charts --

def _is_normalized(u, p):
    return all(k % p for _, k in divisor(u) if k)


def eliminate_mu_p(c):
    _require_valid(c)
    _require_tree(c)
    p = c.p
    mu = sorted(v for v in c.Y.vertices if c.group(v) is Group.MU_P)
    if not mu:
        return c
    for v in mu:
        if not _is_normalized(c.vertex_data[v][1], p):
            raise ValueError(f"MuP chart at {v} is not normalized")
    # the fixed part of Y over the tree X; m = 0 edges join MuP components
    zero_edges = {}
    for e in c.ramified_edges():
        a, b = c.Y.edges[e]
        if c.group(a) is Group.MU_P and c.group(b) is Group.MU_P:
            if conductor_residue(c.spec(a), c.edge_places[e][0]).m == 0:
                zero_edges[e] = (a, b)
    G = DualGraph({v: 0 for v in mu}, zero_edges)
    new_u = {}
    for v0 in mu:
        if v0 in new_u:
            continue
        for v, e, parent in bfs_order(G, v0):
            u = c.vertex_data[v][1]
            if e is not None:
                a, b = c.Y.edges[e]
                side = 0 if a == v and b == parent else 1
                P = c.edge_places[e][side]
                target = -ord_at(new_u[parent], c.edge_places[e][1 - side])
                n_v = ord_at(u, P)
                if (target - n_v) % p:
                    raise ArithmeticError("residues along an m = 0 edge do not match")
                r = (target - n_v) // p
                if r:
                    Q = next((R for R, k in divisor(u) if R != P and k % p), None)
                    if Q is None:
                        raise ValueError("chart exhausted")
                    x = RationalFunction.coordinate(c.field, P, Q)
                    u = u * x ** (p * r)
            new_u[v] = u
    out = c.with_vertex_data({v: (Group.ALPHA_P, new_u[v]) for v in mu})
    return out


# -- stabilization --

@dataclass(frozen=True)
class Decomposition:
    q: int
    parts: tuple

    def total(self, p):
        return sum(1 - p * k for k in self.parts)


def decompose_n(n, p):
    """Write n = sum over i of (1 - p n_i) with n_i >= 0 and as few terms as the rule allows."""
    if n > 0:
        return Decomposition(n, (0,) * n)
    q = n % p or p
    return Decomposition(q, ((q - n) // p,) + (0,) * (q - 1))


def needs_leaf(c, v, P):
    """Whether the exceptional point (v, P) breaks the additive boundary form."""
    if c.group(v) is not Group.ALPHA_P:
        return True
    return not is_one_minus_pn(ord_at(c.vertex_data[v][1], P), c.p)


def stabilize(c):
    _require_valid(c)
    rep = check_H1_H2(c)
    if "H1" in rep.clauses():
        raise PreconditionError("a MuP component remains; eliminate it first", rep)
    todo = [(v, P) for v, P in c.exceptional if needs_leaf(c, v, P)]
    if not todo:
        return c
    F, p = c.field, c.p
    Yv, Ye = dict(c.Y.vertices), dict(c.Y.edges)
    Xv, Xe = dict(c.X.vertices), dict(c.X.edges)
    vmap, emap = dict(c.vmap), dict(c.emap)
    vdata, places = dict(c.vertex_data), dict(c.edge_places)
    exceptional = [pt for pt in c.exceptional if pt not in todo]
    line = all_places(F)
    for v, P in todo:
        n = ord_at(c.vertex_data[v][1], P)
        dec = decompose_n(n, p)
        free = [R for R in line if R != P]
        if dec.q > len(free):
            raise ValueError("enlarge field")
        pts = free[: dec.q]
        div = [(P, -n)] + [(R, 1 - p * k) for R, k in zip(pts, dec.parts)]
        u_new = RationalFunction.from_divisor(F, div)
        yid = point_id(v, P)
        xid = f"{c.vmap[v]}@{place_label(P)}"
        if yid in Yv or yid in Ye or xid in Xv or xid in Xe:
            raise ValueError(f"identifier {yid} or {xid} already in use")
        Yv[yid], Xv[xid] = 0, 0
        Ye[yid], Xe[xid] = (v, yid), (c.vmap[v], xid)
        vmap[yid], emap[yid] = xid, xid
        vdata[yid] = (Group.ALPHA_P, u_new)
        places[yid] = (P, P)
        exceptional.extend((yid, R) for R in pts)
    return CoverGraph(F, DualGraph(Yv, Ye), DualGraph(Xv, Xe), vmap, emap, vdata, places,
                      tuple(sorted(exceptional)))


# -- Hurwitz data --

def _etale_type(c, v):
    return c.group(v) in (Group.ETALE, Group.SPLIT)


def synthesize_hurwitz(c):
    _require_valid(c)
    rep = check_H1_H2(c)
    if not rep.ok:
        raise PreconditionError("cover does not satisfy (H1) and (H2)", rep)
    _require_tree(c)
    roots = sorted((v for v in c.Y.vertices if _etale_type(c, v)),
                   key=lambda v: (c.group(v) is not Group.ETALE, v))
    if not roots:
        raise PreconditionError("no etale component to start from")
    H = skeleton_from_cover(c)
    p = c.p
    d, eps = {}, {}
    x0 = c.vmap[roots[0]]
    for v in c.vertex_fibre(x0):
        d[v] = Fraction(0)
    fail = "no adapted graph on this traversal"
    for x2, ex, x1 in bfs_order(c.X, x0)[1:]:
        fib = c.edge_fibre(ex)
        if len(fib) > 1:
            for e in fib:
                eps[e] = Fraction(1)
            for v in c.vertex_fibre(x2):
                if not _etale_type(c, v):
                    raise ValueError(fail)
                d[v] = Fraction(0)
            continue
        e = fib[0]
        a, b = c.Y.edges[e]
        side = 0 if c.vmap[a] == x1 else 1
        v1, v2 = (a, b) if side == 0 else (b, a)
        m = conductor_residue(c.spec(v1), c.edge_places[e][side]).m
        if m == 0:
            raise ValueError(fail)
        if _etale_type(c, v2):
            d[v2] = Fraction(0)
            eps[e] = -d[v1] / ((p - 1) * m)
        elif _etale_type(c, v1):
            eps[e] = Fraction(1)
            d[v2] = Fraction((p - 1) * m)
        else:
            eps[e] = Fraction(1) if m > 0 else d[v1] / (2 * (p - 1) * -m)
            d[v2] = d[v1] + (p - 1) * m * eps[e]
    for pid in sorted(H.points):
        v = H.edges[pid][0]
        m = H.m[pid]
        if m < 0:
            d[pid] = Fraction(0)
            eps[pid] = d[v] / ((p - 1) * -m)
        else:
            eps[pid] = Fraction(1)
            d[pid] = d[v] + (p - 1) * m
    scale = lcm(*(f.denominator for f in eps.values()),
                *((f / (p - 1)).denominator for f in d.values()))
    out = replace(H, eps={e: int(f * scale) for e, f in eps.items()},
                  d={v: int(f * scale) for v, f in d.items()})
    check = validate_hurwitz(out)
    bad_eps = [e for e in c.Y.edges if out.eps[e] < 1]
    if not check.ok or bad_eps:
        raise PreconditionError(fail, check)
    return out


def base_thickness(H, c):
    """The base thicknesses p * eps that make H adapted to c."""
    return {c.emap[e]: c.p * H.eps[e] for e in sorted(c.Y.edges)}


def pipeline(c):
    """eliminate_mu_p, stabilize and synthesize_hurwitz in turn, with the adaptedness check."""
    c1 = eliminate_mu_p(c)
    c2 = stabilize(c1)
    H = synthesize_hurwitz(c2)
    rep = check_adapted(H, c2, base_thickness(H, c2))
    if not rep.ok:
        raise PreconditionError("synthesized graph is not adapted", rep)
    return c2, H
