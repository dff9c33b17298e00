"""Canonical JSON documents for covers, Hurwitz graphs and Hodge data.

    {"version": "1", "field": {"p", "e", "modulus"}, "kind": ..., "payload": ...}

Field elements are length-e integer vectors (base-p digits, lowest first),
places are "inf" or such a vector, polynomials are lists of elements from
the constant term up, and rational functions and rational numbers are
{"num": ..., "den": ...}.  Output uses sorted keys, two-space indentation
and a final newline, so parse followed by dump returns the same bytes.
"""

import json
from fractions import Fraction

from .covers import CoverGraph, DualGraph
from .field import FieldSpec
from .hodge import ReductionConfig
from .hurwitz import HurwitzGraph
from .series import Place, Poly, RationalFunction
from .torsors import Group

VERSION = "1"
KINDS = ("cover", "hurwitz", "hodge_config", "hodge_report", "hodge_sweep",
         "pipeline", "report")


class DocumentError(ValueError):
    pass


def _need(obj, key, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise DocumentError(f"missing key {key!r}")
    val = obj[key]
    if kind is not None and not isinstance(val, kind) or isinstance(val, bool) and kind is int:
        raise DocumentError(f"key {key!r} has the wrong type")
    return val


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise DocumentError("a document is a JSON object")
    return doc


# -- field and elements --

def encode_field(F):
    return {"p": F.p, "e": F.e, "modulus": list(F.modulus)}


def decode_field(obj):
    p, e = _need(obj, "p", int), _need(obj, "e", int)
    mod = obj.get("modulus")
    try:
        return FieldSpec(p, e, None if mod is None else tuple(mod))
    except (ValueError, TypeError) as exc:
        raise DocumentError(f"bad field: {exc}") from None


def encode_elem(F, a):
    return F.to_vector(a)


def decode_elem(F, vec):
    if not isinstance(vec, list) or len(vec) != F.e:
        raise DocumentError(f"field element must be a vector of length {F.e}")
    if not all(isinstance(c, int) and not isinstance(c, bool) and 0 <= c < F.p for c in vec):
        raise DocumentError("field element digits must lie in [0, p)")
    return F.from_vector(vec)


def encode_place(F, P):
    return "inf" if P.is_infinity else encode_elem(F, P.c)


def decode_place(F, obj):
    if obj == "inf":
        return Place.infinity()
    return Place.finite(decode_elem(F, obj))


def encode_poly(F, f):
    return [encode_elem(F, a) for a in f.coeffs]


def decode_poly(F, obj):
    if not isinstance(obj, list):
        raise DocumentError("polynomial must be a list of coefficients")
    return Poly(F, [decode_elem(F, a) for a in obj])


def encode_rf(F, f):
    return {"num": encode_poly(F, f.num), "den": encode_poly(F, f.den)}


def decode_rf(F, obj):
    num, den = decode_poly(F, _need(obj, "num")), decode_poly(F, _need(obj, "den"))
    if not den.coeffs:
        raise DocumentError("zero denominator")
    return RationalFunction(num, den)


def encode_fraction(x):
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def decode_fraction(obj):
    return Fraction(_need(obj, "num", int), _need(obj, "den", int))


# -- graphs and covers --

def encode_graph(G):
    return {"vertices": [{"id": v, "genus": g} for v, g in sorted(G.vertices.items())],
            "edges": [{"id": e, "ends": list(ends)} for e, ends in sorted(G.edges.items())]}


def _ids(items, what):
    seen = set()
    for it in items:
        i = _need(it, "id", str)
        if i in seen:
            raise DocumentError(f"repeated {what} id {i!r}")
        seen.add(i)
    return items


def decode_graph(obj):
    vs = _ids(_need(obj, "vertices", list), "vertex")
    es = _ids(_need(obj, "edges", list), "edge")
    vertices = {v["id"]: _need(v, "genus", int) for v in vs}
    edges = {}
    for e in es:
        ends = _need(e, "ends", list)
        if len(ends) != 2 or not all(isinstance(x, str) for x in ends):
            raise DocumentError("an edge has two endpoint ids")
        edges[e["id"]] = tuple(ends)
    return DualGraph(vertices, edges)


_GROUPS = {g.value: g for g in Group}


def encode_cover(c):
    F = c.field
    vd = {}
    for v, (g, u) in sorted(c.vertex_data.items()):
        vd[v] = {"group": g.value, "u": None if u is None else encode_rf(F, u)}
    return {
        "Y": encode_graph(c.Y),
        "X": encode_graph(c.X),
        "vmap": dict(sorted(c.vmap.items())),
        "emap": dict(sorted(c.emap.items())),
        "vertex_data": vd,
        "edge_places": {e: [encode_place(F, P) for P in pl]
                        for e, pl in sorted(c.edge_places.items())},
        "exceptional": [{"vertex": v, "place": encode_place(F, P)}
                        for v, P in sorted(c.exceptional)],
    }


def decode_cover(F, obj):
    vd = {}
    for v, datum in _need(obj, "vertex_data", dict).items():
        name = _need(datum, "group", str)
        if name not in _GROUPS:
            raise DocumentError(f"unknown group {name!r}")
        u = datum.get("u")
        vd[v] = (_GROUPS[name], None if u is None else decode_rf(F, u))
    places = {}
    for e, pl in _need(obj, "edge_places", dict).items():
        if not isinstance(pl, list) or len(pl) != 2:
            raise DocumentError("edge places come in pairs")
        places[e] = tuple(decode_place(F, P) for P in pl)
    exc = []
    for item in _need(obj, "exceptional", list):
        exc.append((_need(item, "vertex", str), decode_place(F, _need(item, "place"))))
    vmap, emap = _need(obj, "vmap", dict), _need(obj, "emap", dict)
    for m in (vmap, emap):
        if not all(isinstance(x, str) for x in m.values()):
            raise DocumentError("maps send ids to ids")
    return CoverGraph(F, decode_graph(_need(obj, "Y")), decode_graph(_need(obj, "X")),
                      dict(vmap), dict(emap), vd, places, tuple(sorted(exc)))


def encode_hurwitz(H):
    vertices = []
    for v, g in sorted(H.vertices.items()):
        item = {"id": v, "genus": g}
        if v in H.d:
            item["d"] = H.d[v]
        vertices.append(item)
    edges = []
    for e, ends in sorted(H.edges.items()):
        item = {"id": e, "ends": list(ends)}
        for key, table in (("eps", H.eps), ("m", H.m), ("h", H.h),
                           ("m_rev", H.m_rev), ("h_rev", H.h_rev)):
            if e in table:
                item[key] = table[e]
        edges.append(item)
    return {
        "p": H.p,
        "nu_p": H.nu_p,
        "vertices": vertices,
        "edges": edges,
        "sigma_v": dict(sorted(H.sigma_v.items())),
        "sigma_e": {e: {"edge": img, "flip": flip} for e, (img, flip) in sorted(H.sigma_e.items())},
        "points": sorted(H.points),
    }


def decode_hurwitz(obj):
    p = _need(obj, "p", int)
    nu = obj.get("nu_p")
    if nu is not None and (not isinstance(nu, int) or nu < 0):
        raise DocumentError("nu_p is a nonnegative integer or null")
    vs = _ids(_need(obj, "vertices", list), "vertex")
    es = _ids(_need(obj, "edges", list), "edge")
    vertices = {v["id"]: _need(v, "genus", int) for v in vs}
    d = {v["id"]: _need(v, "d", int) for v in vs if "d" in v}
    edges, tables = {}, {k: {} for k in ("eps", "m", "h", "m_rev", "h_rev")}
    for e in es:
        ends = _need(e, "ends", list)
        if len(ends) != 2:
            raise DocumentError("an edge has two endpoint ids")
        edges[e["id"]] = tuple(ends)
        for k, table in tables.items():
            if k in e:
                table[e["id"]] = _need(e, k, int)
    sigma_e = {}
    for e, img in _need(obj, "sigma_e", dict).items():
        sigma_e[e] = (_need(img, "edge", str), bool(_need(img, "flip", bool)))
    return HurwitzGraph(p, vertices, edges, dict(_need(obj, "sigma_v", dict)), sigma_e, nu,
                        tables["eps"], d, tables["m"], tables["h"], tables["m_rev"],
                        tables["h_rev"], frozenset(_need(obj, "points", list)))


def encode_hodge_config(cfg):
    out = {"g": cfg.g, "kind": cfg.kind, "j": cfg.j, "b": cfg.b, "nuA": cfg.nuA}
    if cfg.nu2 is not None:
        out["nu2"] = cfg.nu2
    return out


def decode_hodge_config(obj):
    try:
        return ReductionConfig(_need(obj, "g", int), _need(obj, "kind", str), _need(obj, "j", int),
                               _need(obj, "b", int), obj.get("nuA", 0), obj.get("nu2"))
    except TypeError as exc:
        raise DocumentError(str(exc)) from None


def encode_hodge_report(r):
    return {
        "nu_disc": r.nu_disc,
        "sum_mi": None if r.sum_mi is None else encode_fraction(r.sum_mi),
        "ord_lambda": r.ord_lambda,
        "route1": r.route1,
        "delta_s": r.delta_s,
        "lower": r.lower,
        "upper": r.upper,
        "ok": r.ok,
        "notes": list(r.notes),
    }


# -- whole documents --

def document(kind, payload, F=None):
    doc = {"version": VERSION, "kind": kind, "payload": payload}
    if F is not None:
        doc["field"] = encode_field(F)
    return doc


def read_document(text, default_field=None):
    """Parse text into (kind, field or None, payload dict)."""
    doc = loads(text)
    if doc.get("version") != VERSION:
        raise DocumentError(f"unsupported document version {doc.get('version')!r}")
    kind = _need(doc, "kind", str)
    if kind not in KINDS:
        raise DocumentError(f"unknown document kind {kind!r}")
    F = decode_field(doc["field"]) if "field" in doc else None
    if F is None:
        F = default_field
    elif default_field is not None and F != default_field:
        raise DocumentError("document field differs from the command-line field")
    return kind, F, _need(doc, "payload", dict)


def load_cover(text, default_field=None):
    kind, F, payload = read_document(text, default_field)
    if kind != "cover":
        raise DocumentError(f"expected a cover document, got {kind!r}")
    if F is None:
        raise DocumentError("the document has no field and none was given")
    return decode_cover(F, payload)


def load_hurwitz(text, default_field=None):
    kind, F, payload = read_document(text, default_field)
    if kind != "hurwitz":
        raise DocumentError(f"expected a hurwitz document, got {kind!r}")
    H = decode_hurwitz(payload)
    if F is not None and F.p != H.p:
        raise DocumentError("graph characteristic differs from the document field")
    return H, F


def dump_cover(c):
    return dumps(document("cover", encode_cover(c), c.field))


def dump_hurwitz(H, F=None):
    return dumps(document("hurwitz", encode_hurwitz(H), F if F is not None else FieldSpec(H.p)))
