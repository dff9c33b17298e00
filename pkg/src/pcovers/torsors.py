"""Degree-p torsors on P^1 and on formal discs.

A torsor is presented by a group tag and a function u:

    Etale   y^p - y = u
    AlphaP  y^p = u        (u additive datum)
    MuP     y^p = u        (u a unit)
    Mn(n)   w^p - t^((p-1)n) w = (lift of u)

Conductor and residue at a place follow the usual recipe: the Hasse
conductor after Artin-Schreier reduction in the etale case,
m = -(1 + ord du) for AlphaP, and m = -(1 + ord du/u), h = Res du/u for MuP.
"""

from dataclasses import dataclass
from enum import Enum

from .field import FieldSpec
from .series import (INF, LaurentExpansion, Place, RationalFunction, diff_ord,
                     divisor, dlog_residue, expand_at, ord_at, rational_roots)


class Group(Enum):
    ETALE = "etale"
    ALPHA_P = "alpha_p"
    MU_P = "mu_p"
    SPLIT = "split"     # free orbit: p disjoint copies, no torsor datum

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class Mn:
    """The group scheme ker(w -> w^p - t^((p-1)n) w), n >= 1."""

    n: int


def mn(n):
    if n < 0:
        raise ValueError("Mn needs n >= 0")
    return Group.ETALE if n == 0 else Mn(n)


RADICIEL = (Group.ALPHA_P, Group.MU_P)


@dataclass(frozen=True)
class TorsorSpec:
    group: object
    u: object           # RationalFunction (global chart) or LaurentExpansion (local)

    @property
    def field(self):
        return self.u.field


@dataclass(frozen=True)
class ConductorResidue:
    m: int
    h: int = 0


@dataclass(frozen=True)
class NormalForm:
    kind: str           # Etale | AlphaP | MuP-ramified | MuP-unit | Unramified
    m: object = None


def as_reduce(u, p=None):
    """Kill pole terms of exponent divisible by p by subtracting a^p - a.

    Returns the reduced expansion and the conductor: the remaining pole
    order when it is positive (it is then prime to p), else 0.
    """
    F = u.field
    if p is not None and p != F.p:
        raise ValueError("characteristic mismatch")
    p = F.p
    cur = u
    while True:
        v = cur.valuation
        if v is None:
            if cur.precision <= 0:
                raise ValueError("insufficient precision")
            return cur, 0
        if v >= 0:
            return cur, 0
        if v % p:
            return cur, -v
        c = cur.coeff(v)
        r = F.pth_root(c)
        # subtract (r z^(v/p))^p - r z^(v/p) = c z^v - r z^(v/p)
        step = LaurentExpansion.from_terms(F, {v: c, v // p: F.neg(r)}, cur.precision)
        cur = cur - step


def _local_etale_conductor(u, P):
    if u.is_zero() or ord_at(u, P) >= 0:
        return 0
    # exponents >= 1 never matter for the reduction
    return as_reduce(expand_at(u, P, 1))[1]


def conductor_residue(spec, P):
    g, u = spec.group, spec.u
    if g is Group.ETALE:
        return ConductorResidue(_local_etale_conductor(u, P), 0)
    if g is Group.ALPHA_P:
        d = diff_ord(u, P)
        if d == INF:
            raise ValueError("degenerate torsor datum")
        return ConductorResidue(-(1 + d), 0)
    if g is Group.MU_P:
        if u.is_zero():
            raise ValueError("degenerate torsor datum")
        w = u.derivative() / u
        if w.is_zero():
            raise ValueError("degenerate torsor datum")
        d = ord_at(w, P) - (2 if P.is_infinity else 0)
        return ConductorResidue(-(1 + d), dlog_residue(u, P))
    raise ValueError(f"no conductor for group {g!r}")


def bad_places(spec):
    """Places where the chart fails to define a torsor, with their (m, h).

    Etale: the ramified places (m > 0).  AlphaP, MuP: the places where du
    (resp. du/u) has a zero or a pole, i.e. m != -1.
    """
    g, u = spec.group, spec.u
    if g is Group.ETALE:
        if u.is_zero():
            return []
        cands = [Place.finite(c) for c, _ in rational_roots(u.den)[0]]
        if rational_roots(u.den)[1].degree > 0:
            raise ValueError("non-rational place")
        cands.append(Place.infinity())
        out = [(P, conductor_residue(spec, P)) for P in cands]
        return sorted((P, cr) for P, cr in out if cr.m > 0)
    if g in RADICIEL:
        w = u.derivative()
        if g is Group.MU_P and not u.is_zero():
            w = w / u
        if w.is_zero():
            raise ValueError("degenerate torsor datum")
        cands = set()
        for poly in (w.num, w.den):
            roots, rest = rational_roots(poly)
            if rest.degree > 0:
                raise ValueError("non-rational place")
            cands.update(Place.finite(c) for c, _ in roots)
        cands.add(Place.infinity())
        out = [(P, conductor_residue(spec, P)) for P in sorted(cands)]
        return [(P, cr) for P, cr in out if cr.m != -1]
    raise ValueError(f"no torsor data for group {g!r}")


def normal_form_local(spec, place=None):
    """Classify a local chart into its normal form.

    spec.u is a Laurent expansion, or a rational function together with
    the place at which to expand it.
    """
    u = spec.u
    if isinstance(u, RationalFunction):
        if place is None:
            raise ValueError("a place is needed to localise a global chart")
        if u.is_zero():
            u = LaurentExpansion(u.field, 0, (0,), 1)
        else:
            u = expand_at(u, place, max(1, ord_at(u, place) + 32))
    g, p = spec.group, u.field.p
    if g is Group.ETALE:
        _, m = as_reduce(u)
        return NormalForm("Etale", m) if m > 0 else NormalForm("Unramified")
    if g is Group.ALPHA_P:
        du = u.derivative()
        if du.valuation is None:
            raise ValueError("insufficient precision")
        return NormalForm("AlphaP", -(1 + du.valuation))
    if g is Group.MU_P:
        v = u.valuation
        if v is None:
            raise ValueError("insufficient precision")
        if v % p:
            return NormalForm("MuP-ramified", -v)
        return NormalForm("MuP-unit")
    raise ValueError(f"no normal form for group {g!r}")


def normal_form_chart(nf, field, precision=8):
    """A Laurent chart realising a normal form (x'^-m, or 1 + x' for MuP-unit)."""
    if nf.kind == "Unramified":
        return LaurentExpansion(field, 0, (0,), max(precision, 1))
    if nf.kind == "MuP-unit":
        return LaurentExpansion.from_terms(field, {0: 1, 1: 1}, max(precision, 2))
    return LaurentExpansion.from_terms(field, {-nf.m: 1}, max(precision, 1 - nf.m))


def is_artin_schreier_trivial(d):
    """Whether d = c^p - c for some c in kbar(x).

    Over an algebraically closed field of constants this holds exactly
    when the cover y^p - y = d is unramified everywhere, because P^1 has
    no nontrivial connected etale covers.
    """
    if d.is_zero():
        return True
    roots, rest = rational_roots(d.den)
    if rest.degree > 0:
        raise ValueError("non-rational place")
    poles = [Place.finite(c) for c, _ in roots] + [Place.infinity()]
    return all(_local_etale_conductor(d, P) == 0 for P in poles)


def _is_pth_power(f):
    return f.pth_root() is not None


def is_trivial(spec):
    g, u = spec.group, spec.u
    if g is Group.ETALE:
        return is_artin_schreier_trivial(u)
    if g is Group.ALPHA_P:
        return _is_pth_power(u)
    if g is Group.MU_P:
        return u.is_zero() or _is_pth_power(u)
    raise ValueError(f"no torsor data for group {g!r}")


def equivalent(a, b):
    """Whether two charts present the same torsor structure."""
    if a.group != b.group:
        raise ValueError("incomparable")
    g = a.group
    if g is Group.ETALE:
        return is_artin_schreier_trivial(a.u - b.u)
    if g is Group.ALPHA_P:
        return _is_pth_power(a.u - b.u)
    if g is Group.MU_P:
        if a.u.is_zero() or b.u.is_zero():
            raise ValueError("degenerate torsor datum")
        # constants are p-th powers in a perfect field, so no unit factor is lost
        return _is_pth_power(a.u / b.u)
    raise ValueError("incomparable")


def reread_as_alpha(spec):
    """Forget the multiplicative structure and keep y^p = u as an AlphaP torsor.

    The result depends on the chosen u, not just on the torsor.
    """
    if spec.group is not Group.MU_P:
        raise ValueError("only MuP charts can be reread")
    return TorsorSpec(Group.ALPHA_P, spec.u)


def mu_p_normalize(u, ramified_places=()):
    """Divide u by a p-th power so that no order is a nonzero multiple of p.

    With (u) = p D1 + D0, where D0 collects the orders prime to p, take the
    least place Q0 in the support of D0 and w with (w) = D1 - deg(D1) Q0;
    the result is u / w^p.  Places in ramified_places are checked to be
    places where the result is a unit or has order prime to p.
    """
    F, p = u.field, u.field.p
    div = divisor(u)
    d1 = {P: k // p for P, k in div if k % p == 0}
    d0 = [P for P, k in div if k % p]
    if not d0:
        raise ValueError("trivial torsor")
    q0 = min(d0)
    deg1 = sum(d1.values())
    wdiv = dict(d1)
    wdiv[q0] = wdiv.get(q0, 0) - deg1
    w = RationalFunction.from_divisor(F, wdiv.items())
    out = u / w ** p
    for P in ramified_places:
        k = ord_at(out, P)
        if k and k % p == 0:
            raise ArithmeticError("normalisation left a multiple of p")
    return out


# -- deformations through the group schemes M^n --

@dataclass(frozen=True)
class Term:
    sign: int           # +1 or -1, kept symbolic for display
    coeff: object       # RationalFunction in the chart coordinate
    w: int              # exponent of the torsor variable
    t: int              # exponent of the uniformizer


@dataclass(frozen=True)
class LiftedEquation:
    """sum sign * coeff * W^w * t^t = 0 over a base with uniformizer t."""

    p: int
    n: int
    terms: tuple
    variable: str = "w"
    coordinate: str = "x"

    def reduce_mod_t(self):
        """The special-fibre equation as {exponent of W: coefficient}."""
        out = {}
        for term in self.terms:
            if term.t == 0:
                c = term.coeff if term.sign > 0 else -term.coeff
                out[term.w] = out[term.w] + c if term.w in out else c
        return {k: v for k, v in out.items() if not v.is_zero()}

    def __str__(self):
        parts = []
        for term in self.terms:
            factors = []
            if term.t:
                factors.append("t" if term.t == 1 else f"t^{term.t}")
            one = RationalFunction.const(term.coeff.field, 1)
            if term.coeff != one:
                s = str(term.coeff).replace("x", self.coordinate)
                factors.append(s if " " not in s else f"({s})")
            if term.w:
                factors.append(self.variable if term.w == 1 else f"{self.variable}^{term.w}")
            body = "*".join(factors) or "1"
            parts.append(("- " if term.sign < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[1:]


def lift_affine(u, n):
    """w^p - t^((p-1)n) w - u = 0, with u lifted coefficientwise."""
    if n < 0:
        raise ValueError("Mn needs n >= 0")
    F = u.field
    p = F.p
    one = RationalFunction.const(F, 1)
    terms = (Term(1, one, p, 0), Term(-1, one, 1, (p - 1) * n), Term(-1, u, 0, 0))
    return LiftedEquation(p, n, terms)


def lift_boundary(m, n, p):
    """U^p - t^((p-1)n) V^((p-1)m) U + V = 0 for a boundary of datum 1 - pm.

    p is a prime or a FieldSpec (the coefficients then live over it).
    """
    if m < 0:
        raise ValueError("hypothesis (H₂) violated")
    if n <= 0:
        raise ValueError("the boundary lift needs n > 0")
    field = p if isinstance(p, FieldSpec) else FieldSpec(p)
    p = field.p
    one = RationalFunction.const(field, 1)
    V = RationalFunction.x(field)
    terms = (Term(1, one, p, 0), Term(-1, V ** ((p - 1) * m), 1, (p - 1) * n),
             Term(1, V, 0, 0))
    return LiftedEquation(p, n, terms, variable="U", coordinate="V")


def double_point_model(m_o, d_o, e, p):
    """(d_t, genus) of the annulus model with conductor m_o at its origin."""
    if m_o <= 0:
        raise ValueError("conductor must be positive")
    if m_o % p == 0:
        raise ValueError("conductor not prime to p")
    if d_o < 0 or e <= 0:
        raise ValueError("need d_o >= 0 and e > 0")
    return d_o + e * m_o * (p - 1), (m_o - 1) * (p - 1) // 2
