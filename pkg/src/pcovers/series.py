"""Polynomials, rational functions and Laurent expansions on P^1 over F_q.

Everything here is immutable and exact.  Polynomials are stored lowest
degree first with no trailing zeros; rational functions are kept with
gcd(num, den) = 1 and a monic denominator, so == is structural equality.
"""

import math
from dataclasses import dataclass
from functools import total_ordering

INF = math.inf
DEFAULT_WINDOW = 32


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def const(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def from_roots(cls, field, roots):
        out = cls(field, (1,))
        for r in roots:
            out = out * cls(field, (field.neg(r), 1))
        return out

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other):
        F, a, b = self.field, self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly(F, [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
                        for i in range(n)])

    def __neg__(self):
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    def scale(self, c):
        F = self.field
        return Poly(F, [F.mul(c, a) for a in self.coeffs])

    def shift_up(self, k):
        """Multiply by x^k, k >= 0."""
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def __pow__(self, n):
        result, base = Poly(self.field, (1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        F = self.field
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d, inv = other.coeffs, F.inv(other.lead)
        if len(r) < len(d):
            return Poly(F), self
        q = [0] * (len(r) - len(d) + 1)
        for k in range(len(r) - len(d), -1, -1):
            c = F.mul(r[k + len(d) - 1], inv)
            q[k] = c
            if c:
                for i, di in enumerate(d):
                    r[k + i] = F.sub(r[k + i], F.mul(c, di))
        return Poly(F, q), Poly(F, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lead))

    def gcd(self, other):
        a, b = self, other
        while b.coeffs:
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        F = self.field
        return Poly(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, c):
        F, acc = self.field, 0
        for a in reversed(self.coeffs):
            acc = F.add(F.mul(acc, c), a)
        return acc

    def taylor_shift(self, c):
        """The polynomial g with g(z) = self(z + c)."""
        F = self.field
        out = Poly(F)
        lin = Poly(F, (c, 1))
        for a in reversed(self.coeffs):
            out = out * lin + Poly(F, (a,))
        return out

    def reverse(self, n=None):
        """x^n * self(1/x); n defaults to the degree."""
        if n is None:
            n = self.degree
        c = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return Poly(self.field, reversed(c[: n + 1]))

    def root_multiplicity(self, c):
        """Multiplicity of (x - c) as a factor; +inf for the zero polynomial."""
        if not self.coeffs:
            return INF
        k, g = 0, self
        lin = Poly(self.field, (self.field.neg(c), 1))
        while True:
            q, r = divmod(g, lin)
            if r.coeffs:
                return k
            g, k = q, k + 1

    def low_order(self):
        """Exponent of the lowest nonzero term."""
        for i, a in enumerate(self.coeffs):
            if a:
                return i
        return INF

    def pth_root(self):
        """g with g^p == self, or None when self has an exponent prime to p."""
        F, p = self.field, self.field.p
        if any(a and i % p for i, a in enumerate(self.coeffs)):
            return None
        return Poly(F, [F.pth_root(a) for a in self.coeffs[::p]])


class RationalFunction:
    """num/den with gcd 1 and den monic; the zero function is 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        F = num.field
        if den is None:
            den = Poly(F, (1,))
        if not den.coeffs:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.coeffs:
            num, den = Poly(F), Poly(F, (1,))
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.lead
            if lc != 1:
                inv = F.inv(lc)
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def x(cls, field):
        return cls(Poly.x(field))

    @classmethod
    def const(cls, field, c):
        return cls(Poly.const(field, c))

    @classmethod
    def coordinate(cls, field, zero, pole):
        """A degree-one function with a simple zero at `zero` and a simple pole at `pole`."""
        if zero == pole:
            raise ValueError("zero and pole must differ")
        one = Poly(field, (1,))
        if zero.is_infinity:
            return cls(one, Poly(field, (field.neg(pole.c), 1)))
        z = Poly(field, (field.neg(zero.c), 1))
        if pole.is_infinity:
            return cls(z)
        return cls(z, Poly(field, (field.neg(pole.c), 1)))

    @classmethod
    def from_divisor(cls, field, div):
        """The monic-normalised function whose finite orders are given by div.

        div is an iterable of (Place, order); an order at infinity is only
        checked, since it is forced by the finite part.
        """
        num, den = Poly(field, (1,)), Poly(field, (1,))
        total, at_inf = 0, None
        for place, k in div:
            if place.is_infinity:
                at_inf = k
                continue
            lin = Poly(field, (field.neg(place.c), 1))
            if k > 0:
                num = num * lin ** k
            elif k < 0:
                den = den * lin ** (-k)
            total += k
        if at_inf is not None and at_inf != -total:
            raise ValueError("divisor does not have degree zero")
        return cls(num, den)

    @property
    def field(self):
        return self.num.field

    def __repr__(self):
        return f"RationalFunction({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self):
        n, d = _poly_str(self.num), _poly_str(self.den)
        return n if d == "1" else f"({n})/({d})"

    def __eq__(self, other):
        return (isinstance(other, RationalFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self):
        return not self.num.coeffs

    def __add__(self, other):
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __pow__(self, n):
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction(self.num ** n, self.den ** n)

    def derivative(self):
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def pth_root(self):
        """w with w^p == self, or None."""
        a, b = self.num.pth_root(), self.den.pth_root()
        if a is None or b is None:
            return None
        return RationalFunction(a, b)


def _poly_str(f):
    if not f.coeffs:
        return "0"
    F, terms = f.field, []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        cs = _elem_str(F, c)
        if i == 0:
            terms.append(cs)
        else:
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if cs == "1" else f"{cs}*{mono}")
    return " + ".join(reversed(terms))


def _elem_str(F, c):
    if F.e == 1:
        return str(c)
    return "[" + ",".join(str(d) for d in F.to_vector(c)) + "]"


@total_ordering
@dataclass(frozen=True)
class Place:
    """A rational place of P^1: Finite(c) for c in F_q, or Infinity (c is None).

    Places are totally ordered: finite ones by element index, then infinity.
    """

    c: object = None

    @classmethod
    def finite(cls, c):
        return cls(int(c))

    @classmethod
    def infinity(cls):
        return cls(None)

    @property
    def is_infinity(self):
        return self.c is None

    @property
    def key(self):
        return (1, 0) if self.c is None else (0, self.c)

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return "Infinity" if self.c is None else f"Finite({self.c})"


def all_places(field):
    return [Place.finite(c) for c in field.elements()] + [Place.infinity()]


@dataclass(frozen=True)
class LaurentExpansion:
    """sum_{k >= start} coeffs[k - start] z^k, known for exponents < precision.

    coeffs always has length precision - start.  Apart from the all-zero
    window, the leading coefficient is nonzero.
    """

    field: object
    start: int
    coeffs: tuple
    precision: int

    def __post_init__(self):
        c = list(self.coeffs)[: self.precision - self.start]
        c += [0] * (self.precision - self.start - len(c))
        start = self.start
        lead = next((i for i, a in enumerate(c) if a), None)
        if lead:
            c, start = c[lead:], start + lead
        if start >= self.precision:
            raise ValueError("empty window")
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "start", start)

    @classmethod
    def from_terms(cls, field, terms, precision):
        """Build from a dict {exponent: coefficient}."""
        live = [k for k, v in terms.items() if v and k < precision]
        start = min(live) if live else precision - 1
        c = [0] * (precision - start)
        for k, v in terms.items():
            if start <= k < precision:
                c[k - start] = field.add(c[k - start], v)
        return cls(field, start, tuple(c), precision)

    def is_zero(self):
        return not any(self.coeffs)

    @property
    def valuation(self):
        """Lowest exponent with a nonzero coefficient, or None if none is known."""
        return None if self.is_zero() else self.start

    def coeff(self, k):
        if k >= self.precision:
            raise ValueError("coefficient beyond precision")
        if k < self.start:
            return 0
        return self.coeffs[k - self.start]

    def terms(self):
        return {self.start + i: a for i, a in enumerate(self.coeffs) if a}

    def __add__(self, other):
        F = self.field
        prec = min(self.precision, other.precision)
        start = min(self.start, other.start)
        c = [F.add(self.coeff(k) if k < self.precision else 0,
                   other.coeff(k) if k < other.precision else 0)
             for k in range(start, prec)]
        return LaurentExpansion(F, start, tuple(c), prec) if start < prec else _empty(F, prec)

    def __neg__(self):
        F = self.field
        return LaurentExpansion(F, self.start, tuple(F.neg(a) for a in self.coeffs), self.precision)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        v1 = self.precision if self.is_zero() else self.start
        v2 = other.precision if other.is_zero() else other.start
        prec = min(self.precision + v2, other.precision + v1)
        if self.is_zero() or other.is_zero():
            return _empty(F, prec)
        start = v1 + v2
        n = prec - start
        c = [0] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a:
                for j, b in enumerate(other.coeffs[: n - i]):
                    if b:
                        c[i + j] = F.add(c[i + j], F.mul(a, b))
        return LaurentExpansion(F, start, tuple(c), prec)

    def scale(self, c):
        F = self.field
        return LaurentExpansion(F, self.start, tuple(F.mul(c, a) for a in self.coeffs), self.precision)

    def frobenius(self):
        """The p-th power; in characteristic p it is known p times further out."""
        F, p = self.field, self.field.p
        terms = {p * k: F.pow(a, p) for k, a in self.terms().items()}
        return LaurentExpansion.from_terms(F, terms, p * self.precision)

    def derivative(self):
        """d/dz, coefficientwise."""
        F = self.field
        terms = {k - 1: F.mul(F.from_int(k), a) for k, a in self.terms().items()}
        return LaurentExpansion.from_terms(F, terms, self.precision - 1)

    def __str__(self):
        t = self.terms()
        if not t:
            return f"O(z^{self.precision})"
        parts = []
        for k in sorted(t):
            cs = _elem_str(self.field, t[k])
            mono = "1" if k == 0 else ("z" if k == 1 else f"z^{k}")
            parts.append(mono if cs == "1" and k != 0 else (cs if k == 0 else f"{cs}*{mono}"))
        return " + ".join(parts) + f" + O(z^{self.precision})"


def _empty(F, precision):
    return LaurentExpansion(F, precision - 1, (0,), precision)


# -- local operations --

def ord_at(f, P):
    """Vanishing order of f at P; negative at poles and +inf for f = 0."""
    if f.is_zero():
        return INF
    if P.is_infinity:
        return f.den.degree - f.num.degree
    return f.num.root_multiplicity(P.c) - f.den.root_multiplicity(P.c)


def _local_polys(f, P):
    """num and den rewritten in the local parameter at P, plus an extra z-power."""
    if P.is_infinity:
        d = max(f.num.degree, f.den.degree)
        return f.num.reverse(d), f.den.reverse(d)
    return f.num.taylor_shift(P.c), f.den.taylor_shift(P.c)


def _series_quotient(num, den, n):
    """First n coefficients of num/den as a power series; den(0) != 0."""
    F = num.field
    a = list(num.coeffs) + [0] * n
    d = den.coeffs
    inv = F.inv(d[0])
    out = []
    for k in range(n):
        c = F.mul(a[k], inv)
        out.append(c)
        if c:
            for i in range(1, min(len(d), n - k)):
                a[k + i] = F.sub(a[k + i], F.mul(c, d[i]))
    return out


def expand_at(f, P, precision=None):
    """Laurent expansion of f in z = x - c, or z = 1/x at infinity."""
    if f.is_zero():
        raise ValueError("cannot expand the zero function")
    start = ord_at(f, P)
    if precision is None:
        precision = start + DEFAULT_WINDOW
    if precision <= start:
        raise ValueError("empty window")
    num, den = _local_polys(f, P)
    a, b = num.low_order(), den.low_order()
    num = Poly(num.field, num.coeffs[a:])
    den = Poly(den.field, den.coeffs[b:])
    coeffs = _series_quotient(num, den, precision - start)
    return LaurentExpansion(f.field, start, tuple(coeffs), precision)


def diff_ord(u, P):
    """Order at P of the differential du; +inf when du = 0."""
    du = u.derivative()
    if du.is_zero():
        return INF
    # dx = -s^-2 ds at infinity
    return ord_at(du, P) - (2 if P.is_infinity else 0)


def differential_expansion(w, P, precision):
    """Expansion of the coefficient of w*dx in the local parameter at P."""
    g = expand_at(w, P, precision + (2 if P.is_infinity else 0))
    if not P.is_infinity:
        return g
    F = w.field
    terms = {k - 2: F.neg(a) for k, a in g.terms().items()}
    return LaurentExpansion.from_terms(F, terms, g.precision - 2)


def dlog_residue(u, P):
    """Residue of du/u at P, an element of F_p returned as an int."""
    if u.is_zero():
        raise ValueError("dlog of the zero function")
    w = u.derivative() / u
    if w.is_zero():
        return 0
    start = ord_at(w, P) - (2 if P.is_infinity else 0)
    if start > -1:
        return 0
    res = differential_expansion(w, P, 0).coeff(-1)
    if not u.field.in_prime_field(res):
        raise ArithmeticError("residue outside the prime field")
    return res


def rational_roots(f):
    """[(root, multiplicity)] over F_q and the leftover factor without roots."""
    out, g = [], f
    for c in f.field.elements():
        if g.degree < 1:
            break
        k = 0
        lin = Poly(f.field, (f.field.neg(c), 1))
        while True:
            q, r = divmod(g, lin)
            if r.coeffs:
                break
            g, k = q, k + 1
        if k:
            out.append((c, k))
    return out, g


def divisor(u):
    """[(Place, order)] over all places where u has a zero or pole."""
    if u.is_zero():
        raise ValueError("divisor of the zero function")
    zeros, rest_n = rational_roots(u.num)
    poles, rest_d = rational_roots(u.den)
    if rest_n.degree > 0 or rest_d.degree > 0:
        raise ValueError("non-rational place")
    orders = {}
    for c, k in zeros:
        orders[Place.finite(c)] = k
    for c, k in poles:
        orders[Place.finite(c)] = -k
    at_inf = u.den.degree - u.num.degree
    if at_inf:
        orders[Place.infinity()] = at_inf
    return sorted(orders.items())
