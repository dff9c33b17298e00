"""Finite fields F_q, q = p^e, as lookup tables.

Elements are plain integers 0 <= a < q.  The integer a stands for the
residue class sum(d_i * t^i) where d_0, d_1, ... are the base-p digits of a
and t is the class of the variable modulo the defining polynomial.  In
particular the prime field F_p is exactly the integers 0..p-1, and the
"index" of an element (used to order places) is the integer itself.
"""

from dataclasses import dataclass, field
from functools import cached_property


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomials over F_p (small integer lists, lowest degree first) --

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = list(a)
    inv = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(_trim(out), m, p)


def _ppowmod(a, n, m, p):
    result, base = [1], _pmod(a, m, p)
    while n:
        if n & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        n >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(modulus, p):
    """Rabin's test for a polynomial over F_p given lowest degree first."""
    m = _trim([c % p for c in modulus])
    e = len(m) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    x = [0, 1]
    if _ppowmod(x, p ** e, m, p) != _pmod(x, m, p):
        return False
    for r in prime_factors(e):
        h = _ppowmod(x, p ** (e // r), m, p)
        diff = _trim([(a - b) % p for a, b in _zip_pad(h, x)])
        if len(_pgcd(m, diff, p)) != 1:
            return False
    return True


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def default_modulus(p, e):
    """The least monic irreducible polynomial of degree e over F_p.

    Candidates are enumerated by the integer whose base-p digits are the
    lower coefficients, so the choice is reproducible.
    """
    if e == 1:
        return (0, 1)
    for n in range(p ** e):
        low = [(n // p ** i) % p for i in range(e)]
        cand = low + [1]
        if low[0] and is_irreducible(cand, p):
            return tuple(cand)
    raise ValueError(f"no irreducible polynomial of degree {e} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    e: int = 1
    modulus: tuple = field(default=None)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.e < 1:
            raise ValueError("extension degree must be >= 1")
        mod = self.modulus
        if mod is None:
            mod = default_modulus(self.p, self.e)
        mod = tuple(int(c) % self.p for c in mod)
        mod = tuple(_trim(list(mod)))
        if len(mod) != self.e + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree e")
        if not is_irreducible(mod, self.p):
            raise ValueError("modulus is not irreducible")
        object.__setattr__(self, "modulus", mod)

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"

    @property
    def q(self):
        return self.p ** self.e

    def elements(self):
        return range(self.q)

    # -- digit vectors --

    def to_vector(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.e)]

    def from_vector(self, vec):
        if len(vec) != self.e:
            raise ValueError(f"expected a vector of length {self.e}")
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(vec))

    def from_int(self, n):
        """Image of the integer n under Z -> F_p -> F_q."""
        return n % self.p

    # -- tables --

    @cached_property
    def _tables(self):
        p, q, m = self.p, self.q, list(self.modulus)
        digits = [self.to_vector(a) for a in range(q)]

        def index(vec):
            vec = list(vec) + [0] * (self.e - len(vec))
            return sum(c * p ** i for i, c in enumerate(vec))

        def mul_vec(a, b):
            return index(_pmulmod(_trim(list(digits[a])), _trim(list(digits[b])), m, p))

        # a generator of F_q^*: the first element whose powers reach q - 1 values
        exp = None
        for g in range(1, q):
            powers, x = [1], 1
            for _ in range(q - 2):
                x = mul_vec(x, g)
                if x == 1:
                    break
                powers.append(x)
            if len(powers) == q - 1:
                exp = powers
                break
        log = [None] * q
        for i, x in enumerate(exp):
            log[x] = i
        neg = [index([(-c) % p for c in digits[a]]) for a in range(q)]
        add = None
        if q <= 1024:
            add = [[index([(x + y) % p for x, y in zip(digits[a], digits[b])])
                    for b in range(q)] for a in range(q)]
        return digits, exp, log, neg, add

    # -- arithmetic --

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        table = self._tables[4]
        if table is not None:
            return table[a][b]
        digits = self._tables[0]
        return self.from_vector([(x + y) % self.p for x, y in zip(digits[a], digits[b])])

    def neg(self, a):
        if self.e == 1:
            return (-a) % self.p
        return self._tables[3][a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.e == 1:
            return a * b % self.p
        _, exp, log, _, _ = self._tables
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        _, exp, log, _, _ = self._tables
        return exp[(-log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if n == 0 else 0
        if self.e == 1:
            return pow(a, n % (self.p - 1), self.p)
        _, exp, log, _, _ = self._tables
        return exp[(log[a] * n) % (self.q - 1)]

    def pth_root(self, a):
        # Frobenius is a bijection of F_q; its inverse is a -> a^(q/p)
        return self.pow(a, self.q // self.p)

    def in_prime_field(self, a):
        return 0 <= a < self.p

    def check_tables(self):
        """Return True when every nonzero element has a two-sided inverse."""
        return all(self.mul(a, self.inv(a)) == 1 for a in range(1, self.q))
