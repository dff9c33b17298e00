"""Valuation of the canonical Hodge section at a two-component hyperelliptic fibre.

A configuration is a genus g, a node type (beta_j: one node fixed by the
involution; alpha_j: two nodes exchanged by it), the thickness b of the
node downstairs, the valuation nuA of the leading coefficient and,
optionally, nu2 = v(2) for residue characteristic 2.

Two routes compute Ord(Lambda):
  route 1  g * v(disc) + (8g + 4) * sum of the integral-basis valuations
  route 2  closed forms in (g, j, b)
and the result is compared with g * delta <= Ord(Lambda) <= g^2 * delta.
"""

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class ReductionConfig:
    g: int
    kind: str           # "beta" or "alpha"
    j: int
    b: int
    nuA: int = 0
    nu2: object = None  # None: residue characteristic != 2

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("genus must be at least 2")
        if self.kind not in ("beta", "alpha"):
            raise ValueError("kind must be beta or alpha")
        lo, hi = (1, self.g // 2) if self.kind == "beta" else (0, (self.g - 1) // 2)
        if not lo <= self.j <= hi:
            raise ValueError(f"j must lie in [{lo}, {hi}] for {self.kind} nodes of genus {self.g}")
        if self.b <= 0:
            raise ValueError("thickness b must be positive")
        if self.nuA < 0:
            raise ValueError("nuA must be nonnegative")
        if self.nu2 is not None and self.nu2 <= 0:
            raise ValueError("nu2 must be positive")
        if self.kind == "beta" and self.nu2 is None and self.b % 2:
            raise ValueError("beta nodes need an even thickness b")

    @property
    def char2(self):
        return self.nu2 is not None


@dataclass(frozen=True)
class HodgeReport:
    nu_disc: int
    sum_mi: object      # Fraction, or None when route 1 is unavailable
    ord_lambda: int
    delta_s: int
    lower: int
    upper: int
    ok: bool
    route1: object = None
    notes: tuple = field(default_factory=tuple)


def disc_valuation(cfg):
    g, j, b = cfg.g, cfg.j, cfg.b
    node = 2 * j * (2 * j + 1) if cfg.kind == "beta" else (2 * j + 1) * (2 * j + 2)
    v = (4 * g + 2) * cfg.nuA + node * b
    if cfg.char2:
        v += (4 * g + 4) * cfg.nu2
    return v


def vertical_divisor(cfg):
    """Multiplicities of the two components in div(dx / (2y + Q))."""
    if cfg.char2:
        raise ValueError("vertical divisor route unavailable in residue characteristic 2")
    half = Fraction(-cfg.nuA, 2)
    k = 2 * cfg.j - 1 if cfg.kind == "beta" else 2 * cfg.j
    return half, half - Fraction(k * cfg.b, 2)


def basis_valuations(cfg):
    y1, y2 = vertical_divisor(cfg)
    return [min(i * cfg.b + y2, y1) for i in range(cfg.g)]


def basis_sum_closed(cfg):
    j, b = cfg.j, cfg.b
    node = Fraction(j * j, 2) if cfg.kind == "beta" else Fraction(j * j + j, 2)
    return -node * b - Fraction(cfg.g, 2) * cfg.nuA


def closed_form(cfg):
    """Route 2: Ord(Lambda) from the closed forms."""
    g, j, b = cfg.g, cfg.j, cfg.b
    if cfg.kind == "beta":
        return 2 * (g - j) * j * b
    v = 2 * (g - j) * (j + 1) * b
    return v + b if cfg.char2 else v


def delta_s(cfg):
    if cfg.char2:
        return 2 * cfg.b
    return cfg.b // 2 if cfg.kind == "beta" else 2 * cfg.b


def ord_lambda(cfg):
    nu = disc_valuation(cfg)
    r2 = closed_form(cfg)
    notes = []
    r1 = s = None
    if not cfg.char2:
        s = sum(basis_valuations(cfg))
        total = cfg.g * nu + (8 * cfg.g + 4) * s
        if total.denominator != 1:
            raise ArithmeticError("internal inconsistency")
        r1 = int(total)
        if r1 != r2:
            raise ArithmeticError("internal inconsistency")
    else:
        notes.append("route 1 unavailable in residue characteristic 2")
        if cfg.kind == "alpha":
            notes.append("closed form 2(g-j)(j+1)b + b taken as printed; "
                         "it does not equal (g-j)j*delta with delta = 2b")
    ds = delta_s(cfg)
    lo, hi = cfg.g * ds, cfg.g * cfg.g * ds
    return HodgeReport(nu, s, r2, ds, lo, hi, lo <= r2 <= hi, r1, tuple(notes))


def check_chx(report):
    return report.lower <= report.ord_lambda <= report.upper


def sweep_configs(char2=False, nuA_values=(0, 2, 4), nu2_values=(1, 2, 3, 4)):
    """The acceptance sweep: g in [2, 8], admissible j, b in [1, 10] (even for beta)."""
    out = []
    for g in range(2, 9):
        for kind in ("beta", "alpha"):
            js = range(1, g // 2 + 1) if kind == "beta" else range(0, (g - 1) // 2 + 1)
            for j in js:
                for b in range(1, 11):
                    if not char2:
                        if kind == "beta" and b % 2:
                            continue
                        out.extend(ReductionConfig(g, kind, j, b, a) for a in nuA_values)
                    else:
                        out.extend(ReductionConfig(g, kind, j, b, 0, n) for n in nu2_values)
    return out
