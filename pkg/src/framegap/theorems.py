"""Executable checks of the frame-bound / spectral-gap inequalities.

Every check returns an :class:`InequalityVerdict` holding both sides of the
inequality. Analytic inputs are compared with a slack of 1e-12; callers
feeding measured quantities pass the measurement's certified error instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .frames import default_probe_grid, probe_frame_bounds
from .measures import RestrictedLebesgue
from .pointsets import CosetUnion, gap_stats
from .specfun import PI2, inv_hurwitz_zeta2

SLACK = 1e-12


@dataclass(frozen=True)
class InequalityVerdict:
    """lhs <= rhs, with ``passed`` iff rhs - lhs >= -tolerance."""

    lhs: float
    rhs: float
    passed: bool
    slack: float
    name: str = ""

    @classmethod
    def compare(cls, lhs, rhs, name="", tolerance=SLACK):
        slack = rhs - lhs
        return cls(float(lhs), float(rhs), slack >= -tolerance, float(slack), name)

    def to_json(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "pass": self.passed, "slack": self.slack}


def _positive(**kw):
    for k, v in kw.items():
        if not v > 0:
            raise DomainError(f"{k} must be positive, got {v!r}")


def check_gap_product_bound(g_min: float, g_max: float, c: float, a: float, tolerance: float = SLACK) -> InequalityVerdict:
    """g_min * g_max <= C^2 pi^2 / A for a frame with lower bound A and decay constant C."""
    _positive(g_min=g_min, g_max=g_max, c=c, a=a)
    if g_min > g_max:
        raise DomainError("g_min must not exceed g_max")
    return InequalityVerdict.compare(g_min * g_max, (c * math.pi) ** 2 / a, "gap_product", tolerance)


def check_min_gap_bound(g_min: float, c: float, a: float, tolerance: float = SLACK) -> InequalityVerdict:
    """Sharpened minimal-gap bound g_min^2 <= C^2 pi^2 / (3 (A - 1)), valid for A > 3/2."""
    _positive(g_min=g_min, c=c, a=a)
    if a <= 1.5:
        raise DomainError(f"the sharpened bound needs A > 3/2, got {a!r}")
    return InequalityVerdict.compare(g_min**2, (c * math.pi) ** 2 / (3.0 * (a - 1.0)), "min_gap", tolerance)


@dataclass(frozen=True)
class GapUpperBound:
    closed_form: float
    zeta_form: float
    relaxed: float
    margin: float

    @property
    def consistent(self) -> bool:
        return self.zeta_form <= self.closed_form * (1 + 1e-12) and self.margin > 0


def gap_upper_bound_sharp(a: float, b: float) -> GapUpperBound:
    """Upper bounds on every gap of a frame spectrum of Lebesgue measure on [0, 1].

    ``closed_form`` is (pi^2 B / 2A)(1 + sqrt(1 + 8A / (pi^2 B))) and
    ``zeta_form`` is 2 zeta^{-1}(2, A / (2 K)) with K = floor(pi^2 B / 4); both
    sit below ``relaxed`` = pi^2 B / A + 2. ``zeta_form`` is infinite when K = 0.
    ``margin`` is relaxed - closed_form written without cancellation,
    2u / (1 + sqrt(1 + u))^2 with u = 8A / (pi^2 B).
    """
    _positive(a=a, b=b)
    if a > b:
        raise DomainError("need a <= b")
    closed = PI2 * b / (2.0 * a) * (1.0 + math.sqrt(1.0 + 8.0 * a / (PI2 * b)))
    k = math.floor(PI2 * b / 4.0)
    zeta_form = 2.0 * inv_hurwitz_zeta2(a / (2.0 * k)) if k > 0 else math.inf
    u = 8.0 * a / (PI2 * b)
    margin = 2.0 * u / (1.0 + math.sqrt(1.0 + u)) ** 2
    return GapUpperBound(closed, zeta_form, PI2 * b / a + 2.0, margin)


@dataclass(frozen=True)
class ChainVerdict:
    links: tuple
    passed: bool

    def to_json(self) -> dict:
        return {"links": [v.to_json() for v in self.links], "pass": self.passed}


def check_gap_chain(g_max: float, sup_gap: float, a: float, b: float, tolerance: float = SLACK) -> ChainVerdict:
    """4 / (pi^2 B) <= g_max <= sup_k g_k <= pi^2 B / A + 2, link by link."""
    _positive(g_max=g_max, sup_gap=sup_gap, a=a, b=b)
    if a > b:
        raise DomainError("need a <= b")
    links = (
        InequalityVerdict.compare(4.0 / (PI2 * b), g_max, "density_floor", tolerance),
        InequalityVerdict.compare(g_max, sup_gap, "essential_below_sup", tolerance),
        InequalityVerdict.compare(sup_gap, PI2 * b / a + 2.0, "sup_gap_ceiling", tolerance),
    )
    return ChainVerdict(links, all(v.passed for v in links))


def lattice_family(a: float) -> CosetUnion:
    """(1/n) Z written as U_{j<n} (j/n + Z), with n the integer such that n - 1 <= a < n.

    Its frame functional is constantly n, so it is a tight frame with bound n >= a.
    """
    _positive(a=a)
    n = math.floor(a) + 1
    return CosetUnion(tuple(j / n for j in range(n)), 1.0)


def lattice_family_scan(a_values: Sequence[float], radius: float = 4.0, probe_tol: float = 1e-6) -> list:
    """For each A: build the lattice family, measure its probe frame constant,
    and check (n - 1)/n <= A g_min <= 1.

    Row keys: A, n, frame_lo, frame_hi, g_min, product, bound_lo, bound_hi, pass.
    """
    leb = RestrictedLebesgue(0.0)
    grid = default_probe_grid(count=32, n_random=8)
    rows = []
    for a in a_values:
        s = lattice_family(a)
        n = len(s.offsets)
        rep = probe_frame_bounds(leb, s, grid, radius)
        g_min = gap_stats(s, (0.0, 1.0)).ess_min_gap
        product = a * g_min
        lo, hi = (n - 1) / n, 1.0
        ok = (
            abs(rep.a_lower_probe - n) <= probe_tol
            and abs(rep.b_upper_probe - n) <= probe_tol
            and lo - SLACK <= product <= hi + SLACK
        )
        rows.append(
            {
                "A": float(a),
                "n": n,
                "frame_lo": rep.a_lower_probe,
                "frame_hi": rep.b_upper_probe,
                "g_min": g_min,
                "product": product,
                "bound_lo": lo,
                "bound_hi": hi,
                "pass": ok,
            }
        )
    return rows


def min_gap_sharpness(schedule: Sequence[float], eps: float = 0.0) -> dict:
    """A g_min(Lambda_A) along A = a - eps for a in ``schedule``.

    With integer a and eps in (0, 1) the deficit 1 - A g_min equals eps / a,
    so it decreases to 0.
    """
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise DomainError("schedule must be increasing")
    rows = []
    for a in schedule:
        big_a = a - eps
        s = lattice_family(big_a)
        g_min = gap_stats(s, (0.0, 1.0)).ess_min_gap
        product = big_a * g_min
        rows.append({"A": big_a, "n": len(s.offsets), "g_min": g_min, "product": product, "deficit": 1.0 - product})
    deficits = [r["deficit"] for r in rows]
    monotone = all(d2 <= d1 + SLACK for d1, d2 in zip(deficits, deficits[1:]))
    return {"rows": rows, "monotone": monotone}
