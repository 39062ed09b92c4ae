"""Spectra of the additive measure rho_{t1,t2} and the checks around them.

A spectrum exists iff t1 - t2 is a nonzero integer or t1 + t2 is an integer
other than -1. In both cases it is a two-branch diagonal family on which the
phase functional T takes even values on the integer branch and odd values on
the shifted one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import AuditFailure, DomainError, LemmaViolation, LinkFailure, NotSpectralError
from .frames import default_probe_grid, probe_frame_bounds
from .measures import RestrictedLebesgue, decay_constant, ft_additive, t_functional
from .pointsets import DiagonalFamily, FiniteList2D, _distinct, enumerate_window_2d
from .specfun import bisect, sinc_pi, tangent_fixed_point
from ._kernels_py import sinc_pi_array
from .theorems import check_gap_product_bound

INT_TOL = 1e-12
PARITY_TOL = 1e-9
ALPHA_FLOOR = 0.23
LAMBDA1_MAX = 0.8
# |sinc(l2)| >= 0.23 forces |l2| <= 1 / (0.23 pi)
LAMBDA2_MAX = 1.0 / (ALPHA_FLOOR * math.pi)
TANGENCY_TOL = 1e-10


class Branch(str, Enum):
    DIFFERENCE_INTEGER = "DifferenceInteger"
    SUM_INTEGER = "SumInteger"


def _int_or_none(x: float):
    r = round(x)
    return int(r) if abs(x - r) <= INT_TOL else None


@dataclass(frozen=True)
class SpectrumConstruction:
    """A constructed spectrum; ``shift`` is kept unreduced (the set stores it mod 1)."""

    t1: float
    t2: float
    branch: Branch
    shift: float
    set: DiagonalFamily

    def to_json(self) -> dict:
        return {
            "t1": self.t1,
            "t2": self.t2,
            "branch": self.branch.value,
            "shift": self.shift,
            "set": self.set.to_json(),
        }


def _reduce(shift: float) -> float:
    r = shift % 1.0
    if not 0.0 < r < 1.0:
        raise DomainError(f"shift {shift!r} reduces to an integer")
    return r


def _nearest_spectral(t1: float, t2: float) -> tuple:
    cands = []
    base = round(t1 - t2)
    for k in (base - 1, base, base + 1):
        if k != 0:
            cands.append(t1 - k)
    base = round(t1 + t2)
    for k in (base - 1, base, base + 1):
        if k != -1:
            cands.append(k - t1)
    best = min(cands, key=lambda c: (abs(c - t2), c))
    return (t1, float(best))


def construct_spectrum(t1: float, t2: float) -> SpectrumConstruction:
    d = _int_or_none(t1 - t2)
    if d is not None and d != 0:
        shift = 1.0 / (2.0 * d)
        return SpectrumConstruction(t1, t2, Branch.DIFFERENCE_INTEGER, shift, DiagonalFamily(1, _reduce(shift)))
    s = _int_or_none(t1 + t2)
    if s is not None and s != -1:
        shift = 1.0 / (2.0 * (s + 1))
        return SpectrumConstruction(t1, t2, Branch.SUM_INTEGER, shift, DiagonalFamily(-1, _reduce(shift)))
    raise NotSpectralError(t1, t2, _nearest_spectral(t1, t2))


@dataclass(frozen=True)
class ParityReport:
    passed: bool
    points_checked: int
    worst_deviation: float


def parity_audit(c: SpectrumConstruction, n_range: int) -> ParityReport:
    """T is an even integer on the integer branch and an odd one on the shifted branch.

    Uses the unreduced shift. Raises :class:`AuditFailure` at the first
    offending point.
    """
    if n_range < 0:
        raise DomainError("n_range must be nonnegative")
    sign = c.set.sign
    worst = 0.0
    checked = 0
    for n in range(-n_range, n_range + 1):
        for parity, x in ((0, float(n)), (1, n + c.shift)):
            point = (x, sign * x)
            t = t_functional(c.t1, c.t2, *point)
            m = round(t)
            dev = abs(t - m)
            worst = max(worst, dev)
            checked += 1
            if dev > PARITY_TOL or m % 2 != parity:
                kind = "odd" if parity else "even"
                raise AuditFailure(f"T{point} = {t!r} is not an {kind} integer", point)
    return ParityReport(True, checked, worst)


@dataclass(frozen=True)
class OrthogonalityReport:
    passed: bool
    pairs_checked: int
    worst_modulus: float
    worst_pair: tuple


def orthogonality_check(t1: float, t2: float, points, tol: float = 1e-9) -> OrthogonalityReport:
    """|rho^(p - q)| <= tol for every unordered pair of distinct points."""
    if not tol > 0:
        raise DomainError("tol must be positive")
    pts = list(points.points if isinstance(points, FiniteList2D) else points)
    worst, worst_pair, count = 0.0, None, 0
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            v = abs(ft_additive(t1, t2, p[0] - q[0], p[1] - q[1]))
            count += 1
            if worst_pair is None or v > worst:
                worst, worst_pair = v, (p, q)
    if count == 0:
        raise DomainError("need at least two points")
    return OrthogonalityReport(worst <= tol, count, worst, worst_pair)


@dataclass(frozen=True)
class ZeroSetSolution:
    lambda1: float
    lambda2: float
    t_value: int
    branch_sign: int


@dataclass
class ZeroSetScan:
    """Result of scanning the zero set for small first coordinate.

    ``off_line`` lists roots of the sinc equation with l2 != +-l1; the
    geometric argument says it is always empty. ``tangencies`` lists
    near-double roots found by refinement, reported for review.
    """

    t1: float
    t2: float
    solutions: list = field(repr=False)
    off_line: list
    tangencies: list
    grid_size: int
    roots_checked: int
    m_max: int
    alpha_min: float
    tangent_slope: float

    @property
    def passed(self) -> bool:
        return not self.off_line


def _refine_min(g, lo, hi, iters=80):
    for _ in range(iters):
        a = lo + (hi - lo) / 3
        b = hi - (hi - lo) / 3
        if abs(g(a)) < abs(g(b)):
            hi = b
        else:
            lo = a
    x = 0.5 * (lo + hi)
    return x, abs(g(x))


def _roots(alpha_sign: float, alpha: float, xs: np.ndarray, vals: np.ndarray) -> tuple:
    """Roots and tangencies of g(x) = alpha_sign * alpha + sinc(x) sampled at xs."""

    def g(x):
        return alpha_sign * alpha + sinc_pi(x)

    roots, tangencies = [], []
    zero = np.flatnonzero(vals == 0.0)
    roots.extend(float(xs[i]) for i in zero)
    change = np.flatnonzero(vals[:-1] * vals[1:] < 0)
    for i in change:
        r, _ = bisect(g, float(xs[i]), float(xs[i + 1]))
        roots.append(r)
    mag = np.abs(vals)
    interior = np.flatnonzero((mag[1:-1] <= mag[:-2]) & (mag[1:-1] <= mag[2:]) & (mag[1:-1] < 1e-3)) + 1
    for i in interior:
        if vals[i - 1] * vals[i + 1] <= 0 or vals[i] == 0.0:
            continue
        x, r = _refine_min(g, float(xs[i - 1]), float(xs[i + 1]))
        if r < TANGENCY_TOL:
            tangencies.append(x)
    return roots, tangencies


def default_lambda1_grid(step: float = 1e-3) -> np.ndarray:
    count = int(round(LAMBDA1_MAX / step))
    return np.arange(1, count + 1) * (LAMBDA1_MAX / count)


def zero_set_line_scan(t1: float, t2: float, lambda1_grid=None, step: float = 1e-3, tol: float = 1e-9, strict: bool = True) -> ZeroSetScan:
    """Solve {T(l1, l2) = m, (-1)^m sinc(l1) + sinc(l2) = 0} for l2, for every l1
    on the grid in (0, 0.8] and every admissible integer m.

    Roots of the sinc equation are isolated by sampling |l2| <= 1/(0.23 pi) at
    ``step`` and bisecting each sign change. A root is a zero-set point when T
    is within ``tol`` of an allowed m. Any root off the lines l2 = +-l1 is
    collected in ``off_line``; with ``strict`` it raises :class:`LemmaViolation`.
    """
    grid = default_lambda1_grid(step) if lambda1_grid is None else np.asarray(lambda1_grid, dtype=float)
    if grid.size == 0 or grid.min() <= 0 or grid.max() > LAMBDA1_MAX + 1e-15:
        raise DomainError("lambda1 grid must lie in (0, 0.8]")
    a1, a2 = 2.0 * t1 + 1.0, 2.0 * t2 + 1.0
    m_max = math.floor(abs(a1) * LAMBDA1_MAX + abs(a2) * LAMBDA2_MAX)
    parities = {m % 2 for m in range(-m_max, m_max + 1)}
    n_samples = int(math.ceil(2 * LAMBDA2_MAX / step)) + 1
    xs = np.linspace(-LAMBDA2_MAX, LAMBDA2_MAX, n_samples)
    sinc_xs = sinc_pi_array(xs)

    solutions, off_line, tangencies = [], [], []
    roots_checked = 0
    alpha_min = math.inf
    for l1 in grid:
        l1 = float(l1)
        alpha = sinc_pi(l1)
        alpha_min = min(alpha_min, alpha)
        for parity in sorted(parities):
            # (-1)^m sinc(l1) + sinc(l2) = 0
            alpha_sign = -1.0 if parity else 1.0
            roots, tang = _roots(alpha_sign, alpha, xs, alpha_sign * alpha + sinc_xs)
            tangencies.extend((l1, x) for x in tang)
            roots_checked += len(roots)
            for l2 in roots:
                line_dist = min(abs(l2 - l1), abs(l2 + l1))
                if line_dist > tol:
                    off_line.append((l1, l2))
                t = t_functional(t1, t2, l1, l2)
                m = round(t)
                if abs(t - m) <= tol and abs(m) <= m_max and m % 2 == parity:
                    sign = 1 if abs(l2 - l1) <= abs(l2 + l1) else -1
                    solutions.append(ZeroSetSolution(l1, l2, int(m), sign))
    x0 = tangent_fixed_point()
    scan = ZeroSetScan(
        t1, t2, solutions, off_line, tangencies, int(grid.size), roots_checked, m_max, alpha_min, abs(math.sin(x0) / x0)
    )
    if strict and off_line:
        raise LemmaViolation(f"{len(off_line)} zero-set candidate(s) off the lines l2 = +-l1", off_line)
    return scan


def plus_space_report(step: float = 1e-3) -> dict:
    """Replay the non-spectrality argument for rho_{-1/2,-1/2} as three numeric links.

    Raises :class:`LinkFailure` naming the first link that fails.
    """
    links = []

    # (i) the projection Z u (Z + 1/2) is a tight frame with bound 2
    leb = RestrictedLebesgue(-0.5)
    proj = DiagonalFamily(1, 0.5).projection(0)
    rep = probe_frame_bounds(leb, proj, default_probe_grid(count=65, n_random=16), radius=1e4)
    ok = abs(rep.a_lower_probe - 2.0) <= 1e-6 and abs(rep.b_upper_probe - 2.0) <= 1e-6
    links.append(
        {
            "name": "projection_tight_frame",
            "pass": ok,
            "details": {"frame_lo": rep.a_lower_probe, "frame_hi": rep.b_upper_probe, "expected": 2.0},
        }
    )
    if not ok:
        raise LinkFailure("projection_tight_frame", links[-1]["details"])

    # (ii) any spectrum's projection has g_min <= sqrt(C^2 pi^2 / A) < 0.8
    c, a = decay_constant(leb), 2.0
    bound = math.sqrt((c * math.pi) ** 2 / a)
    verdict = check_gap_product_bound(bound, bound, c, a)
    ok = verdict.passed and bound < LAMBDA1_MAX
    links.append(
        {
            "name": "min_gap_bound",
            "pass": ok,
            "details": {"bound": bound, "threshold": LAMBDA1_MAX, "product_slack": verdict.slack},
        }
    )
    if not ok:
        raise LinkFailure("min_gap_bound", links[-1]["details"])

    # (iii) small zero-set points lie on l2 = +-l1, where the transform does not vanish
    scan = zero_set_line_scan(-0.5, -0.5, step=step, strict=False)
    deltas = default_lambda1_grid(step)
    residual_min = float(np.min(2.0 * np.abs(sinc_pi_array(deltas))))
    ok = scan.passed and residual_min > 0.2 and scan.tangent_slope < ALPHA_FLOOR <= scan.alpha_min
    links.append(
        {
            "name": "zero_set_lines",
            "pass": ok,
            "details": {
                "off_line": len(scan.off_line),
                "solutions": len(scan.solutions),
                "line_residual_min": residual_min,
                "alpha_min": scan.alpha_min,
                "tangent_slope": scan.tangent_slope,
            },
        }
    )
    if not ok:
        raise LinkFailure("zero_set_lines", links[-1]["details"])
    return {"links": links, "conclusion": "non-spectrality chain verified"}


@dataclass(frozen=True)
class ComplexityReport:
    gaps: tuple
    distinct_gap_count: int
    expected_count: int
    passed: bool


def finite_local_complexity_audit(c: SpectrumConstruction, n_range: int = 50) -> ComplexityReport:
    """Distinct gaps of the first-coordinate projection over |n| <= n_range."""
    if n_range < 1:
        raise DomainError("n_range must be >= 1")
    xs = sorted(p[0] for p in enumerate_window_2d(c.set, -n_range, n_range))
    gaps = tuple(_distinct(b - a for a, b in zip(xs, xs[1:])))
    expected = 1 if abs(c.set.shift - 0.5) <= INT_TOL else 2
    return ComplexityReport(gaps, len(gaps), expected, len(gaps) == expected)
