"""Frame functionals, probe frame bounds and Jorgensen-Pedersen checks.

For Lebesgue measure on a unit interval the frame functional
Phi(xi) = sum_{l in Lambda} |mu^(xi - l)|^2 = sum sinc^2(xi - l) is summed
exactly inside a window of half-width ``radius`` around xi. The mass outside
the window is either evaluated in closed form (coset unions of integer
period: sin^2 is constant along each coset, leaving a Hurwitz zeta series)
or bounded by C^2 zeta(2, d/p) / p^2 per coset and side, with C = 1/pi.
Every value therefore comes with a certified enclosure of Phi(xi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .errors import DomainError, ToleranceTooTightError, UnsupportedMeasureError
from .measures import AdditiveLebesgue, Measure, RestrictedLebesgue
from .pointsets import (
    CosetUnion,
    DiagonalFamily,
    FiniteList,
    FiniteList2D,
    PointSet1D,
    PointSet2D,
    count_in_interval,
)
from .specfun import PI2, cos_pi, hurwitz_zeta2, sin_pi, sinc_pi

DEFAULT_RADIUS = 1e4
DEFAULT_TOL = 1e-6
# relative error budget of a closed-form far field (zeta series, sin^2 of a
# rounded argument) and of compensated summation
_FAR_REL = 1e-10
_SUM_REL = 1e-15


@dataclass(frozen=True)
class FrameValue:
    """Truncated frame functional and the mass beyond the truncation window.

    ``value`` sums the terms inside the window. ``tail`` is an upper bound on
    the omitted terms; when ``exact_tail`` is set it is their closed-form value.
    """

    xi: float
    value: float
    tail: float
    exact_tail: bool

    @property
    def estimate(self) -> float:
        return self.value + self.tail if self.exact_tail else self.value + 0.5 * self.tail

    def enclosure(self):
        """Certified interval (lo, hi) containing Phi(xi)."""
        r = _SUM_REL * (self.value + self.tail)
        if self.exact_tail:
            r += _FAR_REL * self.tail
            total = self.value + self.tail
            return total - r, total + r
        return self.value - r, self.value + self.tail + r


def _require_lebesgue(m: Measure) -> None:
    if isinstance(m, AdditiveLebesgue):
        raise UnsupportedMeasureError("use jp_verify_additive for the additive measure")
    if not isinstance(m, RestrictedLebesgue):
        raise UnsupportedMeasureError(f"unsupported measure {m!r}")


def frame_functional(m: Measure, s: PointSet1D, xi: float, radius: float = DEFAULT_RADIUS) -> FrameValue:
    """Phi(xi) = sum over s of |mu^(xi - l)|^2 for Lebesgue measure on [t, t+1].

    Terms with |xi - l| <= radius are summed with compensated accumulation in
    a fixed outward order; the remainder is reported as ``tail``.
    """
    _require_lebesgue(m)
    if not radius > 0:
        raise DomainError("radius must be positive")
    if isinstance(s, CosetUnion):
        if radius < 2 * s.period:
            raise DomainError(f"radius {radius!r} is below two periods ({2 * s.period!r})")
        exact = s.has_integer_period
        # without an integer period the kernel bounds the far field with C = 1/pi
        near, far = kernels.coset_sinc2_sum(xi, s.offsets, s.period, radius, exact)
        return FrameValue(float(xi), near, far, exact)
    inside, outside = [], []
    for p in s.points:
        (inside if abs(xi - p) <= radius else outside).append(sinc_pi(xi - p) ** 2)
    return FrameValue(float(xi), math.fsum(inside), math.fsum(outside), True)


@dataclass(frozen=True)
class FrameReport:
    """Probe estimates of the frame bounds over a grid of exponentials.

    ``a_lower_probe`` is the smallest certified lower value of Phi over the
    grid and ``b_upper_probe`` the largest certified upper value. They bound
    the frame functional only at the probes, not over all of L^2.
    """

    a_lower_probe: float
    b_upper_probe: float
    tail_bound_max: float
    samples: int
    truncation_radius: float


def probe_frame_bounds(m: Measure, s: PointSet1D, xi_grid: Sequence[float], radius: float = DEFAULT_RADIUS) -> FrameReport:
    if not len(xi_grid):
        raise DomainError("xi_grid must be nonempty")
    lo, hi, tail = math.inf, -math.inf, 0.0
    for xi in xi_grid:
        fv = frame_functional(m, s, xi, radius)
        a, b = fv.enclosure()
        lo, hi = min(lo, a), max(hi, b)
        tail = max(tail, fv.tail)
    return FrameReport(lo, hi, tail, len(xi_grid), float(radius))


def default_probe_grid(period: float = 1.0, count: int = 257, n_random: int = 64, seed: int = 0) -> list:
    """``count`` equispaced points of [0, period) followed by ``n_random``
    seeded uniform points (numpy PCG64)."""
    grid = [period * k / count for k in range(count)]
    rng = np.random.default_rng(seed)
    grid.extend(float(x) for x in rng.uniform(0.0, period, n_random))
    return grid


@dataclass
class SpectrumVerdict:
    """Outcome of a Jorgensen-Pedersen check: ``passed`` iff worst_residual <= tolerance.

    ``rows`` holds one dict per probe point (xi, value, tail, residual).
    """

    passed: bool
    worst_residual: float
    worst_xi: object
    tolerance: float
    rows: list = field(default_factory=list, repr=False)
    notes: dict = field(default_factory=dict)


def jp_verify(
    m: Measure,
    s: PointSet1D,
    xi_grid: Sequence[float],
    radius: float = DEFAULT_RADIUS,
    tol: float = DEFAULT_TOL,
) -> SpectrumVerdict:
    """Check sum_l |mu^(xi + l)|^2 = 1 on a grid of xi.

    The residual at each point is the distance from 1 to the far end of the
    certified enclosure, so a pass certifies |Phi(xi) - 1| <= tol at every
    grid point. Raises :class:`ToleranceTooTightError` when an enclosure is
    not narrower than ``tol``.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    rows = []
    worst, worst_xi = -1.0, None
    for xi in xi_grid:
        # sum |mu^(xi + l)|^2 = Phi(-xi)
        fv = frame_functional(m, s, -xi, radius)
        lo, hi = fv.enclosure()
        if hi - lo >= tol:
            raise ToleranceTooTightError(
                f"truncation uncertainty {hi - lo!r} at xi={xi!r} is not below tol={tol!r}; "
                "increase the radius"
            )
        residual = max(abs(lo - 1.0), abs(hi - 1.0))
        rows.append({"xi": float(xi), "value": fv.value, "tail": fv.tail, "residual": residual})
        if residual > worst:
            worst, worst_xi = residual, float(xi)
    return SpectrumVerdict(worst <= tol, worst, worst_xi, tol, rows)


def poisson_diagonal_sum(xi1: float, xi2: float, n_terms: int):
    """Symmetric partial sum of sinc(xi1 + n) sinc(xi2 + n) over |n| <= n_terms
    and its closed-form limit sinc(xi2 - xi1)."""
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    return kernels.sinc_product_sum(xi1, xi2, n_terms), sinc_pi(xi2 - xi1)


def _pair_tail(a: float, b: float, n: int):
    """sum_{k > n} 1 / ((k + a)(k + b)) ~ zeta(2, z) with z = n + 1 + (a+b)/2.

    Returns (estimate, bound on the neglected part). The neglected part is
    sum_{j>=1} delta^{2j} zeta(2j + 2, z) with delta = (a - b)/2.
    """
    z = n + 1 + 0.5 * (a + b)
    d2 = (0.5 * (a - b)) ** 2
    q = d2 / (z * z)
    if z <= 1 or q >= 0.5:
        raise DomainError("n_terms too small for the tail expansion")
    return hurwitz_zeta2(z), 2.0 / z * q / (1.0 - q)


def _sinc2_tail(v: float, n: int) -> float:
    # sum_{|k| > n} sinc^2(v + k) in closed form
    return sin_pi(v) ** 2 / PI2 * (hurwitz_zeta2(n + 1 + v) + hurwitz_zeta2(n + 1 - v))


def _even_integer(x: float, tol: float = 1e-12) -> bool:
    r = round(x)
    return abs(x - r) <= tol and r % 2 == 0


@dataclass(frozen=True)
class AdditiveEvaluation:
    """Two evaluations of sum_l |rho^(xi + l)|^2 at one xi.

    ``direct``: truncated sum over the set plus the closed-form tail, with
    certified error ``direct_err``. ``decomposed``: the projection
    decomposition (two 1D frame functionals plus the cross term), or None
    when the cross term has no closed form.
    """

    xi: tuple
    direct: float
    direct_err: float
    decomposed: Optional[float]
    decomposed_err: Optional[float]
    cross_term: Optional[float]


def _branch_tail(t1, t2, xi1, xi2, sign, s_b, n):
    a1, a2 = 2 * t1 + 1, 2 * t2 + 1
    kappa = a1 - sign * a2
    v, u = xi1 + s_b, xi2 + sign * s_b
    t_v, t_u = _sinc2_tail(v, n), _sinc2_tail(u, n)
    amp = sin_pi(v) * sin_pi(u) / PI2
    if _even_integer(kappa):
        # cos(pi T(xi + l)) is constant along the branch
        phase = cos_pi(xi1 * a1 - xi2 * a2 + s_b * kappa)
        r_est, r_err = _pair_tail(v, sign * u, n)
        l_est, l_err = _pair_tail(-v, -sign * u, n)
        cross = sign * amp * (r_est + l_est)
        err = 0.5 * abs(amp) * (r_err + l_err)
        return 0.25 * (t_v + t_u + 2.0 * phase * cross), err
    # Cauchy-Schwarz on the cross term
    bound = math.sqrt(
        (hurwitz_zeta2(n + 1 + v) + hurwitz_zeta2(n + 1 - v))
        * (hurwitz_zeta2(n + 1 + u) + hurwitz_zeta2(n + 1 - u))
    ) / PI2
    return 0.25 * (t_v + t_u), 0.5 * bound


def evaluate_additive(t1: float, t2: float, s: PointSet2D, xi, n_terms: int) -> AdditiveEvaluation:
    xi1, xi2 = float(xi[0]), float(xi[1])
    if isinstance(s, FiniteList2D):
        a1, a2 = 2 * t1 + 1, 2 * t2 + 1
        terms = []
        for l1, l2 in s.points:
            e1, e2 = xi1 + l1, xi2 + l2
            c1, c2 = sinc_pi(e1), sinc_pi(e2)
            terms.append(0.25 * (c1 * c1 + c2 * c2 + 2 * c1 * c2 * cos_pi(e1 * a1 - e2 * a2)))
        total = math.fsum(terms)
        return AdditiveEvaluation((xi1, xi2), total, _SUM_REL * total, None, None, None)

    n = int(n_terms)
    if n < 2:
        raise DomainError("n_terms must be >= 2")
    sign = s.sign
    parts, errs = [], []
    for s_b in (0.0, s.shift):
        parts.append(kernels.additive_branch_sum(t1, t2, xi1, xi2, sign, s_b, -n, n))
        tail, err = _branch_tail(t1, t2, xi1, xi2, sign, s_b, n)
        parts.append(tail)
        errs.append(err + _FAR_REL * abs(tail))
    direct = math.fsum(parts)
    direct_err = math.fsum(errs) + _SUM_REL * direct

    a1, a2 = 2 * t1 + 1, 2 * t2 + 1
    kappa = a1 - sign * a2
    if not _even_integer(kappa):
        return AdditiveEvaluation((xi1, xi2), direct, direct_err, None, None, None)
    leb = RestrictedLebesgue(0.0)
    radius = max(2.0, float(n))
    phi1 = frame_functional(leb, s.projection(0), -xi1, radius)
    phi2 = frame_functional(leb, s.projection(1), -xi2, radius)
    cross = 0.0
    for s_b in (0.0, s.shift):
        v, u = xi1 + s_b, xi2 + sign * s_b
        cross += 2.0 * cos_pi(xi1 * a1 - xi2 * a2 + s_b * kappa) * sinc_pi(u - sign * v)
    lo1, hi1 = phi1.enclosure()
    lo2, hi2 = phi2.enclosure()
    decomposed = 0.25 * (phi1.estimate + phi2.estimate + cross)
    dec_err = 0.25 * (0.5 * (hi1 - lo1) + 0.5 * (hi2 - lo2)) + 4 * _SUM_REL
    return AdditiveEvaluation((xi1, xi2), direct, direct_err, decomposed, dec_err, 0.25 * cross)


def jp_verify_additive(
    t1: float,
    t2: float,
    s: PointSet2D,
    xi_grid: Sequence,
    n_terms: int = 10_000,
    tol: float = DEFAULT_TOL,
) -> SpectrumVerdict:
    """Jorgensen-Pedersen check for rho_{t1,t2} evaluated two ways.

    The direct route sums |rho^(xi + l)|^2 over n in [-n_terms, n_terms] on
    both branches and adds the tail in closed form. The decomposed route
    writes the sum as (Phi_1 + Phi_2 + cross) / 4 from the two coordinate
    projections, with the cross term from the sinc-product identity. The
    check passes iff both agree with 1 within ``tol`` at every point.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    rows = []
    worst, worst_xi, max_gap = -1.0, None, 0.0
    for xi in xi_grid:
        ev = evaluate_additive(t1, t2, s, xi, n_terms)
        if ev.direct_err >= tol or (ev.decomposed_err is not None and ev.decomposed_err >= tol):
            raise ToleranceTooTightError(f"truncation uncertainty at xi={xi!r} is not below tol={tol!r}")
        residual = abs(ev.direct - 1.0) + ev.direct_err
        row = {"xi1": ev.xi[0], "xi2": ev.xi[1], "direct": ev.direct, "direct_err": ev.direct_err}
        if ev.decomposed is not None:
            residual = max(residual, abs(ev.decomposed - 1.0) + ev.decomposed_err)
            max_gap = max(max_gap, abs(ev.direct - ev.decomposed))
            row.update(decomposed=ev.decomposed, decomposed_err=ev.decomposed_err, cross_term=ev.cross_term)
        row["residual"] = residual
        rows.append(row)
        if residual > worst:
            worst, worst_xi = residual, ev.xi
    notes = {"max_method_disagreement": max_gap}
    return SpectrumVerdict(worst <= tol, worst, worst_xi, tol, rows, notes)


@dataclass(frozen=True)
class BesselReport:
    bound: int
    max_count: int
    worst_center: float
    margin: int
    centers_checked: int
    passed: bool


def bessel_count_check(s: PointSet1D, b_bound: float, centers: Sequence[float]) -> BesselReport:
    """Compare #(s in [xi - 1/2, xi + 1/2]) with floor(pi^2 B / 4) at each center.

    For coset unions the centers o_j + 1/2 (left endpoint on a point, where
    the count of a closed unit window is maximal) are checked as well.
    """
    if not b_bound > 0:
        raise DomainError("b_bound must be positive")
    bound = math.floor(PI2 * b_bound / 4.0)
    probe = [float(c) for c in centers]
    if isinstance(s, CosetUnion):
        probe.extend(o + 0.5 for o in s.offsets)
    best, best_c = -1, None
    for c in probe:
        k = count_in_interval(s, c, 0.5)
        if k > best:
            best, best_c = k, c
    return BesselReport(bound, best, best_c, bound - best, len(probe), best <= bound)
