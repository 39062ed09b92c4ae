"""Special functions: normalized sinc, the Hurwitz zeta function at s = 2,
F(x) = x * zeta(2, x) and its majorant, and the tan x = x fixed point.

All routines are pure and reentrant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, IterationLimitError

PI2 = math.pi * math.pi

# B_2 .. B_14; the omitted B_16 term bounds the Euler-Maclaurin remainder.
_BERNOULLI = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6)
_B16 = 3617 / 510


@dataclass(frozen=True)
class EvalPolicy:
    """Tolerance and iteration budget for series and root evaluation."""

    abs_tol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise DomainError(f"abs_tol must be positive, got {self.abs_tol!r}")
        if int(self.max_iter) != self.max_iter or self.max_iter < 1:
            raise DomainError(f"max_iter must be a positive integer, got {self.max_iter!r}")


DEFAULT_POLICY = EvalPolicy()


def sin_pi(x: float) -> float:
    """sin(pi x) with exact argument reduction, so integers give exactly 0."""
    y = math.fmod(x, 2.0)
    if y > 1.0:
        y -= 2.0
    elif y < -1.0:
        y += 2.0
    if y > 0.5:
        y = 1.0 - y
    elif y < -0.5:
        y = -1.0 - y
    return math.sin(math.pi * y)


def cos_pi(x: float) -> float:
    """cos(pi x) with exact argument reduction."""
    y = math.fmod(abs(x), 2.0)
    if y > 1.0:
        y = 2.0 - y
    if y <= 0.25:
        return math.cos(math.pi * y)
    if y < 0.75:
        return math.sin(math.pi * (0.5 - y))
    return -math.cos(math.pi * (1.0 - y))


def sinc_pi(x: float) -> float:
    """Normalized sinc, sin(pi x) / (pi x), equal to 1 at the origin."""
    if abs(x) < 1e-4:
        u = (math.pi * x) ** 2
        return 1.0 - u / 6.0 * (1.0 - u / 20.0 * (1.0 - u / 42.0))
    return sin_pi(x) / (math.pi * x)


def _em_start(abs_tol: float) -> float:
    # smallest z where the first omitted Euler-Maclaurin term drops below abs_tol / 10
    return max(2.0, (_B16 / (0.1 * abs_tol)) ** (1.0 / 17.0))


def _zeta2_asymptotic(z):
    w = 1.0 / (z * z)
    acc = 0.0
    for b in reversed(_BERNOULLI):
        acc = acc * w + b
    return 1.0 / z + 0.5 * w + acc * w / z


def hurwitz_zeta2(x: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """Hurwitz zeta function zeta(2, x) = sum_{n>=0} 1 / (x + n)^2 for x > 0.

    Shifts x upward by the recurrence zeta(2, x) = 1/x^2 + zeta(2, x + 1) until
    the Euler-Maclaurin expansion is accurate to ``policy.abs_tol``, then sums
    the expansion through the B_14 term.
    """
    if not x > 0 or math.isinf(x):
        raise DomainError(f"hurwitz_zeta2 needs a finite x > 0, got {x!r}")
    z0 = _em_start(policy.abs_tol)
    head = 0.0
    z = x
    if z < z0:
        n = math.ceil(z0 - z)
        # add the largest-index (smallest) terms first
        head = math.fsum(1.0 / (x + k) ** 2 for k in range(n - 1, -1, -1))
        z = x + n
    return head + _zeta2_asymptotic(z)


def hurwitz_zeta2_array(x) -> np.ndarray:
    """Vectorized zeta(2, x) at full double precision (x > 0 elementwise)."""
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)) or np.any(np.isinf(x)):
        raise DomainError("hurwitz_zeta2_array needs finite x > 0")
    shift = np.maximum(0.0, np.ceil(10.0 - x))
    z = x + shift
    out = _zeta2_asymptotic(z)
    nmax = int(shift.max()) if shift.size else 0
    for k in range(nmax - 1, -1, -1):
        out = out + np.where(k < shift, 1.0 / (x + k) ** 2, 0.0)
    return out


def big_f(x: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """F(x) = x * zeta(2, x)."""
    return x * hurwitz_zeta2(x, policy)


def majorant(x: float) -> float:
    """Upper bound 1 + 1/x - 1/(x+1)^2 for F(x), valid for x > 0."""
    return 1.0 + 1.0 / x - 1.0 / (x + 1.0) ** 2


def bisect(func, lo: float, hi: float, policy: EvalPolicy = DEFAULT_POLICY):
    """Bracketed bisection for a sign change of ``func`` on [lo, hi].

    Halves the bracket until it collapses to adjacent doubles (or an exact
    zero is hit) and returns ``(root, residual)``. Raises
    :class:`IterationLimitError` if the bracket is still open after
    ``policy.max_iter`` halvings and the residual exceeds ``policy.abs_tol``.
    """
    flo, fhi = func(lo), func(hi)
    if flo == 0.0:
        return lo, 0.0
    if fhi == 0.0:
        return hi, 0.0
    if (flo > 0) == (fhi > 0):
        raise DomainError(f"no sign change on [{lo!r}, {hi!r}]")
    for _ in range(policy.max_iter):
        mid = lo + 0.5 * (hi - lo)
        if mid <= lo or mid >= hi:
            break
        fmid = func(mid)
        if fmid == 0.0:
            return mid, 0.0
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    else:
        mid = lo + 0.5 * (hi - lo)
        if mid > lo and mid < hi:
            best, fbest = (lo, flo) if abs(flo) <= abs(fhi) else (hi, fhi)
            if abs(fbest) > policy.abs_tol:
                raise IterationLimitError(
                    f"bracket [{lo!r}, {hi!r}] unresolved after {policy.max_iter} iterations"
                )
            return best, abs(fbest)
    return (lo, abs(flo)) if abs(flo) <= abs(fhi) else (hi, abs(fhi))


def inv_hurwitz_zeta2(y: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """The unique x > 0 with zeta(2, x) = y.

    Uses 1/x < zeta(2, x) < 1/x + 1/x^2 to bracket the root, then bisects.
    """
    if not y > 0 or math.isinf(y):
        raise DomainError(f"inv_hurwitz_zeta2 needs a finite y > 0, got {y!r}")
    lo = 1.0 / y
    hi = (1.0 + math.sqrt(1.0 + 4.0 * y)) / (2.0 * y)
    lo, hi = lo * (1 - 1e-12), hi * (1 + 1e-12)
    x, residual = bisect(lambda s: hurwitz_zeta2(s, policy) - y, lo, hi, policy)
    if residual > policy.abs_tol * max(1.0, y):
        raise IterationLimitError(f"residual {residual!r} above tolerance for y={y!r}")
    return x


def tangent_fixed_point(policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """Smallest positive solution of tan x = x, which lies in (pi, 3 pi / 2).

    Bisects sin x - x cos x, which shares the root and has no pole.
    """
    lo, hi = math.pi + 0.1, 1.5 * math.pi - 0.001
    x0, _ = bisect(lambda x: math.sin(x) - x * math.cos(x), lo, hi, policy)
    if abs(math.tan(x0) - x0) > policy.abs_tol * (1.0 + x0 * x0):
        raise IterationLimitError("tangent fixed point residual above tolerance")
    if abs(math.sin(x0) / x0) > 0.22:
        raise DomainError("|sin(x0)/x0| exceeds 0.22")
    return x0


@dataclass(frozen=True)
class BigFClaimReport:
    """Grid check of F(x) <= F(1/2) = pi^2/4 on [x_lo, x_hi]."""

    x_lo: float
    x_hi: float
    step: float
    points: int
    max_f: float
    argmax: float
    margin: float
    majorant_at_065: float
    majorant_margin: float
    majorant_dominates: bool
    passed: bool


def verify_big_f_claim(x_lo: float, x_hi: float, step: float, slack: float = 1e-12) -> BigFClaimReport:
    """Evaluate F on an equispaced grid and compare with pi^2/4.

    ``passed`` requires pi^2/4 - F(x) >= -slack at every grid point (the slack
    absorbs rounding at the endpoint x = 1/2, where equality holds) and, on
    [0.65, x_hi], that the majorant f(x) = 1 + 1/x - 1/(x+1)^2 lies above F.
    """
    if x_lo < 0.5:
        raise DomainError(f"x_lo must be >= 0.5, got {x_lo!r}")
    if x_hi < x_lo or not step > 0:
        raise DomainError("need x_lo <= x_hi and step > 0")
    count = int(round((x_hi - x_lo) / step)) + 1
    xs = np.linspace(x_lo, x_hi, count) if count > 1 else np.array([x_lo])
    fs = xs * hurwitz_zeta2_array(xs)
    target = PI2 / 4.0
    k = int(np.argmax(fs))
    margins = target - fs
    tail = xs >= 0.65
    dominated = bool(np.all(fs[tail] <= 1.0 + 1.0 / xs[tail] - 1.0 / (xs[tail] + 1.0) ** 2))
    f065 = majorant(0.65)
    passed = bool(np.all(margins >= -slack)) and dominated and f065 < target
    return BigFClaimReport(
        x_lo=float(x_lo),
        x_hi=float(x_hi),
        step=float(step),
        points=count,
        max_f=float(fs[k]),
        argmax=float(xs[k]),
        margin=float(margins.min()),
        majorant_at_065=f065,
        majorant_margin=target - f065,
        majorant_dominates=dominated,
        passed=passed,
    )
