"""Pure-Python (numpy) implementation of the summation kernels.

Mirrors ``_kernels.pyx`` call for call. Terms are generated in the same
outward order and reduced with ``math.fsum`` (correctly rounded), so results
agree with the compiled core to a few ulps.
"""

import math

import numpy as np

from .specfun import hurwitz_zeta2_array

_EDGE = 1e-12
_PI2 = math.pi * math.pi


def sin_pi_array(x):
    y = np.fmod(x, 2.0)
    y = np.where(y > 1.0, y - 2.0, np.where(y < -1.0, y + 2.0, y))
    y = np.where(y > 0.5, 1.0 - y, np.where(y < -0.5, -1.0 - y, y))
    return np.sin(np.pi * y)


def _reduce(x):
    y = math.fmod(x, 2.0)
    if y > 1.0:
        y -= 2.0
    elif y < -1.0:
        y += 2.0
    if y > 0.5:
        return 1.0 - y
    if y < -0.5:
        return -1.0 - y
    return y


def cos_pi_array(x):
    y = np.fmod(np.abs(x), 2.0)
    y = np.where(y > 1.0, 2.0 - y, y)
    return np.where(
        y <= 0.25,
        np.cos(np.pi * y),
        np.where(y < 0.75, np.sin(np.pi * (0.5 - y)), -np.cos(np.pi * (1.0 - y))),
    )


def sinc_pi_array(x):
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 1e-4
    u = (np.pi * x) ** 2
    taylor = 1.0 - u / 6.0 * (1.0 - u / 20.0 * (1.0 - u / 42.0))
    safe = np.where(small, 1.0, x)
    return np.where(small, taylor, sin_pi_array(safe) / (np.pi * safe))


def _outward(center, lo, hi):
    """Integers of [lo, hi] ordered center, center+1, center-1, center+2, ..."""
    if hi < lo:
        return np.empty(0, dtype=np.int64)
    c = min(max(center, lo), hi)
    right = np.arange(c, hi + 1, dtype=np.int64)
    left = np.arange(c - 1, lo - 1, -1, dtype=np.int64)
    k = max(right.size, left.size)
    out = np.full(2 * k, np.iinfo(np.int64).min, dtype=np.int64)
    out[0 : 2 * right.size : 2] = right
    out[1 : 2 * left.size : 2] = left
    return out[out != np.iinfo(np.int64).min]


def _coset_bounds(xi, o, period, radius):
    m_lo = math.ceil((xi - radius - _EDGE - o) / period)
    m_hi = math.floor((xi + radius + _EDGE - o) / period)
    return m_lo, m_hi


def coset_sinc2_sum(xi, offsets, period, radius, exact_far):
    """Near-field sum of sinc^2(xi - l) over l in U_j (offsets[j] + period Z)
    with |xi - l| <= radius, and the far-field mass beyond the window.

    With ``exact_far`` (integer period) the far field is the closed form
    sin^2(pi d) zeta(2, d/p) / (pi p)^2 per side; otherwise it is the bound
    zeta(2, d/p) / (pi p)^2 per side. Returns ``(near, far)``.
    """
    near_terms = []
    far_terms = []
    periodic = period == math.floor(period)
    for o in offsets:
        m_lo, m_hi = _coset_bounds(xi, o, period, radius)
        m0 = int(math.floor((xi - o) / period + 0.5))
        ms = _outward(m0, m_lo, m_hi)
        d = (xi - o) - ms * period
        if periodic:
            # sin^2(pi d) does not depend on m; only tiny |d| needs the series
            s2 = math.sin(math.pi * _reduce(xi - o)) ** 2 / _PI2
            small = np.abs(d) < 1e-4
            t = s2 / np.where(small, 1.0, d) ** 2
            if small.any():
                t[small] = sinc_pi_array(d[small]) ** 2
            near_terms.append(t)
        else:
            near_terms.append(sinc_pi_array(d) ** 2)
        d = (o - xi) + (m_hi + 1) * period
        e = (xi - o) - (m_lo - 1) * period
        far_terms.append((d, e))
    near = math.fsum(np.concatenate(near_terms)) if near_terms else 0.0
    if not far_terms:
        return near, 0.0
    de = np.array(far_terms, dtype=float)
    z = hurwitz_zeta2_array(de / period)
    scale = 1.0 / (_PI2 * period * period)
    if exact_far:
        w = sin_pi_array(de) ** 2
        far = math.fsum((w * z * scale).ravel())
    else:
        far = math.fsum((z * scale).ravel())
    return near, far


def sinc_product_sum(xi1, xi2, n_terms):
    """sum_{|n| <= n_terms} sinc(xi1 + n) sinc(xi2 + n), outward order."""
    ns = _outward(0, -n_terms, n_terms)
    return math.fsum(sinc_pi_array(xi1 + ns) * sinc_pi_array(xi2 + ns))


def additive_branch_sum(t1, t2, xi1, xi2, sign, shift, n_lo, n_hi):
    """sum_n |rho^(xi1 + n + shift, xi2 + sign (n + shift))|^2 for n in [n_lo, n_hi]."""
    ns = _outward(0, n_lo, n_hi)
    a1 = 2.0 * t1 + 1.0
    a2 = 2.0 * t2 + 1.0
    lam = ns + shift
    e1 = xi1 + lam
    e2 = xi2 + sign * lam
    s1 = sinc_pi_array(e1)
    s2 = sinc_pi_array(e2)
    c = cos_pi_array(e1 * a1 - e2 * a2)
    return math.fsum(0.25 * (s1 * s1 + s2 * s2 + 2.0 * s1 * s2 * c))
