# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled summation kernels; see ``_kernels_py`` for the reference version."""

from libc.math cimport sin, cos, fmod, floor, ceil, fabs

cdef double PI = 3.14159265358979323846
cdef double EDGE = 1e-12


cdef inline double sin_pi(double x) noexcept nogil:
    cdef double y = fmod(x, 2.0)
    if y > 1.0:
        y -= 2.0
    elif y < -1.0:
        y += 2.0
    if y > 0.5:
        y = 1.0 - y
    elif y < -0.5:
        y = -1.0 - y
    return sin(PI * y)


cdef inline double cos_pi(double x) noexcept nogil:
    cdef double y = fmod(fabs(x), 2.0)
    if y > 1.0:
        y = 2.0 - y
    if y <= 0.25:
        return cos(PI * y)
    if y < 0.75:
        return sin(PI * (0.5 - y))
    return -cos(PI * (1.0 - y))


cdef inline double sinc_pi(double x) noexcept nogil:
    cdef double u
    if fabs(x) < 1e-4:
        u = (PI * x) * (PI * x)
        return 1.0 - u / 6.0 * (1.0 - u / 20.0 * (1.0 - u / 42.0))
    return sin_pi(x) / (PI * x)


cdef double zeta2(double x) noexcept nogil:
    # shift to z >= 10, then Euler-Maclaurin through B_14
    cdef double head = 0.0
    cdef double z = x
    cdef long n, k
    cdef double w, acc
    if z < 10.0:
        n = <long>ceil(10.0 - z)
        k = n - 1
        while k >= 0:
            head += 1.0 / ((x + k) * (x + k))
            k -= 1
        z = x + n
    w = 1.0 / (z * z)
    acc = 7.0 / 6.0
    acc = acc * w - 691.0 / 2730.0
    acc = acc * w + 5.0 / 66.0
    acc = acc * w - 1.0 / 30.0
    acc = acc * w + 1.0 / 42.0
    acc = acc * w - 1.0 / 30.0
    acc = acc * w + 1.0 / 6.0
    return head + (1.0 / z + 0.5 * w + acc * w / z)


cdef inline double sinc2_term(double d, double s2, bint periodic) noexcept nogil:
    cdef double v
    if periodic and fabs(d) >= 1e-4:
        return s2 / (d * d)
    v = sinc_pi(d)
    return v * v


cdef struct Acc:
    double s
    double c


cdef inline void acc_add(Acc* a, double x) noexcept nogil:
    # Neumaier's compensated summation
    cdef double t = a.s + x
    if fabs(a.s) >= fabs(x):
        a.c += (a.s - t) + x
    else:
        a.c += (x - t) + a.s
    a.s = t


def coset_sinc2_sum(double xi, double[::1] offsets, double period, double radius, bint exact_far):
    cdef Acc near
    cdef Acc far
    near.s = 0.0; near.c = 0.0
    far.s = 0.0; far.c = 0.0
    cdef Py_ssize_t j
    cdef long m_lo, m_hi, m0, k, m
    cdef double o, base, d, e, scale, sd, se
    cdef bint periodic = period == floor(period)
    scale = 1.0 / (PI * PI * period * period)
    with nogil:
        for j in range(offsets.shape[0]):
            o = offsets[j]
            base = xi - o
            m_lo = <long>ceil((xi - radius - EDGE - o) / period)
            m_hi = <long>floor((xi + radius + EDGE - o) / period)
            m0 = <long>floor(base / period + 0.5)
            if m0 < m_lo:
                m0 = m_lo
            if m0 > m_hi:
                m0 = m_hi
            # with an integer period sin^2(pi (base - m p)) does not depend on m
            sd = sin_pi(base)
            sd = sd * sd / (PI * PI)
            k = 0
            while m0 + k <= m_hi or m0 - k > m_lo:
                m = m0 + k
                if m <= m_hi and m >= m_lo:
                    acc_add(&near, sinc2_term(base - m * period, sd, periodic))
                m = m0 - k - 1
                if m >= m_lo and m <= m_hi:
                    acc_add(&near, sinc2_term(base - m * period, sd, periodic))
                k += 1
            d = (o - xi) + (m_hi + 1) * period
            e = base - (m_lo - 1) * period
            if exact_far:
                sd = sin_pi(d)
                se = sin_pi(e)
                acc_add(&far, sd * sd * zeta2(d / period) * scale)
                acc_add(&far, se * se * zeta2(e / period) * scale)
            else:
                acc_add(&far, zeta2(d / period) * scale)
                acc_add(&far, zeta2(e / period) * scale)
    return near.s + near.c, far.s + far.c


def sinc_product_sum(double xi1, double xi2, long n_terms):
    cdef Acc a
    a.s = 0.0; a.c = 0.0
    cdef long k
    with nogil:
        acc_add(&a, sinc_pi(xi1) * sinc_pi(xi2))
        for k in range(1, n_terms + 1):
            acc_add(&a, sinc_pi(xi1 + k) * sinc_pi(xi2 + k))
            acc_add(&a, sinc_pi(xi1 - k) * sinc_pi(xi2 - k))
    return a.s + a.c


cdef inline double rho2(double a1, double a2, double e1, double e2) noexcept nogil:
    cdef double s1 = sinc_pi(e1)
    cdef double s2 = sinc_pi(e2)
    return 0.25 * (s1 * s1 + s2 * s2 + 2.0 * s1 * s2 * cos_pi(e1 * a1 - e2 * a2))


def additive_branch_sum(double t1, double t2, double xi1, double xi2, double sign,
                        double shift, long n_lo, long n_hi):
    cdef Acc a
    a.s = 0.0; a.c = 0.0
    cdef double a1 = 2.0 * t1 + 1.0
    cdef double a2 = 2.0 * t2 + 1.0
    cdef long c, k, n
    cdef double lam
    if n_hi < n_lo:
        return 0.0
    c = 0
    if c < n_lo:
        c = n_lo
    if c > n_hi:
        c = n_hi
    with nogil:
        k = 0
        while c + k <= n_hi or c - k > n_lo:
            n = c + k
            if n <= n_hi:
                lam = n + shift
                acc_add(&a, rho2(a1, a2, xi1 + lam, xi2 + sign * lam))
            n = c - k - 1
            if n >= n_lo:
                lam = n + shift
                acc_add(&a, rho2(a1, a2, xi1 + lam, xi2 + sign * lam))
            k += 1
    return a.s + a.c
