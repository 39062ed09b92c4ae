"""Kernel backend selection.

The compiled Cython core is used when it was built; otherwise the numpy
reference implementation is loaded. Set ``FRAMEGAP_PURE_PYTHON=1`` to force
the fallback.
"""

import os

import numpy as np

from . import _kernels_py

if os.environ.get("FRAMEGAP_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl

        BACKEND = "compiled"
    except ImportError:  # extension not built
        _impl = _kernels_py
        BACKEND = "python"


def coset_sinc2_sum(xi, offsets, period, radius, exact_far):
    offsets = np.ascontiguousarray(offsets, dtype=np.float64)
    return _impl.coset_sinc2_sum(float(xi), offsets, float(period), float(radius), bool(exact_far))


def sinc_product_sum(xi1, xi2, n_terms):
    return _impl.sinc_product_sum(float(xi1), float(xi2), int(n_terms))


def additive_branch_sum(t1, t2, xi1, xi2, sign, shift, n_lo, n_hi):
    return _impl.additive_branch_sum(
        float(t1), float(t2), float(xi1), float(xi2), float(sign), float(shift), int(n_lo), int(n_hi)
    )
