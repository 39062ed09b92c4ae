"""Measures with closed-form Fourier transforms.

Two families are supported: Lebesgue measure on [t, t+1], and the additive
measure rho_{t1,t2} = (L_[t1,t1+1] x delta_0 + delta_0 x L_[t2,t2+1]) / 2
in the plane. Fourier transforms use the convention
mu^(xi) = int exp(-2 pi i xi x) dmu(x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import DomainError, UnsupportedMeasureError
from .specfun import cos_pi, sin_pi, sinc_pi

ZERO_SET_TOL = 1e-9


@dataclass(frozen=True)
class RestrictedLebesgue:
    """Lebesgue measure on [t, t+1] (a probability measure)."""

    t: float

    def to_json(self) -> dict:
        return {"kind": "lebesgue", "t": self.t}


@dataclass(frozen=True)
class AdditiveLebesgue:
    """The additive measure rho_{t1,t2}; half its mass sits on each axis segment."""

    t1: float
    t2: float

    def to_json(self) -> dict:
        return {"kind": "additive", "t1": self.t1, "t2": self.t2}


Measure = Union[RestrictedLebesgue, AdditiveLebesgue]


def measure_from_json(obj: dict) -> Measure:
    kind = obj.get("kind")
    try:
        if kind == "lebesgue":
            return RestrictedLebesgue(float(obj["t"]))
        if kind == "additive":
            return AdditiveLebesgue(float(obj["t1"]), float(obj["t2"]))
    except KeyError as exc:
        raise DomainError(f"measure descriptor is missing field {exc.args[0]!r}") from None
    raise DomainError(f"unknown measure kind {kind!r}")


def _phase(t: float, xi: float) -> complex:
    # exp(-pi i xi (2t + 1)) with exact reduction of the angle
    a = xi * (2.0 * t + 1.0)
    return complex(cos_pi(a), -sin_pi(a))


def ft_restricted_lebesgue(t: float, xi: float) -> complex:
    """Fourier transform of Lebesgue measure on [t, t+1]:
    exp(-pi i xi (2t+1)) * sinc(xi)."""
    return _phase(t, xi) * sinc_pi(xi)


def ft_additive(t1: float, t2: float, xi1: float, xi2: float) -> complex:
    """Fourier transform of rho_{t1,t2} at (xi1, xi2)."""
    return 0.5 * (ft_restricted_lebesgue(t1, xi1) + ft_restricted_lebesgue(t2, xi2))


def decay_constant(m: Measure) -> float:
    """Smallest C with |mu^(xi)| <= C / |xi| for every xi != 0.

    Lebesgue measure on a unit interval has C = 1/pi. The additive measure
    has no such constant: along the axis xi2 = 0 its transform tends to 1/2.
    """
    if isinstance(m, RestrictedLebesgue):
        return 1.0 / math.pi
    if isinstance(m, AdditiveLebesgue):
        raise UnsupportedMeasureError(
            "the additive measure's transform does not decay along the axes "
            "(rho^(xi1, 0) -> 1/2 as xi1 -> infinity)"
        )
    raise UnsupportedMeasureError(f"unsupported measure {m!r}")


def t_functional(t1: float, t2: float, l1: float, l2: float) -> float:
    """T(l1, l2) = l1 (2 t1 + 1) - l2 (2 t2 + 1)."""
    return l1 * (2.0 * t1 + 1.0) - l2 * (2.0 * t2 + 1.0)


def _near_int(x: float, tol: float) -> bool:
    return abs(x - round(x)) <= tol


def in_zero_set(t1: float, t2: float, l1: float, l2: float, tol: float = ZERO_SET_TOL) -> bool:
    """Whether (l1, l2) is (within ``tol``) a zero of rho^_{t1,t2}.

    True when both coordinates are nonzero integers, or when T(l1, l2) is an
    integer and (-1)^T sinc(l1) + sinc(l2) vanishes.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    if (
        _near_int(l1, tol)
        and _near_int(l2, tol)
        and round(l1) != 0
        and round(l2) != 0
    ):
        return True
    t = t_functional(t1, t2, l1, l2)
    if not _near_int(t, tol):
        return False
    sign = -1.0 if round(t) % 2 else 1.0
    return abs(sign * sinc_pi(l1) + sinc_pi(l2)) <= tol


def zero_set_modulus(t1: float, t2: float, l1: float, l2: float) -> float:
    """|rho^_{t1,t2}(l1, l2)|, the direct counterpart of :func:`in_zero_set`."""
    return abs(ft_additive(t1, t2, l1, l2))

