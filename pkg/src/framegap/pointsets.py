"""Exact representations of candidate spectra and their gap statistics.

One-dimensional sets are either finite lists or finite unions of lattice
cosets ``U_j (offset_j + period * Z)``. For coset unions every gap value in one
period recurs infinitely often, so the essential minimal and maximal gaps are
exact; for finite lists only window estimates are available.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

from .errors import DomainError, InsufficientPointsError

EDGE_TOL = 1e-12
GAP_CLUSTER_TOL = 1e-9


@dataclass(frozen=True)
class FiniteList:
    points: tuple

    def __post_init__(self):
        pts = tuple(float(p) for p in self.points)
        if any(b <= a for a, b in zip(pts, pts[1:])):
            raise DomainError("FiniteList points must be strictly increasing")
        object.__setattr__(self, "points", pts)

    def to_json(self) -> dict:
        return {"kind": "finite", "points": list(self.points)}


@dataclass(frozen=True)
class CosetUnion:
    """The set U_j (offsets[j] + period * Z)."""

    offsets: tuple
    period: float = 1.0

    def __post_init__(self):
        offs = tuple(float(o) for o in self.offsets)
        period = float(self.period)
        if not period > 0 or math.isinf(period):
            raise DomainError(f"period must be positive, got {self.period!r}")
        if not offs:
            raise DomainError("CosetUnion needs at least one offset")
        if any(b <= a for a, b in zip(offs, offs[1:])):
            raise DomainError("CosetUnion offsets must be strictly increasing")
        if offs[0] < 0 or offs[-1] >= period:
            raise DomainError("CosetUnion offsets must lie in [0, period)")
        object.__setattr__(self, "offsets", offs)
        object.__setattr__(self, "period", period)

    @classmethod
    def normalized(cls, offsets: Sequence[float], period: float = 1.0) -> "CosetUnion":
        """Build from arbitrary offsets, reducing them mod ``period``."""
        reduced = []
        for o in offsets:
            r = math.fmod(float(o), period)
            if r < 0:
                r += period
            if r >= period - EDGE_TOL:
                r = 0.0
            reduced.append(r)
        reduced.sort()
        uniq = [r for i, r in enumerate(reduced) if i == 0 or r - reduced[i - 1] > EDGE_TOL]
        return cls(tuple(uniq), period)

    def translate(self, c: float) -> "CosetUnion":
        return CosetUnion.normalized([o + c for o in self.offsets], self.period)

    @property
    def has_integer_period(self) -> bool:
        return self.period >= 1 and abs(self.period - round(self.period)) <= EDGE_TOL

    def to_json(self) -> dict:
        return {"kind": "coset_union", "offsets": list(self.offsets), "period": self.period}


PointSet1D = Union[FiniteList, CosetUnion]


@dataclass(frozen=True)
class FiniteList2D:
    points: tuple

    def __post_init__(self):
        pts = tuple((float(a), float(b)) for a, b in self.points)
        if len(set(pts)) != len(pts):
            raise DomainError("FiniteList2D points must be distinct")
        object.__setattr__(self, "points", pts)

    def to_json(self) -> dict:
        return {"kind": "finite2d", "points": [list(p) for p in self.points]}


@dataclass(frozen=True)
class DiagonalFamily:
    """{(n, sign n)} U {(n + shift, sign (n + shift))} over n in Z, shift in (0, 1)."""

    sign: int
    shift: float

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign!r}")
        if not 0.0 < self.shift < 1.0:
            raise DomainError(f"shift must lie in (0, 1), got {self.shift!r}")
        object.__setattr__(self, "shift", float(self.shift))

    def projection(self, axis: int = 0) -> CosetUnion:
        """The coordinate projection, a union of two cosets of Z."""
        s = self.shift if axis == 0 else self.sign * self.shift
        return CosetUnion.normalized([0.0, s], 1.0)

    def to_json(self) -> dict:
        return {"kind": "diagonal", "sign": self.sign, "shift": self.shift}


PointSet2D = Union[FiniteList2D, DiagonalFamily]


def pointset_from_json(obj: dict):
    kind = obj.get("kind")
    try:
        if kind == "finite":
            return FiniteList(tuple(obj["points"]))
        if kind == "coset_union":
            return CosetUnion(tuple(obj["offsets"]), obj.get("period", 1.0))
        if kind == "diagonal":
            return DiagonalFamily(int(obj["sign"]), obj["shift"])
        if kind == "finite2d":
            return FiniteList2D(tuple(tuple(p) for p in obj["points"]))
    except KeyError as exc:
        raise DomainError(f"point-set descriptor is missing field {exc.args[0]!r}") from None
    raise DomainError(f"unknown point-set kind {kind!r}")


def _index_range(o: float, p: float, lo: float, hi: float):
    return math.ceil((lo - EDGE_TOL - o) / p), math.floor((hi + EDGE_TOL - o) / p)


def contains(s: PointSet1D, x: float, tol: float = EDGE_TOL) -> bool:
    """Membership predicate with absolute tolerance ``tol``."""
    if isinstance(s, FiniteList):
        return any(abs(x - p) <= tol for p in s.points)
    for o in s.offsets:
        m = round((x - o) / s.period)
        if abs(x - (o + m * s.period)) <= tol:
            return True
    return False


def enumerate_window(s: PointSet1D, lo: float, hi: float) -> list:
    """Points of ``s`` in the closed interval [lo, hi], increasing."""
    if not lo < hi:
        raise DomainError("enumerate_window needs lo < hi")
    if isinstance(s, FiniteList):
        return [p for p in s.points if lo - EDGE_TOL <= p <= hi + EDGE_TOL]
    out = []
    for o in s.offsets:
        m_lo, m_hi = _index_range(o, s.period, lo, hi)
        out.extend(o + m * s.period for m in range(m_lo, m_hi + 1))
    out.sort()
    return out


def count_in_interval(s: PointSet1D, center: float, halfwidth: float) -> int:
    """Number of points in the closed interval [center - halfwidth, center + halfwidth]."""
    if not halfwidth > 0:
        raise DomainError("halfwidth must be positive")
    lo, hi = center - halfwidth, center + halfwidth
    if isinstance(s, FiniteList):
        return len(enumerate_window(s, lo, hi))
    total = 0
    for o in s.offsets:
        m_lo, m_hi = _index_range(o, s.period, lo, hi)
        total += max(0, m_hi - m_lo + 1)
    return total


def _distinct(values, tol=GAP_CLUSTER_TOL) -> list:
    reps = []
    for v in sorted(values):
        if not reps or v - reps[-1] > tol:
            reps.append(v)
    return reps


@dataclass(frozen=True)
class GapStats:
    gaps: list = field(repr=False)
    ess_min_gap: float
    ess_max_gap: float
    sup_gap: float
    distinct_gap_count: int
    exact: bool

    def to_json(self) -> dict:
        return {
            "gaps": list(self.gaps),
            "ess_min_gap": self.ess_min_gap,
            "ess_max_gap": self.ess_max_gap,
            "sup_gap": self.sup_gap,
            "distinct_gap_count": self.distinct_gap_count,
            "exact": self.exact,
        }


def cyclic_gaps(s: CosetUnion) -> list:
    """Gap sequence over one period of a coset union."""
    offs = s.offsets
    return [b - a for a, b in zip(offs, offs[1:])] + [offs[0] + s.period - offs[-1]]


def gap_stats(s: PointSet1D, window: tuple) -> GapStats:
    """Gap sequence inside ``window`` plus essential minimal/maximal gaps.

    Exact for coset unions (from one period of gaps), window estimates for
    finite lists.
    """
    lo, hi = window
    pts = enumerate_window(s, lo, hi)
    if len(pts) < 2:
        raise InsufficientPointsError(f"window [{lo!r}, {hi!r}] holds {len(pts)} point(s)")
    gaps = [b - a for a, b in zip(pts, pts[1:])]
    if isinstance(s, CosetUnion):
        cyc = cyclic_gaps(s)
        g_min, g_max = min(cyc), max(cyc)
        return GapStats(gaps, g_min, g_max, g_max, len(_distinct(cyc)), True)
    return GapStats(gaps, min(gaps), max(gaps), max(gaps), len(_distinct(gaps)), False)


def beurling_lower_density_estimate(s: PointSet1D, radius: float, centers: Sequence[float]) -> float:
    """min over ``centers`` of #(s in [c - R, c + R]) / (2R)."""
    if not radius > 0:
        raise DomainError("radius must be positive")
    if not len(centers):
        raise DomainError("centers must be nonempty")
    return min(count_in_interval(s, c, radius) for c in centers) / (2.0 * radius)


def enumerate_window_2d(s: PointSet2D, n_lo: int, n_hi: int) -> list:
    """Points of a 2D set, n ascending with the integer branch first.

    For a finite list the whole list is returned.
    """
    if n_lo > n_hi:
        raise DomainError("enumerate_window_2d needs n_lo <= n_hi")
    if isinstance(s, FiniteList2D):
        return list(s.points)
    out = []
    for n in range(n_lo, n_hi + 1):
        out.append((float(n), float(s.sign * n) + 0.0))
        x = n + s.shift
        out.append((x, s.sign * x + 0.0))
    return out
