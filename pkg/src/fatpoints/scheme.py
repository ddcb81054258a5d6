"""Fat point schemes, colon by a line, reduction vectors and their Hilbert function."""

from collections import Counter
from dataclasses import dataclass
from math import comb

from .errors import NotFullReduction, NotStrictlyDecreasing
from .geometry import ProjLine, ProjPoint, incident
from .hfcore import HilbertFunction

__all__ = [
    "FatPointScheme",
    "ReductionVector",
    "scheme_degree",
    "colon_by_line",
    "line_intersection_degree",
    "reduction_vector",
    "totally_reduces",
    "gms_hilbert",
]


@dataclass(frozen=True, eq=False)
class FatPointScheme:
    """``m_1 P_1 + ... + m_s P_s``, kept in insertion order.

    Equality ignores the order of the points.
    """

    points: tuple = ()

    def __post_init__(self):
        pts = tuple((p if isinstance(p, ProjPoint) else ProjPoint(p), int(m))
                    for p, m in self.points)
        seen = set()
        for p, m in pts:
            if m <= 0:
                raise ValueError(f"multiplicity {m} at {p} is not positive")
            if p in seen:
                raise ValueError(f"point {p} appears twice in the scheme")
            seen.add(p)
        object.__setattr__(self, "points", pts)

    def __eq__(self, other):
        if not isinstance(other, FatPointScheme):
            return NotImplemented
        return Counter(self.points) == Counter(other.points)

    def __hash__(self):
        return hash(frozenset(self.points))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __bool__(self):
        return bool(self.points)

    @property
    def support(self):
        return [p for p, _ in self.points]

    def multiplicity(self, p):
        for q, m in self.points:
            if q == p:
                return m
        return 0

    def with_point(self, p, m=1):
        return FatPointScheme(self.points + ((p, m),))

    def without(self, *remove):
        drop = set(remove)
        return FatPointScheme(tuple((p, m) for p, m in self.points if p not in drop))

    def count(self, m):
        """Number of support points of multiplicity ``m``."""
        return sum(1 for _, k in self.points if k == m)

    def to_json(self):
        return {"points": [{"coords": p.to_json(), "mult": m} for p, m in self.points]}

    @classmethod
    def from_json(cls, data):
        return cls(tuple((ProjPoint.from_json(e["coords"]), int(e["mult"]))
                         for e in data["points"]))

    def __str__(self):
        if not self.points:
            return "0"
        return " + ".join(f"{m}{p}" if m > 1 else str(p) for p, m in self.points)


@dataclass(frozen=True)
class ReductionVector:
    entries: tuple
    full: bool

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def is_strictly_decreasing(self):
        return all(a > b for a, b in zip(self.entries, self.entries[1:]))

    def to_json(self):
        return {"entries": list(self.entries), "full": self.full}


def scheme_degree(Z):
    return sum(comb(m + 1, 2) for _, m in Z.points)


def line_intersection_degree(l, Z):
    return sum(m for p, m in Z.points if incident(p, l))


def colon_by_line(Z, l):
    pts = []
    for p, m in Z.points:
        if incident(p, l):
            m -= 1
        if m > 0:
            pts.append((p, m))
    return FatPointScheme(tuple(pts))


def reduction_vector(Z, lines):
    d = []
    for l in lines:
        d.append(line_intersection_degree(l, Z))
        Z = colon_by_line(Z, l)
    return ReductionVector(tuple(d), not Z)


def totally_reduces(Z, lines):
    """Whether coloning by ``lines`` in turn empties ``Z``.

    Cross-checked against the counting form: every ``m P`` needs at least
    ``m`` of the lines through ``P``.
    """
    lines = list(lines)
    W = Z
    for l in lines:
        W = colon_by_line(W, l)
    by_colon = not W
    by_count = all(sum(1 for l in lines if incident(p, l)) >= m for p, m in Z.points)
    assert by_colon == by_count
    return by_colon


def gms_hilbert(d):
    """Hilbert function determined by a strictly decreasing full reduction vector.

    ``H(t) = sum_{i=0}^{n-1} max(0, min(t - i + 1, d_{i+1}))``, evaluated for
    ``t = 0 .. d_1 - 1``; past that it is constant at ``sum(d)``.
    """
    if not isinstance(d, ReductionVector):
        d = ReductionVector(tuple(d), True)
    if not d.full:
        raise NotFullReduction(f"reduction vector {d.entries} is not full")
    if not d.is_strictly_decreasing():
        raise NotStrictlyDecreasing(f"reduction vector {d.entries} is not strictly decreasing")
    entries = d.entries
    stable = sum(entries)
    if not entries or stable == 0:
        return HilbertFunction((0,), 0)
    vals = []
    for t in range(entries[0]):
        vals.append(sum(max(0, min(t - i + 1, di)) for i, di in enumerate(entries)))
    return HilbertFunction(tuple(vals), stable)
