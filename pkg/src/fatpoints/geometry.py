"""Exact points and lines of the projective plane over Q.

Coordinates are :class:`fractions.Fraction`.  Points and lines are kept in a
canonical form (first nonzero coordinate equal to 1) so that equality and
hashing are projective equality.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm

from .errors import GenerationExhausted, IdenticalLines

COORD_BOUND = 1000
RETRY_BUDGET = 200

__all__ = [
    "ProjPoint",
    "ProjLine",
    "Arrangement",
    "canonical",
    "cross",
    "det3",
    "intersect",
    "incident",
    "line_through",
    "is_general_position",
    "random_arrangement",
    "points_on_line_avoiding",
    "random_point",
    "format_rational",
    "parse_rational",
]


def canonical(coords):
    """Scale a nonzero triple so that its first nonzero entry is 1."""
    coords = tuple(Fraction(c) for c in coords)
    if len(coords) != 3:
        raise ValueError(f"expected 3 homogeneous coordinates, got {len(coords)}")
    for c in coords:
        if c != 0:
            return tuple(x / c for x in coords)
    raise ValueError("all homogeneous coordinates are zero")


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def det3(a, b, c):
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s):
    return Fraction(s) if isinstance(s, (int, Fraction)) else Fraction(str(s))


class _Projective:
    __slots__ = ()

    def __post_init__(self):
        object.__setattr__(self, "coords", canonical(self.coords))

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def integer_coords(self):
        """A primitive integer representative (same projective point)."""
        m = lcm(*(c.denominator for c in self.coords))
        return tuple(int(c * m) for c in self.coords)

    def to_json(self):
        return [format_rational(c) for c in self.coords]

    def __str__(self):
        return "(" + ":".join(format_rational(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class ProjPoint(_Projective):
    coords: tuple

    @classmethod
    def from_json(cls, data):
        return cls(tuple(parse_rational(c) for c in data))


@dataclass(frozen=True)
class ProjLine(_Projective):
    """The line ``coords[0] x + coords[1] y + coords[2] z = 0``."""

    coords: tuple

    @property
    def coeffs(self):
        return self.coords

    def to_json(self):
        return {"coeffs": super().to_json()}

    @classmethod
    def from_json(cls, data):
        coeffs = data["coeffs"] if isinstance(data, dict) else data
        return cls(tuple(parse_rational(c) for c in coeffs))

    def __str__(self):
        return "[" + ":".join(format_rational(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class Arrangement:
    lines: tuple
    seed: int = None

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))

    def __len__(self):
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    def line(self, i):
        """The line with 1-based label ``i``."""
        if not 1 <= i <= len(self.lines):
            raise IndexError(f"line label {i} outside 1..{len(self.lines)}")
        return self.lines[i - 1]

    def meet(self, i, j):
        """``P_{i,j}``, the intersection of the lines labelled ``i`` and ``j``."""
        return intersect(self.line(i), self.line(j))

    def intersections(self):
        return {(i, j): self.meet(i, j)
                for i, j in combinations(range(1, len(self.lines) + 1), 2)}

    def to_json(self):
        return {"seed": self.seed, "lines": [l.to_json() for l in self.lines]}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(ProjLine.from_json(l) for l in data["lines"]), data.get("seed"))


def intersect(a, b):
    if a == b:
        raise IdenticalLines(f"{a} and {b} are the same line")
    return ProjPoint(cross(a.coords, b.coords))


def line_through(p, q):
    if p == q:
        raise ValueError(f"{p} and {q} do not span a line")
    return ProjLine(cross(p.coords, q.coords))


def incident(p, l):
    return sum(x * a for x, a in zip(p.coords, l.coords)) == 0


def is_general_position(lines):
    """Pairwise distinct and no three through a common point."""
    lines = list(lines)
    if len(set(lines)) != len(lines):
        return False
    return all(det3(a.coords, b.coords, c.coords) != 0
               for a, b, c in combinations(lines, 3))


def _random_triple(rng, bound=None):
    bound = COORD_BOUND if bound is None else bound
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(3))
        if any(v):
            return v


def random_arrangement(n, seed):
    """``n`` lines with integer coefficients in [-1000, 1000], no three concurrent.

    Lines are drawn one at a time from ``random.Random(seed)``; a candidate
    that repeats a line or passes through an existing intersection is
    redrawn, at most 200 times per call.
    """
    if n < 1:
        raise ValueError("need at least one line")
    rng = random.Random(seed)
    lines = []
    rejected = 0
    while len(lines) < n:
        cand = ProjLine(_random_triple(rng))
        ok = cand not in lines and all(
            det3(a.coords, b.coords, cand.coords) != 0 for a, b in combinations(lines, 2))
        if ok:
            lines.append(cand)
            continue
        rejected += 1
        if rejected > RETRY_BUDGET:
            raise GenerationExhausted(f"no general arrangement of {n} lines after "
                                      f"{RETRY_BUDGET} resamples (seed {seed})")
    arr = Arrangement(tuple(lines), seed)
    assert is_general_position(arr.lines)
    return arr


def _ext_gcd(a, b):
    """``(g, x, y)`` with ``a x + b y = g = gcd(a, b)``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def _line_basis(l):
    """A reduced basis ``A, B`` of the integer points on ``l``.

    Every integer point of ``l`` is ``u A + v B`` for integers ``u, v``, and
    the basis is Lagrange reduced, so its vectors are about as short as the
    line's coefficients allow.
    """
    a, b, c = l.integer_coords()
    if a == 0 and b == 0:
        return (1, 0, 0), (0, 1, 0)
    g, x, y = _ext_gcd(a, b)
    if g < 0:
        g, x, y = -g, -x, -y
    A = (-b // g, a // g, 0)
    # a x + b y = g, hence a (-c x) + b (-c y) + c g = 0
    B = (-c * x, -c * y, g)
    while True:
        if _dot(A, A) > _dot(B, B):
            A, B = B, A
        q = round(Fraction(_dot(A, B), _dot(A, A)))
        if q == 0:
            return A, B
        B = tuple(bi - q * ai for ai, bi in zip(A, B))


def points_on_line_avoiding(l, count, forbidden=(), seed=0, bound=None):
    """``count`` distinct points of ``l`` outside ``forbidden``, deterministic in ``seed``.

    Each point is ``u A + v B`` for the reduced integer basis ``A, B`` of the
    line, with ``u, v`` drawn so that coordinates stay within about ``bound``
    (the range is widened when the line has too few such points).
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    bound = COORD_BOUND if bound is None else bound
    rng = random.Random(seed)
    A, B = _line_basis(l)
    forbidden = set(forbidden)
    crowd = count + sum(1 for p in forbidden if incident(p, l))
    span = max(abs(x) for x in A) + max(abs(x) for x in B)
    r = max(bound // span, 2 * crowd + 4)
    out, seen = [], set()
    rejected = 0
    while len(out) < count:
        u, v = rng.randint(-r, r), rng.randint(-r, r)
        coords = tuple(u * x + v * y for x, y in zip(A, B))
        if any(coords):
            p = ProjPoint(coords)
            if p not in forbidden and p not in seen:
                out.append(p)
                seen.add(p)
                continue
        rejected += 1
        if rejected > RETRY_BUDGET:
            raise GenerationExhausted(f"could not place {count} points on {l}")
    return out


def random_point(seed, avoid_lines=(), forbidden=(), bound=None):
    """A random point of the plane on none of ``avoid_lines`` and not in ``forbidden``."""
    rng = random.Random(seed)
    forbidden = set(forbidden)
    for _ in range(RETRY_BUDGET + 1):
        p = ProjPoint(_random_triple(rng, bound))
        if p not in forbidden and not any(incident(p, l) for l in avoid_lines):
            return p
    raise GenerationExhausted("could not draw a point off the given lines")
