"""Combinatorics of Hilbert functions of zero-dimensional schemes in P^2.

A Hilbert function is handled through its first difference
``Delta H = (h_0, ..., h_sigma)``.  It is *valid* when it starts with the
staircase ``1, 2, ..., alpha`` and is nonincreasing from there on; these are
exactly the first differences that occur for finite sets of (fat) points in
the plane.
"""

from dataclasses import dataclass
from math import comb

from .errors import ExceptionalT, InvalidDelta, NotNondecreasing

BULLET = "•"

__all__ = [
    "DeltaH",
    "HilbertFunction",
    "ConjugatePartition",
    "validate_delta",
    "parse_delta",
    "format_delta",
    "conjugate",
    "accumulate",
    "first_difference",
    "degree_split",
    "star_delta",
    "star_plus_point_delta",
    "generic_double_delta",
    "render_dot_diagram",
]


@dataclass(frozen=True)
class DeltaH:
    """A validated first difference, trailing zeros removed.

    Build these with :func:`validate_delta`; the constructor does not check.
    """

    values: tuple

    @property
    def sigma(self):
        return len(self.values) - 1

    @property
    def alpha(self):
        """Length of the initial staircase, which is also the largest entry."""
        a = 0
        while a < len(self.values) and self.values[a] == a + 1:
            a += 1
        return a

    @property
    def total(self):
        return sum(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __str__(self):
        return format_delta(self)

    def to_json(self):
        return list(self.values)


@dataclass(frozen=True)
class HilbertFunction:
    """Values ``H(0), ..., H(T)``; ``H(i) = stable_value`` for every ``i >= T``."""

    values: tuple
    stable_value: int

    def __post_init__(self):
        if any(b < a for a, b in zip(self.values, self.values[1:])):
            raise NotNondecreasing(f"Hilbert function decreases: {self.values}")

    def __call__(self, i):
        if i < 0:
            return 0
        if i < len(self.values):
            return self.values[i]
        return self.stable_value

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def padded(self, length):
        """The first ``length`` values, extended by the stable value."""
        return tuple(self(i) for i in range(length))

    def same_function(self, other):
        """Equality as functions on N, ignoring how far each table was computed."""
        if self.stable_value != other.stable_value:
            return False
        n = max(len(self), len(other))
        return self.padded(n) == other.padded(n)


@dataclass(frozen=True)
class ConjugatePartition:
    """``(h*_1, ..., h*_alpha)``; stored 0-based, ``parts[i - 1] == h*_i``."""

    parts: tuple

    def __post_init__(self):
        if any(b >= a for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"conjugate is not strictly decreasing: {self.parts}")
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"conjugate has nonpositive part: {self.parts}")

    def star(self, i):
        """``h*_i`` with 1-based ``i``; zero past the last part."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def alpha(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def _strip(seq):
    vals = [int(v) for v in seq]
    while vals and vals[-1] == 0:
        vals.pop()
    return vals


def validate_delta(seq):
    """Check ``seq`` and return it as a :class:`DeltaH`.

    Trailing zeros are dropped. ``(1)`` is accepted as the first difference
    of a single reduced point.
    """
    if isinstance(seq, DeltaH):
        return seq
    vals = _strip(seq)
    if not vals:
        raise InvalidDelta("empty sequence (after removing trailing zeros)")
    for i, v in enumerate(vals):
        if v <= 0:
            raise InvalidDelta(
                f"entry h_{i} = {v} is not positive before the last nonzero entry",
                condition="b", index=i)
    if vals[0] != 1:
        raise InvalidDelta(f"condition (a) fails at index 0: h_0 = {vals[0]}, expected 1",
                           condition="a", index=0)
    alpha = 1
    while alpha < len(vals) and vals[alpha] == alpha + 1:
        alpha += 1
    if alpha < len(vals) and vals[alpha] > alpha:
        raise InvalidDelta(
            f"condition (a) fails at index {alpha}: h_{alpha} = {vals[alpha]}, "
            f"expected {alpha + 1} (staircase) or at most {alpha}",
            condition="a", index=alpha)
    for i in range(alpha, len(vals) - 1):
        if vals[i + 1] > vals[i]:
            raise InvalidDelta(
                f"condition (b) fails at index {i + 1}: h_{i + 1} = {vals[i + 1]} > "
                f"h_{i} = {vals[i]} after the staircase",
                condition="b", index=i + 1)
    return DeltaH(tuple(vals))


def parse_delta(text):
    """Parse the comma separated text form, e.g. ``"1,2,3,4,2"``."""
    parts = [p.strip() for p in str(text).replace(" ", "").split(",") if p.strip()]
    try:
        nums = [int(p) for p in parts]
    except ValueError as exc:
        raise InvalidDelta(f"not a list of integers: {text!r}") from exc
    return validate_delta(nums)


def format_delta(d):
    return ",".join(str(v) for v in d)


def conjugate(d):
    d = validate_delta(d)
    parts = tuple(sum(1 for h in d.values if h >= i) for i in range(1, d.alpha + 1))
    return ConjugatePartition(parts)


def accumulate(d):
    """Prefix sums of a first difference: the Hilbert function itself."""
    d = validate_delta(d)
    out, run = [], 0
    for v in d.values:
        run += v
        out.append(run)
    return HilbertFunction(tuple(out), run)


def first_difference(H):
    """Inverse of :func:`accumulate`; accepts a HilbertFunction or a plain sequence.

    A plain sequence is taken to be constant after its last value.
    """
    vals = list(H.values) if isinstance(H, HilbertFunction) else [int(v) for v in H]
    stable = H.stable_value if isinstance(H, HilbertFunction) else (vals[-1] if vals else 0)
    vals.append(stable)
    prev, diff = 0, []
    for i, v in enumerate(vals):
        if v < prev:
            raise NotNondecreasing(f"H({i}) = {v} < H({i - 1}) = {prev}")
        diff.append(v - prev)
        prev = v
    return validate_delta(diff)


def degree_split(d):
    """``(total, dmax, r)`` with ``total = 3 * dmax + r`` and ``0 <= r < 3``."""
    d = validate_delta(d)
    total = d.total
    return total, total // 3, total % 3


def star_delta(t):
    """First difference for double points on a star configuration of t + 1 lines."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return validate_delta(list(range(1, t + 1)) + [t + 1] * t)


def star_plus_point_delta(t):
    return validate_delta(list(star_delta(t).values) + [1])


def generic_double_delta(t):
    """First difference of ``i -> min(C(i + 2, 2), 3t)`` (t generic double points).

    t = 2 and t = 5 are refused: there the generic scheme is known to be
    defective and this formula is not its Hilbert function.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if t in (2, 5):
        raise ExceptionalT(f"t = {t}: generic double points do not have the expected "
                           "Hilbert function")
    vals, i = [], 0
    while True:
        h = min(comb(i + 2, 2), 3 * t)
        vals.append(h)
        if h == 3 * t:
            break
        i += 1
    return first_difference(vals)


def render_dot_diagram(d, dot=BULLET):
    """Column ``i`` holds ``h_i`` dots, bottom aligned, columns one space apart.

    Reading the rows from the bottom up gives the conjugate.
    """
    d = validate_delta(d)
    height = max(d.values)
    rows = []
    for level in range(height, 0, -1):
        row = " ".join(dot if h >= level else " " for h in d.values)
        rows.append(row.rstrip())
    return "\n".join(rows)
