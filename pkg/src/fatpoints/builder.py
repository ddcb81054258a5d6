"""Building schemes of double and reduced points with a prescribed Hilbert function.

The pipeline starts from a k-configuration of reduced points on general
lines ``l_1, ..., l_alpha`` (``h*_i`` points on ``l_i``) and repeatedly merges
two reduced points of ``l_i`` and one of ``l_j`` into the double point
``2 P_{i,j}``.  Under the merge hypotheses the reduction vector along the
lines does not change, and neither does the Hilbert function.

Line labels are 1-based throughout, matching ``P_{i,j} = l_i meet l_j``.
"""

import random
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import ArityMismatch, ExceptionalT, HypothesisViolation
from .geometry import incident, points_on_line_avoiding, random_arrangement, random_point
from .hfcore import conjugate, generic_double_delta, validate_delta
from .scheme import FatPointScheme, reduction_vector, scheme_degree

__all__ = [
    "LabeledScheme",
    "MergeRecord",
    "StepRecord",
    "ConstructionTrace",
    "check_merge_hypotheses",
    "k_configuration",
    "merge",
    "construct",
    "predicted_double_count",
    "double_bounds",
    "all_doubles_criterion",
    "cor313_criterion",
    "star_scheme",
    "star_plus_point_scheme",
    "perturbed_star_scheme",
    "near_star_scheme",
    "generic_split",
    "closed_form_s",
    "s_of_t",
    "asymptotic_table",
]


def _subseed(seed, tag):
    return random.Random(f"{seed}/{tag}").getrandbits(63)


def _pos(n):
    return n if n > 0 else 0


@dataclass(frozen=True)
class LabeledScheme:
    """A scheme of double and reduced points together with its supporting lines.

    ``line_of`` maps each reduced point to the label of the line it lies on;
    ``double_at`` maps each double point ``P_{i,j}`` to ``(i, j)``.
    """

    scheme: FatPointScheme
    arrangement: object
    line_of: dict = field(default_factory=dict)
    double_at: dict = field(default_factory=dict)

    def reduced_on(self, i):
        """Reduced points of ``l_i`` in placement order."""
        return [p for p, m in self.scheme.points if m == 1 and self.line_of.get(p) == i]

    def has_double(self, i, j):
        return (i, j) in self.double_at.values()

    @property
    def doubles(self):
        return self.scheme.count(2)

    @property
    def reduced(self):
        return self.scheme.count(1)

    def pairs(self):
        """Sorted label pairs of the double points."""
        return sorted(self.double_at.values())

    def reduction_vector(self):
        return reduction_vector(self.scheme, self.arrangement.lines)


@dataclass
class MergeRecord:
    i: int
    j: int
    removed: tuple

    def to_json(self):
        return {"i": self.i, "j": self.j}


@dataclass
class StepRecord:
    n: int
    h_n: tuple
    s_n: int
    t_n: int
    merges: list = field(default_factory=list)

    def to_json(self):
        return {"n": self.n, "h_n": list(self.h_n), "s_n": self.s_n, "t_n": self.t_n,
                "merges": [m.to_json() for m in self.merges]}


@dataclass
class ConstructionTrace:
    steps: list = field(default_factory=list)
    terminal_step: int = 0
    stopped_early: bool = False
    doubles: int = 0
    reduced: int = 0

    def to_json(self):
        return {"steps": [s.to_json() for s in self.steps],
                "doubles": self.doubles, "reduced": self.reduced}


def check_merge_hypotheses(Z):
    """Verify merge hypotheses (a)-(d) for ``Z`` directly from the geometry."""
    lines = Z.arrangement.lines
    meets = Z.arrangement.intersections()
    meet_points = set(meets.values())
    for p, m in Z.scheme.points:
        if m > 2:
            raise HypothesisViolation("a", f"{p} has multiplicity {m}")
        if not any(incident(p, l) for l in lines):
            raise HypothesisViolation("a", f"{p} lies on none of the lines")
        if m == 2 and p not in meet_points:
            raise HypothesisViolation("b", f"double point {p} is not an intersection P_ij")
        if m == 1 and p in meet_points:
            raise HypothesisViolation("c", f"reduced point {p} sits at an intersection")
    d = reduction_vector(Z.scheme, lines)
    if not d.is_strictly_decreasing():
        raise HypothesisViolation("d", f"reduction vector {d.entries} not strictly decreasing")


def k_configuration(d, arr, seed=0):
    """Reduced points, ``h*_i`` of them on ``l_i``, away from every ``P_{i,j}``."""
    d = validate_delta(d)
    conj = conjugate(d)
    if len(arr) != conj.alpha:
        raise ArityMismatch(f"need {conj.alpha} lines, arrangement has {len(arr)}")
    forbidden = set(arr.intersections().values())
    pts, line_of = [], {}
    for i in range(1, conj.alpha + 1):
        new = points_on_line_avoiding(arr.line(i), conj.star(i), forbidden,
                                      seed=_subseed(seed, f"line{i}"))
        for p in new:
            pts.append((p, 1))
            line_of[p] = i
            forbidden.add(p)
    return LabeledScheme(FatPointScheme(tuple(pts)), arr, line_of, {})


def merge(Z, i, j, q1, q2, r):
    """Replace reduced ``q1, q2`` on ``l_i`` and ``r`` on ``l_j`` by ``2 P_{i,j}``."""
    if not i < j:
        raise HypothesisViolation("e", f"need i < j, got {i}, {j}")
    check_merge_hypotheses(Z)
    arr = Z.arrangement
    li, lj = arr.line(i), arr.line(j)
    for q, l, lab in ((q1, li, i), (q2, li, i), (r, lj, j)):
        if Z.scheme.multiplicity(q) != 1:
            raise HypothesisViolation("e", f"{q} is not a reduced point of the scheme")
        if not incident(q, l):
            raise HypothesisViolation("e", f"{q} is not on line {lab}")
    if q1 == q2:
        raise HypothesisViolation("e", "the two points on l_i coincide")
    P = arr.meet(i, j)
    if Z.scheme.multiplicity(P) == 2:
        raise HypothesisViolation("e", f"2P_{{{i},{j}}} is already a double point")
    scheme = Z.scheme.without(q1, q2, r).with_point(P, 2)
    line_of = {p: k for p, k in Z.line_of.items() if p not in (q1, q2, r)}
    double_at = dict(Z.double_at)
    double_at[P] = (i, j)
    out = LabeledScheme(scheme, arr, line_of, double_at)
    assert scheme_degree(out.scheme) == scheme_degree(Z.scheme)
    return out


def construct(d, seed=0, stop_at=None, on_merge=None):
    """Run the merge construction for ``d``; return ``(LabeledScheme, trace)``.

    STEP 0 places a k-configuration.  STEP n (n = 1, 2, ...) computes
    ``h_n = ((h*_k - (n - 1))_+ for k = n .. alpha)`` and
    ``s_n = #{k : n < k <= alpha, h*_k >= n}``; it stops when ``s_n = 0``,
    otherwise it performs ``t_n = min(floor(h_n[0] / 2), s_n)`` merges creating
    ``2 P_{n, n + 1}, ..., 2 P_{n, n + t_n}``.  Each merge consumes the most
    recently placed reduced points on the lines involved.

    ``stop_at`` ends the run as soon as that many double points exist.
    ``on_merge(Z, step, record)`` is called after every merge.
    """
    d = validate_delta(d)
    if stop_at is not None and stop_at < 1:
        raise ValueError("stop_at must be >= 1")
    conj = conjugate(d)
    alpha = conj.alpha
    arr = random_arrangement(alpha, seed)
    Z = k_configuration(d, arr, _subseed(seed, "kconfig"))
    trace = ConstructionTrace()
    n = 0
    done = False
    while not done:
        n += 1
        h_n = tuple(_pos(conj.star(k) - (n - 1)) for k in range(n, alpha + 1))
        s_n = sum(1 for k in range(n + 1, alpha + 1) if conj.star(k) >= n)
        if s_n == 0:
            trace.steps.append(StepRecord(n, h_n, 0, 0))
            break
        t_n = min(h_n[0] // 2, s_n)
        step = StepRecord(n, h_n, s_n, t_n)
        trace.steps.append(step)
        for j in range(n + 1, n + t_n + 1):
            if stop_at is not None and Z.doubles >= stop_at:
                trace.stopped_early = True
                done = True
                break
            on_n, on_j = Z.reduced_on(n), Z.reduced_on(j)
            q1, q2, r = on_n[-1], on_n[-2], on_j[-1]
            Z = merge(Z, n, j, q1, q2, r)
            rec = MergeRecord(n, j, (q1, q2, r))
            step.merges.append(rec)
            if on_merge is not None:
                on_merge(Z, step, rec)
        if stop_at is not None and Z.doubles >= stop_at:
            trace.stopped_early = trace.stopped_early or len(step.merges) < t_n or n < alpha
            break
    trace.terminal_step = n
    trace.doubles = Z.doubles
    trace.reduced = Z.reduced
    if stop_at is None:
        # the closed-form count sums over every i < alpha, the run may stop sooner
        expected = predicted_double_count(d)
        assert Z.doubles == expected, f"construction made {Z.doubles} doubles, formula {expected}"
    return Z, trace


def _s_values(conj):
    """``s_i = #{k : i < k <= alpha, h*_k >= i}`` for ``i = 1 .. alpha``.

    ``h*`` is strictly decreasing, so ``{k : h*_k >= i}`` is an initial segment.
    """
    neg = [-x for x in conj.parts]
    return [_pos(bisect_right(neg, -i) - i) for i in range(1, conj.alpha + 1)]


def predicted_double_count(d):
    """Number of double points the construction produces, read off the conjugate."""
    conj = conjugate(d)
    s = _s_values(conj)
    return sum(min(_pos(conj.star(i) - (i - 1)) // 2, s[i - 1])
               for i in range(1, conj.alpha))


def double_bounds(d):
    """``(min(floor((sigma + 1) / 2), alpha - 1), C(alpha, 2))``."""
    d = validate_delta(d)
    alpha = d.alpha
    return min((d.sigma + 1) // 2, alpha - 1), comb(alpha, 2)


def all_doubles_criterion(d):
    """``(h*_i - (i - 1))_+ == 2 s_i`` for every ``i = 1 .. alpha - 1``.

    An odd left-hand side can never equal twice an integer, so it fails.
    For ``alpha = 1`` the condition is vacuous but no double point can be
    built on a single line; that case is reported as False.
    """
    conj = conjugate(d)
    if conj.alpha < 2:
        return False
    s = _s_values(conj)
    return all(_pos(conj.star(i) - (i - 1)) == 2 * s[i - 1] for i in range(1, conj.alpha))


def cor313_criterion(d):
    """Conjugate equal to ``(2 alpha - 2, 2 alpha - 3, ..., alpha - 1)``."""
    conj = conjugate(d)
    a = conj.alpha
    return tuple(conj.parts) == tuple(range(2 * a - 2, a - 2, -1))


def star_scheme(t, seed=0):
    """Double points at all ``C(t + 1, 2)`` intersections of ``t + 1`` general lines."""
    if t < 1:
        raise ValueError("t must be >= 1")
    arr = random_arrangement(t + 1, seed)
    meets = arr.intersections()
    pts = tuple((P, 2) for P in meets.values())
    return LabeledScheme(FatPointScheme(pts), arr, {}, {P: ij for ij, P in meets.items()})


def star_plus_point_scheme(t, seed=0, on_line=True):
    """A star scheme plus one reduced point, on ``l_1`` or off every line."""
    Z = star_scheme(t, seed)
    arr = Z.arrangement
    forbidden = set(Z.scheme.support)
    if on_line:
        (P,) = points_on_line_avoiding(arr.line(1), 1, forbidden, seed=_subseed(seed, "extra"))
        return LabeledScheme(Z.scheme.with_point(P, 1), arr, {P: 1}, dict(Z.double_at))
    P = random_point(_subseed(seed, "extra"), avoid_lines=arr.lines, forbidden=forbidden)
    return LabeledScheme(Z.scheme.with_point(P, 1), arr, {}, dict(Z.double_at))


def perturbed_star_scheme(t, seed=0, which=0, perturb_seed=0):
    """A star scheme with its ``which``-th double point moved to a random point.

    The new position is a random point of the plane that is not one of the
    intersections ``P_{i,j}``.
    """
    Z = star_scheme(t, seed)
    pts = list(Z.scheme.points)
    forbidden = set(Z.arrangement.intersections().values())
    P = random_point(_subseed(perturb_seed, f"perturb{which}"), forbidden=forbidden)
    pts[which] = (P, 2)
    return FatPointScheme(tuple(pts))


def near_star_scheme(t, seed=0):
    """Star doubles on ``t + 1`` lines except ``P_{1,2}``, plus ``2Q`` and ``P``.

    ``Q`` is a general point of ``l_2`` and the reduced point ``P`` a general
    point of ``l_1``.
    """
    if t < 3:
        raise ValueError("t must be >= 3")
    arr = random_arrangement(t + 1, seed)
    meets = arr.intersections()
    pts = [(P, 2) for ij, P in meets.items() if ij != (1, 2)]
    forbidden = set(meets.values())
    (Q,) = points_on_line_avoiding(arr.line(2), 1, forbidden, seed=_subseed(seed, "Q"))
    forbidden.add(Q)
    (P,) = points_on_line_avoiding(arr.line(1), 1, forbidden, seed=_subseed(seed, "P"))
    pts += [(Q, 2), (P, 1)]
    return FatPointScheme(tuple(pts))


def generic_split(t):
    """``(b, eps)`` with ``3t = C(b + 2, 2) + eps`` and ``0 <= eps <= b + 1``."""
    b = 0
    while comb(b + 3, 2) <= 3 * t:
        b += 1
    return b, 3 * t - comb(b + 2, 2)


def closed_form_s(b):
    """``(b + 1)(b + 3) / 8``, the double count for odd ``b``."""
    if b % 2 != 1:
        raise ValueError("closed form holds for odd b")
    return (b + 1) * (b + 3) // 8


def s_of_t(t):
    """Double points produced for the Hilbert function of ``t`` generic double points."""
    return predicted_double_count(generic_double_delta(t))


def asymptotic_table(t_values):
    """Rows ``(t, s(t), s(t) / t)`` with the ratio as an exact Fraction."""
    t_values = list(t_values)
    bad = [t for t in t_values if t in (2, 5)]
    if bad:
        raise ExceptionalT(f"t in {{2, 5}} not allowed: {bad}")
    return [(t, s, Fraction(s, t)) for t in t_values for s in (s_of_t(t),)]
