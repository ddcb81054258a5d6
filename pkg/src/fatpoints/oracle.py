"""Hilbert functions of fat point schemes by brute-force linear algebra.

A form ``F`` of degree ``t`` lies in ``I_P^m`` exactly when its
dehomogenisation at a nonzero coordinate of ``P`` vanishes to order ``m`` at
the affine point, i.e. when all Taylor coefficients of order ``< m`` vanish.
Each such coefficient is a linear condition on the ``C(t + 2, 2)``
coefficients of ``F``; ``dim (I_Z)_t`` is the corank of the stacked
conditions.  Everything is exact integer arithmetic.
"""

from functools import lru_cache
from math import comb

from .errors import CapExceeded
from .hfcore import HilbertFunction, first_difference
from .linalg import exact_rank
from .scheme import scheme_degree

__all__ = [
    "monomials",
    "conditions_matrix",
    "ideal_dimension",
    "hilbert_function",
    "delta_hf",
]


@lru_cache(maxsize=1 << 16)
def _integer_coords(p):
    return p.integer_coords()


@lru_cache(maxsize=None)
def monomials(t):
    """Exponent triples of degree ``t``, in a fixed order."""
    return tuple((a, b, t - a - b) for a in range(t, -1, -1) for b in range(t - a, -1, -1))


def _point_rows(coords, m, t):
    # dehomogenise at the first nonzero coordinate k; u, v are the other two
    k = next(i for i, c in enumerate(coords) if c)
    a, b = [i for i in range(3) if i != k]
    xk, xa, xb = coords[k], coords[a], coords[b]
    mons = monomials(t)
    pa = [xa ** e for e in range(t + 1)]
    pb = [xb ** e for e in range(t + 1)]
    pk = [xk ** e for e in range(t + 1)]
    rows = []
    for order in range(m):
        for i in range(order + 1):
            j = order - i
            row = []
            for e in mons:
                ea, eb = e[a], e[b]
                if ea < i or eb < j:
                    row.append(0)
                else:
                    row.append(comb(ea, i) * comb(eb, j) * pa[ea - i] * pb[eb - j] * pk[e[k]])
            rows.append(row)
    return rows


def conditions_matrix(Z, t):
    """Integer matrix whose kernel is ``(I_Z)_t``.

    One row per vanishing condition (``C(m + 1, 2)`` for a point of
    multiplicity ``m``), one column per monomial of degree ``t``.  Rows are
    the Taylor coefficients scaled by a power of the dehomogenising
    coordinate, which keeps them integral without changing the row space.
    """
    rows = []
    for p, m in Z.points:
        rows.extend(_point_rows(_integer_coords(p), m, t))
    return rows


def ideal_dimension(Z, t):
    if t < 0:
        return 0
    ncols = comb(t + 2, 2)
    M = conditions_matrix(Z, t)
    return ncols - (exact_rank(M) if M else 0)


def hilbert_function(Z, up_to="auto"):
    """``H_Z(t) = C(t + 2, 2) - dim (I_Z)_t`` for ``t = 0, 1, ...``.

    With ``up_to="auto"`` values are computed until ``H`` reaches
    ``deg Z``, after which it is constant.  The search is capped at
    ``t = sum(m_i) + 1``.  An integer ``up_to`` computes exactly ``t = 0 .. up_to``.
    """
    deg = scheme_degree(Z)
    if up_to == "auto":
        cap = sum(m for _, m in Z.points) + 1
        vals = []
        for t in range(cap + 1):
            vals.append(comb(t + 2, 2) - ideal_dimension(Z, t))
            if vals[-1] == deg:
                return HilbertFunction(tuple(vals), deg)
        raise CapExceeded(f"Hilbert function did not reach {deg} by degree {cap}")
    vals = [comb(t + 2, 2) - ideal_dimension(Z, t) for t in range(int(up_to) + 1)]
    return HilbertFunction(tuple(vals), deg if vals and vals[-1] == deg else vals[-1])


def delta_hf(Z):
    if not Z:
        raise ValueError("the empty scheme has no first difference")
    return first_difference(hilbert_function(Z))
