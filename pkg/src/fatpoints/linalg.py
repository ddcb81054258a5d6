"""Exact rank of integer matrices.

Matrices are lists of rows of Python ints.  Rank is computed by fraction-free
(Bareiss) elimination, with a cheap modular pre-pass: the rank modulo a prime
never exceeds the rank over Q, so when the modular rank already equals
``min(rows, cols)`` the exact rank is known without touching big integers.
"""

from fractions import Fraction
from math import lcm

import numpy as np

try:
    from gmpy2 import divexact, mpz
except ImportError:  # pragma: no cover - plain ints are correct, only slower
    mpz = int

    def divexact(a, b):
        return a // b

PRIME_31 = (1 << 31) - 1

__all__ = ["bareiss_rank", "rank_mod_p", "exact_rank", "clear_denominators"]


def clear_denominators(row):
    """Scale a row of rationals to a row of integers (same span)."""
    row = [Fraction(x) for x in row]
    m = lcm(*(x.denominator for x in row)) if row else 1
    return [int(x * m) for x in row]


def rank_mod_p(M, p=PRIME_31):
    """Rank over the field with ``p`` elements; ``p`` must be below 2**31."""
    A = np.array([[x % p for x in r] for r in M], dtype=np.int64)
    if A.size == 0:
        return 0
    nrows, ncols = A.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.flatnonzero(A[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, col]), p - 2, p)
        A[rank] = A[rank] * inv % p
        below = A[rank + 1:]
        below -= np.outer(below[:, col], A[rank]) % p
        below %= p
        rank += 1
    return rank


def bareiss_rank(M):
    """Rank over Q by fraction-free elimination; every division is exact.

    Eliminated columns are dropped as the elimination proceeds, so each step
    works on the trailing block only; rows that become zero are discarded.
    """
    rows = [[mpz(x) for x in r] for r in M if any(r)]
    prev = mpz(1)
    rank = 0
    while rows and rows[0]:
        nz = [i for i, r in enumerate(rows) if r[0]]
        if not nz:
            rows = [r[1:] for r in rows]
            continue
        piv = min(nz, key=lambda i: abs(rows[i][0]))
        prow = rows.pop(piv)
        pv, ptail = prow[0], prow[1:]
        out = []
        for r in rows:
            f = r[0]
            if f:
                new = [divexact(pv * a - f * b, prev) for a, b in zip(r[1:], ptail)]
            elif pv != prev:
                new = [divexact(pv * a, prev) for a in r[1:]]
            else:
                new = r[1:]
            if any(new):
                out.append(new)
        rows = out
        prev = pv
        rank += 1
    return rank


def exact_rank(M, shortcut=True):
    """Exact rank over Q of an integer matrix."""
    M = [r for r in M if any(r)]
    if not M:
        return 0
    if shortcut:
        full = min(len(M), len(M[0]))
        if rank_mod_p(M) == full:
            return full
    return bareiss_rank(M)
