"""Exact matrix rank over the rationals and over prime fields."""

from __future__ import annotations

import numpy as np

from . import kernels

# primes below 2**31 keep every product inside int64 in the kernels
MODULAR_PRIMES = (2147483647, 2147483629, 2147483587)


def rank_fraction_free(matrix) -> int:
    """Rank over the rationals by Bareiss fraction-free elimination.

    Works on Python integers, so intermediate values never overflow.
    """
    a = [[int(x) for x in row] for row in matrix]
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(n):
        if rank == m:
            break
        piv = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, m):
            f = a[i][col]
            row_i, row_r = a[i], a[rank]
            for j in range(col + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        rank += 1
    return rank


def rank_mod_p(matrix, p: int) -> int:
    if p < 2 or p >= 2**31:
        raise ValueError("prime must satisfy 2 <= p < 2**31")
    a = np.asarray(matrix, dtype=np.int64)
    if a.size == 0:
        return 0
    return int(kernels.rank_mod_p(a, p))


def rank_over(matrix, characteristic: int) -> int:
    """Rank over QQ (``characteristic == 0``) or GF(p)."""
    if characteristic == 0:
        return rank_fraction_free(matrix)
    return rank_mod_p(matrix, characteristic)


def rank_modular(matrix, primes=MODULAR_PRIMES) -> int:
    """Rational rank recovered from several large primes.

    The rank modulo ``p`` never exceeds the rational rank and equals it unless
    ``p`` divides every maximal nonzero minor, so the maximum over a few
    large primes is the rational rank for all matrices met in practice.
    """
    return max(rank_mod_p(matrix, p) for p in primes)
