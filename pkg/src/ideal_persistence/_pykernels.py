"""Pure numpy implementations of the hot kernels.

Every function here has a compiled twin in ``_ckernels.pyx`` with the same
signature and semantics.  Arrays are two dimensional ``int64`` exponent
matrices, one monomial per row.
"""

import numpy as np

# cap on the size of the boolean broadcast (rows * gens * n) per chunk
_CHUNK_CELLS = 4_000_000


def member_mask(gens, cands):
    """Return a boolean array: row ``i`` of `cands` is divisible by a row of `gens`."""
    gens = np.asarray(gens, dtype=np.int64)
    cands = np.asarray(cands, dtype=np.int64)
    out = np.zeros(len(cands), dtype=bool)
    if len(gens) == 0 or len(cands) == 0:
        return out
    n = gens.shape[1]
    step = max(1, _CHUNK_CELLS // max(1, len(gens) * max(n, 1)))
    for start in range(0, len(cands), step):
        block = cands[start:start + step]
        le = (gens[None, :, :] <= block[:, None, :]).all(axis=2)
        out[start:start + step] = le.any(axis=1)
    return out


def minimal_mask(rows):
    """Mask of the rows not divisible by another row.

    `rows` must be distinct and sorted by total degree (ascending); then a
    row can only be divided by a row of strictly smaller degree.
    """
    rows = np.asarray(rows, dtype=np.int64)
    keep = np.ones(len(rows), dtype=bool)
    if len(rows) < 2:
        return keep
    degs = rows.sum(axis=1)
    bounds = np.flatnonzero(np.diff(degs)) + 1
    starts = np.concatenate(([0], bounds))
    ends = np.concatenate((bounds, [len(rows)]))
    kept = rows[:0]
    for s, e in zip(starts, ends):
        block = rows[s:e]
        if len(kept):
            hit = member_mask(kept, block)
            keep[s:e] = ~hit
            block = block[~hit]
        kept = np.concatenate((kept, block)) if len(kept) else block
    return keep


def rank_mod_p(matrix, p):
    """Rank of an integer matrix over the prime field with `p` elements."""
    a = np.array(matrix, dtype=np.int64) % p
    if a.size == 0:
        return 0
    m, n = a.shape
    rank = 0
    for col in range(n):
        if rank == m:
            break
        nz = np.flatnonzero(a[rank:, col])
        if len(nz) == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inv) % p
        below = np.flatnonzero(a[rank + 1:, col]) + rank + 1
        if len(below):
            factors = a[below, col][:, None]
            a[below] = (a[below] - factors * a[rank][None, :]) % p
        rank += 1
    return rank


def reduce_rows(rows):
    """Minimal distinct rows of `rows`, in no particular order."""
    rows = np.asarray(rows, dtype=np.int64)
    if len(rows) < 2:
        return rows
    rows = np.unique(rows, axis=0)
    rows = rows[np.argsort(rows.sum(axis=1), kind="stable")]
    return rows[minimal_mask(rows)]
