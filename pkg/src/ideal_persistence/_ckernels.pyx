# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()


def member_mask(gens, cands):
    cdef const int64_t[:, ::1] g = np.ascontiguousarray(gens, dtype=np.int64)
    cdef const int64_t[:, ::1] c = np.ascontiguousarray(cands, dtype=np.int64)
    cdef Py_ssize_t mg = g.shape[0], mc = c.shape[0]
    out_arr = np.zeros(mc, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    if mg == 0 or mc == 0:
        return out_arr.astype(bool)
    cdef Py_ssize_t n = g.shape[1]
    cdef Py_ssize_t i, j, k
    cdef bint ok
    with nogil:
        for i in range(mc):
            for j in range(mg):
                ok = True
                for k in range(n):
                    if g[j, k] > c[i, k]:
                        ok = False
                        break
                if ok:
                    out[i] = 1
                    break
    return out_arr.astype(bool)


def minimal_mask(rows):
    cdef const int64_t[:, ::1] r = np.ascontiguousarray(rows, dtype=np.int64)
    cdef Py_ssize_t m = r.shape[0]
    keep_arr = np.ones(m, dtype=np.uint8)
    cdef unsigned char[::1] keep = keep_arr
    if m < 2:
        return keep_arr.astype(bool)
    cdef Py_ssize_t n = r.shape[1]
    deg_arr = np.asarray(rows, dtype=np.int64).sum(axis=1)
    cdef int64_t[::1] deg = np.ascontiguousarray(deg_arr)
    # indices of kept rows, in order
    kept_arr = np.empty(m, dtype=np.intp)
    cdef Py_ssize_t[::1] kept = kept_arr
    cdef Py_ssize_t nkept = 0
    cdef Py_ssize_t i, t, j, k
    cdef bint divides
    with nogil:
        for i in range(m):
            for t in range(nkept):
                j = kept[t]
                if deg[j] >= deg[i]:
                    break
                divides = True
                for k in range(n):
                    if r[j, k] > r[i, k]:
                        divides = False
                        break
                if divides:
                    keep[i] = 0
                    break
            if keep[i]:
                kept[nkept] = i
                nkept += 1
    return keep_arr.astype(bool)


def rank_mod_p(matrix, long long p):
    a_arr = np.array(matrix, dtype=np.int64) % p
    if a_arr.size == 0:
        return 0
    a_arr = np.ascontiguousarray(a_arr)
    cdef int64_t[:, ::1] a = a_arr
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1]
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef int64_t inv, f, tmp
    for col in range(n):
        if rank == m:
            break
        piv = -1
        for i in range(rank, m):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(n):
                tmp = a[rank, j]
                a[rank, j] = a[piv, j]
                a[piv, j] = tmp
        inv = pow(int(a[rank, col]), -1, p)
        for j in range(n):
            a[rank, j] = (a[rank, j] * inv) % p
        for i in range(rank + 1, m):
            f = a[i, col]
            if f != 0:
                for j in range(n):
                    a[i, j] = ((a[i, j] - f * a[rank, j]) % p + p) % p
        rank += 1
    return rank


def reduce_rows(rows):
    cdef const int64_t[:, ::1] r = np.ascontiguousarray(rows, dtype=np.int64)
    cdef Py_ssize_t m = r.shape[0]
    if m < 2:
        return np.array(rows, dtype=np.int64).reshape(m, r.shape[1])
    cdef Py_ssize_t n = r.shape[1]
    cdef Py_ssize_t i, j, k, t, s, nkept = 0
    cdef int64_t d, maxdeg = 0
    deg_arr = np.zeros(m, dtype=np.int64)
    cdef int64_t[::1] deg = deg_arr
    for i in range(m):
        d = 0
        for k in range(n):
            d += r[i, k]
        deg[i] = d
        if d > maxdeg:
            maxdeg = d
    # counting sort by degree
    start_arr = np.zeros(maxdeg + 2, dtype=np.intp)
    cdef Py_ssize_t[::1] start = start_arr
    for i in range(m):
        start[deg[i] + 1] += 1
    for t in range(1, maxdeg + 2):
        start[t] += start[t - 1]
    order_arr = np.empty(m, dtype=np.intp)
    cdef Py_ssize_t[::1] order = order_arr
    for i in range(m):
        order[start[deg[i]]] = i
        start[deg[i]] += 1
    kept_arr = np.empty(m, dtype=np.intp)
    cdef Py_ssize_t[::1] kept = kept_arr
    cdef bint covered, divides
    for s in range(m):
        i = order[s]
        covered = False
        for t in range(nkept):
            j = kept[t]
            divides = True
            for k in range(n):
                if r[j, k] > r[i, k]:
                    divides = False
                    break
            if divides:
                covered = True
                break
        if not covered:
            kept[nkept] = i
            nkept += 1
    return np.asarray(rows, dtype=np.int64)[kept_arr[:nkept]]
