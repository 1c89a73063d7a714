"""Exact arithmetic on monomials and monomial ideals.

A monomial in ``n`` variables is a tuple of ``n`` non-negative integers (its
exponent vector).  A :class:`MonomialIdeal` stores the unique minimal
generating set as an immutable ``int64`` matrix, one generator per row, in
canonical order: total degree first, then lexicographic on the exponent
tuple.  The zero ideal has no generators; the unit ideal has the single
generator ``(0, ..., 0)``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import InputError

Monomial = tuple  # tuple[int, ...]

_MAX_EXPONENT = 2**40


def degree(u: Sequence[int]) -> int:
    return int(sum(u))


def divides(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff the monomial `u` divides `v`."""
    return all(a <= b for a, b in zip(u, v))


def mono_lcm(u, v) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_gcd(u, v) -> Monomial:
    return tuple(min(a, b) for a, b in zip(u, v))


def mono_mul(u, v) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def mono_div(u, v) -> Monomial:
    """Exact quotient ``u / v``; raises if `v` does not divide `u`."""
    if not divides(v, u):
        raise InputError("monomial quotient is not exact")
    return tuple(a - b for a, b in zip(u, v))


def variable(n: int, i: int) -> Monomial:
    """The monomial ``x_i`` (0-based index) in `n` variables."""
    return tuple(1 if j == i else 0 for j in range(n))


def unit_monomial(n: int) -> Monomial:
    return (0,) * n


def format_monomial(u: Sequence[int], names: Sequence[str] | None = None) -> str:
    """Render ``u`` as ``x1^2*x3``; the unit monomial renders as ``1``."""
    if names is None:
        names = [f"x{i + 1}" for i in range(len(u))]
    parts = []
    for name, e in zip(names, u):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _as_rows(n: int, gens) -> np.ndarray:
    if isinstance(gens, np.ndarray):
        rows = gens.astype(np.int64, copy=False)
        if rows.ndim == 1 and rows.size == 0:
            rows = rows.reshape(0, n)
    else:
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != n:
                raise InputError(f"monomial {g} has length {len(g)}, expected {n}")
        rows = np.array(gens, dtype=np.int64).reshape(len(gens), n)
    if rows.ndim != 2 or rows.shape[1] != n:
        raise InputError(f"exponent matrix has shape {rows.shape}, expected (*, {n})")
    if rows.size and (rows.min() < 0 or rows.max() > _MAX_EXPONENT):
        raise InputError("exponents must be non-negative and below 2**40")
    return rows


def _row_keys(rows: np.ndarray):
    """Mixed-radix int64 keys ordered like the rows (lexicographically).

    Returns ``None`` when the keys would overflow.
    """
    n = rows.shape[1]
    base = int(rows.max()) + 1 if rows.size else 1
    if n == 0 or base ** n >= 2**62:
        return None
    weights = np.array([base ** (n - 1 - i) for i in range(n)], dtype=np.int64)
    return rows @ weights


def canonical_rows(rows: np.ndarray) -> np.ndarray:
    """Distinct rows sorted by (total degree, lexicographic)."""
    if len(rows) == 0:
        return rows.reshape(0, rows.shape[1])
    keys = _row_keys(rows)
    if keys is None:
        rows = np.unique(rows, axis=0)
    else:
        _, idx = np.unique(keys, return_index=True)
        rows = rows[idx]
    order = np.argsort(rows.sum(axis=1), kind="stable")
    return np.ascontiguousarray(rows[order])


def minimal_rows(rows: np.ndarray) -> np.ndarray:
    """Canonical minimal generating rows of the ideal spanned by `rows`."""
    rows = canonical_rows(rows)
    if len(rows) < 2:
        return rows
    return np.ascontiguousarray(rows[kernels.minimal_mask(rows)])


class MonomialIdeal:
    """An ideal of ``K[x_1, ..., x_n]`` generated by monomials.

    The constructor minimalizes; instances are immutable and hashable.

    >>> I = MonomialIdeal(2, [(2, 0), (2, 1), (0, 3)])
    >>> I.generators
    ((2, 0), (0, 3))
    """

    __slots__ = ("n", "_rows", "_gens", "_hash")

    def __init__(self, n: int, gens: Iterable[Sequence[int]] | np.ndarray = ()):
        if n < 0:
            raise InputError("variable count must be non-negative")
        self._set(n, minimal_rows(_as_rows(n, gens)))

    def _set(self, n, rows):
        rows.flags.writeable = False
        self.n = n
        self._rows = rows
        self._gens = None
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, rows: np.ndarray) -> MonomialIdeal:
        # rows already canonical and minimal
        obj = cls.__new__(cls)
        obj._set(n, np.ascontiguousarray(rows, dtype=np.int64))
        return obj

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls._trusted(n, np.zeros((0, n), dtype=np.int64))

    @classmethod
    def unit(cls, n: int) -> MonomialIdeal:
        return cls._trusted(n, np.zeros((1, n), dtype=np.int64))

    @classmethod
    def maximal(cls, n: int) -> MonomialIdeal:
        """The graded maximal ideal ``(x_1, ..., x_n)``."""
        return cls(n, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> np.ndarray:
        """Read-only exponent matrix of the minimal generators."""
        return self._rows

    @property
    def generators(self) -> tuple:
        if self._gens is None:
            self._gens = tuple(tuple(int(x) for x in r) for r in self._rows)
        return self._gens

    def __len__(self):
        return len(self._rows)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._rows, other._rows)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.generators))
        return self._hash

    def __contains__(self, u):
        return contains(self, u)

    def __mul__(self, other):
        return multiply(self, other)

    def __pow__(self, k):
        return power(self, k)

    def __repr__(self):
        gens = ", ".join(format_monomial(g) for g in self.generators[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"MonomialIdeal(n={self.n}, [{gens}{more}])"

    @property
    def is_zero(self) -> bool:
        return len(self._rows) == 0

    @property
    def is_unit(self) -> bool:
        return len(self._rows) == 1 and not self._rows[0].any()

    def degrees(self) -> np.ndarray:
        return self._rows.sum(axis=1)


def _check_same(I: MonomialIdeal, J: MonomialIdeal):
    if I.n != J.n:
        raise InputError(f"ambient variable counts differ ({I.n} vs {J.n})")


def minimalize(n: int, gens) -> MonomialIdeal:
    """Ideal with minimal generating set; an empty set gives the zero ideal."""
    return MonomialIdeal(n, gens)


def contains(I: MonomialIdeal, u: Sequence[int]) -> bool:
    if len(u) != I.n:
        raise InputError(f"monomial has length {len(u)}, expected {I.n}")
    if I.is_zero:
        return False
    c = np.asarray(u, dtype=np.int64).reshape(1, I.n)
    return bool(kernels.member_mask(I.rows, c)[0])


def contains_many(I: MonomialIdeal, rows) -> np.ndarray:
    """Vectorized :func:`contains` over the rows of an exponent matrix."""
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, I.n)
    return kernels.member_mask(I.rows, rows)


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff ``I`` is contained in ``J``."""
    _check_same(I, J)
    return bool(contains_many(J, I.rows).all()) if len(I) else True


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.n)
    sums = (I.rows[:, None, :] + J.rows[None, :, :]).reshape(-1, I.n)
    return MonomialIdeal._trusted(I.n, minimal_rows(sums))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I**k`` by iterated multiplication; ``k = 0`` gives the unit ideal."""
    if k < 0:
        raise InputError("power exponent must be non-negative")
    if k == 0:
        return MonomialIdeal.unit(I.n)
    result = I
    for _ in range(k - 1):
        result = multiply(result, I)
    return result


class PowerTable:
    """Memoized powers ``I, I^2, ...`` of one ideal, filled sequentially."""

    def __init__(self, ideal: MonomialIdeal):
        self.ideal = ideal
        self._powers = [MonomialIdeal.unit(ideal.n), ideal]

    def __getitem__(self, k: int) -> MonomialIdeal:
        if k < 0:
            raise InputError("power exponent must be non-negative")
        while len(self._powers) <= k:
            self._powers.append(multiply(self._powers[-1], self.ideal))
        return self._powers[k]

    def computed(self) -> int:
        return len(self._powers) - 1


def _colon_rows(I: MonomialIdeal, v) -> np.ndarray:
    v = np.asarray(v, dtype=np.int64).reshape(1, I.n)
    return minimal_rows(np.maximum(I.rows - v, 0))


def colon_monomial(I: MonomialIdeal, v: Sequence[int]) -> MonomialIdeal:
    """``I : v``, generated by ``u / gcd(u, v)`` for ``u`` in ``G(I)``."""
    if len(v) != I.n:
        raise InputError(f"monomial has length {len(v)}, expected {I.n}")
    if I.is_zero:
        return I
    return MonomialIdeal._trusted(I.n, _colon_rows(I, v))


def _intersect_rows(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    if len(a) == 0 or len(b) == 0:
        return np.zeros((0, n), dtype=np.int64)
    a_in = kernels.member_mask(b, a)
    b_in = kernels.member_mask(a, b)
    parts = [a[a_in], b[b_in]]
    b_out = b[~b_in]
    if len(b_out):
        # (u) ∩ (b_out) = u * ((b_out) : u)
        for u in a[~a_in]:
            parts.append(u + kernels.reduce_rows(np.maximum(b_out - u, 0)))
    return minimal_rows(np.concatenate(parts))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``I ∩ J``; generators are the minimal pairwise lcms.

    A generator of one ideal that already lies in the other is kept as is,
    which avoids forming most lcm pairs when the ideals overlap.
    """
    _check_same(I, J)
    return MonomialIdeal._trusted(I.n, _intersect_rows(I.rows, J.rows, I.n))


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``I : J``, the intersection of ``I : v`` over the generators of ``J``."""
    _check_same(I, J)
    if J.is_zero:
        raise InputError("colon by the zero ideal is not defined here")
    if I.is_zero:
        return I
    acc = None
    for v in J.rows:
        c = _colon_rows(I, v)
        acc = c if acc is None else _intersect_rows(acc, c, I.n)
    return MonomialIdeal._trusted(I.n, acc)


def colon_excess(I: MonomialIdeal, divisors, B: MonomialIdeal) -> np.ndarray:
    """Minimal generators of ``∩_v (I : v)`` that do not lie in ``B``.

    `divisors` is an iterable of monomials ``v``.  Candidates already in
    ``B`` are discarded at every step; this is sound because anything they
    divide also lies in ``B``.  Returns a canonical exponent matrix, empty
    when ``∩_v (I : v) ⊆ B``.
    """
    _check_same(I, B)
    n = I.n
    divisors = [np.asarray(v, dtype=np.int64) for v in divisors]
    if not divisors:
        raise InputError("colon_excess needs at least one divisor")
    if I.is_zero:
        return I.rows
    frontier = None
    for v in divisors:
        c = _colon_rows(I, v)
        if frontier is None:
            cand = c
        else:
            stay = kernels.member_mask(c, frontier)
            parts = [frontier[stay]]
            # (f) ∩ C = f * (C : f), and C : f usually has few generators
            for f in frontier[~stay]:
                parts.append(f + kernels.reduce_rows(np.maximum(c - f, 0)))
            cand = np.concatenate(parts)
        if len(cand) and len(B):
            cand = cand[~kernels.member_mask(B.rows, cand)]
        frontier = minimal_rows(cand) if len(cand) else cand.reshape(0, n)
        if len(frontier) == 0:
            break
    return frontier


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return I == J


def support(I: MonomialIdeal) -> frozenset:
    """0-based indices of the variables dividing some generator."""
    if I.is_zero:
        return frozenset()
    return frozenset(int(i) for i in np.flatnonzero(I.rows.any(axis=0)))


def is_equigenerated(I: MonomialIdeal) -> int | None:
    """The common degree of all generators, or ``None``."""
    if I.is_zero:
        return None
    degs = I.degrees()
    return int(degs[0]) if (degs == degs[0]).all() else None
