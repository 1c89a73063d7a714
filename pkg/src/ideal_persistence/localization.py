"""Monomial primes and monomial localization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CapabilityError, InputError
from .monomial import MonomialIdeal, minimal_rows

MAX_PRIME_VARIABLES = 20


@dataclass(frozen=True, order=True)
class MonomialPrime:
    """The prime ideal generated by a nonempty set of variables.

    `variables` holds sorted 0-based indices.  Ordering is by number of
    variables, then lexicographic.
    """

    size: int
    variables: tuple

    def __init__(self, variables):
        vs = tuple(sorted(set(int(v) for v in variables)))
        if not vs:
            raise InputError("a monomial prime needs at least one variable")
        if vs[0] < 0:
            raise InputError("variable indices must be non-negative")
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "size", len(vs))

    @classmethod
    def maximal(cls, n: int) -> MonomialPrime:
        return cls(range(n))

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(self.variables)

    def __contains__(self, i):
        return i in self.variables

    def is_maximal(self, n: int) -> bool:
        return self.variables == tuple(range(n))

    def contains_ideal(self, I: MonomialIdeal) -> bool:
        """True iff every generator of `I` involves a variable of this prime."""
        if I.is_zero:
            return True
        if self.variables[-1] >= I.n:
            raise InputError("prime uses a variable outside the ambient ring")
        return bool(I.rows[:, list(self.variables)].any(axis=1).all())

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"x{i + 1}" for i in range(self.variables[-1] + 1)]
        return "(" + ", ".join(names[i] for i in self.variables) + ")"

    def __repr__(self):
        return f"MonomialPrime{self.format()}"


def monomial_localization(I: MonomialIdeal, P: MonomialPrime) -> MonomialIdeal:
    """``I(P)``: set the variables outside `P` to 1, in ``len(P)`` variables.

    Variable ``P.variables[t]`` becomes variable ``t`` of the smaller ring.
    When `P` does not contain `I` the result is the unit ideal.
    """
    if P.variables[-1] >= I.n:
        raise InputError("prime uses a variable outside the ambient ring")
    cols = list(P.variables)
    if I.is_zero:
        return MonomialIdeal.zero(len(cols))
    return MonomialIdeal._trusted(len(cols), minimal_rows(np.ascontiguousarray(I.rows[:, cols])))


def localize_monomial(u, P: MonomialPrime) -> tuple:
    return tuple(int(u[i]) for i in P.variables)


def embed_monomial(u, P: MonomialPrime, n: int) -> tuple:
    """Inverse of :func:`localize_monomial`, zero outside `P`."""
    out = [0] * n
    for t, i in enumerate(P.variables):
        out[i] = int(u[t])
    return tuple(out)


def candidate_primes(I: MonomialIdeal, max_variables: int = MAX_PRIME_VARIABLES) -> list:
    """All monomial primes containing `I`, ordered by size then lexicographic.

    A set of variables contains `I` iff it meets the support of every
    generator (a vertex cover of the support hypergraph).
    """
    n = I.n
    if n > max_variables:
        raise CapabilityError(
            f"enumerating monomial primes is limited to {max_variables} variables (got {n})")
    if I.is_unit:
        return []
    masks = np.arange(1, 1 << n, dtype=np.int64)
    ok = np.ones(len(masks), dtype=bool)
    weights = np.int64(1) << np.arange(n, dtype=np.int64)
    for s in np.unique((I.rows > 0).astype(np.int64) @ weights):
        ok &= (masks & s) != 0
    primes = [MonomialPrime([i for i in range(n) if (m >> i) & 1]) for m in masks[ok]]
    return sorted(primes)
