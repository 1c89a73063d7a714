"""Ratliff condition, strong persistence and persistence of associated primes.

All checks run up to a finite horizon ``K``.  Strong persistence is decided
prime by prime on monomial localizations, so a failure comes with a
witness ``(P, k, u)``: ``u`` spans part of the socle of ``S(P)/I(P)^k`` and
``u * v`` lies in ``I(P)^(k+1)`` for every generator ``v`` of ``I(P)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InputError
from .localization import MonomialPrime, candidate_primes, embed_monomial, monomial_localization
from .monomial import (MonomialIdeal, PowerTable, colon_excess, colon_ideal, contains,
                       equals, format_monomial, mono_mul, power, variable)
from .primes import LocalizedPowers, ass, socle_basis
from . import kernels


def _require_proper(I: MonomialIdeal):
    if I.is_unit:
        raise InputError("the unit ideal is not proper")


def _horizon(K: int):
    if K < 1:
        raise InputError("horizon must be at least 1")


def ratliff_excess(I: MonomialIdeal, k: int, powers: PowerTable | None = None) -> np.ndarray:
    """Minimal generators of ``I^(k+1) : I`` outside ``I^k`` (empty iff equality)."""
    powers = powers or PowerTable(I)
    return colon_excess(powers[k + 1], I.rows, powers[k])


def ratliff_check(I: MonomialIdeal, K: int, powers: PowerTable | None = None) -> list:
    """Entry ``k - 1`` tells whether ``I^(k+1) : I == I^k``, for ``k = 1..K``.

    ``I^k`` is always contained in the colon, so equality is tested by
    looking for colon generators outside ``I^k``.
    """
    _require_proper(I)
    _horizon(K)
    if I.is_zero:
        return [True] * K
    powers = powers or PowerTable(I)
    return [len(ratliff_excess(I, k, powers)) == 0 for k in range(1, K + 1)]


def ratliff_check_direct(I: MonomialIdeal, K: int) -> list:
    """Same as `ratliff_check`, through the full colon ideal and `equals`."""
    _require_proper(I)
    _horizon(K)
    if I.is_zero:
        return [True] * K
    return [equals(colon_ideal(power(I, k + 1), I), power(I, k)) for k in range(1, K + 1)]


@dataclass(frozen=True)
class PersistenceWitness:
    """``u`` (over the variables of `prime`) in the socle of ``I(P)^k`` with ``u * I(P) ⊆ I(P)^(k+1)``."""

    prime: MonomialPrime
    power: int
    monomial: tuple
    ambient_monomial: tuple

    def format(self, names: Sequence[str] | None = None) -> str:
        return format_monomial(self.ambient_monomial, names)


@dataclass(frozen=True)
class StrongPersistenceResult:
    holds: bool
    horizon: int
    weak: bool
    witness: PersistenceWitness | None = None

    def __bool__(self):
        return self.holds


def _absorbed(J: MonomialIdeal, next_power: MonomialIdeal, u) -> bool:
    """True when ``u * v`` lies in `next_power` for every generator ``v`` of `J`."""
    cands = J.rows + np.asarray(u, dtype=np.int64)
    return bool(kernels.member_mask(next_power.rows, cands).all())


def strong_persistence_check(I: MonomialIdeal, K: int, weak: bool = False,
                             cache: LocalizedPowers | None = None) -> StrongPersistenceResult:
    """Search for a socle element absorbed into the next power.

    Powers ``k = 1..K`` are scanned in increasing order and, for each,
    primes from the largest down; the first failure is returned.  With
    `weak` set, a localization fails only when every socle element is
    absorbed (the weak witness condition, which still implies persistence).
    """
    _require_proper(I)
    _horizon(K)
    cache = cache or LocalizedPowers(I)
    primes = sorted(candidate_primes(I), key=lambda P: (-len(P), P.variables))
    for k in range(1, K + 1):
        for P in primes:
            socle = cache.socle(P, k)
            if not socle:
                continue
            J = cache.localization(P)
            nxt = cache.powers(P)[k + 1]
            absorbed = [u for u in socle if _absorbed(J, nxt, u)]
            failed = len(absorbed) == len(socle) if weak else bool(absorbed)
            if failed:
                u = absorbed[0]
                return StrongPersistenceResult(
                    False, K, weak, PersistenceWitness(P, k, u, embed_monomial(u, P, I.n)))
    return StrongPersistenceResult(True, K, weak)


def verify_witness(I: MonomialIdeal, w: PersistenceWitness) -> bool:
    """Re-check a witness with localization, powers and membership only."""
    J = monomial_localization(I, w.prime)
    Jk = power(J, w.power)
    Jk1 = power(J, w.power + 1)
    u = w.monomial
    if contains(Jk, u):
        return False
    if not all(contains(Jk, mono_mul(u, variable(J.n, i))) for i in range(J.n)):
        return False
    return all(contains(Jk1, mono_mul(u, v)) for v in J.generators)


def localized_ratliff(I: MonomialIdeal, K: int) -> dict:
    """``{P: ratliff_check(I(P), K)}`` over the primes containing `I`."""
    _require_proper(I)
    return {P: ratliff_check(monomial_localization(I, P), K) for P in candidate_primes(I)}


def persistence_check(I: MonomialIdeal, K: int, cache: LocalizedPowers | None = None) -> list:
    """Entry ``k - 1`` tells whether ``Ass(I^k) ⊆ Ass(I^(k+1))``, for ``k = 1..K-1``."""
    _require_proper(I)
    _horizon(K)
    cache = cache or LocalizedPowers(I)
    chain = [ass(I, k, cache) for k in range(1, K + 1)]
    return [chain[k] <= chain[k + 1] for k in range(K - 1)]


def socle_dimension_profile(I: MonomialIdeal, K: int, powers: PowerTable | None = None) -> list:
    """``dim (I^k : m) / I^k`` for ``k = 1..K``.  Reported, not asserted monotone."""
    _require_proper(I)
    _horizon(K)
    powers = powers or PowerTable(I)
    return [len(socle_basis(powers[k])) for k in range(1, K + 1)]


@dataclass(frozen=True)
class PersistenceReport:
    horizon: int
    ratliff: tuple
    strong_persistence: StrongPersistenceResult
    weak_witness_condition: StrongPersistenceResult
    persistence_chain: tuple
    socle_dimensions: tuple


def persistence_report(I: MonomialIdeal, K: int, powers: PowerTable | None = None,
                       cache: LocalizedPowers | None = None) -> PersistenceReport:
    """All checks over one shared table of powers."""
    _require_proper(I)
    _horizon(K)
    powers = powers or PowerTable(I)
    cache = cache or LocalizedPowers(I, powers)
    return PersistenceReport(
        K,
        tuple(ratliff_check(I, K, powers)),
        strong_persistence_check(I, K, cache=cache),
        strong_persistence_check(I, K, weak=True, cache=cache),
        tuple(persistence_check(I, K, cache)),
        tuple(socle_dimension_profile(I, K, powers)),
    )
