"""Socles, associated primes of powers and the stability index ``astab``.

``P`` is associated to ``I^k`` iff the localized power ``I(P)^k`` has a
nonzero socle, i.e. ``depth S(P)/I(P)^k = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapabilityError, InputError
from .localization import (MAX_PRIME_VARIABLES, MonomialPrime, candidate_primes,
                           monomial_localization)
from .monomial import MonomialIdeal, PowerTable, colon_excess, support, variable
from .polymatroid import analytic_spread, is_polymatroidal

DEFAULT_HORIZON = 4


def socle_basis(I: MonomialIdeal) -> list:
    """Monomial basis of ``(I : m) / I``.

    These are the minimal generators of ``∩_i (I : x_i)`` lying outside
    ``I``.  Returned in canonical order.
    """
    if I.is_unit:
        raise InputError("the unit ideal has no socle to compute")
    if I.n == 0 or I.is_zero:
        return []
    rows = colon_excess(I, [variable(I.n, i) for i in range(I.n)], I)
    return [tuple(int(x) for x in r) for r in rows]


def has_socle(I: MonomialIdeal) -> bool:
    return bool(socle_basis(I))


class LocalizedPowers:
    """Shared cache of powers of monomial localizations of one ideal."""

    def __init__(self, ideal: MonomialIdeal, powers: PowerTable | None = None):
        self.ideal = ideal
        self._local = {}
        self._tables = {}
        self._socle = {}
        if powers is not None:
            self._tables[ideal] = powers

    def localization(self, P: MonomialPrime) -> MonomialIdeal:
        if P not in self._local:
            self._local[P] = monomial_localization(self.ideal, P)
        return self._local[P]

    def powers(self, P: MonomialPrime) -> PowerTable:
        J = self.localization(P)
        if J not in self._tables:
            self._tables[J] = PowerTable(J)
        return self._tables[J]

    def socle(self, P: MonomialPrime, k: int) -> list:
        J = self.localization(P)
        key = (J, k)
        if key not in self._socle:
            if J.is_unit or support(J) != frozenset(range(J.n)):
                # a variable missing from I(P) is a nonzerodivisor
                self._socle[key] = []
            else:
                self._socle[key] = socle_basis(self.powers(P)[k])
        return self._socle[key]


def is_associated(I: MonomialIdeal, P: MonomialPrime, k: int, cache: LocalizedPowers | None = None) -> bool:
    if k < 1:
        raise InputError("power must be positive")
    cache = cache or LocalizedPowers(I)
    return bool(cache.socle(P, k))


def ass(I: MonomialIdeal, k: int, cache: LocalizedPowers | None = None) -> frozenset:
    """Associated primes of ``I^k`` among the monomial primes containing `I`."""
    if I.n > MAX_PRIME_VARIABLES:
        raise CapabilityError(f"associated primes are limited to {MAX_PRIME_VARIABLES} variables")
    cache = cache or LocalizedPowers(I)
    return frozenset(P for P in candidate_primes(I) if is_associated(I, P, k, cache))


@dataclass(frozen=True)
class AssProfile:
    per_power: tuple  # entry k-1 is Ass(I^k), a frozenset of MonomialPrime
    horizon: int
    astab_value: int
    certified: bool
    certificate: str

    def stable_set(self) -> frozenset:
        return self.per_power[-1]


def first_constant_tail(values) -> int:
    """Least 1-based index from which the sequence is constant."""
    k = len(values)
    while k > 1 and values[k - 2] == values[-1]:
        k -= 1
    return k


def ass_profile(I: MonomialIdeal, K: int | None = None, certify_polymatroidal: bool = True,
                cache: LocalizedPowers | None = None) -> AssProfile:
    """``Ass(I^k)`` for ``k = 1..K`` and the index where it stops changing.

    For polymatroidal ideals the stability index is below the analytic
    spread, so with ``K >= spread - 1`` the observed value is global and is
    marked certified.  Otherwise the value only holds within the horizon.
    """
    poly = certify_polymatroidal and is_polymatroidal(I)
    spread = analytic_spread(I) if poly else None
    if K is None:
        K = spread if poly else DEFAULT_HORIZON
    if K < 1:
        raise InputError("horizon must be at least 1")
    cache = cache or LocalizedPowers(I)
    primes = candidate_primes(I)
    per_power = tuple(frozenset(P for P in primes if is_associated(I, P, k, cache))
                      for k in range(1, K + 1))
    value = first_constant_tail(per_power)
    if poly and K >= spread - 1:
        return AssProfile(per_power, K, value, True,
                          f"polymatroidal: astab < analytic spread = {spread} and horizon {K} >= {spread - 1}")
    return AssProfile(per_power, K, value, False, f"within horizon {K}")


def stable_primes_polymatroidal(I: MonomialIdeal) -> frozenset:
    """Primes ``P ⊇ I`` with ``spread(I(P)) = |P|``, the stable associated primes."""
    if not is_polymatroidal(I):
        raise CapabilityError("the spread criterion for stable primes applies to polymatroidal ideals only")
    return frozenset(P for P in candidate_primes(I)
                     if analytic_spread(monomial_localization(I, P)) == len(P))
