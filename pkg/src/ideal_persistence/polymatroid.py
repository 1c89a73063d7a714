"""Discrete polymatroids, polymatroidal ideals and their analytic spread.

Analytic spread of an ideal generated in one degree is computed as the
rank of its exponent matrix.  Two independent routes are provided for
cross-checking: the relation graph count ``r - s + 1`` and, for graphic
matroids, the biconnected-component formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import CapabilityError, InputError
from .graphs import SimpleGraph
from .linalg import rank_fraction_free
from .localization import candidate_primes, monomial_localization
from .monomial import MonomialIdeal, is_equigenerated
from .relation_graph import RelationGraph, components, linear_relation_graph

MAX_GRAPHIC_EDGES = 16


def distance(a, b) -> int:
    """Half the l1 distance between two bases of the same rank."""
    return sum(abs(x - y) for x, y in zip(a, b)) // 2


@dataclass(frozen=True)
class BaseSet:
    n: int
    d: int
    bases: frozenset

    @classmethod
    def from_vectors(cls, vectors) -> BaseSet:
        vecs = [tuple(int(x) for x in v) for v in vectors]
        if not vecs:
            raise InputError("a base set needs at least one vector")
        n = len(vecs[0])
        if any(len(v) != n for v in vecs):
            raise InputError("base vectors have different lengths")
        if any(x < 0 for v in vecs for x in v):
            raise InputError("base vectors must be non-negative")
        degs = {sum(v) for v in vecs}
        if len(degs) != 1:
            raise InputError(f"base vectors have different coordinate sums {sorted(degs)}")
        return cls(n, degs.pop(), frozenset(vecs))

    @classmethod
    def of_ideal(cls, I: MonomialIdeal) -> BaseSet:
        return cls.from_vectors(I.generators)


@dataclass(frozen=True)
class ExchangeResult:
    holds: bool
    counterexample: tuple | None = None  # (a, b, i) with i 0-based

    def __bool__(self):
        return self.holds


def exchange_check(B: BaseSet) -> ExchangeResult:
    """Check the exchange property on every ordered pair and index."""
    bases = sorted(B.bases)
    members = B.bases
    for a in bases:
        for b in bases:
            for i in range(B.n):
                if a[i] <= b[i]:
                    continue
                ok = False
                for j in range(B.n):
                    if b[j] > a[j]:
                        c = list(a)
                        c[i] -= 1
                        c[j] += 1
                        if tuple(c) in members:
                            ok = True
                            break
                if not ok:
                    return ExchangeResult(False, (a, b, i))
    return ExchangeResult(True)


def is_polymatroidal(I: MonomialIdeal) -> bool:
    if is_equigenerated(I) is None:
        return False
    return exchange_check(BaseSet.of_ideal(I)).holds


def graphic_matroid_ideal(G: SimpleGraph) -> MonomialIdeal:
    """Ideal generated by ``prod_{e in F} x_e`` over the spanning forests ``F``.

    Variable ``k`` is edge ``G.edges[k]``.
    """
    m = len(G.edges)
    if m > MAX_GRAPHIC_EDGES:
        raise CapabilityError(f"spanning-forest enumeration is limited to {MAX_GRAPHIC_EDGES} edges")
    if m == 0:
        return MonomialIdeal.unit(0)
    rank = G.n - G.component_count()
    gens = []
    for subset in itertools.combinations(range(m), rank):
        parent = list(range(G.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for k in subset:
            a, b = G.edges[k]
            ra, rb = find(a), find(b)
            if ra == rb:
                acyclic = False
                break
            parent[ra] = rb
        if acyclic:
            u = [0] * m
            for k in subset:
                u[k] = 1
            gens.append(u)
    return MonomialIdeal(m, gens)


def transversal_ideal(families, n: int | None = None) -> MonomialIdeal:
    """Product of the monomial primes generated by each family of indices."""
    fams = [sorted(set(int(i) for i in F)) for F in families]
    if not fams:
        raise InputError("at least one family is required")
    if any(not F for F in fams):
        raise InputError("every family must be nonempty")
    if n is None:
        n = max(max(F) for F in fams) + 1
    if any(i < 0 or i >= n for F in fams for i in F):
        raise InputError(f"family index outside 0..{n - 1}")
    result = MonomialIdeal.unit(n)
    for F in fams:
        result = result * MonomialIdeal(n, np.eye(n, dtype=np.int64)[F])
    return result


def strip_principal_factors(families):
    """Split off singleton families: returns ``(u, remaining)``.

    ``u`` is the exponent multiset of the fixed factor as a dict
    ``{index: exponent}``.
    """
    u = {}
    rest = []
    for F in families:
        F = sorted(set(F))
        if len(F) == 1:
            u[F[0]] = u.get(F[0], 0) + 1
        else:
            rest.append(F)
    return u, rest


def veronese_type_ideal(n: int, d: int, bounds) -> MonomialIdeal:
    """All exponent vectors of degree `d` bounded by `bounds` componentwise."""
    c = [int(x) for x in bounds]
    if len(c) != n:
        raise InputError(f"bound vector has length {len(c)}, expected {n}")
    if any(x < 0 for x in c) or d < 0:
        raise InputError("degree and bounds must be non-negative")
    if sum(c) < d:
        raise InputError(f"bounds sum to {sum(c)} < {d}: the ideal would be empty")
    gens = []

    def rec(i, left, acc):
        if i == n - 1:
            if left <= c[i]:
                gens.append(acc + [left])
            return
        for e in range(min(left, c[i]), -1, -1):
            rec(i + 1, left - e, acc + [e])

    rec(0, d, [])
    return MonomialIdeal(n, gens)


def analytic_spread(I: MonomialIdeal) -> int:
    """Rank over QQ of the exponent matrix (ideals generated in one degree)."""
    if I.is_zero:
        return 0
    if I.is_unit:
        raise InputError("analytic spread of the unit ideal is not handled")
    if is_equigenerated(I) is None:
        raise CapabilityError("analytic spread is computed only for ideals generated in one degree")
    return rank_fraction_free(I.generators)


@dataclass(frozen=True)
class SpreadValue:
    value: int
    method: str
    exact: bool
    note: str = ""


def analytic_spread_via_gamma(I: MonomialIdeal) -> SpreadValue:
    """``r - s + 1`` from the relation graph.

    Exact for polymatroidal ideals, otherwise only a lower bound.
    """
    c = components(linear_relation_graph(I))
    value = c.r - c.s + 1
    if is_polymatroidal(I):
        return SpreadValue(value, "relation-graph", True, "equality for polymatroidal ideals")
    return SpreadValue(value, "relation-graph", False, "lower bound only")


def graphic_spread(G: SimpleGraph) -> int:
    """``|E(G_1 ∪ ... ∪ G_s)| - s + 1`` over biconnected components with >= 2 edges."""
    if len(G.edges) > MAX_GRAPHIC_EDGES:
        raise CapabilityError(f"graphic matroids are limited to {MAX_GRAPHIC_EDGES} edges")
    big = [c for c in G.biconnected_components() if len(c) >= 2]
    return sum(len(c) for c in big) - len(big) + 1


def transversal_gamma_structure(families, n: int | None = None) -> RelationGraph:
    """Predicted relation graph of a transversal ideal.

    Singleton families are stripped first.  The prediction is a disjoint
    union of complete graphs, one on the vertex set of each connected
    component of the complex generated by the families.
    """
    _, rest = strip_principal_factors(families)
    if n is None:
        n = max((max(F) for F in families), default=-1) + 1
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for F in rest:
        for v in F[1:]:
            a, b = find(F[0]), find(v)
            if a != b:
                parent[a] = b
    groups = {}
    for F in rest:
        for v in F:
            groups.setdefault(find(v), set()).add(v)
    edges = set()
    for verts in groups.values():
        vs = sorted(verts)
        edges.update((vs[s], vs[t]) for s in range(len(vs)) for t in range(s + 1, len(vs)))
    return RelationGraph(n, frozenset(edges))


@dataclass(frozen=True)
class LocalizationSpreadTable:
    holds: bool
    spread: int
    rows: tuple  # (MonomialPrime, spread of I(P))


def localization_spread_check(I: MonomialIdeal) -> LocalizationSpreadTable:
    """Check ``spread(I(P)) <= spread(I)`` for every monomial prime ``P ⊇ I``."""
    if not is_polymatroidal(I):
        raise CapabilityError("the localization spread bound is checked for polymatroidal ideals only")
    top = analytic_spread(I)
    rows = []
    for P in candidate_primes(I):
        rows.append((P, analytic_spread(monomial_localization(I, P))))
    return LocalizationSpreadTable(all(v <= top for _, v in rows), top, tuple(rows))
