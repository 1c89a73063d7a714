"""The linear relation graph of a monomial ideal.

Vertices are variables; ``{i, j}`` is an edge when two minimal generators
satisfy ``x_i * u = x_j * v``.  Its size bounds the depth of small powers
from above, and for a connected graph on all variables a spanning tree
yields an explicit socle element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import CapabilityError, InputError
from .monomial import (MonomialIdeal, contains, is_equigenerated, mono_mul, power,
                       format_monomial, variable)


@dataclass(frozen=True)
class RelationGraph:
    """Undirected graph on variable indices (0-based).

    `witnesses` maps an edge ``(i, j)`` with ``i < j`` to generators
    ``(u, v)`` with ``x_i * u == x_j * v``.  Predicted graphs carry no
    witnesses.
    """

    n: int
    edges: frozenset
    witnesses: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def vertices(self) -> tuple:
        return tuple(sorted({v for e in self.edges for v in e}))

    def adjacency(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return {v: sorted(nb) for v, nb in adj.items()}

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def verify_witnesses(self) -> bool:
        """Re-check every stored witness equation."""
        for (i, j), (u, v) in self.witnesses.items():
            if mono_mul(variable(self.n, i), u) != mono_mul(variable(self.n, j), v):
                return False
        return set(self.witnesses) <= set(self.edges)


def linear_relation_graph(I: MonomialIdeal) -> RelationGraph:
    """Build the graph by hashing generators: ``u + e_i - e_j`` in ``G(I)``."""
    n = I.n
    gens = I.generators
    index = set(gens)
    witnesses = {}
    for u in gens:
        for j in range(n):
            if u[j] == 0:
                continue
            for i in range(n):
                if i == j:
                    continue
                w = list(u)
                w[i] += 1
                w[j] -= 1
                w = tuple(w)
                if w in index:
                    # x_i * u == x_j * w
                    key = (min(i, j), max(i, j))
                    if key not in witnesses:
                        witnesses[key] = (u, w) if i < j else (w, u)
    return RelationGraph(n, frozenset(witnesses), witnesses)


@dataclass(frozen=True)
class Components:
    r: int
    s: int
    parts: tuple


def components(G: RelationGraph) -> Components:
    """Vertex count, component count and the components (sorted)."""
    adj = G.adjacency()
    seen = set()
    parts = []
    for v in G.vertices:
        if v in seen:
            continue
        comp = []
        todo = [v]
        seen.add(v)
        while todo:
            x = todo.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        parts.append(tuple(sorted(comp)))
    return Components(len(G.vertices), len(parts), tuple(sorted(parts)))


def _require_equigenerated(I: MonomialIdeal) -> int:
    d = is_equigenerated(I)
    if d is None:
        raise CapabilityError("the relation-graph depth bound needs an ideal generated in one degree")
    return d


def depth_upper_bounds(I: MonomialIdeal) -> list:
    """``[(t, n - t - 1)]`` for ``t = 1..r-s``: upper bounds for depth S/I^t."""
    _require_equigenerated(I)
    c = components(linear_relation_graph(I))
    return [(t, I.n - t - 1) for t in range(1, c.r - c.s + 1)]


@dataclass(frozen=True)
class OrderedSpanningForest:
    """Forest edges ``(i_k, j_k)`` where ``j_k`` is new when edge ``k`` is added.

    `multipliers[k]` is the generator ``u_{p_k}`` with
    ``x_{j_k} * u_{p_k} = x_{i_k} * u_{q_k}`` and `partners[k]` is ``u_{q_k}``.
    """

    edges: tuple
    multipliers: tuple
    partners: tuple
    roots: tuple

    def has_free_vertex_property(self) -> bool:
        used = set()
        for i, j in self.edges:
            if j in used or j == i:
                return False
            used.update((i, j))
        return True


def ordered_spanning_forest(G: RelationGraph) -> OrderedSpanningForest:
    """Depth-first spanning forest, smallest root and smallest neighbor first."""
    if not G.edges:
        raise InputError("the relation graph has no edges")
    adj = G.adjacency()
    seen = set()
    edges, mults, partners, roots = [], [], [], []
    for root in G.vertices:
        if root in seen:
            continue
        roots.append(root)
        seen.add(root)
        frames = [[root, 0]]
        while frames:
            v, pos = frames[-1]
            if pos < len(adj[v]):
                frames[-1][1] += 1
                w = adj[v][pos]
                if w not in seen:
                    seen.add(w)
                    edges.append((v, w))
                    u, x = G.witnesses[(min(v, w), max(v, w))]
                    # stored as x_a * u == x_b * x_ with a < b
                    if v < w:
                        # x_v * u == x_w * x_  so  x_w * x_ == x_v * u
                        mults.append(x)
                        partners.append(u)
                    else:
                        # x_w * u == x_v * x_
                        mults.append(u)
                        partners.append(x)
                    frames.append([w, 0])
            else:
                frames.pop()
    return OrderedSpanningForest(tuple(edges), tuple(mults), tuple(partners), tuple(roots))


@dataclass(frozen=True)
class SocleWitness:
    """A socle element ``w`` of ``S/I^(n-1)`` built from a spanning tree."""

    monomial: tuple
    power: int
    leftover: int
    forest: OrderedSpanningForest
    outside_power: bool
    annihilated_by_all_variables: bool
    next_power_checked: bool

    @property
    def verified(self) -> bool:
        return self.outside_power and self.annihilated_by_all_variables and self.next_power_checked

    def format(self, names: Sequence[str] | None = None) -> str:
        return format_monomial(self.monomial, names)


def _is_socle_element(J: MonomialIdeal, w) -> tuple:
    n = J.n
    outside = not contains(J, w)
    killed = all(contains(J, mono_mul(w, variable(n, i))) for i in range(n))
    return outside, killed


def socle_witness(I: MonomialIdeal) -> SocleWitness:
    """``w = (u_{p_1} ... u_{p_{n-1}}) / x_r`` from an ordered spanning tree.

    Requires an ideal generated in one degree whose relation graph is
    connected with all ``n`` variables as vertices.  The element is checked
    by membership against ``I^(n-1)``; the propagated element ``v * w`` is
    checked against ``I^n`` as well, for the first generator ``v``.
    """
    _require_equigenerated(I)
    n = I.n
    G = linear_relation_graph(I)
    if len(G.vertices) != n:
        raise CapabilityError(
            f"relation graph covers {len(G.vertices)} of {n} variables; all are required")
    comps = components(G)
    if comps.s != 1:
        raise CapabilityError(f"relation graph has {comps.s} connected components; it must be connected")
    forest = ordered_spanning_forest(G)
    free = {j for _, j in forest.edges}
    (leftover,) = [v for v in range(n) if v not in free]
    prod = (0,) * n
    for u in forest.multipliers:
        prod = mono_mul(prod, u)
    if prod[leftover] == 0:
        raise CapabilityError("leftover variable does not divide the product of multipliers")
    w = list(prod)
    w[leftover] -= 1
    w = tuple(w)
    J = power(I, n - 1)
    outside, killed = _is_socle_element(J, w)
    v = I.generators[0]
    o2, k2 = _is_socle_element(J * I, mono_mul(v, w))
    return SocleWitness(w, n - 1, leftover, forest, outside, killed, o2 and k2)


def dot_export(G: RelationGraph, names: Sequence[str] | None = None,
               label_witnesses: bool = False) -> str:
    """Graphviz DOT text for the relation graph (deterministic, LF endings)."""
    names = names or [f"x{i + 1}" for i in range(G.n)]
    lines = ["graph relation_graph {"]
    for v in G.vertices:
        lines.append(f'  "{names[v]}";')
    for a, b in G.sorted_edges():
        attr = ""
        if label_witnesses and (a, b) in G.witnesses:
            u, w = G.witnesses[(a, b)]
            attr = f' [label="{format_monomial(u, names)} | {format_monomial(w, names)}"]'
        lines.append(f'  "{names[a]}" -- "{names[b]}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"
