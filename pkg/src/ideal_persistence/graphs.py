"""Finite simple graphs: edge ideals, components and biconnected components."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .monomial import MonomialIdeal


@dataclass(frozen=True)
class SimpleGraph:
    """A simple graph on vertices ``0..n-1``.

    Edges are stored as sorted pairs in input order (duplicates dropped), so
    that edge ``k`` can name variable ``x_{k+1}`` of a graphic matroid.
    """

    n: int
    edges: tuple

    def __init__(self, n: int, edges):
        seen = []
        for e in edges:
            a, b = (int(v) for v in e)
            if a == b:
                raise InputError(f"loop at vertex {a} is not allowed")
            if not (0 <= a < n and 0 <= b < n):
                raise InputError(f"edge {(a, b)} has an endpoint outside 0..{n - 1}")
            pair = (min(a, b), max(a, b))
            if pair not in seen:
                seen.append(pair)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple(seen))

    @classmethod
    def cycle(cls, n: int) -> SimpleGraph:
        if n < 3:
            raise InputError("a cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> SimpleGraph:
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        return cls(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    def adjacency(self) -> list:
        adj = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return [sorted(nb) for nb in adj]

    def component_count(self) -> int:
        """Number of connected components, isolated vertices included."""
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = self.n
        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                count -= 1
        return count

    def biconnected_components(self) -> list:
        """Edge-index lists of the biconnected components.

        One depth-first pass with lowpoint values (Hopcroft and Tarjan).  A
        bridge forms its own one-edge component.  Components are ordered by
        their smallest edge index and each list is sorted.
        """
        index = {e: k for k, e in enumerate(self.edges)}
        adj = self.adjacency()
        disc = [-1] * self.n
        low = [0] * self.n
        counter = 0
        stack = []
        comps = []
        for root in range(self.n):
            if disc[root] != -1:
                continue
            disc[root] = low[root] = counter
            counter += 1
            # frames: (vertex, parent, iterator position)
            frames = [(root, -1, 0)]
            while frames:
                v, parent, pos = frames[-1]
                if pos < len(adj[v]):
                    frames[-1] = (v, parent, pos + 1)
                    w = adj[v][pos]
                    if disc[w] == -1:
                        stack.append(index[(min(v, w), max(v, w))])
                        disc[w] = low[w] = counter
                        counter += 1
                        frames.append((w, v, 0))
                    elif w != parent and disc[w] < disc[v]:
                        stack.append(index[(min(v, w), max(v, w))])
                        low[v] = min(low[v], disc[w])
                else:
                    frames.pop()
                    if parent != -1:
                        low[parent] = min(low[parent], low[v])
                        if low[v] >= disc[parent]:
                            tree_edge = index[(min(v, parent), max(v, parent))]
                            comp = []
                            while True:
                                e = stack.pop()
                                comp.append(e)
                                if e == tree_edge:
                                    break
                            comps.append(sorted(comp))
        return sorted(comps)


def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    """``I(G) = (x_i x_j : {i, j} an edge)`` in ``G.n`` variables."""
    gens = []
    for a, b in G.edges:
        u = [0] * G.n
        u[a] = u[b] = 1
        gens.append(u)
    return MonomialIdeal(G.n, gens)


def common_neighbor_edges(G: SimpleGraph) -> frozenset:
    """Pairs ``{i, j}`` (``i < j``) of distinct vertices with a common neighbor."""
    out = set()
    for nb in G.adjacency():
        for s in range(len(nb)):
            for t in range(s + 1, len(nb)):
                out.add((nb[s], nb[t]))
    return frozenset(out)
