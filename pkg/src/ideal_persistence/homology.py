"""Multigraded Betti numbers, depth and the depth stability index.

Betti numbers come from the upper Koszul simplicial complexes
``K^b(I) = {W ⊆ supp(b) : x^b / x_W ∈ I}``, with
``beta_{i,b}(I) = dim H~_{i-1}(K^b(I); F)``, evaluated at the points ``b``
of the lcm lattice.  Depth follows from Auslander-Buchsbaum.

Ideals generated in one degree with linear quotients get a second depth
route: the mapping-cone resolution is then minimal, so ``pd(I)`` is the
largest colon set size and the value does not depend on the field.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import CapabilityError, InputError
from .linalg import rank_over
from .monomial import MonomialIdeal, PowerTable, canonical_rows, is_equigenerated
from .polymatroid import analytic_spread, is_polymatroidal
from .primes import DEFAULT_HORIZON, first_constant_tail, has_socle
from . import kernels

MAX_BETTI_GENERATORS = 200


@dataclass(frozen=True)
class Field:
    """QQ when `characteristic` is 0, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or (p and (p < 2 or p >= 2**31 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)))):
            raise InputError(f"field characteristic must be 0 or a prime below 2**31 (got {p})")

    @classmethod
    def parse(cls, text: str) -> Field:
        t = text.strip().lower()
        if t in ("q", "qq", "0", "rationals"):
            return cls(0)
        m = re.fullmatch(r"(?:fp:|gf\(?|f)(\d+)\)?", t)
        if not m:
            raise InputError(f"unknown field {text!r}; use q or fp:P")
        return cls(int(m.group(1)))

    @property
    def name(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __str__(self):
        return self.name


QQ = Field(0)
GF2 = Field(2)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex stored by its facets.

    No facets means the void complex; the single facet ``()`` is the
    complex whose only face is the empty set.
    """

    facets: tuple

    @classmethod
    def from_faces(cls, faces) -> SimplicialComplex:
        faces = {tuple(sorted(f)) for f in faces}
        facets = [f for f in faces if not any(set(f) < set(g) for g in faces)]
        return cls(tuple(sorted(facets, key=lambda f: (len(f), f))))

    @property
    def vertices(self) -> tuple:
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def is_void(self) -> bool:
        return not self.facets

    def faces(self) -> list:
        out = set()
        for f in self.facets:
            for r in range(len(f) + 1):
                out.update(itertools.combinations(f, r))
        return sorted(out, key=lambda f: (len(f), f))


def _homology_from_faces(faces_by_size: dict, field: Field) -> dict:
    """Reduced homology ranks ``{dim: rank}`` from faces grouped by size."""
    if not faces_by_size:
        return {}
    top = max(faces_by_size)
    ranks = {}
    index = {s: {f: t for t, f in enumerate(faces_by_size.get(s, []))} for s in range(top + 1)}
    for s in range(1, top + 1):
        rows, cols = index[s - 1], faces_by_size.get(s, [])
        if not cols or not rows:
            ranks[s] = 0
            continue
        mat = [[0] * len(cols) for _ in range(len(rows))]
        for c, f in enumerate(cols):
            for t in range(len(f)):
                mat[rows[f[:t] + f[t + 1:]]][c] = -1 if t % 2 else 1
        ranks[s] = rank_over(mat, field.characteristic)
    out = {}
    for s in range(top + 1):
        dim = len(faces_by_size.get(s, []))
        out[s - 1] = dim - ranks.get(s, 0) - ranks.get(s + 1, 0)
    return out


def reduced_homology_ranks(C: SimplicialComplex, field: Field = QQ) -> dict:
    """``{d: rank H~_d(C; field)}`` for ``d = -1..dim C``; empty for the void complex."""
    if C.is_void:
        return {}
    by_size = {}
    for f in C.faces():
        by_size.setdefault(len(f), []).append(f)
    return _homology_from_faces(by_size, field)


def lcm_lattice(I: MonomialIdeal) -> np.ndarray:
    """All lcms of nonempty sets of generators, by closure iteration.

    Returned as a canonical exponent matrix (degree, then lexicographic).
    """
    if I.is_zero:
        raise InputError("the zero ideal has an empty lcm lattice")
    G = I.rows
    base = int(G.max()) + 1
    if I.n * np.log2(base) >= 62:
        raise CapabilityError("exponents too large for lattice enumeration")
    weights = np.array([base ** (I.n - 1 - i) for i in range(I.n)], dtype=np.int64)
    seen = set(int(k) for k in G @ weights)
    found = [G]
    frontier = G
    while len(frontier):
        joins = np.maximum(frontier[:, None, :], G[None, :, :]).reshape(-1, I.n)
        keys = joins @ weights
        keys, idx = np.unique(keys, return_index=True)
        fresh = np.array([k not in seen for k in keys.tolist()], dtype=bool)
        frontier = joins[idx[fresh]]
        seen.update(keys[fresh].tolist())
        found.append(frontier)
    return canonical_rows(np.concatenate(found))


def _subset_matrix(n_vertices: int) -> np.ndarray:
    masks = np.arange(1 << n_vertices, dtype=np.int64)
    return ((masks[:, None] >> np.arange(n_vertices)) & 1).astype(np.int64)


def _upper_koszul_masks(I: MonomialIdeal, b) -> tuple:
    """(vertex list, boolean face indicator over bitmasks of those vertices)."""
    b = np.asarray(b, dtype=np.int64)
    verts = np.flatnonzero(b > 0)
    bits = _subset_matrix(len(verts))
    cands = np.tile(b, (len(bits), 1))
    cands[:, verts] -= bits
    return verts, kernels.member_mask(I.rows, cands)


def upper_koszul(I: MonomialIdeal, b) -> SimplicialComplex:
    """``K^b(I)``: sets ``W`` of variables with ``x^b / x_W`` in ``I``."""
    if len(b) != I.n:
        raise InputError(f"multidegree has length {len(b)}, expected {I.n}")
    if I.is_zero:
        return SimplicialComplex(())
    verts, is_face = _upper_koszul_masks(I, b)
    faces = [tuple(int(verts[t]) for t in range(len(verts)) if (m >> t) & 1)
             for m in np.flatnonzero(is_face)]
    return SimplicialComplex.from_faces(faces)


def _koszul_homology(verts, is_face, field: Field) -> dict:
    if not is_face[0]:
        return {}
    nv = len(verts)
    masks = np.flatnonzero(is_face)
    # a cone over some vertex is acyclic
    for t in range(nv):
        bit = 1 << t
        if is_face[masks | bit].all():
            return {}
    by_size = {}
    for m in masks.tolist():
        f = tuple(t for t in range(nv) if (m >> t) & 1)
        by_size.setdefault(len(f), []).append(f)
    return _homology_from_faces(by_size, field)


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers ``beta_{i,b}(I)`` over one field."""

    n: int
    field: Field
    entries: dict = field(hash=False)  # (i, b) -> value

    def betti_numbers(self) -> dict:
        out = {}
        for (i, _), v in self.entries.items():
            out[i] = out.get(i, 0) + v
        return dict(sorted(out.items()))

    def graded(self) -> dict:
        """``{(i, j): beta_{i,j}}`` with ``j`` the total degree."""
        out = {}
        for (i, b), v in self.entries.items():
            key = (i, sum(b))
            out[key] = out.get(key, 0) + v
        return dict(sorted(out.items()))

    @property
    def projective_dimension_quotient(self) -> int:
        """``pd(S/I) = 1 + pd(I)``; 0 for the zero ideal."""
        if not self.entries:
            return 0
        return 1 + max(i for i, _ in self.entries)

    @property
    def depth(self) -> int:
        return self.n - self.projective_dimension_quotient


def betti_table(I: MonomialIdeal, field: Field = QQ,
                max_generators: int = MAX_BETTI_GENERATORS) -> BettiTable:
    if I.is_unit:
        raise InputError("the unit ideal has no quotient to resolve")
    if len(I) > max_generators:
        raise CapabilityError(
            f"Betti table limited to {max_generators} generators (ideal has {len(I)}); "
            "use depth with the linear-quotient route for larger ideals")
    entries = {}
    if I.is_zero:
        return BettiTable(I.n, field, entries)
    for b in lcm_lattice(I):
        verts, is_face = _upper_koszul_masks(I, b)
        for d, r in _koszul_homology(verts, is_face, field).items():
            if r:
                entries[(d + 1, tuple(int(x) for x in b))] = r
    return BettiTable(I.n, field, entries)


def linear_quotient_sizes(I: MonomialIdeal):
    """Colon set sizes for an order with linear quotients, or ``None``.

    Tries decreasing reverse-lexicographic, decreasing lexicographic and
    increasing lexicographic orders.  For each generator ``u_j`` the
    ideal ``(u_1, ..., u_{j-1}) : u_j`` must be generated by variables; the
    size of that variable set is returned.
    """
    if is_equigenerated(I) is None:
        return None
    G = I.rows
    orders = [
        np.lexsort(G.T),          # last column most significant: decreasing revlex
        np.arange(len(G))[::-1],  # decreasing lex
        np.arange(len(G)),
    ]
    for order in orders:
        sizes = _linear_quotients(G[order])
        if sizes is not None:
            return sizes
    return None


def _linear_quotients(U: np.ndarray):
    sizes = [0]
    for j in range(1, len(U)):
        Q = np.maximum(U[:j] - U[j], 0)
        deg = Q.sum(axis=1)
        lin = np.zeros(U.shape[1], dtype=bool)
        lin[Q[deg == 1].argmax(axis=1)] = True
        if not (Q[:, lin] > 0).any(axis=1).all():
            return None
        sizes.append(int(lin.sum()))
    return sizes


@dataclass(frozen=True)
class DepthValue:
    value: int
    method: str  # "betti", "linear-quotients", "socle" or "trivial"
    field: Field


def depth_value(I: MonomialIdeal, field: Field = QQ, method: str = "auto") -> DepthValue:
    """``depth S/I`` with the route used to get it."""
    if I.is_unit:
        raise InputError("depth of the zero module is not defined")
    if I.is_zero:
        return DepthValue(I.n, "trivial", field)
    if method not in ("auto", "betti", "linear-quotients"):
        raise InputError(f"unknown depth method {method!r}")
    if method in ("auto", "linear-quotients"):
        sizes = linear_quotient_sizes(I)
        if sizes is not None:
            return DepthValue(I.n - 1 - max(sizes), "linear-quotients", field)
        if method == "linear-quotients":
            raise CapabilityError("no linear-quotient order found for this ideal")
    if method == "auto" and len(I) > MAX_BETTI_GENERATORS:
        # depth 0 is detected by the socle for every field
        if has_socle(I):
            return DepthValue(0, "socle", field)
    return DepthValue(betti_table(I, field).depth, "betti", field)


def depth(I: MonomialIdeal, field: Field = QQ, method: str = "auto") -> int:
    return depth_value(I, field, method).value


@dataclass(frozen=True)
class DepthFunction:
    values: tuple
    methods: tuple
    field: Field


def depth_function(I: MonomialIdeal, K: int, field: Field = QQ,
                   powers: PowerTable | None = None) -> DepthFunction:
    """``depth S/I^k`` for ``k = 1..K``."""
    if K < 1:
        raise InputError("horizon must be at least 1")
    powers = powers or PowerTable(I)
    vals = [depth_value(powers[k], field) for k in range(1, K + 1)]
    return DepthFunction(tuple(v.value for v in vals), tuple(v.method for v in vals), field)


@dataclass(frozen=True)
class StabilityIndex:
    value: int
    certified: bool
    certificate: str
    horizon: int


def dstab(I: MonomialIdeal, K: int | None = None, field: Field = QQ,
          certify_polymatroidal: bool = True, powers: PowerTable | None = None,
          function: DepthFunction | None = None) -> StabilityIndex:
    """Least ``k`` from which the depth function is constant within the horizon.

    Certified for polymatroidal ideals when ``K >= spread - 1`` and the depth
    at ``spread - 1`` equals ``n - spread``.
    """
    poly = certify_polymatroidal and is_polymatroidal(I)
    spread = analytic_spread(I) if poly else None
    if K is None:
        K = spread if poly else DEFAULT_HORIZON
    if function is None or len(function.values) < K:
        function = depth_function(I, K, field, powers)
    values = function.values[:K]
    value = first_constant_tail(values)
    if poly and K >= spread - 1:
        at = values[spread - 2] if spread >= 2 else None
        if spread < 2 or at == I.n - spread:
            return StabilityIndex(value, True,
                                  f"polymatroidal: dstab < analytic spread = {spread}, "
                                  f"depth at power {max(spread - 1, 1)} is n - spread", K)
    return StabilityIndex(value, False, f"within horizon {K}", K)


def has_linear_resolution(I: MonomialIdeal, field: Field = QQ) -> bool:
    """True iff ``beta_{i,b} = 0`` whenever ``|b| != d + i``.

    Ideals not generated in one degree return False.  Linear quotients in one
    degree imply a linear resolution; otherwise the Betti table decides.
    """
    d = is_equigenerated(I)
    if d is None:
        return False
    if linear_quotient_sizes(I) is not None:
        return True
    table = betti_table(I, field)
    return all(sum(b) == d + i for (i, b) in table.entries)
