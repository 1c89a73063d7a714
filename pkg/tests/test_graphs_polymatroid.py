import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import squarefree
from ideal_persistence.errors import CapabilityError, InputError
from ideal_persistence.graphs import SimpleGraph, common_neighbor_edges, edge_ideal
from ideal_persistence.localization import MonomialPrime
from ideal_persistence.monomial import MonomialIdeal, is_equigenerated, power
from ideal_persistence.polymatroid import (BaseSet, analytic_spread, analytic_spread_via_gamma,
                                           distance, exchange_check, graphic_matroid_ideal,
                                           graphic_spread, is_polymatroidal,
                                           localization_spread_check, strip_principal_factors,
                                           transversal_gamma_structure, transversal_ideal,
                                           veronese_type_ideal)
from ideal_persistence.relation_graph import (RelationGraph, components, depth_upper_bounds, dot_export,
                                              linear_relation_graph, ordered_spanning_forest,
                                              socle_witness)


@st.composite
def graphs(draw, n_min=2, n_max=7, e_max=10):
    n = draw(st.integers(n_min, n_max))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), max_size=e_max, unique=True))
    return SimpleGraph(n, edges)


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


# graphs

def test_graph_construction():
    G = SimpleGraph(3, [(1, 0), (0, 1), (2, 1)])
    assert G.edges == ((0, 1), (1, 2))
    with pytest.raises(InputError):
        SimpleGraph(3, [(1, 1)])
    with pytest.raises(InputError):
        SimpleGraph(3, [(0, 3)])
    with pytest.raises(InputError):
        SimpleGraph.cycle(2)
    assert SimpleGraph.complete(4).component_count() == 1
    assert SimpleGraph(4, [(0, 1)]).component_count() == 3


def test_square_bridge_triangle_blocks(square_bridge_triangle_graph):
    assert square_bridge_triangle_graph.biconnected_components() == [[0, 1, 2, 3], [4], [5, 6, 7]]


@given(graphs())
def test_components_match_networkx(G):
    H = to_nx(G)
    assert G.component_count() == nx.number_connected_components(H)
    index = {e: k for k, e in enumerate(G.edges)}
    expect = sorted(sorted(index[(min(a, b), max(a, b))] for a, b in comp)
                    for comp in nx.biconnected_component_edges(H))
    assert G.biconnected_components() == expect


# relation graph

def test_cycle_relation_graphs(c5, c6):
    G5 = linear_relation_graph(c5)
    assert G5.sorted_edges() == sorted((i, (i + 2) % 5) if i < (i + 2) % 5 else ((i + 2) % 5, i)
                                       for i in range(5))
    assert G5.verify_witnesses()
    c = components(linear_relation_graph(c6))
    assert (c.r, c.s) == (6, 2)
    assert c.parts == ((0, 2, 4), (1, 3, 5))


def test_relation_graph_of_rp2_and_principal(rp2):
    assert linear_relation_graph(MonomialIdeal(3, [(1, 1, 0)])).edges == frozenset()
    G = linear_relation_graph(rp2)
    assert G.verify_witnesses() and len(G.vertices) == 6


@given(graphs(n_min=3, n_max=7))
def test_relation_graph_of_edge_ideal_is_common_neighbor_graph(G):
    if not G.edges:
        return
    assert linear_relation_graph(edge_ideal(G)).edges == common_neighbor_edges(G)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.tuples(*[st.integers(0, 3)] * n), min_size=1, max_size=6).map(lambda g, n=n: MonomialIdeal(n, g))))
def test_relation_graph_against_pairwise_search(I):
    expect = set()
    for u, v in itertools.combinations(I.generators, 2):
        diff = [a - b for a, b in zip(u, v)]
        if sorted(diff) == [-1] + [0] * (I.n - 2) + [1]:
            i, j = diff.index(-1), diff.index(1)
            expect.add((min(i, j), max(i, j)))
    G = linear_relation_graph(I)
    assert G.edges == expect and G.verify_witnesses()


def test_tampered_witness_detected():
    G = RelationGraph(2, frozenset({(0, 1)}), {(0, 1): ((1, 0), (1, 0))})
    assert not G.verify_witnesses()


def test_depth_bounds_for_c5(c5):
    bounds = depth_upper_bounds(c5)
    assert bounds == [(1, 3), (2, 2), (3, 1), (4, 0)]
    from ideal_persistence.homology import depth
    for t, b in bounds:
        assert depth(power(c5, t)) <= b
    with pytest.raises(CapabilityError):
        depth_upper_bounds(MonomialIdeal(2, [(1, 0), (0, 2)]))


def test_socle_witness_c5(c5):
    w = socle_witness(c5)
    assert w.monomial == (1, 2, 2, 1, 1) and w.format() == "x1*x2^2*x3^2*x4*x5"
    assert w.verified and w.power == 4
    assert w.forest.has_free_vertex_property()
    from ideal_persistence.monomial import contains, mono_mul, variable
    J = power(c5, 4)
    assert not contains(J, w.monomial)
    assert all(contains(J, mono_mul(w.monomial, variable(5, i))) for i in range(5))


def test_socle_witness_requires_connected_graph(c6):
    with pytest.raises(CapabilityError):
        socle_witness(c6)
    with pytest.raises(CapabilityError):
        socle_witness(MonomialIdeal(3, [(1, 1, 0)]))


@pytest.mark.parametrize("I", [veronese_type_ideal(3, 2, [1, 1, 1]), power(MonomialIdeal.maximal(3), 2),
                               veronese_type_ideal(4, 2, [1, 1, 1, 1])], ids=["v3", "m2", "v4"])
def test_socle_witness_on_connected_graphs(I):
    w = socle_witness(I)
    assert w.verified
    assert w.monomial in {tuple(s) for s in oracles.brute_socle(power(I, I.n - 1).generators,
                                                                tuple(I.n - 1 + 2 for _ in range(I.n)))}


@given(graphs(n_min=3, n_max=6))
def test_spanning_forest_property(G):
    R = linear_relation_graph(edge_ideal(G)) if G.edges else None
    if R is None or not R.edges:
        return
    F = ordered_spanning_forest(R)
    c = components(R)
    assert len(F.edges) == c.r - c.s and F.has_free_vertex_property()
    for (i, j), u, v in zip(F.edges, F.multipliers, F.partners):
        xj_u = list(u)
        xj_u[j] += 1
        xi_v = list(v)
        xi_v[i] += 1
        assert xj_u == xi_v


def test_dot_export(c5):
    text = dot_export(linear_relation_graph(c5))
    assert text.startswith("graph relation_graph {\n") and text.endswith("}\n")
    assert '"x1" -- "x3";' in text and text.count("--") == 5
    assert dot_export(linear_relation_graph(c5)) == text
    labelled = dot_export(linear_relation_graph(c5), label_witnesses=True)
    assert "label=" in labelled


# polymatroids

def test_distance_and_base_sets():
    assert distance((2, 0, 1), (0, 2, 1)) == 2
    with pytest.raises(InputError):
        BaseSet.from_vectors([(1, 0), (1, 1)])
    with pytest.raises(InputError):
        BaseSet.from_vectors([])


def test_exchange_examples(c5):
    assert exchange_check(BaseSet.from_vectors([(1, 1, 0), (0, 1, 1), (1, 0, 1)]))
    res = exchange_check(BaseSet.of_ideal(squarefree(4, ["12", "34"])))
    assert not res and res.counterexample is not None
    assert not is_polymatroidal(c5)
    assert not is_polymatroidal(MonomialIdeal(2, [(1, 0), (0, 2)]))


def brute_exchange(bases):
    bases = set(bases)
    for a, b in itertools.product(bases, repeat=2):
        for i in range(len(a)):
            if a[i] > b[i] and not any(
                    b[j] > a[j] and tuple(a[t] - (t == i) + (t == j) for t in range(len(a))) in bases
                    for j in range(len(a))):
                return False
    return True


@given(st.integers(2, 4), st.integers(1, 3), st.data())
def test_exchange_matches_brute_force(n, d, data):
    pool = oracles.compositions(n, d, (d,) * n)
    chosen = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=6, unique=True))
    assert bool(exchange_check(BaseSet.from_vectors(chosen))) == brute_exchange(chosen)


@pytest.mark.parametrize("n,d,c", [(3, 2, [1, 1, 1]), (4, 3, [1, 1, 2, 2]), (5, 3, [1] * 5), (4, 4, [2] * 4)])
def test_veronese_type(n, d, c):
    I = veronese_type_ideal(n, d, c)
    assert sorted(I.generators) == oracles.compositions(n, d, c)
    assert is_polymatroidal(I)
    assert analytic_spread(I) == analytic_spread_via_gamma(I).value
    # all variables are linked, so the spread is n unless the ideal is principal
    assert analytic_spread(I) == (n if len(I) > 1 else 1)


def test_veronese_errors():
    with pytest.raises(InputError):
        veronese_type_ideal(3, 2, [1, 1])
    with pytest.raises(InputError):
        veronese_type_ideal(2, 5, [1, 1])


def test_transversal_ideals():
    I = transversal_ideal([[0, 1], [1, 2]], 3)
    assert set(I.generators) == set(oracles.brute_product([(1, 0, 0), (0, 1, 0)], [(0, 1, 0), (0, 0, 1)]))
    assert is_polymatroidal(I)
    with pytest.raises(InputError):
        transversal_ideal([])
    with pytest.raises(InputError):
        transversal_ideal([[0], []])
    assert strip_principal_factors([[2], [0, 1], [2]]) == ({2: 2}, [[0, 1]])


@pytest.mark.parametrize("families,n", [([[0, 1], [1, 2]], 3), ([[0, 1], [2, 3]], 4),
                                        ([[0], [0, 1], [1, 2, 3], [3, 4]], 5),
                                        ([[0, 1], [1, 2], [2, 3], [3, 4]], 5)])
def test_transversal_gamma_prediction(families, n):
    I = transversal_ideal(families, n)
    G = linear_relation_graph(I)
    assert G.edges == transversal_gamma_structure(families, n).edges
    assert analytic_spread(I) == analytic_spread_via_gamma(I).value


def test_square_bridge_triangle_graphic_matroid(square_bridge_triangle_graph, square_bridge_triangle):
    assert graphic_matroid_ideal(square_bridge_triangle_graph) == square_bridge_triangle
    assert len(square_bridge_triangle) == 4 * 3
    assert graphic_spread(square_bridge_triangle_graph) == 6
    assert analytic_spread(square_bridge_triangle) == 6
    v = analytic_spread_via_gamma(square_bridge_triangle)
    assert v.value == 6 and v.exact
    c = components(linear_relation_graph(square_bridge_triangle))
    assert c.parts == ((0, 1, 2, 3), (5, 6, 7))


@given(graphs(n_min=2, n_max=5, e_max=7))
def test_graphic_matroid_against_networkx(G):
    if not G.edges:
        return
    I = graphic_matroid_ideal(G)
    H = to_nx(G)
    rank = G.n - nx.number_connected_components(H)
    expect = set()
    for sub in itertools.combinations(range(len(G.edges)), rank):
        if nx.is_forest(nx.Graph([G.edges[k] for k in sub])) if sub else True:
            expect.add(tuple(int(k in sub) for k in range(len(G.edges))))
    assert set(I.generators) == expect
    assert is_polymatroidal(I)
    assert analytic_spread(I) == graphic_spread(G) == analytic_spread_via_gamma(I).value


def test_spread_guards(c5):
    assert analytic_spread(MonomialIdeal.zero(2)) == 0
    with pytest.raises(InputError):
        analytic_spread(MonomialIdeal.unit(2))
    with pytest.raises(CapabilityError):
        analytic_spread(MonomialIdeal(2, [(1, 0), (0, 2)]))
    v = analytic_spread_via_gamma(c5)
    assert not v.exact and v.value <= analytic_spread(c5)


@pytest.mark.parametrize("I", [veronese_type_ideal(4, 3, [1, 1, 2, 2]),
                               transversal_ideal([[0, 1], [1, 2], [2, 3]], 4)], ids=["veronese", "transversal"])
def test_localization_spread_bound(I):
    table = localization_spread_check(I)
    assert table.holds and table.spread == analytic_spread(I)
    assert all(v <= table.spread for _, v in table.rows)
    assert any(P == MonomialPrime.maximal(I.n) for P, _ in table.rows)


def test_localization_spread_requires_polymatroidal(c5):
    with pytest.raises(CapabilityError):
        localization_spread_check(c5)


@given(st.integers(2, 4), st.integers(1, 3), st.data())
def test_polymatroidal_powers_stay_polymatroidal(n, d, data):
    c = data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n).filter(lambda c: sum(c) >= d))
    I = veronese_type_ideal(n, d, c)
    assert is_equigenerated(power(I, 2)) == 2 * d
    assert is_polymatroidal(power(I, 2))
