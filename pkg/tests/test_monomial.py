import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from ideal_persistence.errors import InputError
from ideal_persistence.monomial import (MonomialIdeal, PowerTable, colon_excess, colon_ideal,
                                        colon_monomial, contains, contains_many, divides,
                                        equals, format_monomial, intersect, is_equigenerated,
                                        is_subideal, minimalize, mono_div, mono_gcd, mono_lcm,
                                        multiply, power, support, variable)


def ideals(n_max=4, e_max=3, g_max=5, allow_zero=False):
    """Strategy for small monomial ideals (returns (n, generator list))."""
    @st.composite
    def build(draw):
        n = draw(st.integers(1, n_max))
        k = draw(st.integers(0 if allow_zero else 1, g_max))
        gens = draw(st.lists(st.tuples(*[st.integers(0, e_max)] * n), min_size=k, max_size=k))
        return n, gens
    return build()


def is_minimal(I):
    g = I.generators
    return all(not (u != v and divides(u, v)) for u in g for v in g)


def canonical_key(u):
    return (sum(u), u)


# basic helpers

def test_monomial_helpers():
    assert mono_lcm((1, 0, 2), (0, 3, 1)) == (1, 3, 2)
    assert mono_gcd((1, 0, 2), (0, 3, 1)) == (0, 0, 1)
    assert mono_div((2, 1), (1, 1)) == (1, 0)
    with pytest.raises(InputError):
        mono_div((1, 0), (0, 1))
    assert variable(3, 1) == (0, 1, 0)
    assert format_monomial((2, 0, 1)) == "x1^2*x3"
    assert format_monomial((0, 0)) == "1"
    assert format_monomial((1, 1), ["a", "b"]) == "a*b"


def test_minimalize_examples(rp2):
    I = minimalize(2, [(2, 0), (2, 1), (0, 3)])
    assert I.generators == ((2, 0), (0, 3))
    assert minimalize(6, rp2.generators) == rp2
    assert len(rp2) == 10


def test_zero_and_unit_ideals():
    Z = minimalize(3, [])
    assert Z.is_zero and not Z.is_unit and len(Z) == 0
    U = MonomialIdeal(3, [(0, 0, 0), (1, 0, 0)])
    assert U.is_unit and U.generators == ((0, 0, 0),)
    assert not contains(Z, (5, 5, 5))
    assert contains(U, (0, 0, 0))


def test_mismatched_lengths_rejected():
    with pytest.raises(InputError):
        MonomialIdeal(2, [(1, 0), (1, 0, 0)])
    with pytest.raises(InputError):
        MonomialIdeal(2, [(-1, 0)])
    with pytest.raises(InputError):
        multiply(MonomialIdeal(2, [(1, 0)]), MonomialIdeal(3, [(1, 0, 0)]))


def test_contains_examples(rp2):
    assert contains(rp2, (1, 1, 1, 0, 0, 0))
    assert not contains(rp2, (0,) * 6)
    assert not contains(rp2, (1, 1, 0, 0, 0, 0))


def test_c5_square_has_fifteen_generators(c5):
    # all pairwise products, deduplicated and minimalized by brute force
    pairs = [tuple(a + b for a, b in zip(u, v))
             for u, v in itertools.combinations_with_replacement(c5.generators, 2)]
    expected = oracles.minimal_generators(pairs)
    assert len(expected) == 15
    P = power(c5, 2)
    assert len(P) == 15
    assert set(P.generators) == set(expected)


def test_power_conventions(rp2):
    assert power(rp2, 1) == rp2
    assert power(rp2, 0).is_unit
    assert is_equigenerated(power(rp2, 2)) == 6
    with pytest.raises(InputError):
        power(rp2, -1)
    assert rp2 ** 2 == power(rp2, 2)


def test_power_table_memoizes(c5):
    T = PowerTable(c5)
    assert T[3] == power(c5, 3)
    assert T.computed() == 3
    assert T[2] is T[2]


def test_colon_examples(rp2):
    I = MonomialIdeal(2, [(2, 0), (1, 1)])
    assert colon_monomial(I, (0, 0)) == I
    assert colon_monomial(I, (1, 0)) == MonomialIdeal(2, [(1, 0), (0, 1)])
    J = colon_monomial(power(rp2, 2), (1,) * 6)
    assert J == MonomialIdeal.maximal(6)


def test_colon_ideal_examples(rp2):
    assert not equals(colon_ideal(power(rp2, 3), rp2), power(rp2, 2))
    u = MonomialIdeal(3, [(1, 2, 0)])
    assert colon_ideal(power(u, 4), u) == power(u, 3)
    with pytest.raises(InputError):
        colon_ideal(rp2, MonomialIdeal.zero(6))


def test_intersection_examples():
    I = MonomialIdeal(3, [(2, 1, 0), (0, 1, 3)])
    assert intersect(I, MonomialIdeal.unit(3)) == I
    assert intersect(MonomialIdeal(2, [(1, 0)]), MonomialIdeal(2, [(0, 1)])) == MonomialIdeal(2, [(1, 1)])
    assert intersect(I, MonomialIdeal.zero(3)).is_zero


def test_support_and_degree(rp2):
    assert is_equigenerated(rp2) == 3
    assert support(rp2) == frozenset(range(6))
    assert is_equigenerated(MonomialIdeal(2, [(1, 0), (0, 2)])) is None
    assert support(MonomialIdeal(4, [(1, 0, 0, 0), (0, 0, 2, 0)])) == {0, 2}


def test_rows_are_read_only(rp2):
    with pytest.raises(ValueError):
        rp2.rows[0, 0] = 5


def test_colon_excess_rejects_empty_divisors(c5):
    with pytest.raises(InputError):
        colon_excess(c5, [], c5)


# property tests against the bounding-box oracle

@given(ideals())
def test_constructor_output_minimal_and_canonical(data):
    n, gens = data
    I = MonomialIdeal(n, gens)
    assert is_minimal(I)
    keys = [canonical_key(u) for u in I.generators]
    assert keys == sorted(keys)
    assert set(I.generators) == set(oracles.minimal_generators(gens))


@given(ideals(), st.data())
def test_membership_matches_divisor_scan(data, draw):
    n, gens = data
    I = MonomialIdeal(n, gens)
    u = draw.draw(st.tuples(*[st.integers(0, 4)] * n))
    assert contains(I, u) == oracles.in_ideal(gens, u)


@given(ideals(), st.data())
def test_colon_monomial_sound_on_box(data, draw):
    n, gens = data
    I = MonomialIdeal(n, gens)
    v = draw.draw(st.tuples(*[st.integers(0, 3)] * n))
    C = colon_monomial(I, v)
    for w in oracles.box((4,) * n):
        assert contains(C, w) == oracles.in_ideal(gens, tuple(a + b for a, b in zip(w, v)))


@given(ideals(), ideals())
def test_intersection_sound_on_box(d1, d2):
    n = min(d1[0], d2[0])
    g1 = [g[:n] for g in d1[1]]
    g2 = [g[:n] for g in d2[1]]
    I, J = MonomialIdeal(n, g1), MonomialIdeal(n, g2)
    K = intersect(I, J)
    assert is_minimal(K)
    for w in oracles.box((3,) * n):
        assert contains(K, w) == (oracles.in_ideal(g1, w) and oracles.in_ideal(g2, w))


@given(ideals(g_max=3), ideals(g_max=3))
def test_colon_ideal_sound_and_adjoint(d1, d2):
    n = min(d1[0], d2[0])
    I = MonomialIdeal(n, [g[:n] for g in d1[1]])
    J = MonomialIdeal(n, [g[:n] for g in d2[1]])
    C = colon_ideal(I, J)
    for w in oracles.box((3,) * n):
        expect = all(oracles.in_ideal(I.generators, tuple(a + b for a, b in zip(w, v)))
                     for v in J.generators)
        assert contains(C, w) == expect
    assert is_subideal(I, colon_ideal(multiply(I, J), J))


@given(ideals(g_max=3), st.integers(0, 2), st.integers(0, 2))
def test_power_associativity(data, a, b):
    n, gens = data
    I = MonomialIdeal(n, gens)
    assert power(I, a + b) == multiply(power(I, a), power(I, b))
    assert set(power(I, a + b).generators) == set(oracles.brute_power(I.generators, a + b, n))


@given(ideals(), ideals(g_max=3))
def test_colon_excess_matches_full_colon(d1, d2):
    n = min(d1[0], d2[0])
    I = MonomialIdeal(n, [g[:n] for g in d1[1]])
    J = MonomialIdeal(n, [g[:n] for g in d2[1]])
    B = I
    full = colon_ideal(I, J)
    excess = colon_excess(I, J.generators, B)
    expected = sorted(u for u in full.generators if not contains(B, u))
    assert sorted(map(tuple, excess.tolist())) == expected


@given(ideals(allow_zero=True))
def test_contains_many_agrees_with_contains(data):
    n, gens = data
    I = MonomialIdeal(n, gens)
    cands = np.array(list(oracles.box((2,) * n)), dtype=np.int64)
    mask = contains_many(I, cands)
    assert mask.tolist() == [contains(I, tuple(c)) for c in cands.tolist()]
