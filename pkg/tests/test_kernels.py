import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from ideal_persistence import kernels
from ideal_persistence.monomial import MonomialIdeal, canonical_rows

BACKENDS = sorted(kernels.backends())


def matrices(rows=(0, 12), cols=(1, 4), hi=3):
    return st.integers(*cols).flatmap(lambda n: st.lists(
        st.lists(st.integers(0, hi), min_size=n, max_size=n), min_size=rows[0], max_size=rows[1]
    ).map(lambda r, n=n: np.array(r, dtype=np.int64).reshape(len(r), n)))


def test_compiled_backend_is_built():
    # the package is expected to be installed with the extension
    assert "cython" in BACKENDS


@pytest.mark.parametrize("name", BACKENDS)
def test_member_mask_empty_inputs(name):
    impl = kernels.backends()[name]
    e = np.zeros((0, 3), dtype=np.int64)
    one = np.ones((1, 3), dtype=np.int64)
    assert impl.member_mask(e, one).tolist() == [False]
    assert impl.member_mask(one, e).tolist() == []


@given(matrices(), matrices())
def test_member_mask_parity(gens, cands):
    n = min(gens.shape[1], cands.shape[1])
    g = np.ascontiguousarray(gens[:, :n])
    c = np.ascontiguousarray(cands[:, :n])
    expect = [oracles.in_ideal([tuple(r) for r in g.tolist()], tuple(u)) for u in c.tolist()]
    for name in BACKENDS:
        assert kernels.backends()[name].member_mask(g, c).tolist() == expect


@given(matrices(rows=(1, 15)))
def test_minimal_mask_parity(rows):
    rows = canonical_rows(rows)
    expect = set(oracles.minimal_generators(map(tuple, rows.tolist())))
    for name in BACKENDS:
        keep = kernels.backends()[name].minimal_mask(rows)
        assert set(map(tuple, rows[keep].tolist())) == expect


@given(matrices(rows=(0, 15)))
def test_reduce_rows_parity(rows):
    expect = set(oracles.minimal_generators(map(tuple, rows.tolist())))
    for name in BACKENDS:
        got = kernels.backends()[name].reduce_rows(np.ascontiguousarray(rows))
        assert set(map(tuple, got.tolist())) == expect
        assert len(got) == len(expect)


@given(matrices(rows=(0, 8), cols=(1, 8), hi=9), st.sampled_from([2, 3, 7, 2147483647]))
def test_rank_mod_p_parity(mat, p):
    mat = mat - 4
    expect = oracles.rank_mod(mat.tolist(), p) if len(mat) else 0
    for name in BACKENDS:
        assert kernels.backends()[name].rank_mod_p(mat, p) == expect


def test_use_backend_restores_state():
    before = kernels.BACKEND
    with kernels.use_backend("python") as impl:
        assert kernels.BACKEND == "python"
        assert kernels.member_mask is impl.member_mask
    assert kernels.BACKEND == before
    with pytest.raises(ValueError):
        with kernels.use_backend("fortran"):
            pass


def test_high_level_results_agree_across_backends(rp2):
    from ideal_persistence.persistence import ratliff_check
    from ideal_persistence.primes import socle_basis
    from ideal_persistence.monomial import power
    results = {}
    for name in BACKENDS:
        with kernels.use_backend(name):
            results[name] = (power(rp2, 3).generators, ratliff_check(rp2, 3),
                             socle_basis(power(rp2, 2)))
    assert len({repr(v) for v in results.values()}) == 1


def test_environment_variable_forces_fallback():
    env = dict(os.environ, IDEAL_PERSISTENCE_KERNELS="python")
    out = subprocess.run([sys.executable, "-c", "from ideal_persistence import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_rows_of_read_only_arrays_accepted(rp2):
    # ideal rows are read-only views; the compiled kernels take const memoryviews
    for name in BACKENDS:
        impl = kernels.backends()[name]
        assert impl.member_mask(rp2.rows, rp2.rows).all()
        assert impl.minimal_mask(rp2.rows).all()
