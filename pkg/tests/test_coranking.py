import numpy as np
import pytest
from conftest import random_instance, ranks_of
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import coranking_by_loop

from corank import (
    InputError,
    block_counts,
    coranking_matrix,
    gen_swapped_row,
    min_error_histogram,
)


def test_fig4(fig4):
    np.testing.assert_array_equal(coranking_matrix(*fig4), [[2, 1], [1, 2]])


def test_perfect_mapping_diagonal(fig4):
    q = coranking_matrix(fig4[0], fig4[0])
    np.testing.assert_array_equal(q, 3 * np.eye(2, dtype=int))


def test_swapped_row_band():
    pair = gen_swapped_row(20)
    q = coranking_matrix(ranks_of(pair.high), ranks_of(pair.low))
    k, l = np.indices(q.shape)
    assert not q[np.abs(k - l) > 4].any()
    assert q[np.abs(k - l) == 4].any()


def test_size_mismatch():
    with pytest.raises(InputError):
        coranking_matrix(np.zeros((3, 3), int), np.zeros((4, 4), int))


@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 40))
@settings(max_examples=40, deadline=None)
def test_row_column_sums(seed, n):
    x, y = random_instance(seed, n)
    q = coranking_matrix(ranks_of(x), ranks_of(y))
    assert q.shape == (n - 1, n - 1)
    assert np.all(q.sum(axis=0) == n) and np.all(q.sum(axis=1) == n)
    assert q.sum() == n * (n - 1)


@pytest.mark.parametrize("seed", range(8))
def test_matches_loop_oracle(seed):
    x, y = random_instance(seed)
    rho, r = ranks_of(x), ranks_of(y)
    np.testing.assert_array_equal(coranking_matrix(rho, r), coranking_by_loop(rho, r))


def test_block_counts_fig4(fig4):
    b = block_counts(coranking_matrix(*fig4), 1)
    assert (b.preserved, b.hard_intrusions, b.hard_extrusions) == (2, 1, 1)
    assert b.mild_intrusions == b.mild_extrusions == 0
    assert b.outside == 0 and b.diagonal_beyond == 2


def test_block_counts_intrusion_side():
    # one pair with high rank 3 and low rank 1 is an intrusion
    q = np.zeros((4, 4), dtype=int)
    q[2, 0] = 1
    assert block_counts(q, 2).hard_intrusions == 1
    assert block_counts(q, 3).mild_intrusions == 1


def test_block_counts_full_K():
    x, y = random_instance(5, 20)
    b = block_counts(coranking_matrix(ranks_of(x), ranks_of(y)), 19)
    assert b.hard_intrusions == b.hard_extrusions == 0


def test_block_counts_perfect():
    x, _ = random_instance(6, 15)
    rho = ranks_of(x)
    b = block_counts(coranking_matrix(rho, rho), 5)
    assert b.preserved == 5 * 15 and b.diagonal_beyond == 9 * 15
    assert b.mild_intrusions == b.mild_extrusions == b.hard_intrusions == b.hard_extrusions == b.outside == 0


@given(seed=st.integers(0, 2**32 - 1), n=st.integers(3, 30), data=st.data())
@settings(max_examples=30, deadline=None)
def test_block_counts_total(seed, n, data):
    x, y = random_instance(seed, n)
    K = data.draw(st.integers(1, n - 1))
    b = block_counts(coranking_matrix(ranks_of(x), ranks_of(y)), K)
    assert b.total() == n * (n - 1)


def test_block_counts_K_range(fig4):
    with pytest.raises(InputError):
        block_counts(coranking_matrix(*fig4), 3)


def test_histogram_fig4(fig4):
    h = min_error_histogram(*fig4)
    # h[m - 1, e]
    np.testing.assert_array_equal(h, [[2, 2], [2, 0]])


def test_histogram_perfect():
    x, _ = random_instance(7, 12)
    rho = ranks_of(x)
    h = min_error_histogram(rho, rho)
    assert np.all(h[:, 0] == 12) and not h[:, 1:].any()


@pytest.mark.parametrize("seed", range(6))
def test_histogram_properties(seed):
    x, y = random_instance(seed)
    rho, r = ranks_of(x), ranks_of(y)
    n = len(rho)
    h = min_error_histogram(rho, r)
    assert h.sum() == n * (n - 1)
    m, e = np.indices(h.shape)
    assert not h[(m + 1) + e > n - 1].any()
    off = ~np.eye(n, dtype=bool)
    lo = np.minimum(rho, r)[off]
    np.testing.assert_array_equal(h.sum(axis=1), np.bincount(lo, minlength=n)[1:])
