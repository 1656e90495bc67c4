import numpy as np
import pytest
from conftest import ranks_of
from scipy.stats import spearmanr

from corank import (
    InputError,
    MappingPair,
    coranking_matrix,
    gen_random_points,
    gen_swapped_row,
    gen_swiss_roll,
    geodesic_distances,
    pairwise_distances,
    tear_strip,
)


def test_swapped_row_n8():
    pair = gen_swapped_row(8)
    order = "".join("abcdefgh"[i] for i in np.argsort(pair.low[:, 0]))
    assert order == "badcfehg"
    np.testing.assert_array_equal(pair.high[:, 0], np.arange(8))


def test_swapped_row_n2_perfect():
    pair = gen_swapped_row(2)
    np.testing.assert_array_equal(ranks_of(pair.high), ranks_of(pair.low))


@pytest.mark.parametrize("n", [0, 3, 7])
def test_swapped_row_rejects_odd(n):
    with pytest.raises(InputError):
        gen_swapped_row(n)


def test_swapped_row_twice_is_identity():
    pair = gen_swapped_row(20)
    back = (pair.low[:, 0].astype(int) ^ 1).astype(float)[:, None]
    q = coranking_matrix(ranks_of(pair.high), ranks_of(back))
    assert np.array_equal(q, np.diag(np.diag(q)))


def test_mapping_pair_lengths():
    with pytest.raises(InputError):
        MappingPair(np.zeros((3, 1)), np.zeros((4, 1)))


def test_swiss_roll_parameterization():
    high, low = gen_swiss_roll(300, seed=1)
    t = np.hypot(high[:, 0], high[:, 2])
    assert np.all((t >= 1.5 * np.pi - 1e-9) & (t <= 4.5 * np.pi + 1e-9))
    np.testing.assert_allclose(np.arctan2(high[:, 2], high[:, 0]), np.angle(np.exp(1j * t)), atol=1e-9)
    arc = 0.5 * (t * np.sqrt(1 + t * t) + np.arcsinh(t))
    np.testing.assert_allclose(low[:, 0], arc, rtol=1e-12)
    np.testing.assert_array_equal(low[:, 1], high[:, 1])
    assert np.all((high[:, 1] >= 0) & (high[:, 1] <= 21))


def test_swiss_roll_uniform_in_arc_length():
    _, low = gen_swiss_roll(20000, seed=2)
    s = low[:, 0]
    hist, _ = np.histogram(s, bins=10, range=(s.min(), s.max()))
    assert hist.min() > 0.9 * hist.mean()


def test_swiss_roll_deterministic():
    a = gen_swiss_roll(100, seed=5)
    b = gen_swiss_roll(100, seed=5)
    assert all(np.array_equal(x, y) for x, y in zip(a, b))


def test_swiss_roll_bad_range():
    with pytest.raises(InputError):
        gen_swiss_roll(10, t_min=3.0, t_max=2.0)
    with pytest.raises(InputError):
        gen_swiss_roll(10, height=0)


def test_swiss_roll_geodesic_correlation_grows_with_n():
    def corr(n):
        high, low = gen_swiss_roll(n, seed=0)
        g = geodesic_distances(high, 10)
        e = pairwise_distances(low)
        iu = np.triu_indices(n, 1)
        return spearmanr(g[iu], e[iu]).statistic

    small, large = corr(100), corr(500)
    # at n=100 the 10-NN graph still shortcuts between loops of the spiral
    assert large > small
    assert large > 0.9


def test_tear_strip():
    low = np.array([[0.0, 0], [1, 0], [2, 0], [3, 0]])
    torn, moved = tear_strip(low, 10.0)
    np.testing.assert_array_equal(moved, [False, False, True, True])
    np.testing.assert_array_equal(torn[:, 0], [0, 1, 12, 13])


def test_random_points():
    a = gen_random_points(50, 4, seed=9)
    assert np.array_equal(a, gen_random_points(50, 4, seed=9))
    assert a.shape == (50, 4) and np.all((a >= 0) & (a <= 1))
    assert gen_random_points(2, 7).shape == (2, 7)
