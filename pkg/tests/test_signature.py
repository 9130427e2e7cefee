import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from oracles import brute_signature_coefficient
from siginvariants.free_algebra import Polynomial, apply_matrix, pair, shuffle_product
from siginvariants.signature import (
    as_path,
    chen_concat,
    default_level,
    segment_signature,
    signature,
    time_augment_path,
    transform_path,
)

finite = st.floats(-3, 3, allow_nan=False, allow_infinity=False)


def paths(dim, min_points=2, max_points=6):
    return st.integers(min_points, max_points).flatmap(lambda m: arrays(float, (m, dim), elements=finite))


def rel(a, b):
    return abs(a - b) / max(1.0, abs(a), abs(b))


def test_triangle_area_pairing():
    s = signature([(0, 0), (1, 0), (1, 1)], 2)
    assert pair(s, Polynomial([((1, 2), 1), ((2, 1), -1)], 2)) == pytest.approx(1.0, abs=1e-15)


def test_level_one_is_the_increment_and_level_zero_is_one():
    X = np.array([[1.0, 2.0], [3.0, -1.0], [0.5, 0.5]])
    s = signature(X, 3)
    assert s[()] == 1.0
    assert np.allclose(s.levels[1], X[-1] - X[0])


def test_segment_signature_is_exponential():
    s = segment_signature([2.0, -1.0], 3)
    assert s[(1, 1, 2)] == pytest.approx(2 * 2 * -1 / 6)


@pytest.mark.parametrize("dim,level", [(1, 4), (2, 3), (3, 3)])
def test_against_closed_form(dim, level):
    rng = np.random.default_rng(dim)
    X = rng.standard_normal((5, dim))
    s = signature(X, level)
    for k in range(level + 1):
        for w in itertools.product(range(1, dim + 1), repeat=k):
            assert s[w] == pytest.approx(brute_signature_coefficient(X, w), rel=1e-12, abs=1e-12)


@given(paths(2), paths(2))
def test_chen_relation(X, Y):
    Y = Y - Y[0] + X[-1]
    joined = np.vstack([X, Y[1:]])
    lhs = chen_concat(signature(X, 4), signature(Y, 4))
    rhs = signature(joined, 4)
    for a, b in zip(lhs.levels, rhs.levels):
        scale = max(1.0, np.abs(b).max())
        assert np.abs(a - b).max() <= 1e-10 * scale


@given(paths(3, max_points=4), st.data())
def test_shuffle_identity(X, data):
    u = tuple(data.draw(st.lists(st.integers(1, 3), max_size=2)))
    v = tuple(data.draw(st.lists(st.integers(1, 3), max_size=2)))
    s = signature(X, 4)
    lhs = pair(s, Polynomial.monomial(u, 3)) * pair(s, Polynomial.monomial(v, 3))
    rhs = pair(s, shuffle_product(Polynomial.monomial(u, 3), Polynomial.monomial(v, 3)))
    assert rel(lhs, rhs) <= 1e-10


@given(paths(2), arrays(float, 2, elements=finite))
def test_translation_invariance(X, shift):
    a, b = signature(X, 3), signature(X + shift, 3)
    for x, y in zip(a.levels, b.levels):
        assert np.allclose(x, y, rtol=1e-12, atol=1e-10)


def test_subdividing_a_segment_changes_nothing():
    X = np.array([[0.0, 0.0], [2.0, 1.0], [2.0, 3.0]])
    Y = np.array([[0.0, 0.0], [0.5, 0.25], [2.0, 1.0], [2.0, 3.0]])
    for a, b in zip(signature(X, 4).levels, signature(Y, 4).levels):
        assert np.allclose(a, b, rtol=1e-13, atol=1e-13)


@given(paths(2, max_points=4), arrays(float, (2, 2), elements=st.integers(-2, 2).map(float)), st.data())
def test_matrix_duality(X, A, data):
    w = tuple(data.draw(st.lists(st.integers(1, 2), min_size=1, max_size=3)))
    phi = Polynomial.monomial(w, 2)
    lhs = pair(signature(transform_path(A, X), 3), phi)
    rhs = pair(signature(X, 3), apply_matrix(A.T.astype(int).tolist(), phi))
    assert rel(lhs, rhs) <= 1e-10


def test_time_augmented_signature():
    X = time_augment_path([[0.0], [1.0], [3.0]])
    assert np.allclose(X[:, 0], [0, 0.5, 1])
    s = signature(X, 2, augmented=True)
    assert s.dim == 1 and s.augmented
    assert s[(0,)] == pytest.approx(1.0) and s[(1,)] == pytest.approx(3.0)
    with pytest.raises(ValueError):
        time_augment_path([[0.0], [1.0]], times=[0.0])


def test_single_point_and_repeated_points():
    s = signature([[1.0, 2.0]], 3)
    assert s[(1, 2)] == 0.0
    s2 = signature([[0, 0], [1, 0], [1, 0], [1, 1]], 2)
    assert s2[(1, 2)] == pytest.approx(1.0)


def test_input_validation():
    with pytest.raises(ValueError):
        signature([[0.0, np.nan]], 2)
    with pytest.raises(ValueError):
        signature([[0.0]], -1)
    with pytest.raises(ValueError):
        as_path(np.zeros((0, 2)))
    with pytest.raises(ValueError):
        transform_path(np.eye(3), [[0.0, 1.0]])


def test_default_level():
    assert default_level(2) == 6 and default_level(4) == 4
