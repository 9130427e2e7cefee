import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import gl_weight_dimension, sympy_rank
from reference_tables import TABLES
from siginvariants.descriptors import exact_det
from siginvariants.free_algebra import Polynomial, parse_compact
from siginvariants.gl import (
    check_gl_exact,
    det_indicator,
    gl_basis,
    gl_invariant,
    permutation_sign,
    verify_gl_invariance,
)
from siginvariants.tableaux import RectTableau

PUBLISHED = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)]


@pytest.mark.parametrize("d,w", PUBLISHED)
def test_reproduces_published_tables_in_order(d, w):
    expected = [parse_compact(t, d) for t in TABLES[f"gl_{d}_{w}"]]
    assert [b.polynomial for b in gl_basis(d, w)] == expected


@pytest.mark.parametrize("d,w", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)])
def test_dimension_matches_lie_algebra_null_space(d, w):
    basis = [b.polynomial for b in gl_basis(d, w)]
    assert len(basis) == gl_weight_dimension(d, w)
    assert sympy_rank(basis) == len(basis)


def test_permutation_sign_and_det_indicator():
    assert permutation_sign((1, 2, 3)) == 1
    assert permutation_sign((2, 1, 3)) == -1
    assert permutation_sign((2, 3, 1)) == 1
    assert det_indicator((2, 1)) == -1
    assert det_indicator((1, 1)) == 0
    assert det_indicator((1, 3)) == 0


def test_word_coefficients_are_products_of_column_signs():
    t = RectTableau.from_rows([(1, 3), (2, 4)])
    phi = gl_invariant(t)
    # columns {1,2} and {3,4}
    assert phi[(2, 1, 1, 2)] == -1
    assert phi[(2, 1, 2, 1)] == 1
    assert phi[(1, 1, 2, 2)] == 0
    assert len(phi) == 4


def test_descriptor_records_tableau():
    b = gl_basis(2, 2)[1]
    assert b.generator == {"tableau": [[1, 2], [3, 4]]}
    assert (b.group, b.dim, b.level, b.weight) == ("GL", 2, 4, 2)


@pytest.mark.parametrize("d,w", [(2, 1), (2, 2), (3, 1), (2, 3)])
def test_numeric_and_exact_equivariance(d, w):
    for i, b in enumerate(gl_basis(d, w)):
        rep = verify_gl_invariance(b, trials=20, seed=i)
        assert rep.passed, rep.summary()


square_int = st.integers(2, 3).flatmap(
    lambda d: st.lists(st.integers(-3, 3), min_size=d * d, max_size=d * d).map(
        lambda xs: [xs[i * d : (i + 1) * d] for i in range(d)]
    )
)


@given(square_int)
def test_exact_action_scales_by_det_power(A):
    d = len(A)
    for b in gl_basis(d, 1):
        assert check_gl_exact(b.polynomial, A, 1)
    if d == 2:
        for b in gl_basis(2, 2):
            assert check_gl_exact(b.polynomial, A, 2)


def test_negative_controls():
    mono = Polynomial.monomial((1, 2), 2)
    rep = verify_gl_invariance(mono, weight=1, trials=5)
    assert not rep.passed and rep.witness is not None
    # right polynomial, wrong weight
    assert not verify_gl_invariance(gl_basis(2, 1)[0], weight=2, trials=5).passed


def test_weight_is_required_for_bare_polynomials():
    with pytest.raises(ValueError):
        verify_gl_invariance(Polynomial.monomial((1, 2), 2))


def test_exact_det():
    assert exact_det([[1, 2], [3, 4]]) == -2
    assert exact_det([[0, 1, 0], [1, 0, 0], [0, 0, 1]]) == -1
    assert exact_det([[1, 2], [2, 4]]) == 0
    rng = np.random.default_rng(3)
    A = rng.integers(-4, 5, (4, 4))
    assert exact_det(A.tolist()) == round(np.linalg.det(A))
