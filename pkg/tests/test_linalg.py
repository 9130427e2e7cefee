from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from oracles import sympy_rank
from siginvariants.free_algebra import Polynomial
from siginvariants.linalg import coefficient_matrix, independent_subset, polynomial_rank, rank, solve_in_span

words = st.lists(st.integers(1, 2), min_size=1, max_size=3).map(tuple)
polys = st.lists(st.tuples(words, st.integers(-3, 3)), max_size=4).map(lambda t: Polynomial(t, 2))


@given(st.lists(polys, max_size=6))
def test_rank_matches_sympy(ps):
    assert polynomial_rank(ps) == sympy_rank(ps)


@given(st.lists(polys, max_size=6))
def test_independent_subset_has_full_rank(ps):
    keep = independent_subset(ps)
    assert len(keep) == polynomial_rank(ps)
    assert sympy_rank([ps[i] for i in keep]) == len(keep)


@given(st.lists(polys, min_size=1, max_size=4), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_solve_recovers_a_combination(basis, cs):
    target = Polynomial.zero(2)
    for c, b in zip(cs, basis):
        target = target + b * c
    coords, residual = solve_in_span(target, basis)
    assert coords is not None and not residual
    rebuilt = Polynomial.zero(2)
    for c, b in zip(coords, basis):
        rebuilt = rebuilt + b * c
    assert rebuilt == target


def test_solve_outside_span():
    basis = [Polynomial([((1, 2), 1), ((2, 1), -1)], 2)]
    coords, residual = solve_in_span(Polynomial.monomial((1, 2), 2), basis)
    assert coords is None and residual


def test_dense_rank_and_matrix():
    assert rank([[1, 2], [2, 4], [0, 1]]) == 2
    rows, ws = coefficient_matrix([Polynomial([((2,), 1), ((1, 1), Fraction(1, 2))], 2)])
    assert ws == [(2,), (1, 1)] and rows == [[1, Fraction(1, 2)]]
