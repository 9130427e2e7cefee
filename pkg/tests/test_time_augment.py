from math import comb

import numpy as np
import pytest

from oracles import sympy_rank
from siginvariants.build import from_generator
from siginvariants.descriptors import InvariantDescriptor
from siginvariants.free_algebra import Polynomial, format_polynomial, insert_z, pair, remove_zero, with_alphabet
from siginvariants.gl import gl_basis
from siginvariants.linalg import polynomial_rank
from siginvariants.signature import signature, time_augment_path
from siginvariants.time_augment import (
    augmented_basis,
    augmented_count,
    enumerate_compositions,
    verify_augmented_invariance,
    verify_gl0_invariance,
)


def test_compositions():
    assert enumerate_compositions(0, 3) == [(0, 0, 0)]
    assert enumerate_compositions(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert len(enumerate_compositions(2, 3)) == 6
    for total in range(5):
        for slots in range(1, 5):
            comps = enumerate_compositions(total, slots)
            assert len(comps) == comb(total + slots - 1, slots - 1)
            assert comps == sorted(comps)
            assert all(sum(c) == total for c in comps)
    with pytest.raises(ValueError):
        enumerate_compositions(-1, 2)


def test_planar_weight_one_level_three():
    basis = augmented_basis("GL", 2, 3, weight=1)
    texts = {format_polynomial(b.polynomial) for b in basis}
    assert texts == {"+1*[0,1,2] -1*[0,2,1]", "+1*[1,0,2] -1*[2,0,1]", "+1*[1,2,0] -1*[2,1,0]"}
    assert all(b.group == "GL0" and b.level == 3 and b.weight == 1 for b in basis)


def test_level_equal_to_base_level_gives_base_basis():
    (b,) = augmented_basis("GL", 2, 2, weight=1)
    assert remove_zero(b.polynomial) == with_alphabet(gl_basis(2, 1)[0].polynomial, augmented=True)
    assert b.polynomial == with_alphabet(gl_basis(2, 1)[0].polynomial, augmented=True)


def test_no_admissible_levels():
    assert augmented_basis("GL", 2, 1, weight=1) == []
    assert augmented_basis("GL", 3, 5, weight=2) == []


def test_pure_time_word_for_so_and_perm():
    for g in ("SO", "PERM"):
        first = augmented_basis(g, 2, 3)[0]
        assert first.polynomial == Polynomial.monomial((0, 0, 0), 2, augmented=True)


@pytest.mark.parametrize("group,d,w", [("GL", 2, 1), ("GL", 2, 2), ("GL", 3, 1), ("SO", 2, None), ("SO", 3, None), ("PERM", 2, None)])
def test_round_trip_independence_and_count(group, d, w):
    for m in range(0, 6):
        basis = augmented_basis(group, d, m, weight=w)
        assert len(basis) == augmented_count(group, d, m, weight=w)
        for b in basis:
            base = from_generator(group, d, b.generator["base"])
            assert remove_zero(b.polynomial) == with_alphabet(base, augmented=True)
            assert insert_z(base, b.generator["z"]) == b.polynomial
        polys = [b.polynomial for b in basis]
        assert polynomial_rank(polys) == len(polys)


@pytest.mark.parametrize("d,w,m", [(2, 1, 2), (2, 1, 5), (2, 2, 6), (3, 1, 5)])
def test_gl_count_is_base_size_times_binomial(d, w, m):
    assert len(augmented_basis("GL", d, m, weight=w)) == len(gl_basis(d, w)) * comb(m, w * d)


def test_rank_against_sympy():
    polys = [b.polynomial for b in augmented_basis("SO", 2, 4)]
    assert sympy_rank(polys) == len(polys)


@pytest.mark.parametrize("group,d,m,w", [("GL", 2, 3, 1), ("GL", 2, 5, 2), ("SO", 2, 3, None), ("SO", 3, 3, None), ("PERM", 3, 2, None)])
def test_invariance(group, d, m, w):
    for i, b in enumerate(augmented_basis(group, d, m, weight=w)):
        rep = verify_augmented_invariance(b, trials=10, seed=i)
        assert rep.passed, rep.summary()


def test_gl0_scaling_and_negative_control():
    b = next(x for x in augmented_basis("GL", 2, 3, weight=1) if x.generator["z"] == [0, 1, 0])
    assert verify_gl0_invariance(b, matrices=[[[0, -1], [1, 0]]]).passed
    assert verify_gl0_invariance(b, matrices=[[[2, 0], [0, 1]]]).passed
    X = np.array([[0.0, 0.0], [1.0, 0.5], [0.2, 2.0], [1.5, 1.0]])
    A = np.diag([2.0, 1.0])
    scaled = pair(signature(time_augment_path(X @ A.T), 3, augmented=True), b.polynomial)
    plain = pair(signature(time_augment_path(X), 3, augmented=True), b.polynomial)
    assert scaled == pytest.approx(2 * plain, rel=1e-12)
    bad = InvariantDescriptor("GL0", 2, 3, Polynomial.monomial((0, 1, 2), 2, True), {}, weight=1)
    assert not verify_gl0_invariance(bad, matrices=[[[0, 1], [1, 0]]]).passed
    with pytest.raises(ValueError):
        verify_gl0_invariance(gl_basis(2, 1)[0])


def test_gl_needs_weight():
    with pytest.raises(ValueError):
        augmented_basis("GL", 2, 3)
    with pytest.raises(ValueError):
        augmented_basis("XX", 2, 3)
