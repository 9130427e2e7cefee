"""Independent reference computations used by the tests.

None of these reuse the library's algorithms: signatures come from the
closed form for piecewise-linear paths, dimensions of invariant spaces from
Lie algebra null spaces, counts from recurrences.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np
import sympy
from sympy.combinatorics import Permutation


def brute_signature_coefficient(points, word) -> float:
    """Coefficient of ``word`` (letters 1..d) in the signature of the polyline.

    Sum over weakly increasing assignments of word positions to segments; a
    block of length L on a segment with increment q contributes prod q / L!.
    """
    pts = np.asarray(points, dtype=float)
    incs = np.diff(pts, axis=0)
    k = len(word)
    if k == 0:
        return 1.0
    total = 0.0
    for assign in itertools.combinations_with_replacement(range(len(incs)), k):
        term = 1.0
        for seg, group in itertools.groupby(range(k), key=lambda i: assign[i]):
            idx = list(group)
            for i in idx:
                term *= incs[seg][word[i] - 1]
            term /= factorial(len(idx))
        total += term
    return total


@lru_cache(maxsize=None)
def standard_tableaux_count(shape: tuple) -> int:
    """Number of standard tableaux of a partition shape, by removing the
    cell holding the largest entry (a corner) recursively."""
    if sum(shape) == 0:
        return 1
    total = 0
    for i, r in enumerate(shape):
        if r and (i + 1 == len(shape) or shape[i + 1] < r):
            total += standard_tableaux_count(shape[:i] + (r - 1,) + shape[i + 1 :])
    return total


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _derivation(X, n):
    """Action of the matrix X on the n-fold tensor power (as a Lie algebra)."""
    d = X.shape[0]
    out = np.zeros((d**n, d**n))
    eye = np.eye(d)
    for pos in range(n):
        factors = [eye] * n
        factors[pos] = X
        m = factors[0]
        for f in factors[1:]:
            m = np.kron(m, f)
        out += m
    return out


def _null_dim(mats, size):
    if not mats:
        return size
    M = np.vstack(mats)
    s = np.linalg.svd(M, compute_uv=False)
    return size - int(np.sum(s > 1e-8 * max(1.0, s[0])))


def so_invariant_dimension(d: int, n: int) -> int:
    """dim of tensors of order n killed by every antisymmetric generator."""
    if n == 0:
        return 1
    gens = []
    for i in range(d):
        for j in range(i + 1, d):
            X = np.zeros((d, d))
            X[i, j], X[j, i] = 1.0, -1.0
            gens.append(_derivation(X, n))
    return _null_dim(gens, d**n)


def gl_weight_dimension(d: int, w: int) -> int:
    """dim of order-dw tensors T with X.T = w tr(X) T for every X in gl_d."""
    n = d * w
    gens = []
    for i in range(d):
        for j in range(d):
            X = np.zeros((d, d))
            X[i, j] = 1.0
            gens.append(_derivation(X, n) - (w if i == j else 0) * np.eye(d**n))
    return _null_dim(gens, d**n)


def sympy_rank(polys) -> int:
    words = sorted({w for p in polys for w in p.terms})
    if not words:
        return 0
    M = sympy.Matrix([[sympy.Rational(p[w].numerator, p[w].denominator) for w in words] for p in polys])
    return M.rank()


def shoelace_twice_area(points) -> float:
    """2 x signed area of the polygon closed by the chord back to the start."""
    p = np.asarray(points, dtype=float)
    x, y = p[:, 0], p[:, 1]
    return float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def lemniscate_moment_quadrature(orientation, alpha, target, samples=200_000) -> float:
    """``int x^a y^b dX^target`` on (±cos t, sin 2t) with the exact derivative, trapezoid rule."""
    t = np.linspace(0.0, 2 * np.pi, samples + 1)
    s = 1.0 if orientation == "+" else -1.0
    x, y = s * np.cos(t), np.sin(2 * t)
    dx, dy = -s * np.sin(t), 2 * np.cos(2 * t)
    f = x ** alpha[0] * y ** alpha[1] * (dx if target == 1 else dy)
    return float(np.trapezoid(f, t))


def moment_curve_exact_pairing(d: int) -> Fraction:
    """<S(moment curve on [0,1]), sum_sigma sign x_sigma> from exact iterated integrals.

    The word a_1..a_d integrates to prod_k a_k / (a_1 + ... + a_k).
    """
    total = Fraction(0)
    for p in itertools.permutations(range(1, d + 1)):
        sign = Permutation([a - 1 for a in p]).signature()
        term, s = Fraction(sign), 0
        for a in p:
            s += a
            term *= Fraction(a, s)
        total += term
    return total
