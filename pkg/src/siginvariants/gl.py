"""Linear basis of GL invariants of weight w.

For a standard tableau of the d x w rectangle with columns C_1..C_w, the
invariant has coefficient ``prod_j sign(word restricted to C_j)`` on each word
whose restriction to every column is a permutation of 1..d, and 0 elsewhere.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .descriptors import (
    InvariantDescriptor,
    VerificationReport,
    exact_det,
    random_integer_matrix,
    random_path,
    relative_error,
)
from .free_algebra import Polynomial, apply_matrix, pair
from .signature import signature, transform_path
from .tableaux import RectTableau, enumerate_standard


def permutation_sign(perm) -> int:
    """Sign of a permutation given as a sequence of distinct items."""
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    order = {v: i for i, v in enumerate(sorted(perm))}
    idx = [order[v] for v in perm]
    for i in range(len(idx)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = idx[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_indicator(letters) -> int:
    """det of the matrix with columns e_{letters[0]}, ..., i.e. the sign of
    ``letters`` as a permutation of 1..d, or 0 if it is not one."""
    letters = tuple(letters)
    d = len(letters)
    if sorted(letters) != list(range(1, d + 1)):
        return 0
    return permutation_sign(letters)


def gl_invariant(tableau: RectTableau) -> Polynomial:
    d, w = tableau.shape
    n = d * w
    cols = tableau.columns()
    perms = [(p, permutation_sign(p)) for p in itertools.permutations(range(1, d + 1))]
    terms = []
    for choice in itertools.product(perms, repeat=w):
        word = [0] * n
        coef = 1
        for col, (p, s) in zip(cols, choice):
            for pos, letter in zip(col, p):
                word[pos - 1] = letter
            coef *= s
        terms.append((tuple(word), coef))
    return Polynomial(terms, d)


def gl_descriptor(tableau: RectTableau) -> InvariantDescriptor:
    d, w = tableau.shape
    return InvariantDescriptor(
        group="GL",
        dim=d,
        level=d * w,
        weight=w,
        polynomial=gl_invariant(tableau),
        generator={"tableau": [list(r) for r in tableau.rows]},
    )


@lru_cache(maxsize=None)
def _gl_basis(d, w):
    return tuple(gl_descriptor(t) for t in enumerate_standard(d, w))


def gl_basis(d: int, w: int) -> list[InvariantDescriptor]:
    """One invariant per standard tableau of the d x w rectangle, in tableau order."""
    if d < 1 or w < 1:
        raise ValueError("d and w must be positive")
    return list(_gl_basis(d, w))


def check_gl_exact(phi: Polynomial, A, weight: int) -> bool:
    """``A^T phi == det(A)^weight phi`` in exact arithmetic."""
    At = [list(r) for r in zip(*A)]
    return apply_matrix(At, phi) == phi * exact_det(A) ** weight


def verify_gl_invariance(
    desc,
    trials: int = 100,
    seed: int = 0,
    weight: int | None = None,
    exact_trials: int = 3,
    matrices=None,
    tol: float = 1e-9,
) -> VerificationReport:
    """Check ``<S(AX), phi> = det(A)^w <S(X), phi>`` on random (A, X).

    ``desc`` is an :class:`InvariantDescriptor` or a bare polynomial (then
    ``weight`` is required).  ``matrices`` replaces the random transforms.
    Also checks the action exactly for ``exact_trials`` integer matrices.
    """
    phi = desc.polynomial if isinstance(desc, InvariantDescriptor) else desc
    if weight is None:
        weight = desc.weight if isinstance(desc, InvariantDescriptor) else None
    if weight is None:
        raise ValueError("weight required")
    rng = np.random.default_rng(seed)
    d, level = phi.dim, max(phi.degree, 0)
    report = VerificationReport(name=f"GL weight {weight}", passed=True)

    if matrices is None:
        numeric = [rng.standard_normal((d, d)) for _ in range(trials)]
        exact = [random_integer_matrix(rng, d) for _ in range(exact_trials)]
    else:
        numeric = [np.asarray(A, dtype=float) for A in matrices]
        exact = [A for A in matrices if _is_integer_matrix(A)]

    for k, A in enumerate(numeric):
        X = random_path(rng, d)
        lhs = pair(signature(transform_path(A, X), level), phi)
        rhs = float(np.linalg.det(A)) ** weight * pair(signature(X, level), phi)
        err = relative_error(lhs, rhs)
        report.checks += 1
        report.max_error = max(report.max_error, err)
        if err > tol and report.passed:
            report.passed = False
            report.witness = {"trial": k, "matrix": np.asarray(A).tolist(), "path": X.tolist(), "lhs": lhs, "rhs": rhs}
    for A in exact:
        report.checks += 1
        if not check_gl_exact(phi, A, weight) and report.passed:
            report.passed = False
            report.witness = {"exact": True, "matrix": [list(map(int, r)) for r in A]}
    return report


def _is_integer_matrix(A):
    a = np.asarray(A, dtype=float)
    return bool(np.all(a == np.round(a)))
