"""Invariants of time-augmented paths.

A group acting on space leaves the time coordinate (letter 0) alone.  Every
such invariant of level m is obtained by taking a spatial invariant of level
n <= m and inserting m - n zeros into its words at fixed gaps; ``z`` records
how many zeros go before each letter and after the last one.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from .descriptors import (
    InvariantDescriptor,
    VerificationReport,
    random_integer_matrix,
    random_path,
    random_rotation,
    relative_error,
)
from .free_algebra import insert_z, pair
from .gl import check_gl_exact, gl_basis
from .perm import perm_basis, permutation_matrix
from .signature import signature, time_augment_path, transform_path
from .so import signed_permutation_rotations, so_basis


def enumerate_compositions(total: int, slots: int) -> list[tuple]:
    """Weak compositions of ``total`` into ``slots`` parts, lexicographic."""
    if total < 0 or slots < 1:
        raise ValueError("need total >= 0 and slots >= 1")
    out = []

    def rec(prefix, left, k):
        if k == 1:
            out.append(tuple(prefix) + (left,))
            return
        for v in range(left + 1):
            rec(prefix + [v], left - v, k - 1)

    rec([], total, slots)
    return out


def _base_levels(group, d, m, weight):
    if group == "GL":
        if weight is None or weight < 1:
            raise ValueError("GL augmentation needs a weight >= 1")
        n = weight * d
        return [(n, gl_basis(d, weight))] if n <= m else []
    if group == "SO":
        return [(n, so_basis(d, n)) for n in range(m + 1)]
    if group == "PERM":
        return [(n, perm_basis(d, n)) for n in range(m + 1)]
    raise ValueError(f"unknown group {group!r}")


def augmented_basis(group: str, d: int, m: int, weight: int | None = None) -> list[InvariantDescriptor]:
    """Basis of level-m invariants of ``group`` acting on paths augmented by time.

    GL needs ``weight`` and uses only base level ``weight * d``.  SO and PERM
    use every base level ``0 <= n <= m``; ``n = 0`` contributes the pure-time
    word ``0...0``.  Ordered by base level, base element, then ``z``.
    """
    group = group.upper().rstrip("0")
    if m < 0:
        raise ValueError("level must be nonnegative")
    out = []
    for n, base in _base_levels(group, d, m, weight):
        comps = enumerate_compositions(m - n, n + 1)
        for psi in base:
            for z in comps:
                out.append(
                    InvariantDescriptor(
                        group + "0",
                        d,
                        m,
                        insert_z(psi.polynomial, z),
                        {"base": psi.generator, "n": n, "z": list(z)},
                        weight=psi.weight,
                        notes=psi.notes,
                    )
                )
    return out


def augmented_count(group: str, d: int, m: int, weight: int | None = None) -> int:
    """``sum_n |base(n)| * C(m, n)``: the number of compositions of m - n into n + 1 parts is C(m, n)."""
    return sum(len(base) * comb(m, n) for n, base in _base_levels(group.upper().rstrip("0"), d, m, weight))


def _transforms(group, rng, d, trials):
    if group == "GL":
        return [rng.standard_normal((d, d)) for _ in range(trials)], [random_integer_matrix(rng, d) for _ in range(3)]
    if group == "SO":
        return [random_rotation(rng, d) for _ in range(trials)], list(signed_permutation_rotations(d))
    perms = list(itertools.permutations(range(1, d + 1)))
    mats = [permutation_matrix(perms[int(rng.integers(len(perms)))]) for _ in range(trials)]
    exact = [permutation_matrix(p).astype(int).tolist() for p in perms] if d <= 6 else []
    return mats, exact


def verify_augmented_invariance(
    desc: InvariantDescriptor, trials: int = 100, seed: int = 0, matrices=None, tol: float = 1e-9
) -> VerificationReport:
    """Check ``<S(diag(1,A) X), phi> = det(A)^w <S(X), phi>`` on time-augmented random paths.

    ``A`` is drawn from the group of ``desc`` (w = 0 for SO0 and PERM0), and
    the action on the polynomial is also checked exactly on integer members of
    the group.  ``matrices`` replaces both sets of transforms.
    """
    group = desc.base_group
    weight = desc.weight or 0
    phi = desc.polynomial
    d, level = desc.dim, max(phi.degree, 0)
    rng = np.random.default_rng(seed)
    if matrices is None:
        numeric, exact = _transforms(group, rng, d, trials)
    else:
        numeric = [np.asarray(A, dtype=float) for A in matrices]
        exact = [np.asarray(A).astype(int).tolist() for A in matrices if np.all(np.asarray(A) == np.round(np.asarray(A)))]
    report = VerificationReport(name=f"{desc.group} weight {weight}", passed=True)
    for k, A in enumerate(numeric):
        X = random_path(rng, d)
        lhs = pair(signature(time_augment_path(transform_path(A, X)), level, augmented=True), phi)
        rhs = float(np.linalg.det(A)) ** weight * pair(signature(time_augment_path(X), level, augmented=True), phi)
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
            report.witness = {"exact": True, "matrix": A}
    return report


def verify_gl0_invariance(desc: InvariantDescriptor, trials: int = 100, seed: int = 0, matrices=None, tol: float = 1e-9):
    if desc.group != "GL0":
        raise ValueError("expected a GL0 descriptor")
    return verify_augmented_invariance(desc, trials, seed, matrices, tol)
