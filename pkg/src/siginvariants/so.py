"""Rotation (SO(d)) invariants.

Two constructions:

* ``so2_basis``: for d = 2, real and imaginary parts of products of
  ``z1 = x1 + i x2`` and ``z2 = x1 - i x2`` with as many z1 as z2 factors and
  a leading z1.  This is a basis.
* ``so_basis_general``: for any d, products of Gram minors ``p(a, b)`` and
  d-minors ``u(c)`` over index families obeying a chain condition, reduced
  to an independent subset.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .descriptors import InvariantDescriptor, VerificationReport, random_path, random_rotation, relative_error
from .free_algebra import Polynomial, apply_matrix, pair
from .gl import det_indicator, permutation_sign
from .linalg import independent_subset
from .signature import signature, transform_path


# ---------------------------------------------------------------------------
# d = 2: complex coordinates


def _balanced_zwords(n):
    if n % 2:
        return []
    out = []
    for pos in itertools.combinations(range(1, n), n // 2 - 1):
        # position 0 is always z1
        w = [2] * n
        w[0] = 1
        for p in pos:
            w[p] = 1
        out.append(tuple(w))
    return sorted(out)


def zword_polynomial(zword, part: str) -> Polynomial:
    """Real (``part="re"``) or imaginary (``"im"``) part of the product of
    ``z1 = x1 + i x2`` / ``z2 = x1 - i x2`` factors spelled by ``zword``."""
    n = len(zword)
    terms = []
    for word in itertools.product((1, 2), repeat=n):
        k = sum(1 for a in word if a == 2)
        b = sum(1 for a, j in zip(word, zword) if a == 2 and j == 2)
        # coefficient is (-1)^b * i^k
        if part == "re" and k % 2 == 0:
            terms.append((word, (-1) ** (b + k // 2)))
        elif part == "im" and k % 2 == 1:
            terms.append((word, (-1) ** (b + (k - 1) // 2)))
        elif part not in ("re", "im"):
            raise ValueError("part must be 're' or 'im'")
    return Polynomial(terms, 2)


@lru_cache(maxsize=None)
def _so2_basis(n):
    if n == 0:
        return (
            InvariantDescriptor("SO", 2, 0, Polynomial.one(2), {"zword": [], "part": "re"}),
        )
    out = []
    for zw in _balanced_zwords(n):
        for part in ("re", "im"):
            out.append(
                InvariantDescriptor("SO", 2, n, zword_polynomial(zw, part), {"zword": list(zw), "part": part})
            )
    return tuple(out)


def so2_basis(n: int) -> list[InvariantDescriptor]:
    """Basis of planar rotation invariants of level n (``C(n, n/2)`` elements, none for odd n)."""
    if n < 0:
        raise ValueError("level must be nonnegative")
    return list(_so2_basis(n))


# ---------------------------------------------------------------------------
# general d: Gram minors and determinants


@dataclass(frozen=True)
class IndexFamily:
    pairs: tuple  # ((a, b), ...) with a, b increasing tuples of equal length
    dets: tuple  # (c, ...) increasing tuples of length d

    def sequences(self):
        for a, b in self.pairs:
            yield a
            yield b
        yield from self.dets

    def to_json(self):
        return {"pairs": [[list(a), list(b)] for a, b in self.pairs], "dets": [list(c) for c in self.dets]}

    @classmethod
    def from_json(cls, obj):
        return cls(
            tuple((tuple(a), tuple(b)) for a, b in obj.get("pairs", [])),
            tuple(tuple(c) for c in obj.get("dets", [])),
        )


def dominates(x, y) -> bool:
    """Partial order on increasing sequences: ``x >= y`` iff ``len(x) <= len(y)``
    and ``x[j] >= y[j]`` for every ``j < len(x)``."""
    return len(x) <= len(y) and all(x[j] >= y[j] for j in range(len(x)))


def enumerate_index_families(d: int, n: int) -> list[IndexFamily]:
    """All families ``a1 >= b1 >= a2 >= ... >= br >= c1 >= ... >= cs`` that
    partition ``{1..n}``, pair ranks free in ``1..d-1``, det sequences of length d."""
    if d < 2:
        raise ValueError("d must be at least 2")
    out: list[IndexFamily] = []

    def rec(remaining, last, pairs, dets):
        if not remaining:
            out.append(IndexFamily(tuple(pairs), tuple(dets)))
            return
        pool = sorted(remaining)
        if not dets:
            for r in range(1, d):
                if 2 * r > len(pool):
                    break
                for a in itertools.combinations(pool, r):
                    if last is not None and not dominates(last, a):
                        continue
                    rest = sorted(remaining.difference(a))
                    for b in itertools.combinations(rest, r):
                        if dominates(a, b):
                            rec(remaining.difference(a, b), b, pairs + [(a, b)], dets)
        if len(pool) >= d:
            for c in itertools.combinations(pool, d):
                if last is None or dominates(last, c):
                    rec(remaining.difference(c), c, pairs, dets + [c])

    if n == 0:
        return [IndexFamily((), ())]
    rec(frozenset(range(1, n + 1)), None, [], [])
    return out


def _small_det(m):
    k = len(m)
    if k == 0:
        return 1
    if k == 1:
        return m[0][0]
    if k == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for perm in itertools.permutations(range(k)):
        prod = 1
        for i, j in enumerate(perm):
            prod *= m[i][j]
            if not prod:
                break
        if prod:
            total += permutation_sign(perm) * prod
    return total


def gram_minor(a, b, word) -> int:
    """Minor of the Gram matrix of canonical basis vectors e_{word[k]}:
    rows at positions ``a``, columns at ``b`` (1-based)."""
    return _small_det([[int(word[i - 1] == word[j - 1]) for j in b] for i in a])


def family_polynomial(d: int, fam: IndexFamily) -> Polynomial:
    n = sum(len(s) for s in fam.sequences())
    terms = []
    for word in itertools.product(range(1, d + 1), repeat=n):
        coef = 1
        for c in fam.dets:
            coef *= det_indicator(tuple(word[i - 1] for i in c))
            if not coef:
                break
        if not coef:
            continue
        for a, b in fam.pairs:
            coef *= gram_minor(a, b, word)
            if not coef:
                break
        if coef:
            terms.append((word, coef))
    return Polynomial(terms, d)


@lru_cache(maxsize=None)
def _so_basis_general(d, n):
    fams = enumerate_index_families(d, n)
    polys = [family_polynomial(d, f) for f in fams]
    keep = independent_subset(polys)
    notes = ()
    if len(keep) < len(fams):
        dropped = [fams[i].to_json() for i in range(len(fams)) if i not in set(keep)]
        notes = (f"reduced: {len(dropped)} of {len(fams)} generators dependent", {"discarded": dropped})
    return tuple(
        InvariantDescriptor("SO", d, n, polys[i], {"family": fams[i].to_json()}, notes=notes) for i in keep
    )


def so_basis_general(d: int, n: int) -> list[InvariantDescriptor]:
    if d < 2:
        raise ValueError("d must be at least 2")
    if n < 0:
        raise ValueError("level must be nonnegative")
    return list(_so_basis_general(d, n))


def so_basis(d: int, n: int) -> list[InvariantDescriptor]:
    """The basis used downstream: the z-basis for d = 2, minor products otherwise."""
    return so2_basis(n) if d == 2 else so_basis_general(d, n)


# ---------------------------------------------------------------------------
# verification


def signed_permutation_rotations(d: int) -> Iterator[list]:
    """All signed permutation matrices with determinant +1."""
    for perm in itertools.permutations(range(d)):
        for signs in itertools.product((1, -1), repeat=d):
            if permutation_sign(perm) * int(np.prod(signs)) != 1:
                continue
            M = [[0] * d for _ in range(d)]
            for j, (i, s) in enumerate(zip(perm, signs)):
                M[i][j] = s
            yield M


def verify_so_invariance(desc, trials: int = 100, seed: int = 0, matrices=None, tol: float = 1e-9) -> VerificationReport:
    """Pairing invariance under random rotations on random paths, plus exact
    invariance under the signed permutation rotations.  ``matrices`` replaces
    both sets of transforms (useful for negative controls)."""
    phi = desc.polynomial if isinstance(desc, InvariantDescriptor) else desc
    rng = np.random.default_rng(seed)
    d, level = phi.dim, max(phi.degree, 0)
    report = VerificationReport(name="SO", passed=True)
    if matrices is None:
        numeric = [random_rotation(rng, d) for _ in range(trials)]
        exact = list(signed_permutation_rotations(d))
    else:
        numeric = [np.asarray(A, dtype=float) for A in matrices]
        exact = [np.asarray(A).tolist() for A in matrices if np.all(np.asarray(A) == np.round(np.asarray(A)))]
    for k, A in enumerate(numeric):
        X = random_path(rng, d)
        lhs = pair(signature(transform_path(A, X), level), phi)
        rhs = pair(signature(X, level), phi)
        err = relative_error(lhs, rhs)
        report.checks += 1
        report.max_error = max(report.max_error, err)
        if err > tol and report.passed:
            report.passed = False
            report.witness = {"trial": k, "matrix": np.asarray(A).tolist(), "path": X.tolist(), "lhs": lhs, "rhs": rhs}
    for M in exact:
        report.checks += 1
        Mt = [list(r) for r in zip(*M)]
        if apply_matrix(Mt, phi) != phi and report.passed:
            report.passed = False
            report.witness = {"exact": True, "matrix": M}
    return report
