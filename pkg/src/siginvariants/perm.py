"""Invariants under permutation of coordinates, indexed by set partitions.

``nabla`` groups the positions of a word by letter.  Permuting letters does
not change that grouping, so summing all words with a given grouping gives an
invariant, and these sums form a basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .descriptors import InvariantDescriptor, VerificationReport, random_path, relative_error
from .free_algebra import Polynomial, pair, relabel
from .signature import signature


@dataclass(frozen=True)
class SetPartition:
    """Blocks of ``{1..n}``, each sorted, blocks ordered by their minimum."""

    blocks: tuple

    @classmethod
    def from_blocks(cls, blocks):
        bs = [tuple(sorted(int(x) for x in b)) for b in blocks]
        if any(not b for b in bs):
            raise ValueError("blocks must be nonempty")
        flat = sorted(x for b in bs for x in b)
        if flat != list(range(1, len(flat) + 1)):
            raise ValueError("blocks must be disjoint and cover 1..n")
        return cls(tuple(sorted(bs)))

    @classmethod
    def from_rgs(cls, rgs):
        blocks: dict[int, list[int]] = {}
        for pos, b in enumerate(rgs, 1):
            blocks.setdefault(b, []).append(pos)
        return cls(tuple(tuple(blocks[k]) for k in sorted(blocks)))

    @property
    def size(self):
        return sum(len(b) for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def rgs(self):
        """Restricted growth string: block number (from 0) of each position."""
        out = [0] * self.size
        for k, b in enumerate(self.blocks):
            for x in b:
                out[x - 1] = k
        return tuple(out)

    def __str__(self):
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def nabla(word) -> SetPartition:
    """Partition of the positions of ``word`` by equal letters."""
    word = tuple(word)
    if not word:
        raise ValueError("nabla needs a nonempty word")
    groups: dict = {}
    for pos, a in enumerate(word, 1):
        groups.setdefault(a, []).append(pos)
    return SetPartition(tuple(sorted(tuple(g) for g in groups.values())))


def enumerate_partitions(n: int, max_blocks: int) -> list[SetPartition]:
    """Set partitions of ``{1..n}`` with at most ``max_blocks`` blocks, in
    lexicographic order of their restricted growth strings."""
    if n < 1 or max_blocks < 1:
        raise ValueError("n and max_blocks must be positive")
    out = []
    rgs = [0] * n

    def rec(pos, top):
        if pos == n:
            out.append(SetPartition.from_rgs(rgs))
            return
        for b in range(min(top + 2, max_blocks)):
            rgs[pos] = b
            rec(pos + 1, max(top, b))

    rec(1, 0)
    return out


def perm_invariant(d: int, partition: SetPartition) -> Polynomial:
    """Sum of all words over ``{1..d}`` whose letter grouping is ``partition``."""
    k = len(partition)
    n = partition.size
    terms = []
    for letters in itertools.permutations(range(1, d + 1), k):
        word = [0] * n
        for block, a in zip(partition.blocks, letters):
            for pos in block:
                word[pos - 1] = a
        terms.append((tuple(word), 1))
    return Polynomial(terms, d)


@lru_cache(maxsize=None)
def _perm_basis(d, n):
    if n == 0:
        return (InvariantDescriptor("PERM", d, 0, Polynomial.one(d), {"partition": []}),)
    return tuple(
        InvariantDescriptor("PERM", d, n, perm_invariant(d, p), {"partition": [list(b) for b in p.blocks]})
        for p in enumerate_partitions(n, d)
    )


def perm_basis(d: int, n: int) -> list[InvariantDescriptor]:
    if d < 1 or n < 0:
        raise ValueError("need d >= 1 and n >= 0")
    return list(_perm_basis(d, n))


def permutation_matrix(sigma) -> np.ndarray:
    """Matrix sending e_i to e_{sigma[i-1]}."""
    d = len(sigma)
    M = np.zeros((d, d))
    for i, s in enumerate(sigma):
        M[s - 1, i] = 1.0
    return M


def verify_perm_invariance(desc, trials: int = 100, seed: int = 0, perms=None, tol: float = 1e-9) -> VerificationReport:
    """Exact fixed-point check under every coordinate permutation (d <= 6,
    else ``trials`` random ones) plus numeric pairing checks on random paths.
    ``perms`` (tuples of images of 1..d) replaces the permutation set."""
    phi = desc.polynomial if isinstance(desc, InvariantDescriptor) else desc
    d, level = phi.dim, max(phi.degree, 0)
    rng = np.random.default_rng(seed)
    report = VerificationReport(name="PERM", passed=True)
    if perms is None:
        if d <= 6:
            exact = list(itertools.permutations(range(1, d + 1)))
        else:
            exact = [tuple(int(x) + 1 for x in rng.permutation(d)) for _ in range(trials)]
        numeric = [tuple(int(x) + 1 for x in rng.permutation(d)) for _ in range(trials)]
    else:
        exact = numeric = [tuple(p) for p in perms]
    for sigma in exact:
        report.checks += 1
        if relabel(phi, dict(zip(range(1, d + 1), sigma))) != phi and report.passed:
            report.passed = False
            report.witness = {"exact": True, "permutation": list(sigma)}
    for k, sigma in enumerate(numeric):
        X = random_path(rng, d)
        M = permutation_matrix(sigma)
        lhs = pair(signature(X @ M.T, level), phi)
        rhs = pair(signature(X, level), phi)
        err = relative_error(lhs, rhs)
        report.checks += 1
        report.max_error = max(report.max_error, err)
        if err > tol and report.passed:
            report.passed = False
            report.witness = {"trial": k, "permutation": list(sigma), "path": X.tolist(), "lhs": lhs, "rhs": rhs}
    return report
