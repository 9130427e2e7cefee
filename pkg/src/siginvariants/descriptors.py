"""Provenance records for invariant basis elements and verification reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from .free_algebra import Polynomial

GROUPS = ("GL", "SO", "PERM")


@dataclass(frozen=True)
class InvariantDescriptor:
    """One basis element together with the combinatorial object that generated it.

    ``generator`` is a JSON-compatible dict; :func:`siginvariants.build.from_generator`
    rebuilds ``polynomial`` from it.  For time-augmented groups (``GL0``,
    ``SO0``, ``PERM0``) ``dim`` is the spatial dimension.
    """

    group: str
    dim: int
    level: int
    polynomial: Polynomial
    generator: dict
    weight: Optional[int] = None
    notes: tuple = ()

    @property
    def augmented(self):
        return self.group.endswith("0")

    @property
    def base_group(self):
        return self.group[:-1] if self.augmented else self.group

    def to_dict(self) -> dict:
        from .free_algebra import format_polynomial

        return {
            "group": self.group,
            "dim": self.dim,
            "level": self.level,
            "weight": self.weight,
            "generator": self.generator,
            "polynomial": format_polynomial(self.polynomial),
            "notes": list(self.notes),
        }


@dataclass
class VerificationReport:
    """Outcome of an invariance check.  ``witness`` describes the first failure."""

    name: str
    passed: bool
    checks: int = 0
    max_error: float = 0.0
    witness: Optional[dict[str, Any]] = None
    details: list = field(default_factory=list)

    def __bool__(self):
        return self.passed

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        s = f"{status} {self.name}: {self.checks} checks, max error {self.max_error:.3e}"
        if self.witness:
            s += f"; witness {self.witness}"
        return s


def relative_error(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def random_path(rng: np.random.Generator, dim: int, points: int | None = None) -> np.ndarray:
    """Gaussian random walk starting at a random point."""
    if points is None:
        points = int(rng.integers(2, 9))
    steps = rng.standard_normal((points - 1, dim))
    start = rng.standard_normal((1, dim))
    return np.vstack([start, start + np.cumsum(steps, axis=0)])


def random_rotation(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-random element of SO(dim) via QR with sign fixing."""
    q, r = np.linalg.qr(rng.standard_normal((dim, dim)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def random_integer_matrix(rng: np.random.Generator, dim: int, bound: int = 3) -> list:
    """Random invertible integer matrix with entries in [-bound, bound]."""
    while True:
        A = rng.integers(-bound, bound + 1, size=(dim, dim))
        if round(np.linalg.det(A)) != 0:
            return A.tolist()


def exact_det(A) -> int:
    """Integer determinant by Bareiss elimination."""
    from fractions import Fraction

    m = [[Fraction(x) for x in r] for r in A]
    n = len(m)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    d = sign * m[n - 1][n - 1]
    return d.numerator if d.denominator == 1 else d
