"""Exact linear algebra over the rationals for sets of polynomials."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .free_algebra import Polynomial, word_key


def coefficient_matrix(polys: Sequence[Polynomial]):
    """Rows are polynomials, columns the union of their words (canonical order)."""
    words = sorted({w for p in polys for w in p.terms}, key=word_key)
    return [[p[w] for w in words] for p in polys], words


def _echelon(rows):
    # reduced row echelon form; returns (rows, pivot columns)
    m = [list(map(Fraction, r)) for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


class _Reducer:
    """Incremental row reduction on sparse rows (dict column -> Fraction)."""

    def __init__(self):
        self.rows = []  # (pivot, row) in insertion order

    def reduce(self, row):
        row = {k: Fraction(v) for k, v in row.items() if v != 0}
        for piv, b in self.rows:
            f = row.get(piv)
            if f:
                for k, v in b.items():
                    x = row.get(k, 0) - f * v
                    if x:
                        row[k] = x
                    else:
                        row.pop(k, None)
        return row

    def add(self, row) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        piv = min(row)
        inv = 1 / row[piv]
        self.rows.append((piv, {k: v * inv for k, v in row.items()}))
        return True


def rank(rows) -> int:
    red = _Reducer()
    return sum(red.add(dict(enumerate(r))) for r in rows)


def polynomial_rank(polys: Sequence[Polynomial]) -> int:
    red = _Reducer()
    return sum(red.add(_sparse(p)) for p in polys)


def _sparse(p: Polynomial):
    return {word_key(w): c for w, c in p.terms.items()}


def independent_subset(polys: Sequence[Polynomial]) -> list[int]:
    """Indices of a maximal linearly independent subset, chosen greedily in order."""
    red = _Reducer()
    return [i for i, p in enumerate(polys) if red.add(_sparse(p))]


def solve_in_span(target: Polynomial, basis: Sequence[Polynomial]):
    """Exact coordinates ``c`` with ``sum c_i basis_i == target``.

    Returns ``(coords, residual)``; ``coords`` is ``None`` and ``residual`` the
    part of ``target`` outside the span when there is no solution.  When the
    basis is dependent the returned coordinates are one particular solution.
    """
    words = sorted({w for p in list(basis) + [target] for w in p.terms}, key=word_key)
    n = len(basis)
    # augmented system, columns = basis coefficients, rows = words
    rows = [[b[w] for b in basis] + [target[w]] for w in words]
    if not rows:
        return [Fraction(0)] * n, target
    red, pivots = _echelon(rows)
    if n in pivots:
        # inconsistent: residual is target minus the best pivot-row fit
        sol = _particular(red, pivots, n)
        approx = Polynomial.zero(target.dim, target.augmented)
        for c, b in zip(sol, basis):
            approx = approx + b * c
        return None, target - approx
    sol = _particular(red, pivots, n)
    return sol, Polynomial.zero(target.dim, target.augmented)


def _particular(red, pivots, n):
    sol = [Fraction(0)] * n
    for row, c in zip(red, pivots):
        if c < n:
            sol[c] = row[n]
    return sol
