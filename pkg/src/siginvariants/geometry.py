"""The weight-one GL invariant and the geometry it measures.

Pairing the signature with ``inv_d(d)`` (the alternating sum over all words
using each letter once) gives d! times the signed volume of the curve.  For a
polyline this equals a sum of bordered simplex determinants over vertex
subsequences chosen by :func:`triangulation_indices`.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, factorial, pi

import numpy as np

from .descriptors import VerificationReport, relative_error
from .free_algebra import Polynomial, insert_after, pair, parse_compact, relabel, shuffle_product
from .gl import gl_basis, permutation_sign
from .linalg import solve_in_span
from .signature import as_path, signature

# Integral invariants of planar curves (moments of the form int x^a y^b dy
# combined with products of increments), rewritten as shuffle polynomials.
# The weight-one member of this family reduces to the area polynomial.
MOMENT_INVARIANT_LEVEL4 = "1/3*1221 + 1/3*1212 - 2/3*1122 + 1/3*2121 + 1/3*2112 - 2/3*2211"
MOMENT_INVARIANT_LEVEL6 = (
    "- 121212 - 211122 + 212121 + 221112 - 121221 + 122211 - 112212 + 122112 - 211212"
    " - 211221 - 121122 + 122121 - 3*222111 + 3*111222 + 221121 + 212211 - 112122"
    " + 212112 - 112221 + 221211"
)


def inv_d(d: int) -> Polynomial:
    """``sum_sigma sign(sigma) x_sigma(1) ... x_sigma(d)``."""
    if d < 1:
        raise ValueError("d must be positive")
    return Polynomial(
        [(p, permutation_sign(p)) for p in itertools.permutations(range(1, d + 1))], d
    )


def _inv_without(d: int, j: int) -> Polynomial:
    # inv_{d-1} on the letters {1..d} minus j
    return relabel(inv_d(d - 1), {k: k if k < j else k + 1 for k in range(1, d)}, dim=d)


def signed_volume(path) -> float:
    pts = as_path(path)
    d = pts.shape[1]
    return pair(signature(pts, d), inv_d(d)) / factorial(d)


def triangulation_indices(d: int, num_points: int) -> list[tuple]:
    """Vertex subsequences ``0 = i_0 < i_1 < ... < i_d`` of a polyline with
    ``num_points`` vertices (last index ``L = num_points - 1``).

    ``i_{l+1} = i_l + 1`` for odd l; for odd d also ``i_d = L``.  There are
    ``C(d//2 + num_points - d - 1, num_points - d - 1)`` of them.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if num_points < d + 1:
        raise ValueError(f"need at least {d + 1} points, got {num_points}")
    last = num_points - 1
    k = d // 2
    # pairs (a, a+1) start at a >= 1, are separated, and end before the
    # (odd d) fixed last vertex
    top = last if d % 2 == 0 else last - 1
    out = []

    def rec(prefix, lo):
        if len(prefix) == k:
            seq = [0]
            for a in prefix:
                seq += [a, a + 1]
            if d % 2:
                seq.append(last)
            out.append(tuple(seq))
            return
        remaining = k - len(prefix)
        for a in range(lo, top - 2 * remaining + 2):
            rec(prefix + [a], a + 2)

    rec([], 1)
    return out


def triangulation_count(d: int, num_points: int) -> int:
    n = num_points
    return comb(d // 2 + n - d - 1, n - d - 1)


def signed_volume_determinant_sum(points) -> float:
    """Sum of ``det [[1 ... 1], [p_i0 ... p_id]]`` over :func:`triangulation_indices`.

    Equals the pairing of the polyline's signature with ``inv_d``.
    """
    pts = as_path(points)
    n, d = pts.shape
    if n < d + 1:
        raise ValueError(f"need at least {d + 1} points in dimension {d}, got {n}")
    idx = np.array(triangulation_indices(d, n))
    simplices = pts[idx]  # (K, d+1, d)
    mats = np.concatenate([np.ones((len(idx), d + 1, 1)), simplices], axis=2).transpose(0, 2, 1)
    return float(np.linalg.det(mats).sum())


def moment_curve(d: int, samples: int, T: float = 1.0) -> np.ndarray:
    t = np.linspace(0.0, T, samples + 1)
    return np.column_stack([t ** k for k in range(1, d + 1)])


def moment_curve_volume(d: int) -> Fraction:
    """Convex hull volume of the moment curve on [0, 1]: ``prod_l ((l-1)!)^2 / (2l-1)!``."""
    out = Fraction(1)
    for l in range(1, d + 1):
        out *= Fraction(factorial(l - 1) ** 2, factorial(2 * l - 1))
    return out


def moment_curve_volume_by_permutations(d: int) -> Fraction:
    """The same volume from the iterated integrals of the moment curve:
    ``sum_sigma sign(sigma) prod_k 1 / (sigma(1) + ... + sigma(k))``."""
    total = Fraction(0)
    for p in itertools.permutations(range(1, d + 1)):
        term, s = Fraction(permutation_sign(p)), 0
        for a in p:
            s += a
            term /= s
        total += term
    return total


# ---------------------------------------------------------------------------
# exact identities


def check_recursion(d: int) -> VerificationReport:
    """Expansion of ``inv_d`` along each position r of the inserted letter,
    and for odd d the shuffle expansion ``sum_j (-1)^(j+1) x_j ⧢ inv_{d-1}``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    target = inv_d(d)
    report = VerificationReport(name=f"recursion d={d}", passed=True)
    for r in range(d):
        acc = Polynomial.zero(d)
        for j in range(1, d + 1):
            acc = acc + insert_after(_inv_without(d, j), j, r) * (-1) ** (j + 1)
        acc = acc * (-1) ** r
        report.checks += 1
        ok = acc == target
        report.details.append({"r": r, "ok": ok})
        if not ok and report.passed:
            report.passed = False
            report.witness = {"d": d, "r": r}
    if d % 2:
        acc = Polynomial.zero(d)
        for j in range(1, d + 1):
            acc = acc + shuffle_product(Polynomial.monomial((j,), d), _inv_without(d, j)) * (-1) ** (j + 1)
        report.checks += 1
        ok = acc == target
        report.details.append({"shuffle": True, "ok": ok})
        if not ok and report.passed:
            report.passed = False
            report.witness = {"d": d, "form": "shuffle"}
    return report


def shuffle_pfaffian(d: int) -> Polynomial:
    """``1/(2^k k!) sum_sigma sign(sigma) A_s1s2 ⧢ ... ⧢ A_s(d-1)sd`` with ``A_ij = ij - ji``."""
    if d % 2:
        raise ValueError("the Pfaffian needs an even dimension")
    k = d // 2

    def area(i, j):
        return Polynomial([((i, j), 1), ((j, i), -1)], d)

    acc = Polynomial.zero(d)
    for p in itertools.permutations(range(1, d + 1)):
        term = Polynomial.one(d)
        for a in range(k):
            term = shuffle_product(term, area(p[2 * a], p[2 * a + 1]))
        acc = acc + term * permutation_sign(p)
    return acc / (2 ** k * factorial(k))


def check_pfaffian(d: int) -> VerificationReport:
    if d < 2 or d % 2:
        raise ValueError("check_pfaffian needs an even d >= 2")
    ok = shuffle_pfaffian(d) == inv_d(d)
    rep = VerificationReport(name=f"shuffle Pfaffian d={d}", passed=ok, checks=1)
    if not ok:
        rep.witness = {"d": d}
    return rep


# ---------------------------------------------------------------------------
# numeric identities


def closing_invariance(path, tol: float = 1e-10) -> VerificationReport:
    """For even d, closing the path with a straight segment back to its
    start leaves the pairing with ``inv_d`` unchanged."""
    pts = as_path(path)
    d = pts.shape[1]
    if d % 2:
        raise ValueError("closing invariance holds for even d only")
    closed = np.vstack([pts, pts[:1]])
    a = pair(signature(pts, d), inv_d(d))
    b = pair(signature(closed, d), inv_d(d))
    err = relative_error(a, b)
    rep = VerificationReport(name="closing invariance", passed=err <= tol, checks=1, max_error=err)
    if not rep.passed:
        rep.witness = {"open": a, "closed": b}
    return rep


def lag_one_cross_correlation(a, b) -> float:
    """``sum_i a[i+1] * b[i]``."""
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    return float(np.dot(a[1:], b[:-1]))


def lag_one_correlation_identity(path, tol: float = 1e-10) -> VerificationReport:
    """Pairing with ``12 - 21`` equals ``C(y, x) - C(x, y)``, C being the
    lag-one cross-correlation of the coordinates measured from the start."""
    pts = as_path(path)
    if pts.shape[1] != 2:
        raise ValueError("the lag-one identity is planar")
    x = pts[:, 0] - pts[0, 0]
    y = pts[:, 1] - pts[0, 1]
    lhs = pair(signature(pts, 2), inv_d(2))
    rhs = lag_one_cross_correlation(y, x) - lag_one_cross_correlation(x, y)
    err = relative_error(lhs, rhs)
    rep = VerificationReport(name="lag-one correlation", passed=err <= tol, checks=1, max_error=err)
    rep.details.append({"pairing": lhs, "correlation": rhs})
    if not rep.passed:
        rep.witness = {"pairing": lhs, "correlation": rhs}
    return rep


def integral_moment(path, alpha, target: int) -> float:
    """``int prod_k (X^k)^alpha_k dX^target`` along the polyline, exactly per segment.

    ``target`` is 1-based.  On a segment ``p + t q`` the integrand is a
    polynomial in t whose coefficients come from the binomial expansions.
    """
    pts = as_path(path)
    d = pts.shape[1]
    alpha = [int(a) for a in alpha]
    if len(alpha) != d or any(a < 0 for a in alpha):
        raise ValueError("alpha must have one nonnegative exponent per coordinate")
    if not 1 <= target <= d:
        raise ValueError(f"target coordinate must be in 1..{d}")
    p, q = pts[:-1], np.diff(pts, axis=0)
    poly = np.ones((len(p), 1))  # coefficients in t, lowest first
    for k, a in enumerate(alpha):
        if a == 0:
            continue
        j = np.arange(a + 1)
        binom = np.array([comb(a, i) for i in j], dtype=float)
        factor = binom * p[:, k : k + 1] ** (a - j) * q[:, k : k + 1] ** j
        new = np.zeros((len(p), poly.shape[1] + a))
        for i in range(a + 1):
            new[:, i : i + poly.shape[1]] += poly * factor[:, i : i + 1]
        poly = new
    integral = poly @ (1.0 / np.arange(1, poly.shape[1] + 1))
    return float(np.dot(integral, q[:, target - 1]))


def lemniscate_path(orientation: str = "+", samples: int = 1000) -> np.ndarray:
    """``(±cos t, sin 2t)`` sampled at ``samples + 1`` equally spaced t in [0, 2π]."""
    if orientation not in ("+", "-"):
        raise ValueError("orientation must be '+' or '-'")
    if samples < 3:
        raise ValueError("need at least 3 samples")
    t = np.linspace(0.0, 2 * pi, samples + 1)
    sign = 1.0 if orientation == "+" else -1.0
    return np.column_stack([sign * np.cos(t), np.sin(2 * t)])


def check_moment_invariant_span(level: int) -> VerificationReport:
    """The level-4 (or level-6) moment invariant lies in the span of the
    planar GL basis of weight 2 (or 3).  Coordinates go in ``details``."""
    if level not in (4, 6):
        raise ValueError("level must be 4 or 6")
    text = MOMENT_INVARIANT_LEVEL4 if level == 4 else MOMENT_INVARIANT_LEVEL6
    return span_report(parse_compact(text, 2), level // 2, name=f"moment invariant level {level}")


def span_report(phi: Polynomial, weight: int, name: str = "span") -> VerificationReport:
    basis = [b.polynomial for b in gl_basis(phi.dim, weight)]
    coords, residual = solve_in_span(phi, basis)
    rep = VerificationReport(name=name, passed=coords is not None, checks=1)
    if coords is None:
        rep.witness = {"residual": str(residual)}
    else:
        rep.details.append({"coordinates": [str(c) for c in coords]})
    return rep
