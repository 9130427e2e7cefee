"""Truncated signatures of piecewise-linear paths.

A path is an ``(m+1, d)`` array of points.  Each linear segment contributes the
tensor exponential of its increment; segments are glued with the truncated
concatenation product (Chen's relation).
"""

from __future__ import annotations

import numpy as np

from .free_algebra import AlphabetError, TensorSeries


def default_level(d: int) -> int:
    """Default truncation: 6 up to three dimensions, 4 beyond."""
    return 6 if d <= 3 else 4


def as_path(points, dim: int | None = None) -> np.ndarray:
    """Validate and return points as a float array of shape ``(m+1, d)``."""
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1) if dim == 1 else arr.reshape(1, -1)
    if arr.ndim != 2 or arr.shape[0] < 1:
        raise ValueError("a path needs at least one point given as rows of coordinates")
    if dim is not None and arr.shape[1] != dim:
        raise AlphabetError(f"path has dimension {arr.shape[1]}, expected {dim}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("path contains non-finite coordinates")
    return arr


def _exp_levels(delta: np.ndarray, level: int):
    # level k = delta^{(x)k} / k!, built as prev (x) delta / k
    out = [np.ones(1)]
    for k in range(1, level + 1):
        out.append(np.multiply.outer(out[-1], delta).ravel() / k)
    return out


def _mul_levels(a, b, level):
    out = []
    for k in range(level + 1):
        acc = a[k] * b[0][0] + b[k] * a[0][0] if k else a[0] * b[0]
        for i in range(1, k):
            acc = acc + np.multiply.outer(a[i], b[k - i]).ravel()
        out.append(acc)
    return out


def segment_signature(delta, level: int, augmented: bool = False) -> TensorSeries:
    """Signature of the straight segment with increment ``delta``.

    For an augmented series ``delta[0]`` is the time increment and the spatial
    dimension is ``len(delta) - 1``.
    """
    if level < 0:
        raise ValueError("level must be nonnegative")
    delta = np.asarray(delta, dtype=float).reshape(-1)
    dim = delta.shape[0] - (1 if augmented else 0)
    return TensorSeries(_exp_levels(delta, level), dim, augmented)


def chen_concat(s1: TensorSeries, s2: TensorSeries) -> TensorSeries:
    """Truncated concatenation product: the signature of s1's path followed by s2's."""
    if (s1.dim, s1.augmented, s1.level) != (s2.dim, s2.augmented, s2.level):
        raise AlphabetError("series differ in alphabet or truncation level")
    return TensorSeries(_mul_levels(s1.levels, s2.levels, s1.level), s1.dim, s1.augmented)


def signature(path, level: int, augmented: bool = False) -> TensorSeries:
    """Truncated signature of the piecewise-linear interpolation of ``path``.

    With ``augmented=True`` column 0 of ``path`` is the time coordinate and
    the series is indexed by letters ``0..d``.
    """
    if level < 0:
        raise ValueError("level must be nonnegative")
    pts = as_path(path)
    dim = pts.shape[1] - (1 if augmented else 0)
    if dim < 0:
        raise ValueError("augmented path needs a time column")
    acc = TensorSeries.identity(dim, level, augmented).levels
    acc = [np.array(a) for a in acc]
    for delta in np.diff(pts, axis=0):
        if not delta.any():
            continue
        acc = _horner_step(acc, delta, level)
    return TensorSeries(acc, dim, augmented)


def _horner_step(acc, delta, level):
    # acc (x) exp(delta).  Level k is sum_j acc[j] (x) delta^(k-j) / (k-j)!,
    # evaluated Horner-style; go top-down so acc[j < k] still hold old values.
    for k in range(level, 0, -1):
        t = acc[0]
        for j in range(1, k + 1):
            t = acc[j] + np.multiply.outer(t, delta).ravel() / (k - j + 1)
        acc[k] = t
    return acc


def transform_path(A, path) -> np.ndarray:
    """Apply the matrix ``A`` to every point."""
    pts = as_path(path)
    A = np.asarray(A, dtype=float)
    if A.shape != (pts.shape[1], pts.shape[1]):
        raise AlphabetError(f"matrix shape {A.shape} does not match path dimension {pts.shape[1]}")
    return pts @ A.T


def time_augment_path(path, times=None) -> np.ndarray:
    """Prepend a time column.  Defaults to normalized index time ``i/m``."""
    pts = as_path(path)
    m = pts.shape[0] - 1
    if times is None:
        t = np.arange(m + 1) / m if m > 0 else np.zeros(1)
    else:
        t = np.asarray(times, dtype=float).reshape(-1)
        if t.shape[0] != m + 1:
            raise ValueError("one time value per point is required")
    return np.column_stack([t, pts])
