"""Command line interface: ``siginv basis | features | verify | volume``.

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from math import factorial

import numpy as np

from . import __version__
from .build import descriptor_from_dict, matches_generator
from .descriptors import VerificationReport
from .free_algebra import format_polynomial, pair
from .geometry import signed_volume, signed_volume_determinant_sum
from .gl import gl_basis, verify_gl_invariance
from .perm import perm_basis, verify_perm_invariance
from .signature import signature, time_augment_path
from .so import so_basis, verify_so_invariance
from .time_augment import augmented_basis, verify_augmented_invariance

THREADS_ENV = "SIGINV_THREADS"
MAX_LEVEL = 12


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# basis selection


def select_basis(group, d, level=None, weight=None, time_augment=False):
    """The basis named on the command line (one level, or one weight for GL)."""
    group = group.upper()
    if d < 1:
        raise InputError("--dim must be positive")
    if group in ("SO", "PERM") and weight is not None:
        raise InputError("--weight applies to gl only")
    if group == "SO" and d < 2:
        raise InputError("so needs --dim >= 2")
    if level is not None and not 0 <= level <= MAX_LEVEL:
        raise InputError(f"--level must be in 0..{MAX_LEVEL}")
    if time_augment:
        if level is None:
            raise InputError("--time-augment needs --level (the total level)")
        if group == "GL" and weight is None:
            raise InputError("gl with --time-augment needs --weight")
        return augmented_basis(group, d, level, weight=weight)
    if group == "GL":
        if weight is None:
            if level is None:
                raise InputError("gl needs --weight or --level")
            if level < 1 or level % d:
                raise InputError(f"gl level must be a positive multiple of dim={d}, got {level}")
            weight = level // d
        elif level is not None and level != weight * d:
            raise InputError(f"--level {level} does not match --weight {weight} at dim {d}")
        if weight < 1 or weight * d > MAX_LEVEL:
            raise InputError(f"gl weight must satisfy 1 <= weight*dim <= {MAX_LEVEL}")
        return gl_basis(d, weight)
    if level is None:
        raise InputError(f"{group.lower()} needs --level")
    return so_basis(d, level) if group == "SO" else perm_basis(d, level)


def feature_basis(group, d, budget, time_augment=False):
    """Every basis element of degree 1..budget."""
    group = group.upper()
    out = []
    for n in range(1, budget + 1):
        if time_augment:
            if group == "GL":
                for w in range(1, n // d + 1):
                    out += augmented_basis("GL", d, n, weight=w)
            else:
                out += augmented_basis(group, d, n)
        elif group == "GL":
            if n % d == 0:
                out += gl_basis(d, n // d)
        elif group == "SO":
            out += so_basis(d, n)
        else:
            out += perm_basis(d, n)
    return out


# ---------------------------------------------------------------------------
# CSV input


def _parse_row(row):
    return [float(x) for x in row]


def read_series(path, time_column=None):
    """Points (rows) from a CSV file; returns ``(points, times_or_None)``.

    A first row that does not parse as numbers is treated as a header.
    ``time_column`` is a 0-based index or a header name.
    """
    try:
        fh = open(path, newline="", encoding="utf-8")
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    rows, header, ncols = [], None, None
    with fh:
        for lineno, row in enumerate(csv.reader(fh), 1):
            if not row or all(not c.strip() for c in row):
                continue
            try:
                values = _parse_row(row)
            except ValueError:
                if ncols is None:
                    header = [c.strip() for c in row]
                    ncols = len(header)
                    continue
                raise InputError(f"{path}:{lineno}: non-numeric value in {row!r}") from None
            if ncols is None:
                ncols = len(values)
            elif len(values) != ncols:
                raise InputError(f"{path}:{lineno}: expected {ncols} columns, got {len(values)}")
            rows.append((lineno, values))
    if not rows:
        raise InputError(f"{path}: no data rows")
    data = np.array([v for _, v in rows], dtype=float)
    if not np.all(np.isfinite(data)):
        bad = next(ln for ln, v in rows if not np.all(np.isfinite(v)))
        raise InputError(f"{path}:{bad}: non-finite value")
    if time_column is None:
        return data, None
    col = _column_index(time_column, header, data.shape[1], path)
    if data.shape[1] < 2:
        raise InputError(f"{path}: a time column leaves no space coordinates")
    times = data[:, col]
    if np.any(np.diff(times) < 0):
        raise InputError(f"{path}: time column must be nondecreasing")
    return np.delete(data, col, axis=1), times


def _column_index(name, header, ncols, path):
    try:
        col = int(name)
    except ValueError:
        if header is None or name not in header:
            raise InputError(f"{path}: no column named {name!r}") from None
        return header.index(name)
    if not 0 <= col < ncols:
        raise InputError(f"{path}: time column {col} out of range (0..{ncols - 1})")
    return col


# ---------------------------------------------------------------------------
# commands


def _emit(text, output):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def cmd_basis(args):
    basis = select_basis(args.group, args.dim, args.level, args.weight, args.time_augment)
    if args.format == "json":
        meta = {
            "group": args.group.upper() + ("0" if args.time_augment else ""),
            "dim": args.dim,
            "level": args.level,
            "weight": args.weight,
            "version": __version__,
        }
        _emit(_dump({"meta": meta, "basis": [b.to_dict() for b in basis]}), args.output)
        return 0
    lines = []
    for b in basis:
        w = f" weight={b.weight}" if b.weight is not None else ""
        lines.append(f"# {b.group} dim={b.dim} level={b.level}{w} generator={json.dumps(b.generator)}")
        lines.append(format_polynomial(b.polynomial))
    _emit("".join(line + "\n" for line in lines), args.output)
    return 0


def _series_features(path, basis, args):
    pts, times = read_series(path, args.time_column)
    d = pts.shape[1]
    if d != args.dim:
        raise InputError(f"{path}: {d} coordinates but --dim {args.dim}")
    augmented = args.time_augment or times is not None
    if augmented:
        pts = time_augment_path(pts, times)
    sig = signature(pts, args.signature_level, augmented=augmented)
    return [
        {
            "series": path,
            "group": b.group,
            "dim": b.dim,
            "level": b.level,
            "weight": b.weight,
            "generator": b.generator,
            "value": pair(sig, b.polynomial),
        }
        for b in basis
    ]


def cmd_features(args):
    if args.time_column is not None:
        args.time_augment = True
    if args.level < 1:
        raise InputError("--level must be at least 1")
    if args.signature_level is None:
        args.signature_level = args.level
    if args.level > args.signature_level:
        raise InputError(f"level budget {args.level} exceeds signature truncation {args.signature_level}")
    if args.level > MAX_LEVEL:
        raise InputError(f"--level must be at most {MAX_LEVEL}")
    if args.dim < (2 if args.group == "so" else 1):
        raise InputError(f"--dim {args.dim} is too small for {args.group}")
    basis = feature_basis(args.group, args.dim, args.level, args.time_augment)
    threads = _threads()
    if threads > 1 and len(args.inputs) > 1:
        with ThreadPoolExecutor(threads) as ex:
            results = list(ex.map(lambda p: _series_features(p, basis, args), args.inputs))
    else:
        results = [_series_features(p, basis, args) for p in args.inputs]
    meta = {
        "group": args.group.upper() + ("0" if args.time_augment else ""),
        "dim": args.dim,
        "level": args.level,
        "signature_level": args.signature_level,
        "version": __version__,
    }
    _emit(_dump({"meta": meta, "features": [r for res in results for r in res]}), args.output)
    return 0


def _threads():
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    return max(1, n)


def verify_descriptor(desc, trials, seed) -> VerificationReport:
    if desc.augmented:
        return verify_augmented_invariance(desc, trials=trials, seed=seed)
    if desc.group == "GL":
        return verify_gl_invariance(desc, trials=trials, seed=seed)
    if desc.group == "SO":
        return verify_so_invariance(desc, trials=trials, seed=seed)
    return verify_perm_invariance(desc, trials=trials, seed=seed)


def _load_basis_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}:{e.lineno}: invalid JSON ({e.msg})") from None
    entries = obj["basis"] if isinstance(obj, dict) and "basis" in obj else obj
    if not isinstance(entries, list):
        raise InputError(f"{path}: expected a list of basis entries")
    try:
        return [descriptor_from_dict(e) for e in entries]
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"{path}: malformed basis entry ({e})") from None


def cmd_verify(args):
    if args.basis_file:
        basis = _load_basis_file(args.basis_file)
    else:
        basis = select_basis(args.group, args.dim, args.level, args.weight, args.time_augment)
    failures = 0
    for i, desc in enumerate(basis):
        label = f"[{i}] {desc.group} {json.dumps(desc.generator)}"
        if args.basis_file:
            try:
                ok = matches_generator(desc)
            except (KeyError, TypeError, ValueError) as e:
                raise InputError(f"{args.basis_file}: entry {i}: bad generator ({e})") from None
            if not ok:
                print(f"FAIL {label}: polynomial does not match its generator")
        else:
            ok = True
        rep = verify_descriptor(desc, args.trials, args.seed + i)
        failures += not (ok and rep.passed)
        print(f"{label}: {rep.summary()}")
    print(f"{len(basis) - failures}/{len(basis)} passed")
    return 1 if failures else 0


def cmd_volume(args):
    pts, _ = read_series(args.input)
    d = pts.shape[1]
    out = []
    if args.method in ("pairing", "both"):
        pv = signed_volume(pts)
        out.append(f"pairing: {pv!r}")
    if args.method in ("determinant", "both"):
        if pts.shape[0] < d + 1:
            raise InputError(f"{args.input}: determinant method needs at least {d + 1} points, got {pts.shape[0]}")
        dv = signed_volume_determinant_sum(pts) / factorial(d)
        out.append(f"determinant: {dv!r}")
    if args.method == "both":
        out.append(f"difference: {abs(pv - dv)!r}")
    print("\n".join(out))
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="siginv", description="Invariant signature features of multidimensional paths.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def group_args(sp, need_group=True):
        sp.add_argument("--group", choices=["gl", "so", "perm"], type=str.lower, required=need_group)
        sp.add_argument("--dim", type=int, required=need_group)
        sp.add_argument("--level", type=int, help="level (total level with --time-augment)")
        sp.add_argument("--weight", type=int, help="GL weight")
        sp.add_argument("--time-augment", action="store_true", help="add a time coordinate (letter 0)")

    b = sub.add_parser("basis", help="list a basis of invariants")
    group_args(b)
    b.add_argument("--format", choices=["text", "json"], default="text")
    b.add_argument("--output")
    b.set_defaults(func=cmd_basis)

    f = sub.add_parser("features", help="invariant features of CSV time series")
    f.add_argument("inputs", nargs="+", help="CSV files, one series each")
    f.add_argument("--group", choices=["gl", "so", "perm"], type=str.lower, required=True)
    f.add_argument("--dim", type=int, required=True)
    f.add_argument("--level", type=int, required=True, help="largest invariant degree")
    f.add_argument("--signature-level", type=int, help="signature truncation (default: --level)")
    f.add_argument("--time-augment", action="store_true")
    f.add_argument("--time-column", help="column (index or header name) to use as time")
    f.add_argument("--output")
    f.set_defaults(func=cmd_features)

    v = sub.add_parser("verify", help="check invariance of a basis")
    group_args(v, need_group=False)
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--basis-file", help="JSON written by 'basis --format json'")
    v.set_defaults(func=cmd_verify)

    vol = sub.add_parser("volume", help="signed volume of a polyline")
    vol.add_argument("input")
    vol.add_argument("--method", choices=["pairing", "determinant", "both"], default="pairing")
    vol.set_defaults(func=cmd_volume)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    if args.command == "verify" and not args.basis_file and (args.group is None or args.dim is None):
        print("siginv verify: --group and --dim are required without --basis-file", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except InputError as e:
        print(f"siginv {args.command}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
