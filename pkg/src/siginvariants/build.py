"""Rebuild basis polynomials from their generator records."""

from __future__ import annotations

from .descriptors import InvariantDescriptor
from .free_algebra import Polynomial, insert_z, parse_polynomial
from .gl import gl_invariant
from .perm import SetPartition, perm_invariant
from .so import IndexFamily, family_polynomial, zword_polynomial
from .tableaux import RectTableau


def from_generator(group: str, dim: int, generator: dict) -> Polynomial:
    """Polynomial described by ``generator`` (as stored in :class:`InvariantDescriptor`)."""
    group = group.upper()
    if group.endswith("0"):
        base = from_generator(group[:-1], dim, generator["base"])
        return insert_z(base, generator["z"])
    if group == "GL":
        t = RectTableau.from_rows(generator["tableau"])
        if not t.is_standard() or t.shape[0] != dim:
            raise ValueError(f"not a standard tableau with {dim} rows: {generator['tableau']}")
        return gl_invariant(t)
    if group == "SO":
        if "zword" in generator:
            if dim != 2:
                raise ValueError("z-words describe planar invariants only")
            zw = tuple(generator["zword"])
            return Polynomial.one(2) if not zw else zword_polynomial(zw, generator["part"])
        return family_polynomial(dim, IndexFamily.from_json(generator["family"]))
    if group == "PERM":
        blocks = generator["partition"]
        if not blocks:
            return Polynomial.one(dim)
        return perm_invariant(dim, SetPartition.from_blocks(blocks))
    raise ValueError(f"unknown group {group!r}")


def descriptor_from_dict(obj: dict) -> InvariantDescriptor:
    """Inverse of :meth:`InvariantDescriptor.to_dict` (the stored polynomial is kept as is)."""
    group = obj["group"]
    dim = int(obj["dim"])
    poly = parse_polynomial(obj["polynomial"], dim, augmented=group.endswith("0"))
    return InvariantDescriptor(
        group=group,
        dim=dim,
        level=int(obj["level"]),
        polynomial=poly,
        generator=obj["generator"],
        weight=obj.get("weight"),
        notes=tuple(obj.get("notes", ())),
    )


def matches_generator(desc: InvariantDescriptor) -> bool:
    return from_generator(desc.group, desc.dim, desc.generator) == desc.polynomial
