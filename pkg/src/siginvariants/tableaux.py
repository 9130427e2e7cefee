"""Standard Young tableaux of rectangular shape (d rows, w columns)."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial


@dataclass(frozen=True)
class RectTableau:
    rows: tuple  # tuple of d row tuples, each of length w

    @classmethod
    def from_rows(cls, rows):
        t = cls(tuple(tuple(int(x) for x in r) for r in rows))
        if len({len(r) for r in t.rows}) > 1:
            raise ValueError("rows must all have the same length")
        return t

    @classmethod
    def from_columns(cls, cols):
        return cls.from_rows(zip(*cols))

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    @property
    def size(self):
        d, w = self.shape
        return d * w

    def columns(self):
        """Columns left to right, each read top to bottom."""
        return [tuple(c) for c in zip(*self.rows)]

    def column_reading(self):
        return tuple(x for c in self.columns() for x in c)

    def row_word(self):
        """Row index (1-based) of each entry 1..n."""
        where = {x: i + 1 for i, r in enumerate(self.rows) for x in r}
        return tuple(where[k] for k in range(1, self.size + 1))

    def sort_key(self):
        return self.row_word()[::-1]

    def is_standard(self) -> bool:
        d, w = self.shape
        if sorted(x for r in self.rows for x in r) != list(range(1, d * w + 1)):
            return False
        rows_ok = all(r[j] < r[j + 1] for r in self.rows for j in range(w - 1))
        cols_ok = all(c[i] < c[i + 1] for c in self.columns() for i in range(d - 1))
        return rows_ok and cols_ok

    def __str__(self):
        return "/".join(",".join(map(str, r)) for r in self.rows)


def enumerate_standard(d: int, w: int) -> list[RectTableau]:
    """All standard Young tableaux of the d x w rectangle.

    Built by placing 1..dw one at a time into a row whose length stays weakly
    below the row above.  Sorted lexicographically by the row word read from
    entry n down to entry 1; the column-filled tableau (columns 1..d,
    d+1..2d, ...) comes first.
    """
    if d < 1 or w < 1:
        raise ValueError("d and w must be positive")
    n = d * w
    rows = [[] for _ in range(d)]
    out = []

    def place(k):
        if k > n:
            out.append(RectTableau(tuple(tuple(r) for r in rows)))
            return
        for i in range(d):
            if len(rows[i]) < w and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                place(k + 1)
                rows[i].pop()

    place(1)
    out.sort(key=RectTableau.sort_key)
    return out


def hook_length_count(d: int, w: int) -> int:
    """Number of standard tableaux of the d x w rectangle by the hook length formula."""
    n = d * w
    hooks = 1
    for i in range(d):
        for j in range(w):
            hooks *= (w - j - 1) + (d - i - 1) + 1
    return factorial(n) // hooks
