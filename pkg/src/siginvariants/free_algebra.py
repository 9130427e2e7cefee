"""Words, non-commutative polynomials with exact rational coefficients, and
level-truncated tensor series.

A word is a tuple of integer letters.  Letters run over ``1..dim``; when a
polynomial or series is *augmented* the extra letter ``0`` stands for the time
coordinate and is fixed by every matrix action.

Polynomials are dual to tensor series: monomials are declared orthonormal, so
``pair(s, p)`` is the sum over words of ``s[w] * p[w]``.
"""

from __future__ import annotations

import itertools
import re
from collections import defaultdict
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

Word = tuple


def word_key(word):
    """Canonical order: shorter words first, then lexicographic."""
    return (len(word), tuple(word))


def _to_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (bool, np.bool_)):
        raise TypeError("boolean coefficient")
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, (float, np.floating)):
        # exact binary value of the float
        return Fraction(float(x))
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {x!r} as an exact coefficient")


class AlphabetError(ValueError):
    """Operands live over different alphabets, or a letter is out of range."""


class Polynomial:
    """A finite linear combination of words with exact rational coefficients.

    Instances are immutable.  Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "dim", "augmented", "_hash")

    def __init__(self, terms: Mapping | Iterable = (), dim: int = 1, augmented: bool = False):
        if dim < 0:
            raise ValueError("dim must be nonnegative")
        self.dim = int(dim)
        self.augmented = bool(augmented)
        lo = 0 if self.augmented else 1
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = defaultdict(Fraction)
        for word, coef in items:
            word = tuple(int(a) for a in word)
            for a in word:
                if not lo <= a <= self.dim:
                    raise AlphabetError(f"letter {a} outside alphabet {lo}..{self.dim}")
            acc[word] += _to_fraction(coef)
        self._terms = {w: c for w, c in acc.items() if c != 0}
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, dim, augmented=False):
        return cls({}, dim, augmented)

    @classmethod
    def one(cls, dim, augmented=False):
        return cls({(): 1}, dim, augmented)

    @classmethod
    def monomial(cls, word, dim, augmented=False, coef=1):
        return cls({tuple(word): coef}, dim, augmented)

    def _like(self, terms):
        return Polynomial(terms, self.dim, self.augmented)

    # container protocol

    @property
    def terms(self):
        return dict(self._terms)

    def __getitem__(self, word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def __iter__(self) -> Iterator[tuple]:
        return iter(sorted(self._terms, key=word_key))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def items(self):
        """(word, coefficient) pairs in canonical word order."""
        return [(w, self._terms[w]) for w in self]

    @property
    def alphabet(self):
        lo = 0 if self.augmented else 1
        return tuple(range(lo, self.dim + 1))

    @property
    def degree(self) -> int:
        """Length of the longest word; -1 for the zero polynomial."""
        return max((len(w) for w in self._terms), default=-1)

    def is_homogeneous(self, n=None) -> bool:
        lengths = {len(w) for w in self._terms}
        if n is None:
            return len(lengths) <= 1
        return lengths <= {n}

    # arithmetic

    def _check(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if (self.dim, self.augmented) != (other.dim, other.augmented):
            raise AlphabetError(
                f"alphabet mismatch: dim={self.dim},aug={self.augmented} vs "
                f"dim={other.dim},aug={other.augmented}"
            )

    def __add__(self, other):
        self._check(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return self._like(acc)

    def __neg__(self):
        return self._like({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, Polynomial):
            return NotImplemented
        s = _to_fraction(scalar)
        return self._like({w: s * c for w, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / _to_fraction(scalar))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.dim, self.augmented, self._terms) == (other.dim, other.augmented, other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self.augmented, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, dim={self.dim}, augmented={self.augmented})"

    def to_float_dict(self):
        return {w: float(c) for w, c in self.items()}


# ---------------------------------------------------------------------------
# text format:  +3/2*[1,2,1] -1*[2] +1*[]

_TERM_RE = re.compile(r"([+-])\s*(\d+(?:/\d+)?)\s*\*\s*\[([^\]]*)\]")


def format_polynomial(p: Polynomial) -> str:
    """Render in canonical term order, e.g. ``+1*[1,2] -1*[2,1]``.

    The zero polynomial renders as ``0``.
    """
    if not p:
        return "0"
    parts = []
    for w, c in p.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        num = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        parts.append(f"{sign}{num}*[{','.join(map(str, w))}]")
    return " ".join(parts)


def parse_polynomial(text: str, dim: int, augmented: bool = False) -> Polynomial:
    """Inverse of :func:`format_polynomial`."""
    text = text.strip()
    if text == "0":
        return Polynomial.zero(dim, augmented)
    terms = []
    pos = 0
    for m in _TERM_RE.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"unparseable polynomial text near {text[pos:m.start()]!r}")
        sign, coef, letters = m.groups()
        c = Fraction(coef) * (-1 if sign == "-" else 1)
        word = tuple(int(a) for a in letters.split(",")) if letters.strip() else ()
        terms.append((word, c))
        pos = m.end()
    if text[pos:].strip() or not terms:
        raise ValueError(f"unparseable polynomial text {text!r}")
    return Polynomial(terms, dim, augmented)


_COMPACT_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?(\d+)\s*")


def parse_compact(text: str, dim: int, augmented: bool = False) -> Polynomial:
    """Parse the short notation where each digit is one letter.

    ``"1212 - 1221 - 2112 + 2121"`` or ``"1/3*1221 - 2/3*1122"``.  Only usable
    for alphabets with single-digit letters.
    """
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _COMPACT_TERM.match(text, pos)
        if m is None or (out and m.group(1) is None):
            raise ValueError(f"unparseable compact polynomial near {text[pos:]!r}")
        sign, coef, word = m.groups()
        c = Fraction(coef) if coef else Fraction(1)
        out.append((tuple(int(ch) for ch in word), -c if sign == "-" else c))
        pos = m.end()
    return Polynomial(out, dim, augmented)


# ---------------------------------------------------------------------------
# products and linear maps


def concat_product(p: Polynomial, q: Polynomial) -> Polynomial:
    """Bilinear extension of word concatenation."""
    p._check(q)
    acc: dict = defaultdict(Fraction)
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            acc[u + v] += a * b
    return p._like(acc)


def shuffle_words(u: Sequence[int], v: Sequence[int]) -> dict:
    """All order-preserving interleavings of two words, with multiplicity."""
    u, v = tuple(u), tuple(v)
    n = len(u) + len(v)
    out: dict = defaultdict(int)
    for pos in itertools.combinations(range(n), len(u)):
        w = [0] * n
        slots = set(pos)
        iu = iter(u)
        iv = iter(v)
        for k in range(n):
            w[k] = next(iu) if k in slots else next(iv)
        out[tuple(w)] += 1
    return out


def shuffle_product(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    acc: dict = defaultdict(Fraction)
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            ab = a * b
            for w, k in shuffle_words(u, v).items():
                acc[w] += k * ab
    return p._like(acc)


def project_level(p: Polynomial, n: int) -> Polynomial:
    if n < 0:
        raise ValueError("level must be nonnegative")
    return p._like({w: c for w, c in p._terms.items() if len(w) == n})


def _matrix_entries(A, dim):
    rows = [list(r) for r in A]
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise AlphabetError(f"expected a {dim}x{dim} matrix")
    out = []
    for r in rows:
        conv = []
        for x in r:
            if isinstance(x, (int, np.integer)) and not isinstance(x, (bool, np.bool_)):
                conv.append(int(x))
            else:
                f = _to_fraction(x)
                conv.append(f.numerator if f.denominator == 1 else f)
        out.append(conv)
    return out


def apply_matrix(A, p: Polynomial) -> Polynomial:
    """Letter-wise linear action: ``x_i -> sum_j A[j][i] x_j``.

    Letter 0 of an augmented polynomial is fixed, i.e. the matrix acts as
    ``diag(1, A)``.  Entries may be ints, Fractions or floats; floats are
    converted exactly, so the result is always exact.
    """
    M = _matrix_entries(A, p.dim)
    image = {0: [(0, 1)]}
    for i in range(1, p.dim + 1):
        image[i] = [(j, M[j - 1][i - 1]) for j in range(1, p.dim + 1) if M[j - 1][i - 1] != 0]
    acc: dict = defaultdict(Fraction)
    for word, c in p._terms.items():
        for choice in itertools.product(*(image[a] for a in word)):
            coef = 1
            for _, x in choice:
                coef *= x
            acc[tuple(j for j, _ in choice)] += c * coef
    return p._like(acc)


def relabel(p: Polynomial, mapping: Mapping[int, int], dim: int | None = None) -> Polynomial:
    """Substitute letters, ``x_a -> x_{mapping[a]}``, into a (possibly larger) alphabet."""
    dim = p.dim if dim is None else dim
    return Polynomial(
        [(tuple(mapping.get(a, a) for a in w), c) for w, c in p._terms.items()], dim, p.augmented
    )


def with_alphabet(p: Polynomial, dim: int | None = None, augmented: bool | None = None) -> Polynomial:
    """The same terms viewed over another alphabet (letters must still fit)."""
    return Polynomial(
        p._terms,
        p.dim if dim is None else dim,
        p.augmented if augmented is None else augmented,
    )


def insert_after(p: Polynomial, letter: int, r: int) -> Polynomial:
    """Insert ``letter`` after position ``r`` in every word."""
    if r < 0:
        raise ValueError("position must be nonnegative")
    acc = []
    for w, c in p._terms.items():
        if len(w) < r:
            raise ValueError(f"word {w} shorter than insertion position {r}")
        acc.append((w[:r] + (letter,) + w[r:], c))
    return p._like(acc)


def insert_z(p: Polynomial, z: Sequence[int]) -> Polynomial:
    """Insert ``z[k]`` copies of the time letter 0 before the k-th letter (and
    ``z[-1]`` copies after the last one) of every word.

    The result lives over the augmented alphabet.
    """
    z = tuple(int(k) for k in z)
    if not z or any(k < 0 for k in z):
        raise ValueError("z must be a nonempty sequence of nonnegative ints")
    n = len(z) - 1
    out = []
    for w, c in p._terms.items():
        if len(w) != n:
            raise ValueError(f"word {w} has length {len(w)}, expected {n} for z={z}")
        new = []
        for k, a in enumerate(w):
            new.extend([0] * z[k])
            new.append(a)
        new.extend([0] * z[n])
        out.append((tuple(new), c))
    return Polynomial(out, p.dim, augmented=True)


def remove_zero(p: Polynomial) -> Polynomial:
    """Delete every occurrence of the time letter 0, collecting like terms."""
    return p._like([(tuple(a for a in w if a != 0), c) for w, c in p._terms.items()])


# ---------------------------------------------------------------------------
# tensor series


class TensorSeries:
    """Level-truncated element of the tensor algebra with float coefficients.

    Level k is stored as a flat array of length ``n_letters**k`` indexed by the
    word read as a base-``n_letters`` number (letters shifted to start at 0).
    """

    __slots__ = ("dim", "level", "augmented", "levels")

    def __init__(self, levels: Sequence[np.ndarray], dim: int, augmented: bool = False):
        self.dim = int(dim)
        self.augmented = bool(augmented)
        self.level = len(levels) - 1
        nl = self.n_letters
        arrs = []
        for k, a in enumerate(levels):
            a = np.array(a, dtype=float).reshape(-1)
            if a.shape[0] != nl**k:
                raise ValueError(f"level {k} has {a.shape[0]} entries, expected {nl**k}")
            a.setflags(write=False)
            arrs.append(a)
        if not arrs:
            raise ValueError("a series needs at least level 0")
        self.levels = tuple(arrs)

    @property
    def n_letters(self):
        return self.dim + (1 if self.augmented else 0)

    @property
    def offset(self):
        return 0 if self.augmented else 1

    @classmethod
    def identity(cls, dim, level, augmented=False):
        nl = dim + (1 if augmented else 0)
        levels = [np.ones(1)] + [np.zeros(nl**k) for k in range(1, level + 1)]
        return cls(levels, dim, augmented)

    def index(self, word) -> int:
        nl, off = self.n_letters, self.offset
        idx = 0
        for a in word:
            b = a - off
            if not 0 <= b < nl:
                raise AlphabetError(f"letter {a} outside alphabet")
            idx = idx * nl + b
        return idx

    def __getitem__(self, word) -> float:
        word = tuple(word)
        if len(word) > self.level:
            raise KeyError(f"word {word} longer than truncation level {self.level}")
        return float(self.levels[len(word)][self.index(word)])

    def words(self, k: int) -> Iterator[tuple]:
        letters = range(self.offset, self.offset + self.n_letters)
        return itertools.product(letters, repeat=k)

    def terms(self) -> dict:
        """Nonzero coefficients keyed by word (canonical order)."""
        out = {}
        for k in range(self.level + 1):
            for w, v in zip(self.words(k), self.levels[k]):
                if v != 0.0:
                    out[w] = float(v)
        return out

    def __repr__(self):
        return f"TensorSeries(dim={self.dim}, level={self.level}, augmented={self.augmented})"


def pair(s: TensorSeries, p: Polynomial) -> float:
    """Dual pairing: monomials are orthonormal."""
    if (s.dim, s.augmented) != (p.dim, p.augmented):
        raise AlphabetError("series and polynomial live over different alphabets")
    if p.degree > s.level:
        raise ValueError(f"polynomial degree {p.degree} exceeds truncation level {s.level}")
    total = 0.0
    for w, c in p._terms.items():
        total += float(c) * s.levels[len(w)][s.index(w)]
    return float(total)
