"""Multidimensional matrices, their formats and the format taxonomy.

Entries are stored densely with the first index slowest and the last index
fastest. A matrix is either *numeric* (entries are Fractions) or *symbolic*
(entries are Polynomials; a freshly built symbolic matrix holds the distinct
variables ``a[i1,...,id]``).
"""

from __future__ import annotations

import enum
import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

from .errors import EmptySelection, IndexOutOfRange, ParseError, WrongShape
from .exactalg import Polynomial


@dataclass(frozen=True)
class Format:
    dims: tuple

    def __post_init__(self):
        dims = tuple(int(n) for n in self.dims)
        if not dims or any(n < 1 for n in dims):
            raise WrongShape(f"invalid format {self.dims!r}")
        object.__setattr__(self, "dims", dims)

    @property
    def d(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        return prod(self.dims)

    @property
    def mseq(self) -> tuple:
        return m_sequence(self)

    def reduced(self) -> "Format":
        """Drop size-1 directions, keeping one when all have size 1."""
        kept = tuple(n for n in self.dims if n > 1)
        return Format(kept or (1,))

    def __str__(self) -> str:
        return "x".join(str(n) for n in self.dims)


def m_sequence(f) -> tuple:
    """(m_0, ..., m_d) with m_0 = 1 and m_k = m_{k-1} + n_k - 1."""
    dims = f.dims if isinstance(f, Format) else tuple(f)
    m = [1]
    for n in dims:
        m.append(m[-1] + n - 1)
    return tuple(m)


class Kind(enum.Enum):
    SQUARE2D = "square2d"
    INNER = "inner"
    BOUNDARY = "boundary"
    GRASSMAN = "grassman"


@dataclass(frozen=True)
class FormatClass:
    kind: Kind
    direction: int | None = None  # 1-based, distinguished direction in the original format

    @property
    def has_determinant(self) -> bool:
        return self.kind is not Kind.GRASSMAN


def classify_format(f) -> FormatClass:
    f = f if isinstance(f, Format) else Format(tuple(f))
    live = [k for k, n in enumerate(f.dims) if n > 1]
    if not live:
        return FormatClass(Kind.BOUNDARY, 1)
    dims = [f.dims[k] for k in live]
    if len(dims) == 2 and dims[0] == dims[1]:
        return FormatClass(Kind.SQUARE2D)
    excess = sum(n - 1 for n in dims)
    boundary = None
    for pos, n in enumerate(dims):
        others = excess - (n - 1)
        if n - 1 > others:
            return FormatClass(Kind.GRASSMAN, live[pos] + 1)
        if n - 1 == others and boundary is None:
            boundary = live[pos] + 1
    if boundary is not None:
        return FormatClass(Kind.BOUNDARY, boundary)
    return FormatClass(Kind.INNER)


@dataclass(frozen=True)
class DegeneracyWitness:
    vectors: tuple  # one tuple of Fractions per direction

    def __post_init__(self):
        vecs = tuple(tuple(Fraction(x) for x in v) for v in self.vectors)
        if any(x == 0 for v in vecs for x in v):
            raise ValueError("witness coordinates must all be nonzero")
        object.__setattr__(self, "vectors", vecs)

    def to_json(self) -> dict:
        return {
            "format": [len(v) for v in self.vectors],
            "vectors": [[_rat_out(x) for x in v] for v in self.vectors],
        }

    @classmethod
    def from_json(cls, obj) -> "DegeneracyWitness":
        try:
            return cls(tuple(tuple(_rat_in(x) for x in v) for v in obj["vectors"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad witness: {exc}") from None


class MDMatrix:
    """A d-dimensional matrix of exact scalars or polynomials."""

    __slots__ = ("format", "entries", "mode")

    def __init__(self, fmt, entries: Sequence, mode: str | None = None):
        self.format = fmt if isinstance(fmt, Format) else Format(tuple(fmt))
        entries = tuple(entries)
        if len(entries) != self.format.size:
            raise WrongShape(f"{len(entries)} entries for format {self.format}")
        if mode is None:
            mode = "symbolic" if entries and isinstance(entries[0], Polynomial) else "numeric"
        if mode == "numeric":
            entries = tuple(Fraction(x) for x in entries)
        elif mode == "symbolic":
            entries = tuple(
                x if isinstance(x, Polynomial) else Polynomial.constant(int(x)) for x in entries
            )
        else:
            raise ValueError(f"unknown mode {mode!r}")
        self.entries = entries
        self.mode = mode

    # -- indexing ---------------------------------------------------------
    @property
    def dims(self) -> tuple:
        return self.format.dims

    def offset(self, idx: Sequence[int]) -> int:
        off = 0
        for i, n in zip(idx, self.dims):
            if not 1 <= i <= n:
                raise IndexOutOfRange(f"index {tuple(idx)} outside format {self.format}")
            off = off * n + (i - 1)
        if len(idx) != len(self.dims):
            raise IndexOutOfRange(f"index {tuple(idx)} has wrong length")
        return off

    def __getitem__(self, idx):
        return self.entries[self.offset(idx)]

    def indices(self) -> Iterable[tuple]:
        return itertools.product(*(range(1, n + 1) for n in self.dims))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MDMatrix)
            and self.format == other.format
            and self.mode == other.mode
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.format, self.mode, self.entries))

    def __repr__(self) -> str:
        return f"MDMatrix({self.format}, {self.mode})"

    def is_generic(self) -> bool:
        """True when the entries are pairwise distinct bare variables."""
        if self.mode != "symbolic":
            return False
        seen = set()
        for e in self.entries:
            if len(e) != 1:
                return False
            ((m, c),) = e.terms()
            if c != 1 or len(m) != 1 or m[0][1] != 1 or m[0][0] in seen:
                return False
            seen.add(m[0][0])
        return True

    def variable_map(self) -> dict:
        """Offset -> variable for generic symbolic matrices."""
        return {k: e.terms()[0][0][0][0] for k, e in enumerate(self.entries)}

    # -- structural operations -----------------------------------------------
    def slice(self, k: int, i: int) -> "MDMatrix":
        """Fix index i in direction k (both 1-based)."""
        if not 1 <= k <= self.format.d:
            raise IndexOutOfRange(f"direction {k} outside 1..{self.format.d}")
        if not 1 <= i <= self.dims[k - 1]:
            raise IndexOutOfRange(f"index {i} outside 1..{self.dims[k - 1]}")
        if self.format.d == 1:
            return MDMatrix((1,), [self.entries[i - 1]], self.mode)
        sel = [tuple(range(1, n + 1)) for n in self.dims]
        sel[k - 1] = (i,)
        sub = self.subtensor(sel)
        new_dims = self.dims[: k - 1] + self.dims[k:]
        return MDMatrix(new_dims, sub.entries, self.mode)

    def subtensor(self, selections: Sequence[Sequence[int]]) -> "MDMatrix":
        if len(selections) != self.format.d:
            raise IndexOutOfRange("one selection per direction is required")
        sel = []
        for k, s in enumerate(selections):
            s = tuple(sorted(set(int(x) for x in s)))
            if not s:
                raise EmptySelection(f"empty selection in direction {k + 1}")
            if s[0] < 1 or s[-1] > self.dims[k]:
                raise IndexOutOfRange(f"selection {s} outside 1..{self.dims[k]}")
            sel.append(s)
        entries = [self.entries[self.offset(idx)] for idx in itertools.product(*sel)]
        return MDMatrix(tuple(len(s) for s in sel), entries, self.mode)

    def permute(self, order: Sequence[int]) -> "MDMatrix":
        """New matrix whose direction r is direction ``order[r]`` (1-based) of self."""
        order = tuple(order)
        if sorted(order) != list(range(1, self.format.d + 1)):
            raise ValueError(f"{order} is not a permutation of the directions")
        new_dims = tuple(self.dims[o - 1] for o in order)
        entries = []
        for idx in itertools.product(*(range(1, n + 1) for n in new_dims)):
            src = [0] * self.format.d
            for r, o in enumerate(order):
                src[o - 1] = idx[r]
            entries.append(self.entries[self.offset(src)])
        return MDMatrix(new_dims, entries, self.mode)

    def reduce(self) -> "MDMatrix":
        """Drop size-1 directions (entries are unchanged)."""
        return MDMatrix(self.format.reduced(), self.entries, self.mode)

    def map_entries(self, fn) -> "MDMatrix":
        return MDMatrix(self.format, [fn(e) for e in self.entries])

    # -- serialization --------------------------------------------------------
    def to_json(self) -> dict:
        if self.mode == "symbolic":
            if self != symbolic(self.format):
                raise ValueError("only the generic symbolic matrix has a file form")
            return {"format": list(self.dims), "mode": "symbolic"}
        return {
            "format": list(self.dims),
            "mode": "numeric",
            "entries": [_rat_out(x) for x in self.entries],
        }

    @classmethod
    def from_json(cls, obj) -> "MDMatrix":
        if isinstance(obj, dict) and "matrix" in obj and "format" not in obj:
            obj = obj["matrix"]
        try:
            fmt = Format(tuple(int(n) for n in obj["format"]))
            mode = obj.get("mode", "numeric")
            if mode == "symbolic":
                return symbolic(fmt)
            if mode != "numeric":
                raise ValueError(f"unknown mode {mode!r}")
            return cls(fmt, [_rat_in(x) for x in obj["entries"]], "numeric")
        except ParseError:
            raise
        except (KeyError, TypeError, ValueError, WrongShape) as exc:
            raise ParseError(f"bad matrix file: {exc}") from None


def _rat_out(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _rat_in(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise ValueError(f"non-exact entry {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and x.strip():
        return Fraction(x.strip())
    raise ValueError(f"bad entry {x!r}")


def load_matrix(path: str) -> MDMatrix:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None
    return MDMatrix.from_json(obj)


def symbolic(f) -> MDMatrix:
    f = f if isinstance(f, Format) else Format(tuple(f))
    return MDMatrix(
        f,
        [Polynomial.variable(idx) for idx in itertools.product(*(range(1, n + 1) for n in f.dims))],
        "symbolic",
    )


def numeric(f, values: Sequence) -> MDMatrix:
    return MDMatrix(f, values, "numeric")


def from_nested(rows) -> MDMatrix:
    """Build a numeric matrix from nested lists (first index outermost)."""
    dims = []
    cur = rows
    while isinstance(cur, (list, tuple)):
        dims.append(len(cur))
        cur = cur[0]
    flat = []

    def walk(x, depth):
        if depth == len(dims):
            flat.append(x)
            return
        if len(x) != dims[depth]:
            raise WrongShape("ragged nested list")
        for y in x:
            walk(y, depth + 1)

    walk(rows, 0)
    return MDMatrix(tuple(dims), flat, "numeric")


def random_rational(f, seed: int, bound: int = 10) -> MDMatrix:
    """I.i.d. uniform integers in [-bound, bound] from a seeded generator."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    f = f if isinstance(f, Format) else Format(tuple(f))
    rng = random.Random(seed)
    return MDMatrix(f, [rng.randint(-bound, bound) for _ in range(f.size)], "numeric")


def stack(slices: Sequence[MDMatrix]) -> MDMatrix:
    """Stack (d-1)-dimensional matrices along a new last direction."""
    base = slices[0].format
    if any(s.format != base for s in slices):
        raise WrongShape("slices must share one format")
    dims = base.dims + (len(slices),)
    entries = [s.entries[k] for k in range(base.size) for s in slices]
    mode = "symbolic" if any(s.mode == "symbolic" for s in slices) else "numeric"
    if mode == "symbolic":
        entries = [e if isinstance(e, Polynomial) else Polynomial.constant(int(e)) for e in entries]
    return MDMatrix(dims, entries, mode)


def matrix2d(rows: Sequence[Sequence]) -> MDMatrix:
    return from_nested([list(r) for r in rows])


def _subsets(n: int) -> list:
    out = []
    for size in range(1, n + 1):
        out.extend(itertools.combinations(range(1, n + 1), size))
    return out


def enumerate_minor_subformats(f) -> list:
    """All index grids whose reduced format admits a determinant.

    Returns ``(selections, Format)`` pairs, single entries first and the full
    format (when it admits a determinant) last.
    """
    f = f if isinstance(f, Format) else Format(tuple(f))
    out = []
    for sel in itertools.product(*(_subsets(n) for n in f.dims)):
        sub = Format(tuple(len(s) for s in sel))
        if classify_format(sub).has_determinant:
            out.append((sel, sub))
    return out
