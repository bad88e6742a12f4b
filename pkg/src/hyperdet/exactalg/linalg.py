"""Exact linear algebra by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Sequence

from ..errors import NotSymmetric, WrongShape


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major Fractions

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise WrongShape(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise WrongShape("ragged rows")
        return cls(len(rows), ncols, tuple(Fraction(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_rows([list(c) for c in zip(*self.to_rows())]) if self.rows else self

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise WrongShape("inner dimensions differ")
        a, b = self.to_rows(), other.to_rows()
        return RationalMatrix.from_rows(
            [[sum((a[i][k] * b[k][j] for k in range(self.cols)), Fraction(0))
              for j in range(other.cols)] for i in range(self.rows)]
        )


def bareiss_det(rows: Sequence[Sequence], exact_div: Callable, zero, one):
    """Determinant over an integral domain via Bareiss elimination.

    ``exact_div(x, y)`` must return x / y when the division is exact; every
    division the algorithm performs is.
    """
    m = [list(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise WrongShape("determinant of a non-square matrix")
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k] == zero:
            for r in range(k + 1, n):
                if m[r][k] != zero:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(row_i[j] * pivot - mik * row_k[j], prev)
            row_i[k] = zero
        prev = pivot
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def _int_rows(rows: Sequence[Sequence]) -> list:
    """Scale each row by the lcm of its denominators (row space unchanged)."""
    out = []
    for r in rows:
        fr = [Fraction(x) for x in r]
        den = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * den) for x in fr])
    return out


def det_rational(rows: Sequence[Sequence]) -> Fraction:
    fr = [[Fraction(x) for x in r] for r in rows]
    scale = Fraction(1)
    ints = []
    for r in fr:
        den = lcm(*(x.denominator for x in r)) if r else 1
        scale /= den
        ints.append([int(x * den) for x in r])
    return scale * bareiss_det(ints, lambda x, y: x // y, 0, 1)


def echelon(rows: Sequence[Sequence]):
    """Fraction-free row echelon form of an integer-scaled copy.

    Returns ``(matrix, pivot_columns)``.
    """
    m = _int_rows(rows)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c, ncols):
                row_i[j] = (row_i[j] * piv - mic * row_r[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(echelon(rows)[1])


def rref(rows: Sequence[Sequence]):
    """Reduced row echelon form over the rationals; returns (rows, pivots)."""
    m, pivots = echelon(rows)
    red = [[Fraction(x) for x in m[i]] for i in range(len(pivots))]
    for i in reversed(range(len(pivots))):
        c = pivots[i]
        piv = red[i][c]
        red[i] = [x / piv for x in red[i]]
        for k in range(i):
            f = red[k][c]
            if f:
                red[k] = [a - f * b for a, b in zip(red[k], red[i])]
    return red, pivots


def nullspace_exact(M) -> list:
    """Basis of the right nullspace, itself in reduced echelon form."""
    rows = M.to_rows() if isinstance(M, RationalMatrix) else [list(r) for r in M]
    ncols = M.cols if isinstance(M, RationalMatrix) else (len(rows[0]) if rows else 0)
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(v)
    if not basis:
        return []
    return [list(r) for r in rref(basis)[0]]


def symmetric_rank(M) -> int:
    rows = M.to_rows() if isinstance(M, RationalMatrix) else [list(r) for r in M]
    n = len(rows)
    for i in range(n):
        if len(rows[i]) != n:
            raise NotSymmetric("matrix is not square")
        for j in range(i):
            if Fraction(rows[i][j]) != Fraction(rows[j][i]):
                raise NotSymmetric(f"entry ({i},{j}) differs from ({j},{i})")
    return rank(rows)


def primitive_int_vector(v: Sequence) -> list:
    """Scale a rational vector to a primitive integer vector (sign kept)."""
    fr = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g > 1 else ints
