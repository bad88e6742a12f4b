"""Maximal minors of pencils, hyperplucker coordinates and corank tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import WrongFormat, WrongShape
from ..exactalg import RationalMatrix, det_rational, isolate_real_roots, qpoly_divmod, qpoly_gcd, symmetric_rank
from ..exactalg.univariate import qpoly_derivative, qpoly_trim
from ..mdmatrix import Kind, MDMatrix, classify_format, m_sequence
from ..qpaths import canonical_subsets
from .dispatch import det_dispatch
from .pencil import char_coeffs_numeric


def _rows(M) -> list:
    rows = M.to_rows() if isinstance(M, RationalMatrix) else [list(r) for r in M]
    return [[Fraction(x) for x in r] for r in rows]


def maximal_minors_pencil(As: Sequence, z: Sequence) -> list:
    """All n x n minors of S(z) = sum z_i A_i, columns taken in canonical subset order."""
    mats = [_rows(A) for A in As]
    if not mats or len(mats) != len(z):
        raise WrongShape("need one coefficient per matrix and at least one matrix")
    n, m = len(mats[0]), len(mats[0][0]) if mats[0] else 0
    if any(len(A) != n or any(len(r) != m for r in A) for A in mats) or n > m:
        raise WrongShape("pencil matrices must share a shape n x m with n <= m")
    S = [[sum((Fraction(zi) * A[i][j] for zi, A in zip(z, mats)), Fraction(0)) for j in range(m)]
         for i in range(n)]
    return [det_rational([[S[i][c - 1] for c in J] for i in range(n)]) for J in canonical_subsets(m, n)]


@dataclass(frozen=True)
class RankDropWitness:
    kind: str  # "rational", "real-algebraic" or "complex-algebraic"
    z: tuple | None  # exact point for rational witnesses
    polynomial: tuple | None = None  # t with z = (t, 1) is a root of this polynomial
    interval: tuple | None = None  # isolating interval (lo, hi] of a real root

    def to_json(self) -> dict:
        fmt = lambda x: str(x)  # noqa: E731
        return {
            "kind": self.kind,
            "z": [fmt(x) for x in self.z] if self.z is not None else None,
            "polynomial": [fmt(c) for c in self.polynomial] if self.polynomial is not None else None,
            "interval": [fmt(x) for x in self.interval] if self.interval is not None else None,
        }


@dataclass(frozen=True)
class RankDrop:
    exists: bool
    witness: RankDropWitness | None


def _rational_root(p: list):
    """A rational root of p (coefficients Fractions, lowest first), or None."""
    from math import lcm

    p = qpoly_trim(p)
    if len(p) <= 1:
        return None
    if p[0] == 0:
        return Fraction(0)
    den = lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    a0, an = abs(ints[0]), abs(ints[-1])
    divs = lambda x: [d for d in range(1, x + 1) if x % d == 0]  # noqa: E731
    for num in divs(a0):
        for d in divs(an):
            for s in (1, -1):
                r = Fraction(s * num, d)
                acc = Fraction(0)
                for c in reversed(p):
                    acc = acc * r + c
                if acc == 0:
                    return r
    return None


def pencil_rank_drop_oracle(B1, B2) -> RankDrop:
    """Decide whether z1*B1 + z2*B2 drops rank for some nonzero (z1, z2) over C."""
    b1, b2 = _rows(B1), _rows(B2)
    n = len(b1)
    m = len(b1[0]) if n else 0
    if n == 0 or len(b2) != n or any(len(r) != m for r in b1 + b2) or n > m:
        raise WrongShape("B1, B2 must both be n x m with 1 <= n <= m")
    # the point z = (1, 0)
    if all(x == 0 for x in maximal_minors_pencil([b1, b2], [1, 0])):
        return RankDrop(True, RankDropWitness("rational", (Fraction(1), Fraction(0))))
    # the chart z = (t, 1): det(B2_J + t B1_J) for every column set J
    g: list = []
    for J in canonical_subsets(m, n):
        A = [[b2[i][c - 1] for c in J] for i in range(n)]
        B = [[b1[i][c - 1] for c in J] for i in range(n)]
        g = qpoly_gcd(g, char_coeffs_numeric(A, B))
        if len(g) == 1:
            return RankDrop(False, None)
    if not g:
        return RankDrop(True, RankDropWitness("rational", (Fraction(0), Fraction(1))))
    r = _rational_root(g)
    if r is not None:
        return RankDrop(True, RankDropWitness("rational", (r, Fraction(1)), tuple(g)))
    sqfree = qpoly_divmod(g, qpoly_gcd(g, qpoly_derivative(g)))[0]
    roots = isolate_real_roots(sqfree)
    if roots:
        return RankDrop(True, RankDropWitness("real-algebraic", None, tuple(sqfree), roots[0]))
    return RankDrop(True, RankDropWitness("complex-algebraic", None, tuple(sqfree)))


# -- hyperplucker coordinates ------------------------------------------------------

@dataclass(frozen=True)
class PluckerVector:
    direction: int  # the distinguished (long) direction, 1-based
    coordinates: tuple  # ((J, DetResult), ...) with J in canonical subset order

    def __len__(self) -> int:
        return len(self.coordinates)

    @property
    def all_vanish(self) -> bool:
        return all(r.is_zero() for _, r in self.coordinates)


def hyperplucker(a: MDMatrix, **kw) -> PluckerVector:
    """Determinants of all boundary minors taken along the long direction."""
    cls = classify_format(a.format)
    if cls.kind is not Kind.GRASSMAN:
        raise WrongFormat(f"{a.format} is not a grassman format")
    j = cls.direction
    others = tuple(n for k, n in enumerate(a.dims) if k != j - 1)
    m_r = m_sequence(others)[-1] if others else 1
    coords = []
    for J in canonical_subsets(a.dims[j - 1], m_r):
        sel = [tuple(range(1, n + 1)) for n in a.dims]
        sel[j - 1] = J
        coords.append((J, det_dispatch(a.subtensor(sel), **kw)))
    return PluckerVector(j, tuple(coords))


# -- corank for 2 x 2 x n ----------------------------------------------------------

@dataclass(frozen=True)
class CorankReport:
    rank: int
    corank_one: bool
    gram: tuple  # the symmetric matrix of det(z_1 A_1 + ... + z_n A_n)

    def to_json(self) -> dict:
        return {"rank": self.rank, "corankOne": self.corank_one,
                "gram": [[str(x) for x in r] for r in self.gram]}


def corank_22n(a: MDMatrix) -> CorankReport:
    if a.format.d != 3 or a.dims[:2] != (2, 2) or a.dims[2] < 4:
        raise WrongFormat(f"expected a 2 x 2 x n format with n >= 4, got {a.format}")
    if a.mode != "numeric":
        raise WrongFormat("corank needs a numeric matrix")
    n = a.dims[2]
    s = [[[a[(i, j, k)] for j in (1, 2)] for i in (1, 2)] for k in range(1, n + 1)]
    gram = [[(s[i][0][0] * s[j][1][1] + s[j][0][0] * s[i][1][1]
              - s[i][0][1] * s[j][1][0] - s[j][0][1] * s[i][1][0]) / 2
             for j in range(n)] for i in range(n)]
    r = symmetric_rank(gram)
    return CorankReport(r, r == 2, tuple(tuple(row) for row in gram))
