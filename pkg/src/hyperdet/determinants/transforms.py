"""Group actions on multidimensional matrices."""

from __future__ import annotations

import random
from fractions import Fraction

from ..errors import Singular, WrongShape
from ..exactalg import Polynomial, RationalMatrix, det_rational
from ..mdmatrix import MDMatrix


def gl_action(a: MDMatrix, k: int, g) -> MDMatrix:
    """Replace the direction-k slices by a'_i = sum_j g[i][j] a_j."""
    rows = g.to_rows() if isinstance(g, RationalMatrix) else [list(r) for r in g]
    n = a.dims[k - 1] if 1 <= k <= a.format.d else None
    if n is None or len(rows) != n or any(len(r) != n for r in rows):
        raise WrongShape(f"g must be {n} x {n} for direction {k}")
    rows = [[Fraction(x) for x in r] for r in rows]
    if det_rational(rows) == 0:
        raise Singular("g is not invertible")
    symbolic = a.mode == "symbolic"
    if symbolic and any(x.denominator != 1 for r in rows for x in r):
        raise WrongShape("symbolic matrices accept integer transforms only")
    entries = []
    for idx in a.indices():
        i = idx[k - 1]
        acc = Polynomial() if symbolic else Fraction(0)
        for j in range(1, n + 1):
            c = rows[i - 1][j - 1]
            if c:
                src = idx[: k - 1] + (j,) + idx[k:]
                acc = acc + (a[src] * int(c) if symbolic else a[src] * c)
        entries.append(acc)
    return MDMatrix(a.format, entries, a.mode)


def random_unimodular(n: int, rng: random.Random, steps: int = 6, bound: int = 3) -> list:
    """Integer n x n matrix of determinant 1: a product of random elementary shears."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 1:
        return m
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([x for x in range(-bound, bound + 1) if x])
        m[i] = [x + c * y for x, y in zip(m[i], m[j])]
    return m
