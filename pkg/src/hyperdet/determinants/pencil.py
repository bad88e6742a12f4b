"""The n x n x 2 determinant as the discriminant of det(A + zB)."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from ..errors import WrongFormat
from ..exactalg import Polynomial, det_rational, univariate_discriminant
from ..exactalg.polynomial import mono_from_vars_exp
from ..mdmatrix import MDMatrix
from ..qpaths import perm_sign
from .result import DetResult, finish


def pencil_frame(dims: tuple) -> tuple | None:
    """Directions (i, j, z) with n_i = n_j = n >= 2 and n_z = 2, or None."""
    live = [k + 1 for k, n in enumerate(dims) if n > 1]
    if len(live) != 3:
        return None
    for z in reversed(live):
        rest = [k for k in live if k != z]
        if dims[z - 1] == 2 and dims[rest[0] - 1] == dims[rest[1] - 1]:
            return (rest[0], rest[1], z)
    return None


@lru_cache(maxsize=8)
def universal_discriminant(n: int) -> Polynomial:
    """Discriminant of c_0 + c_1 z + ... + c_n z^n in the variables c_k = (k + 1,)."""
    coeffs = [Polynomial.variable((k + 1,)) for k in range(n + 1)]
    return univariate_discriminant(coeffs, n)


def _char_coeffs_symbolic(n: int) -> list:
    """Coefficients of det(A + zB) with A = a[i,j,1], B = a[i,j,2]."""
    out = [Polynomial() for _ in range(n + 1)]
    for perm in itertools.permutations(range(n)):
        acc = [Polynomial.constant(perm_sign(perm))]
        for i in range(n):
            lo = Polynomial.variable((i + 1, perm[i] + 1, 1))
            hi = Polynomial.variable((i + 1, perm[i] + 1, 2))
            nxt = [Polynomial() for _ in range(len(acc) + 1)]
            for k, c in enumerate(acc):
                nxt[k] = nxt[k] + c * lo
                nxt[k + 1] = nxt[k + 1] + c * hi
            acc = nxt
        out = [x + y for x, y in zip(out, acc)]
    return out


@lru_cache(maxsize=8)
def pencil_formal(n: int) -> Polynomial:
    c = _char_coeffs_symbolic(n)
    return universal_discriminant(n).substitute({(k + 1,): c[k] for k in range(n + 1)})


def pencil_anchor(n: int):
    """prod_i a[i,i,1]^(2(n-i)) a[i,i,2]^(2(i-1)); its coefficient in the raw discriminant is 1."""
    pairs = []
    for i in range(1, n + 1):
        if n - i:
            pairs.append(((i, i, 1), 2 * (n - i)))
        if i - 1:
            pairs.append(((i, i, 2), 2 * (i - 1)))
    return mono_from_vars_exp(pairs)


def char_coeffs_numeric(A, B) -> list:
    """Coefficients of det(A + zB) by exact interpolation at z = 0..n."""
    n = len(A)
    xs = list(range(n + 1))
    ys = [det_rational([[A[i][j] + z * B[i][j] for j in range(n)] for i in range(n)]) for z in xs]
    coeffs = [Fraction(0)] * (n + 1)
    for k, xk in enumerate(xs):
        basis = [Fraction(1)]
        den = Fraction(1)
        for m, xm in enumerate(xs):
            if m == k:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xm * basis[t + 1]
            den *= xk - xm
        for t in range(n + 1):
            coeffs[t] += ys[k] * basis[t] / den
    return coeffs


def det_pencil_nn2(a: MDMatrix) -> DetResult:
    frame = pencil_frame(a.dims)
    if frame is None:
        raise WrongFormat(f"{a.format} is not an n x n x 2 format")
    n = a.dims[frame[0] - 1]
    if a.mode == "numeric":
        def entry(i, j, z):
            idx = [1] * a.format.d
            idx[frame[0] - 1], idx[frame[1] - 1], idx[frame[2] - 1] = i, j, z
            return a[idx]

        A = [[entry(i, j, 1) for j in range(1, n + 1)] for i in range(1, n + 1)]
        B = [[entry(i, j, 2) for j in range(1, n + 1)] for i in range(1, n + 1)]
        c = char_coeffs_numeric(A, B)
        value = universal_discriminant(n).evaluate({(k + 1,): c[k] for k in range(n + 1)})
        return DetResult(Fraction(value), a.format, "pencil")
    return finish(pencil_formal(n), pencil_anchor(n), "pencil-diagonal", frame, a, "pencil")
