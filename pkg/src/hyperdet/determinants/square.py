"""Ordinary determinants of square matrices."""

from __future__ import annotations

import itertools
from functools import lru_cache

from ..errors import NotSquare
from ..exactalg import Polynomial, det_rational
from ..exactalg.polynomial import mono_from_vars
from ..mdmatrix import Kind, MDMatrix, classify_format
from ..qpaths import perm_sign
from .result import DetResult, finish


@lru_cache(maxsize=16)
def leibniz(n: int) -> Polynomial:
    """sum over permutations s of sign(s) * prod_i a[i, s(i)] in variables a[i,j]."""
    terms = {}
    for perm in itertools.permutations(range(n)):
        terms[mono_from_vars((i + 1, perm[i] + 1) for i in range(n))] = perm_sign(perm)
    return Polynomial(terms)


def square_frame(a: MDMatrix) -> tuple:
    cls = classify_format(a.format)
    if cls.kind is not Kind.SQUARE2D:
        raise NotSquare(f"{a.format} does not reduce to a square matrix")
    return tuple(k + 1 for k, n in enumerate(a.dims) if n > 1)


def det_2d(a: MDMatrix) -> DetResult:
    frame = square_frame(a)
    n = a.dims[frame[0] - 1]
    if a.mode == "numeric":
        rows = [[a.entries[a.offset(_idx(frame, a.format.d, i, j))] for j in range(1, n + 1)]
                for i in range(1, n + 1)]
        return DetResult(det_rational(rows), a.format, "square")
    anchor = mono_from_vars((i, i) for i in range(1, n + 1))
    return finish(leibniz(n), anchor, "diagonal", frame, a, "square")


def _idx(frame, d, i, j):
    out = [1] * d
    out[frame[0] - 1] = i
    out[frame[1] - 1] = j
    return out
