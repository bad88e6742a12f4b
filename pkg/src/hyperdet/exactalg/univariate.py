"""Univariate polynomials in z whose coefficients are Polynomials.

A univariate polynomial is a list ``[c0, c1, ..., cn]`` of coefficients,
lowest power first. Its formal degree is ``len - 1``: leading zeros are kept
when the caller asks for them, which fixes the Sylvester matrix size.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import BothConstant
from .linalg import bareiss_det
from .polynomial import Polynomial, poly_exact_div

ZERO = Polynomial()
ONE = Polynomial.constant(1)


def _lift(coeffs: Sequence) -> list:
    return [c if isinstance(c, Polynomial) else Polynomial.constant(int(c)) for c in coeffs]


def derivative(p: Sequence) -> list:
    p = _lift(p)
    return [p[k] * k for k in range(1, len(p))] or [ZERO]


def sylvester_matrix(p: Sequence, q: Sequence) -> list:
    """Rows: deg q shifted copies of p, then deg p shifted copies of q (highest power first)."""
    p, q = _lift(p), _lift(q)
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [ZERO] * size
        for k, c in enumerate(reversed(p)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [ZERO] * size
        for k, c in enumerate(reversed(q)):
            row[i + k] = c
        rows.append(row)
    return rows


def sylvester_resultant(p: Sequence, q: Sequence) -> Polynomial:
    p, q = _lift(p), _lift(q)
    if len(p) <= 1 and len(q) <= 1:
        raise BothConstant("resultant of two constants")
    return bareiss_det(sylvester_matrix(p, q), poly_exact_div, ZERO, ONE)


def univariate_discriminant(p: Sequence, n: int | None = None) -> Polynomial:
    """(-1)^(n(n-1)/2) Res(p, p') / lc(p) for p of formal degree n >= 2."""
    p = _lift(p)
    if n is None:
        n = len(p) - 1
    if n < 2 or len(p) != n + 1:
        raise ValueError("discriminant needs formal degree n >= 2 matching the coefficient list")
    lc = p[n]
    if lc.is_zero():
        raise ValueError("leading coefficient is zero")
    res = sylvester_resultant(p, derivative(p))
    d = poly_exact_div(res, lc)
    return -d if (n * (n - 1) // 2) % 2 else d


# -- dense univariate polynomials over the rationals (lists, lowest power first) --

def qpoly_trim(p: Sequence) -> list:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def qpoly_divmod(p: Sequence, q: Sequence):
    p, q = qpoly_trim(p), qpoly_trim(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    rem = list(p)
    while len(rem) >= len(q):
        shift = len(rem) - len(q)
        c = rem[-1] / q[-1]
        quo[shift] = c
        for i, qc in enumerate(q):
            rem[shift + i] -= c * qc
        rem = qpoly_trim(rem)
    return quo, rem


def qpoly_gcd(p: Sequence, q: Sequence) -> list:
    """Monic gcd; the gcd of two zero polynomials is the empty list."""
    a, b = qpoly_trim(p), qpoly_trim(q)
    while b:
        a, b = b, qpoly_divmod(a, b)[1]
    return [c / a[-1] for c in a] if a else []


def qpoly_eval(p: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def qpoly_derivative(p: Sequence) -> list:
    return [Fraction(k) * p[k] for k in range(1, len(p))]


def sturm_sequence(p: Sequence) -> list:
    seq = [qpoly_trim(p), qpoly_trim(qpoly_derivative(qpoly_trim(p)))]
    while seq[-1]:
        r = qpoly_divmod(seq[-2], seq[-1])[1]
        seq.append([-c for c in r])
    return seq[:-1]


def sturm_count(seq: list, lo, hi) -> int:
    """Number of distinct real roots in (lo, hi] of the first polynomial."""

    def changes(x):
        signs = [s for s in (qpoly_eval(f, x) for f in seq) if s != 0]
        return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))

    return changes(lo) - changes(hi)


def root_bound(p: Sequence) -> Fraction:
    """Cauchy bound: every root has absolute value below it."""
    p = qpoly_trim(p)
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def isolate_real_roots(p: Sequence, width: Fraction = Fraction(1, 2**20)) -> list:
    """Disjoint intervals (lo, hi], each holding exactly one real root, narrowed below ``width``."""
    p = qpoly_trim(p)
    if len(p) <= 1:
        return []
    seq = sturm_sequence(p)
    b = root_bound(p)
    out = []
    stack = [(-b, b)]
    while stack:
        lo, hi = stack.pop()
        n = sturm_count(seq, lo, hi)
        if n == 0:
            continue
        if n == 1 and hi - lo <= width:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    return sorted(out)
