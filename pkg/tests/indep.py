"""Test-only reference implementations.

Nothing here imports the arithmetic or determinant code under test: the
determinant uses plain Fraction Gaussian elimination, the boundary oracle is
the Cayley-Koszul square matrix of the multiplication map, and golden
polynomials are parsed from their printed form by a separate tiny parser.
"""

from __future__ import annotations

import itertools
import random
import re
from fractions import Fraction


def gauss_det(rows) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def gauss_rank(rows) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank, cols = 0, len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def _monos(n, deg):
    return [c for c in itertools.product(range(deg + 1), repeat=n) if sum(c) == deg]


def koszul_matrix(inner, entry):
    """Square matrix whose determinant is, up to sign, the boundary determinant.

    ``inner`` = (n_1, ..., n_d); the last direction has size m_d. ``entry(idx)``
    returns the value at the 1-based index (i_1, ..., i_d, j).
    """
    m = [1]
    for n in inner:
        m.append(m[-1] + n - 1)
    d, md = len(inner), m[-1]
    src = [(j,) + ms for j in range(1, md + 1)
           for ms in itertools.product(*[_monos(inner[r], m[r] - 1) for r in range(d)])]
    tgt = list(itertools.product(*[_monos(inner[r], m[r]) for r in range(d)]))
    assert len(src) == len(tgt)
    where = {t: i for i, t in enumerate(tgt)}
    M = [[Fraction(0)] * len(tgt) for _ in src]
    for r, s in enumerate(src):
        j = s[0]
        for idx in itertools.product(*[range(n) for n in inner]):
            t = tuple(tuple(s[1 + k][i] + (i == idx[k]) for i in range(inner[k])) for k in range(d))
            M[r][where[t]] += entry(tuple(i + 1 for i in idx) + (j,))
    return M


def koszul_det(inner, entry) -> Fraction:
    return gauss_det(koszul_matrix(inner, entry))


def leibniz_value(rows) -> Fraction:
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inv % 2 else 1)
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def discriminant_from_roots(roots, lead=1) -> Fraction:
    n = len(roots)
    acc = Fraction(lead) ** (2 * n - 2)
    for i in range(n):
        for j in range(i + 1, n):
            acc *= Fraction(roots[i] - roots[j]) ** 2
    return acc


_TERM = re.compile(r"([+-]?)\s*(\d*)((?:a(?:\^\d+)?_\{\d+\}(?:\^\d+)?)+)")
_VAR = re.compile(r"a(?:\^(\d+))?_\{(\d+)\}(?:\^(\d+))?")


def parse_printed(text: str) -> dict:
    """Parse ``a^2_{111}a_{222}-2a_{121}...`` into {((var, exp), ...): coeff}.

    Variables are digit strings (single-digit indices); monomials are sorted.
    """
    out = {}
    for sign, coeff, body in _TERM.findall(text.replace(" ", "")):
        c = int(coeff or 1) * (-1 if sign == "-" else 1)
        powers = {}
        for e1, name, e2 in _VAR.findall(body):
            key = tuple(int(ch) for ch in name)
            powers[key] = powers.get(key, 0) + int(e1 or e2 or 1)
        mono = tuple(sorted(powers.items()))
        out[mono] = out.get(mono, 0) + c
    return {k: v for k, v in out.items() if v}


def poly_mul_dicts(p: dict, q: dict) -> dict:
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            powers = dict(m1)
            for v, e in m2:
                powers[v] = powers.get(v, 0) + e
            mono = tuple(sorted(powers.items()))
            out[mono] = out.get(mono, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


GOLDEN_QUARTIC = (
    "a^2_{111}a^2_{222}+a^2_{112}a^2_{221}+a^2_{121}a^2_{212}+a_{211}^2a_{122}^2"
    "-2a_{111}a_{121}a_{212}a_{222}-2a_{111}a_{211}a_{122}a_{222}"
    "-2a_{111}a_{112}a_{221}a_{222}-2a_{121}a_{221}a_{112}a_{212}"
    "-2a_{211}a_{221}a_{112}a_{122}-2a_{212}a_{211}a_{121}a_{122}"
    "+4a_{111}a_{221}a_{212}a_{122}+4a_{121}a_{211}a_{112}a_{222}"
)

GOLDEN_ENTRIES = "a_{111}a_{112}a_{121}a_{122}a_{211}a_{212}a_{221}a_{222}"

GOLDEN_BINOMIALS = (
    "a_{111}a_{122}-a_{121}a_{112}",
    "a_{211}a_{222}-a_{221}a_{212}",
    "a_{111}a_{212}-a_{211}a_{112}",
    "a_{121}a_{222}-a_{221}a_{122}",
    "a_{111}a_{221}-a_{211}a_{121}",
    "a_{112}a_{222}-a_{212}a_{122}",
)

GOLDEN_CLOSED_DIAGONAL = (
    "a_{111}a_{112}a_{121}a_{122}a_{211}a_{212}a_{221}a_{222}"
    "a_{111}a_{122}a_{211}a_{222}a_{111}a_{212}a_{121}a_{222}"
    "a_{111}a_{221}a_{112}a_{222}a^2_{111}a^2_{222}"
)


def as_digits(poly) -> dict:
    """Package Polynomial -> the dict form used by parse_printed (test-side conversion)."""
    return {tuple((tuple(v), e) for v, e in m): c for m, c in poly.terms()}


def golden_closed_2x2x2() -> dict:
    acc = parse_printed(GOLDEN_ENTRIES)
    for b in GOLDEN_BINOMIALS:
        acc = poly_mul_dicts(acc, parse_printed(b))
    return poly_mul_dicts(acc, parse_printed(GOLDEN_QUARTIC))


def kronecker_pair(n: int):
    """A = [I_n | 0], B = [0 | I_n], both n x (n+1)."""
    A = [[int(j == i) for j in range(n + 1)] for i in range(n)]
    B = [[int(j == i + 1) for j in range(n + 1)] for i in range(n)]
    return A, B


def rank_drop_225(seed):
    """2x2x5 matrix whose direction-1 slices B1, B2 (2x5) drop rank at z = (1, -1)."""
    from hyperdet.mdmatrix import MDMatrix

    rng = random.Random(seed)
    B2 = [[rng.randint(-5, 5) for _ in range(5)] for _ in range(2)]
    # B1 - B2 has rank 1, so z1*B1 + z2*B2 has rank <= 1 at z = (1, -1)
    u, v = [rng.randint(1, 4), rng.randint(1, 4)], [rng.randint(-3, 3) or 1 for _ in range(5)]
    B1 = [[B2[i][j] + u[i] * v[j] for j in range(5)] for i in range(2)]
    entries = [B1[i][k] if s == 0 else B2[i][k] for s in (0, 1) for i in (0, 1) for k in range(5)]
    return MDMatrix((2, 2, 5), entries, "numeric")
