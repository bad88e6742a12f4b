"""Degeneracy witnesses: the critical linear system and matrices built from it."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import prod

from ..errors import DegenerateSample, WrongShape
from ..exactalg import RationalMatrix, nullspace_exact, primitive_int_vector
from ..mdmatrix import DegeneracyWitness, Format, MDMatrix

WITNESS_LOW, WITNESS_HIGH = 1, 20


def critical_system(f, vectors) -> RationalMatrix:
    """Rows (k, i): sum over entries with i_k = i of a_I * prod_{j != k} x^(j)_{i_j}.

    Columns follow the storage order of the entries, rows go direction by
    direction, index by index.
    """
    fmt = f if isinstance(f, Format) else Format(tuple(f))
    vectors = [tuple(Fraction(x) for x in v) for v in vectors]
    if [len(v) for v in vectors] != list(fmt.dims):
        raise WrongShape("witness vectors do not match the format")
    rows = []
    grid = list(itertools.product(*(range(n) for n in fmt.dims)))
    for k, n in enumerate(fmt.dims):
        for i in range(n):
            rows.append([
                prod((vectors[j][idx[j]] for j in range(fmt.d) if j != k), start=Fraction(1))
                if idx[k] == i else Fraction(0)
                for idx in grid
            ])
    return RationalMatrix.from_rows(rows)


def witness_check(a: MDMatrix, witness: DegeneracyWitness) -> bool:
    """Exact re-evaluation of every equation of the critical system at ``a``."""
    if a.mode != "numeric":
        raise WrongShape("witness_check needs a numeric matrix")
    M = critical_system(a.format, witness.vectors)
    for r in range(M.rows):
        if sum((M[r, c] * a.entries[c] for c in range(M.cols)), Fraction(0)) != 0:
            return False
    return True


def make_degenerate(f, seed: int, bound: int = 10, attempts: int = 16):
    """A random integer matrix together with a witness proving it degenerate."""
    fmt = f if isinstance(f, Format) else Format(tuple(f))
    rng = random.Random(seed)
    for _ in range(attempts):
        vectors = [tuple(rng.randint(WITNESS_LOW, WITNESS_HIGH) for _ in range(n)) for n in fmt.dims]
        basis = nullspace_exact(critical_system(fmt, vectors))
        coeffs = [rng.randint(-bound, bound) for _ in basis]
        vec = [sum((c * b[i] for c, b in zip(coeffs, basis)), Fraction(0)) for i in range(fmt.size)]
        if any(vec):
            entries = primitive_int_vector(vec)
            return MDMatrix(fmt, entries, "numeric"), DegeneracyWitness(tuple(vectors))
    raise DegenerateSample(f"seed {seed} produced only zero matrices")
