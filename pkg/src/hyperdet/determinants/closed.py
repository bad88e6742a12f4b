"""Closed determinants: the product of the determinants of all minors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exactalg import Polynomial, poly_exact_div
from ..mdmatrix import MDMatrix, enumerate_minor_subformats, symbolic
from ..qpaths import diagonal_monomial
from .dispatch import det_dispatch
from .result import DetResult, normalize


@dataclass(frozen=True)
class MinorFactor:
    selections: tuple
    result: DetResult

    @property
    def degree(self) -> int:
        return self.result.value.degree() if self.result.is_symbolic else 0


def minors(a: MDMatrix, **kw) -> list:
    """Determinants of every minor that has one, in enumeration order."""
    return [MinorFactor(sel, det_dispatch(a.subtensor(sel), **kw)) for sel, _ in enumerate_minor_subformats(a.format)]


def closed_det(a: MDMatrix, **kw) -> DetResult:
    factors = minors(a, **kw)
    if a.mode == "numeric":
        value = Fraction(1)
        for f in factors:
            value *= f.result.value
        return DetResult(value, a.format, "closed", extra={"factors": factors})
    value = Polynomial.constant(1)
    for f in factors:
        value = value * f.result.value
    norm = None
    if a.is_generic():
        value, norm = normalize(value, diagonal_monomial(a.dims, "closed"))
    return DetResult(value, a.format, "closed", norm, extra={"factors": factors})


@dataclass(frozen=True)
class QuotientReport:
    format: tuple
    applicable: bool
    passed: bool
    factor_degrees: tuple  # degrees of the proper minors, in enumeration order
    determinant_degree: int | None
    closed_degree: int

    def to_json(self) -> dict:
        return {
            "format": list(self.format),
            "applicable": self.applicable,
            "passed": self.passed,
            "factorDegrees": list(self.factor_degrees),
            "determinantDegree": self.determinant_degree,
            "closedDegree": self.closed_degree,
        }


def quotient_identity_check(f, **kw) -> QuotientReport:
    """Check Det / (product of the proper minors) == det by exact division."""
    a = symbolic(f)
    closed = closed_det(a, **kw)
    factors = closed.extra["factors"]
    full = tuple(tuple(range(1, n + 1)) for n in a.dims)
    proper = [x for x in factors if x.selections != full]
    degrees = tuple(x.degree for x in proper)
    if len(proper) == len(factors):
        return QuotientReport(a.dims, False, True, degrees, None, closed.value.degree())
    det = next(x for x in factors if x.selections == full).result.value
    denom = Polynomial.constant(1)
    for x in proper:
        denom = denom * x.result.value
    quotient = poly_exact_div(closed.value, denom)
    return QuotientReport(a.dims, True, quotient == det, degrees, det.degree(), closed.value.degree())
