"""Exact arithmetic substrate: rationals, sparse integer polynomials,
Sylvester resultants and fraction-free linear algebra."""

from fractions import Fraction as Rational

from .linalg import (
    RationalMatrix,
    bareiss_det,
    det_rational,
    nullspace_exact,
    primitive_int_vector,
    rank,
    rref,
    symmetric_rank,
)
from .polynomial import (
    Monomial,
    Polynomial,
    from_json,
    mono_degree,
    mono_from_vars,
    mono_key,
    parse,
    poly_add,
    poly_eval,
    poly_exact_div,
    poly_mul,
    poly_neg,
    poly_scale,
    render_monomial,
    render_var,
    serialize,
    to_json,
    var,
)
from .univariate import (
    derivative,
    isolate_real_roots,
    qpoly_divmod,
    qpoly_eval,
    qpoly_gcd,
    sylvester_matrix,
    sylvester_resultant,
    univariate_discriminant,
)

__all__ = [
    "Rational", "RationalMatrix", "bareiss_det", "det_rational", "nullspace_exact",
    "primitive_int_vector", "rank", "rref", "symmetric_rank", "Monomial", "Polynomial",
    "from_json", "mono_degree", "mono_from_vars", "mono_key", "parse", "poly_add",
    "poly_eval", "poly_exact_div", "poly_mul", "poly_neg", "poly_scale",
    "render_monomial", "render_var", "serialize", "to_json", "var", "derivative",
    "sylvester_matrix", "sylvester_resultant", "univariate_discriminant",
    "isolate_real_roots", "qpoly_divmod", "qpoly_eval", "qpoly_gcd",
]
