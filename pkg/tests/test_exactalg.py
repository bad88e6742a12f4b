from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from hyperdet.errors import BothConstant, MissingVariable, NotDivisible, NotSymmetric, ParseError
from hyperdet.exactalg import (
    Polynomial,
    RationalMatrix,
    bareiss_det,
    det_rational,
    from_json,
    isolate_real_roots,
    nullspace_exact,
    parse,
    poly_add,
    poly_eval,
    poly_exact_div,
    poly_mul,
    poly_neg,
    poly_scale,
    qpoly_gcd,
    rank,
    serialize,
    sylvester_resultant,
    symmetric_rank,
    to_json,
    univariate_discriminant,
    var,
)
from indep import GOLDEN_QUARTIC, gauss_det, parse_printed
from strategies import nonconstant, polynomials

x, y = var(1, 1), var(1, 2)
a11, a12, a21, a22 = var(1, 1), var(1, 2), var(2, 1), var(2, 2)


def quartic():
    return Polynomial(parse_printed(GOLDEN_QUARTIC))


class TestRingOps:
    def test_additive_inverse(self):
        assert poly_add(x + y, poly_neg(x)) == y

    def test_zero_absorbs(self):
        assert poly_scale(x * y + 3, 0).is_zero()
        assert poly_mul(Polynomial(), x + y).is_zero()

    def test_square_of_2x2_determinant(self):
        # hand expansion: x^2 - 2xy + y^2 pattern with x = a11a22, y = a12a21
        det = a11 * a22 - a12 * a21
        sq = poly_mul(det, det)
        assert sorted(c for _, c in sq.terms()) == [-2, 1, 1]
        assert sq == a11**2 * a22**2 - 2 * a11 * a12 * a21 * a22 + a12**2 * a21**2

    def test_zero_polynomial_has_no_terms(self):
        assert (x - x).terms() == []
        assert serialize(x - x) == "0"

    def test_terms_strictly_increasing(self):
        p = (x + y + 1) ** 3
        ms = [m for m, _ in p.terms()]
        assert len(set(ms)) == len(ms)
        assert all(c != 0 for _, c in p.terms())


class TestExactDivision:
    def test_difference_of_squares(self):
        assert poly_exact_div(x**2 - y**2, x - y) == x + y

    def test_divide_by_one(self):
        p = 3 * x**2 * y - 7
        assert poly_exact_div(p, Polynomial.constant(1)) == p

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            poly_exact_div(x**2 + y, x)
        with pytest.raises(NotDivisible):
            poly_exact_div(3 * x, Polynomial.constant(2))

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            poly_exact_div(x, Polynomial())


class TestEval:
    def test_identity_determinant(self):
        det = a11 * a22 - a12 * a21
        assert poly_eval(det, {(1, 1): 1, (2, 2): 1, (1, 2): 0, (2, 1): 0}) == 1

    def test_constant_term(self):
        p = 5 * x * y - 4
        assert poly_eval(p, {(1, 1): 0, (1, 2): 0}) == -4

    def test_quartic_anchor_coefficient(self):
        q = quartic()
        point = {v: 0 for v in q.variables()}
        point[(1, 1, 1)] = point[(2, 2, 2)] = 1
        assert poly_eval(q, point) == 1

    def test_missing_variable(self):
        with pytest.raises(MissingVariable):
            poly_eval(x * y, {(1, 1): 2})

    def test_rational_values(self):
        assert poly_eval(x * y, {(1, 1): Fraction(1, 3), (1, 2): Fraction(3, 7)}) == Fraction(1, 7)


class TestResultants:
    def test_linear_linear(self):
        a, b = var(1), var(2)
        assert sylvester_resultant([-a, 1], [-b, 1]) == a - b

    def test_hand_3x3(self):
        assert sylvester_resultant([0, 0, 1], [1, 1]) == Polynomial.constant(1)

    def test_self_resultant_vanishes(self):
        p = [var(1), var(2), 1]
        assert sylvester_resultant(p, p).is_zero()

    def test_both_constant(self):
        with pytest.raises(BothConstant):
            sylvester_resultant([var(1)], [3])

    def test_quadratic_discriminant(self):
        b, c = var(1), var(2)
        assert univariate_discriminant([c, b, 1]) == b**2 - 4 * c

    def test_double_root(self):
        assert univariate_discriminant([1, -2, 1]).is_zero()

    def test_three_roots(self):
        # z(z-1)(z-2) = z^3 - 3z^2 + 2z
        assert univariate_discriminant([0, 2, -3, 1]) == Polynomial.constant(4)


class TestLinearAlgebra:
    def test_nullspace_identity(self):
        assert nullspace_exact(RationalMatrix.identity(3)) == []

    def test_nullspace_row(self):
        assert nullspace_exact(RationalMatrix.from_rows([[1, 1]])) == [[1, -1]]

    def test_symmetric_rank(self):
        assert symmetric_rank(RationalMatrix.from_rows([[0, 0], [0, 0]])) == 0
        assert symmetric_rank(RationalMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 0]])) == 2

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetric):
            symmetric_rank(RationalMatrix.from_rows([[1, 2], [3, 4]]))

    @given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=4, max_size=4))
    def test_det_matches_gauss(self, rows):
        assert det_rational(rows) == gauss_det(rows)

    @given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=4))
    def test_rank_nullity(self, rows):
        basis = nullspace_exact(rows)
        assert rank(rows) + len(basis) == 5
        for v in basis:
            assert all(sum(Fraction(r[j]) * v[j] for j in range(5)) == 0 for r in rows)

    def test_bareiss_polynomial(self):
        rows = [[a11, a12], [a21, a22]]
        got = bareiss_det(rows, poly_exact_div, Polynomial(), Polynomial.constant(1))
        assert got == a11 * a22 - a12 * a21


class TestRationalRoots:
    def test_gcd(self):
        # (z-1)(z-2) and (z-1)(z+5)
        assert qpoly_gcd([2, -3, 1], [-5, 4, 1]) == [-1, 1]

    def test_isolation(self):
        # z^2 - 2: two irrational roots
        ivs = isolate_real_roots([-2, 0, 1])
        assert len(ivs) == 2
        for lo, hi in ivs:
            assert lo <= hi and hi - lo <= Fraction(1, 2**20)
        assert ivs[0][1] < 0 < ivs[1][0]


class TestSerialization:
    def test_text_form(self):
        assert serialize(-x + 2 * x * y) == "-1*a[1,1]+2*a[1,1]*a[1,2]"
        assert parse(serialize(-x + 2 * x * y)) == -x + 2 * x * y

    def test_parse_error(self):
        with pytest.raises(ParseError):
            parse("+2*b[1]")

    def test_json_shape(self):
        obj = to_json(3 * x**2 - y)
        assert obj["vars"] == [[1, 1], [1, 2]]
        assert all(isinstance(t["coeff"], str) for t in obj["terms"])


# -- properties -----------------------------------------------------------------

@given(polynomials(), polynomials(), polynomials())
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p and p * q == q * p


@given(polynomials(), polynomials())
def test_exact_division_recovers_factor(p, q):
    assume(nonconstant(q) and not p.is_zero())
    assert poly_exact_div(p * q, q) == p


@given(polynomials())
def test_serialization_round_trip(p):
    assert parse(serialize(p)) == p
    assert serialize(parse(serialize(p))) == serialize(p)
    assert from_json(to_json(p)) == p


@given(polynomials(), polynomials(), st.dictionaries(st.sampled_from([(1, 1), (1, 2), (2, 1), (2, 2), (1, 1, 1)]),
                                                     st.integers(-5, 5), min_size=5, max_size=5))
def test_eval_homomorphism(p, q, point):
    assert poly_eval(p * q, point) == poly_eval(p, point) * poly_eval(q, point)
    assert poly_eval(p + q, point) == poly_eval(p, point) + poly_eval(q, point)


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=3), st.integers(-5, 5))
def test_discriminant_of_double_root(coeffs, r):
    assume(coeffs[-1] != 0)
    # p(z) * (z - r)^2 with scalar coefficients
    sq = [r * r, -2 * r, 1]
    prod = [0] * (len(coeffs) + 2)
    for i, c in enumerate(coeffs):
        for j, s in enumerate(sq):
            prod[i + j] += c * s
    assert univariate_discriminant(prod).is_zero()
