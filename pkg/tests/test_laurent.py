import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from petersen_tsg.laurent import LaurentPolynomial, bareiss_determinant

t = sympy.symbols("t")

polys = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=6).map(LaurentPolynomial)
nonzero = polys.filter(lambda p: not p.is_zero())


def to_sympy(p):
    return sum(c * t**e for e, c in p)


def test_zero_terms_dropped():
    p = LaurentPolynomial({1: 2, 3: 0, -2: 1})
    assert p.terms == {-2: 1, 1: 2}
    assert LaurentPolynomial({0: 1}) - 1 == LaurentPolynomial()


def test_format_examples():
    assert LaurentPolynomial({-4: -1, -3: 1, -1: 1}).format() == "-t^-4 + t^-3 + t^-1"
    assert LaurentPolynomial({0: -3, 1: 2}).format() == "-3 + 2*t"
    assert LaurentPolynomial().format() == "0"


def test_negative_power_of_unit_monomial():
    assert LaurentPolynomial.monomial(2, -1) ** -3 == LaurentPolynomial({-6: -1})
    with pytest.raises(ValueError):
        LaurentPolynomial({0: 1, 1: 1}) ** -1


def test_evaluation_is_exact():
    p = LaurentPolynomial({-1: 1, 0: -1, 1: 1})
    assert p(-1) == -3
    assert isinstance(p(-1), int)
    assert p(2) == sympy.Rational(3, 2)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPolynomial()


@given(polys, polys)
def test_multiplication_matches_sympy(p, q):
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0


@given(polys)
def test_format_parse_round_trip(p):
    assert LaurentPolynomial.parse(p.format()) == p


@given(polys, nonzero)
def test_exact_division_recovers_factor(p, q):
    assert (p * q).exact_div(q) == p


@given(nonzero, nonzero)
def test_divmod_identity(p, q):
    if q.leading_coefficient not in (1, -1):
        return
    quo, rem = p.divmod(q)
    assert quo * q + rem == p


@given(polys)
def test_invert_variable_is_involution(p):
    assert p.invert_variable().invert_variable() == p
    assert (p * p.invert_variable()).is_palindromic()


@given(st.lists(st.lists(polys, min_size=3, max_size=3), min_size=3, max_size=3))
def test_bareiss_matches_sympy_determinant(rows):
    expected = sympy.Matrix([[to_sympy(x) for x in row] for row in rows]).det()
    assert sympy.expand(to_sympy(bareiss_determinant(rows)) - expected) == 0
