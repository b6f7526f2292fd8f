from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from planecurves.poly import (
    Poly,
    d_func,
    dim_pi,
    evaluate,
    format_poly,
    lift,
    monomial_at,
    monomial_index,
    monomials,
    multiply,
    parse_rational,
)

from .strategies import points, polys, small_rationals

x, y = Poly.x(), Poly.y()
one = Poly.constant(1)


@pytest.mark.parametrize("n, expected", [(2, 6), (0, 1), (-1, 0), (5, 21), (12, 91)])
def test_dim_pi(n, expected):
    assert dim_pi(n) == expected


@pytest.mark.parametrize("k, n, expected", [(3, 5, 15), (1, 1, 2), (2, 4, 9)])
def test_d_func(k, n, expected):
    assert d_func(k, n) == expected


@pytest.mark.parametrize("n", range(0, 13))
@pytest.mark.parametrize("k", range(1, 15))
def test_d_func_closed_form(k, n):
    if k <= n + 2:
        assert 2 * d_func(k, n) == k * (2 * n - k + 3)
    else:
        assert d_func(k, n) == dim_pi(n)


def test_dim_pi_increments():
    for n in range(0, 30):
        assert dim_pi(n) - dim_pi(n - 1) == n + 1


def test_graded_lex_order():
    assert monomials(2) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


@pytest.mark.parametrize("n", range(13))
def test_index_round_trip(n):
    for idx in range(dim_pi(n)):
        assert monomial_index(*monomial_at(idx)) == idx
    assert [monomial_index(i, j) for i, j in monomials(n)] == list(range(dim_pi(n)))


def test_evaluate_examples():
    assert evaluate(one - x - y, (0, 0)) == 1
    assert evaluate(x * (x - one), (1, 5)) == 0
    assert evaluate(x * x + y * y, (F(1, 2), F(1, 3))) == F(13, 36)


def test_multiply_examples():
    assert multiply(x, y) == Poly.monomial(1, 1)
    assert multiply(x - one, x + one) == Poly.from_terms({(2, 0): 1, (0, 0): -1})
    assert multiply(one - x - y, y) == Poly.from_terms({(0, 1): 1, (1, 1): -1, (0, 2): -1})


def test_multiply_degree_bound():
    p = Poly.zero(3)
    q = Poly.constant(2, 4)
    assert multiply(p, q).degree == 7


def test_lift_examples():
    lx = lift(x, 3)
    assert lx.degree == 3 and len(lx.coeffs) == 10
    assert lx.coefficient(1, 0) == 1 and sum(1 for _ in lx.terms()) == 1
    z = lift(Poly.zero(0), 5)
    assert len(z.coeffs) == 21 and z.is_zero()
    q = Poly.from_terms({(2, 0): 1, (0, 0): -1}, 2)
    assert lift(q, 2) == q


def test_lift_rejects_too_small():
    with pytest.raises(ValueError):
        lift(Poly.from_terms({(2, 0): 1}), 1)


@given(small_rationals, small_rationals, small_rationals)
def test_field_axioms(a, b, c):
    assert (a + b) - b == a
    if b:
        assert (a * b) / b == a
    assert a * (b + c) == a * b + a * c
    assert F(a.numerator, a.denominator).denominator > 0


@given(polys(), polys(), points)
def test_multiply_is_homomorphism(p, q, pt):
    assert evaluate(multiply(p, q), pt) == evaluate(p, pt) * evaluate(q, pt)


@given(polys(), points, st.integers(min_value=-3, max_value=3))
def test_shear_is_substitution(p, pt, t):
    px, py = pt
    assert evaluate(p.shear(t), pt) == evaluate(p, (px + t * py, py))


@given(polys())
def test_json_round_trip(p):
    assert Poly.from_json(p.to_json()) == p


def test_json_form():
    p = Poly.from_terms({(0, 0): F(-3, 7), (1, 1): 2}, 2)
    assert p.to_json() == {
        "degree": 2,
        "terms": [{"i": 0, "j": 0, "c": "-3/7"}, {"i": 1, "j": 1, "c": "2"}],
    }


@pytest.mark.parametrize("bad", ["0.5", "1e3", "1/0", "", "abc", 1.5, None, True])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@pytest.mark.parametrize("text, value", [("3/7", F(3, 7)), ("-4", F(-4)), ("6/4", F(3, 2)), (5, F(5))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


def test_normalized_first_coefficient():
    p = Poly.from_terms({(1, 0): -2, (2, 0): 2})
    assert p.normalized() == Poly.from_terms({(1, 0): 1, (2, 0): -1})


def test_format_poly():
    assert format_poly(Poly.from_terms({(2, 0): 1, (1, 0): -1})) == "-x + x^2"
    assert format_poly(Poly.zero(2)) == "0"
    assert format_poly(Poly.from_terms({(0, 0): F(1, 2), (1, 1): -3})) == "1/2 - 3*x*y"


def test_poly_length_invariant():
    with pytest.raises(ValueError):
        Poly(2, (F(1),) * 5)
