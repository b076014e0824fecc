"""Polynomial arithmetic, parsing and formatting."""

import random
from fractions import Fraction

import pytest

from algebroids.errors import ParseError
from algebroids.poly import Polynomial, format_poly, parse_poly


def P(text, varnames=("x", "y", "z")):
    return parse_poly(text, list(varnames))


def random_poly(rng, nvars=3, max_deg=3, nterms=4):
    terms = {}
    for _ in range(nterms):
        exp = tuple(rng.randrange(max_deg + 1) for _ in range(nvars))
        terms[exp] = Fraction(rng.randrange(-9, 10), rng.randrange(1, 5))
    return Polynomial(nvars, terms)


def test_parse_basic():
    f = P("z^2 - x^2*y")
    assert f.terms == {(0, 0, 2): Fraction(1), (2, 1, 0): Fraction(-1)}
    assert P("x + x") == P("2*x")
    assert P("(x+y)^2") == P("x^2 + 2*x*y + y^2")
    assert P("-3/2*x*y") == Polynomial(3, {(1, 1, 0): Fraction(-3, 2)})


def test_parse_errors():
    with pytest.raises(ParseError):
        P("x +")
    with pytest.raises(ParseError):
        P("q^2")
    with pytest.raises(ParseError):
        P("x^-1")


def test_format_round_trip():
    rng = random.Random(11)
    for _ in range(25):
        f = random_poly(rng)
        assert P(format_poly(f, ["x", "y", "z"])) == f
    assert format_poly(Polynomial.zero(2), ["x", "y"]) == "0"


def test_ring_axioms_random():
    rng = random.Random(7)
    for _ in range(30):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert a + b - b == a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * Polynomial.one(3) == a


def test_diff_product_rule():
    rng = random.Random(3)
    for _ in range(15):
        a, b = random_poly(rng), random_poly(rng)
        for i in range(3):
            assert (a * b).diff(i) == a.diff(i) * b + a * b.diff(i)


def test_degree_and_homogeneity():
    f = P("z^2 - x^2*y")
    assert f.degree() == 3
    assert not f.is_homogeneous()
    # quasi-homogeneous of degree 4 for weights (1,2,2)
    assert f.is_homogeneous((1, 2, 2))
    assert f.degree((1, 2, 2)) == 4


def test_homogeneous_components_sum():
    rng = random.Random(19)
    for _ in range(10):
        f = random_poly(rng)
        parts = f.homogeneous_components()
        total = Polynomial.zero(3)
        for d, g in parts.items():
            assert g.is_homogeneous() and g.degree() == d
            total = total + g
        assert total == f


def test_substitute_and_evaluate():
    f = P("x^2 + y", ("x", "y"))
    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    assert f.substitute([y, x]) == P("y^2 + x", ("x", "y"))
    assert f.evaluate([Fraction(2), Fraction(-1)]) == 3


def test_pow():
    f = P("x + y", ("x", "y"))
    assert f ** 3 == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3", ("x", "y"))
    assert f ** 0 == Polynomial.one(2)
