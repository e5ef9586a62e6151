from fractions import Fraction

import pytest

import motint


def test_vandermonde_two():
    r = motint.integrate(2, "x1-x2")
    assert r["value"].num == [0, 1]
    assert r["value"].den == [1, 1]
    assert r["value"](3) == Fraction(3, 4)
    assert r["validity"]["mixed_char"] == "all_primes"


def test_vandermonde_three_inside_bracket():
    value = motint.integrate(3, "x1-x2, x1-x3, x2-x3")["value"]
    assert value(2) == Fraction(8, 31)
    lower, upper = motint.bracket(3, "x1-x2, x1-x3, x2-x3", 2, 4)
    assert lower <= value(2) <= upper


def test_methods_agree():
    forms = "x1-x2, x2-x3, x1-x2"
    assert motint.integrate(3, forms, "mainmc")["value"] == motint.integrate(3, forms, "leuven")["value"]


def test_bad_prime_reported():
    r = motint.integrate(2, "x1+x2, x1-2*x2")
    assert "3" in r["validity"]["mixed_bad_primes"]
    lower, upper = motint.bracket(2, "x1+x2, x1-2*x2", 3, 4)
    assert lower <= Fraction(11, 16) <= upper
    assert not lower <= r["value"](3) <= upper


def test_arrangement_and_count():
    a = motint.arrangement(3, neq="x1-x2, x2-x3, x1-x3")
    assert a["coeffs"] == [0, 2, -3, 1]
    assert motint.count_points(3, "", "x1-x2, x2-x3, x1-x3", 3) == 6


def test_onevar():
    r = motint.onevar("X^2 + 1", 3, [1, 2])
    assert r["evaluations"] == [Fraction(1), Fraction(4, 5)]


def test_errors():
    with pytest.raises(motint.ParseError):
        motint.integrate(2, "x1 + ")
    with pytest.raises(motint.BudgetError):
        motint.bracket(4, "x1, x2, x3, x4", 7, 3)
    assert "S1:" in motint.witt_dump(2, 2)
