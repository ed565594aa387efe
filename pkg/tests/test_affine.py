"""Exact affine expressions in the free parameters."""

from fractions import Fraction

import pytest

from microloc.affine import AffineInt, ZERO

parameter = AffineInt.parameter


def test_constant_arithmetic():
    three = AffineInt(3)
    assert three.is_constant()
    assert three.constant_value() == 3
    assert (three + 4).constant_value() == 7
    assert (2 * three - 10).constant_value() == -4
    assert (three / 3).constant_value() == 1


def test_parameter_arithmetic():
    c = parameter("c")
    e = 2 * c - 3
    assert not e.is_constant()
    assert e.parameters() == {"c"}
    assert e.substitute({"c": 5}) == Fraction(7)
    assert (e - e) == ZERO
    assert (-e).substitute({"c": 1}) == Fraction(1)


def test_two_parameters_combine():
    c, p = parameter("c"), parameter("p_1")
    e = c + p - 1
    assert e.parameters() == {"c", "p_1"}
    partial = e.substitute({"c": 2})
    assert isinstance(partial, AffineInt)
    assert partial.parameters() == {"p_1"}
    assert partial.substitute({"p_1": 0}) == Fraction(1)


def test_product_of_parameters_rejected():
    c = parameter("c")
    with pytest.raises(ValueError):
        c * c
    # scalar multiples stay fine either side
    assert (3 * c) == (c * 3)


def test_zero_coefficients_canonicalized():
    c = parameter("c")
    e = c - c + 5
    assert e.is_constant()
    assert e == AffineInt(5)
    assert hash(e) == hash(AffineInt(5))


def test_str_forms():
    c = parameter("c")
    assert str(c - 2) == "c-2"
    assert str(-3 * c) == "-3c"
    assert str(AffineInt(3)) == "3"
    assert str(ZERO) == "0"


def test_truthiness():
    assert not ZERO
    assert AffineInt(2)
    assert parameter("c")
