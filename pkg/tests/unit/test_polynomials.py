# Copyright (c) 2026, zerogin developers. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import pytest

from zerogin.algebra.fields import PrimeField, RationalField
from zerogin.algebra.monomials import MonomialOrder
from zerogin.algebra.parser import parse_polynomial
from zerogin.algebra.polynomials import ArithmeticKind, PolynomialIdeal, PolynomialRing, format_polynomial, poly_arith
from zerogin.exceptions import ParseError, RingMismatchError, ZeroIdealError
from tests.utils.ideals import ring


def test_binomial_square_depends_on_characteristic():
    for characteristic, expected in [(0, "x^2 + 2*x*y + y^2"), (5, "x^2 + 2*x*y + y^2"), (2, "x^2 + y^2")]:
        target = ring(2, characteristic)
        f = parse_polynomial("x + y", target)
        assert str(f**2) == expected


def test_parse_and_format_round_trip():
    target = ring(2)
    for text in ["x^2 - 3*x*y + y^2", "-x*y", "x - y", "7"]:
        assert format_polynomial(parse_polynomial(text, target)) == text


def test_parse_named_variables():
    target = PolynomialRing(RationalField(), ("x1", "x2", "x3"))
    f = parse_polynomial("-2*x1*x3^4 + 7", target)
    assert str(f) == "-2*x1*x3^4 + 7"
    assert f.degree == 5
    assert not f.is_homogeneous


def test_parse_collects_terms():
    target = ring(2, 2)
    assert parse_polynomial("x + x", target).is_zero
    assert str(parse_polynomial("x + x", target)) == "0"
    assert str(parse_polynomial("2*3*x", ring(2))) == "6*x"
    assert str(parse_polynomial("x*x*y", ring(2))) == "x^2*y"
    assert str(parse_polynomial("x − y", ring(2))) == "x - y"


@pytest.mark.parametrize(
    "text,column,message",
    [
        ("x^2 + q", 7, "unknown variable 'q'"),
        ("x^", 3, "unexpected end of polynomial"),
        ("x + * y", 5, "expected a coefficient or a variable, got '*'"),
        ("x $ y", 3, "unexpected character '$'"),
        ("x y", 3, "expected '+' or '-', got 'y'"),
        ("", 1, "empty polynomial"),
    ],
)
def test_parse_errors_carry_column(text, column, message):
    with pytest.raises(ParseError) as excinfo:
        parse_polynomial(text, ring(2))
    assert excinfo.value.column == column
    assert message in str(excinfo.value)


def test_parse_error_with_line():
    with pytest.raises(ParseError, match="line 4, column 1: "):
        parse_polynomial("z", ring(2), line=4)


def test_degree_and_leading_terms():
    target = ring(2)
    f = parse_polynomial("x + y^2", target)
    assert f.degree == 2
    assert f.leading_monomial == (0, 2)
    assert f.reorder(MonomialOrder.LEX).leading_monomial == (1, 0)
    assert target.zero.degree == -1
    with pytest.raises(ZeroIdealError):
        target.zero.leading_monomial


def test_monic_over_prime_field():
    target = ring(2, 5)
    assert str(parse_polynomial("3*x + y", target).monic()) == "x + 2*y"


def test_arithmetic_dispatch():
    target = ring(2)
    x, y = target.gen(0), target.gen(1)
    assert poly_arith(ArithmeticKind.ADD, x, y) == x + y
    assert poly_arith("mul", x, y) == x * y
    assert str(poly_arith(ArithmeticKind.SCALE, x, target.field.from_int(3))) == "3*x"
    with pytest.raises(RingMismatchError):
        poly_arith(ArithmeticKind.SCALE, x, y)
    assert (x - x).is_zero


def test_ring_mismatch():
    x = ring(2).gen(0)
    other = ring(2, 3).gen(0)
    with pytest.raises(RingMismatchError):
        x + other
    with pytest.raises(RingMismatchError):
        PolynomialRing(RationalField(), ("x", "x"))
    with pytest.raises(RingMismatchError):
        ring(2).term((1, 0, 0))


def test_convert_between_fields():
    source = ring(2)
    f = parse_polynomial("x^2 + 4*y^2", source)
    target = source.with_field(PrimeField(2))
    assert str(target.convert(f)) == "x^2"


def test_polynomial_ideal():
    target = ring(2)
    x, y = target.gen(0), target.gen(1)
    ideal = PolynomialIdeal(target, (x * x, target.zero, x * y))
    assert len(ideal.generators) == 2
    assert ideal.is_homogeneous and ideal.is_monomial and not ideal.is_unit
    assert PolynomialIdeal(target, (x, target.one)).is_unit
    assert PolynomialIdeal(target, ()).is_zero
    assert ideal.pretty() == ("x^2", "x*y")
    assert ideal.with_order(MonomialOrder.LEX).ring.order == MonomialOrder.LEX
    with pytest.raises(RingMismatchError):
        PolynomialIdeal(target, (ring(2, 3).gen(0),))
