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
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from zerogin.algebra.fields import Field, RationalField
from zerogin.algebra.monomials import (
    Monomial,
    MonomialOrder,
    default_variable_names,
    format_monomial,
    multiply,
    one,
    variable,
)
from zerogin.exceptions import RingMismatchError, ZeroIdealError
from zerogin.utils.enums import Parameter

LOGGER = logging.getLogger(__name__)

Term = Tuple[Monomial, Any]


@dataclass(frozen=True)
class PolynomialRing:
    field: Field
    variables: Tuple[str, ...]
    order: MonomialOrder = MonomialOrder.DEGREVLEX

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise RingMismatchError(f"Variable names must be unique, got {list(self.variables)}")

    @classmethod
    def standard(cls, field: Field, nvars: int, order: MonomialOrder = MonomialOrder.DEGREVLEX):
        return cls(field=field, variables=default_variable_names(nvars), order=order)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return self.constant(self.field.one)

    def constant(self, value) -> "Polynomial":
        return self.term(one(self.nvars), value)

    def gen(self, index: int) -> "Polynomial":
        """The variable X_{index + 1}."""
        return self.term(variable(self.nvars, index), self.field.one)

    def term(self, monomial: Monomial, coefficient=None) -> "Polynomial":
        coefficient = self.field.one if coefficient is None else coefficient
        if len(monomial) != self.nvars:
            raise RingMismatchError(f"Monomial {monomial} does not live in {self.nvars} variables")
        if self.field.is_zero(coefficient):
            return self.zero
        return Polynomial(self, ((tuple(monomial), coefficient),))

    def from_dict(self, coefficients: Mapping[Monomial, Any]) -> "Polynomial":
        """Canonical polynomial from a monomial -> coefficient mapping (zero coefficients dropped)."""
        is_zero = self.field.is_zero
        key = self.order.key
        terms = sorted(
            ((m, c) for m, c in coefficients.items() if not is_zero(c)), key=lambda term: key(term[0]), reverse=True
        )
        return Polynomial(self, tuple(terms))

    def with_order(self, order: MonomialOrder) -> "PolynomialRing":
        return PolynomialRing(field=self.field, variables=self.variables, order=order)

    def with_field(self, field: Field) -> "PolynomialRing":
        return PolynomialRing(field=field, variables=self.variables, order=self.order)

    def prefix(self, count: int) -> "PolynomialRing":
        """Ring of the first ``count`` variables."""
        return PolynomialRing(field=self.field, variables=self.variables[:count], order=self.order)

    def convert(self, f: "Polynomial") -> "Polynomial":
        """Image of ``f`` (same variables, possibly another field or order) in this ring."""
        if f.ring == self:
            return f
        if f.ring.nvars != self.nvars:
            raise RingMismatchError(f"Cannot map a polynomial in {f.ring.nvars} variables into {self.nvars}")
        source = f.ring.field
        return self.from_dict({m: self.field.convert(c, source) for m, c in f.terms})


@dataclass(frozen=True)
class Polynomial:
    """Sparse polynomial; ``terms`` strictly decreasing in the ring order, coefficients nonzero."""

    ring: PolynomialRing
    terms: Tuple[Term, ...]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ZeroIdealError("The zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def leading_coefficient(self):
        if not self.terms:
            raise ZeroIdealError("The zero polynomial has no leading coefficient")
        return self.terms[0][1]

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m, _ in self.terms), default=-1)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) <= 1

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def monomials(self) -> Tuple[Monomial, ...]:
        return tuple(m for m, _ in self.terms)

    def to_dict(self) -> Dict[Monomial, Any]:
        return dict(self.terms)

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"Polynomials live in different rings: {_describe(self.ring)} and {_describe(other.ring)}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        field = self.ring.field
        coefficients = self.to_dict()
        for m, c in other.terms:
            coefficients[m] = field.add(coefficients[m], c) if m in coefficients else c
        return self.ring.from_dict(coefficients)

    def __neg__(self) -> "Polynomial":
        field = self.ring.field
        return Polynomial(self.ring, tuple((m, field.neg(c)) for m, c in self.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Any]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        field = self.ring.field
        coefficients: Dict[Monomial, Any] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = multiply(m1, m2)
                c = field.mul(c1, c2)
                coefficients[m] = field.add(coefficients[m], c) if m in coefficients else c
        return self.ring.from_dict(coefficients)

    def __pow__(self, exponent: int) -> "Polynomial":
        result = self.ring.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, scalar) -> "Polynomial":
        field = self.ring.field
        if field.is_zero(scalar):
            return self.ring.zero
        return Polynomial(self.ring, tuple((m, field.mul(c, scalar)) for m, c in self.terms))

    def mul_term(self, monomial: Monomial, coefficient) -> "Polynomial":
        field = self.ring.field
        if field.is_zero(coefficient):
            return self.ring.zero
        return Polynomial(self.ring, tuple((multiply(m, monomial), field.mul(c, coefficient)) for m, c in self.terms))

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient))

    def reorder(self, order: MonomialOrder) -> "Polynomial":
        """Explicitly re-sort the terms for another monomial order."""
        if order == self.ring.order:
            return self
        return self.ring.with_order(order).from_dict(self.to_dict())

    def __str__(self):
        return format_polynomial(self)


class ArithmeticKind(Parameter):
    ADD = "add"
    MUL = "mul"
    SCALE = "scale"


def poly_arith(kind: ArithmeticKind, f: Polynomial, g) -> Polynomial:
    kind = ArithmeticKind(kind)
    if kind == ArithmeticKind.ADD:
        return f + g
    if kind == ArithmeticKind.MUL:
        return f * g
    if isinstance(g, Polynomial):
        raise RingMismatchError("scale expects a field element")
    return f.scale(g)


@dataclass(frozen=True)
class PolynomialIdeal:
    """Ideal given by polynomial generators."""

    ring: PolynomialRing
    generators: Tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(g for g in self.generators if not g.is_zero))
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError(f"Generator {g} does not live in {_describe(self.ring)}")

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    @property
    def characteristic(self) -> int:
        return self.ring.characteristic

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous for g in self.generators)

    @property
    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.generators)

    @property
    def is_monomial(self) -> bool:
        return all(g.is_monomial for g in self.generators)

    def with_order(self, order: MonomialOrder) -> "PolynomialIdeal":
        ring = self.ring.with_order(order)
        return PolynomialIdeal(ring, tuple(g.reorder(order) for g in self.generators))

    def pretty(self) -> Tuple[str, ...]:
        return tuple(format_polynomial(g) for g in self.generators)


def format_polynomial(f: Polynomial, names: Optional[Sequence[str]] = None) -> str:
    names = names or f.ring.variables
    field = f.ring.field
    if f.is_zero:
        return "0"
    pieces = []
    for index, (m, c) in enumerate(f.terms):
        negative = isinstance(field, RationalField) and c < 0
        magnitude = -c if negative else c
        is_unit_coefficient = magnitude == field.one
        monomial = format_monomial(m, names)
        if monomial == "1":
            body = field.to_str(magnitude)
        elif is_unit_coefficient:
            body = monomial
        else:
            body = f"{field.to_str(magnitude)}*{monomial}"
        if index == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def polynomials_from_monomials(ring: PolynomialRing, monomials: Iterable[Monomial]) -> Tuple[Polynomial, ...]:
    return tuple(ring.term(m) for m in monomials)


def _describe(ring: PolynomialRing) -> str:
    return f"{ring.field.describe().label}[{', '.join(ring.variables)}] ({ring.order})"
