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
"""Polynomial text syntax.

A polynomial is a sequence of terms joined by ``+`` or ``-``; a term is an optional
integer coefficient followed by factors ``v`` or ``v^e`` joined by ``*``::

    x^2 - 3*x*y + y^2
    -2*x1*x3^4 + 7
"""
import re
from typing import Iterator, List, NamedTuple, Optional

from zerogin.algebra.polynomials import Polynomial, PolynomialRing
from zerogin.exceptions import ParseError

_TOKEN = re.compile(
    r"(?P<space>\s+)|(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^−])|(?P<bad>.)"
)


class Token(NamedTuple):
    kind: str
    text: str
    column: int


def tokenize(text: str, *, line: Optional[int] = None) -> Iterator[Token]:
    for match in _TOKEN.finditer(text):
        kind = match.lastgroup
        column = match.start() + 1
        if kind == "space":
            continue
        if kind == "bad":
            raise ParseError(f"unexpected character {match.group()!r}", line=line, column=column)
        value = match.group()
        yield Token(kind, "-" if value == "−" else value, column)


class _Parser:
    def __init__(self, text: str, ring: PolynomialRing, line: Optional[int]):
        self._tokens: List[Token] = list(tokenize(text, line=line))
        self._position = 0
        self._ring = ring
        self._line = line
        self._end_column = len(text) + 1
        self._index = {name: i for i, name in enumerate(ring.variables)}

    def _peek(self) -> Optional[Token]:
        return self._tokens[self._position] if self._position < len(self._tokens) else None

    def _next(self) -> Token:
        token = self._peek()
        if token is None:
            raise ParseError("unexpected end of polynomial", line=self._line, column=self._end_column)
        self._position += 1
        return token

    def _error(self, message: str, token: Token):
        raise ParseError(message, line=self._line, column=token.column)

    def parse(self) -> Polynomial:
        if not self._tokens:
            raise ParseError("empty polynomial", line=self._line, column=1)
        field = self._ring.field
        coefficients = {}
        sign = 1
        token = self._peek()
        if token.kind == "op" and token.text in "+-":
            self._next()
            sign = -1 if token.text == "-" else 1
        while True:
            monomial, value = self._term()
            coefficient = field.from_int(sign * value)
            coefficients[monomial] = (
                field.add(coefficients[monomial], coefficient) if monomial in coefficients else coefficient
            )
            token = self._peek()
            if token is None:
                break
            if token.kind != "op" or token.text not in "+-":
                self._error(f"expected '+' or '-', got {token.text!r}", token)
            self._next()
            sign = -1 if token.text == "-" else 1
        return self._ring.from_dict(coefficients)

    def _term(self):
        exponents = [0] * self._ring.nvars
        value = 1
        while True:
            token = self._next()
            if token.kind == "number":
                value *= int(token.text)
            elif token.kind == "name":
                if token.text not in self._index:
                    self._error(f"unknown variable {token.text!r}", token)
                exponent = 1
                following = self._peek()
                if following is not None and following.text == "^":
                    self._next()
                    power = self._next()
                    if power.kind != "number":
                        self._error(f"expected an exponent, got {power.text!r}", power)
                    exponent = int(power.text)
                exponents[self._index[token.text]] += exponent
            else:
                self._error(f"expected a coefficient or a variable, got {token.text!r}", token)
            following = self._peek()
            if following is None or following.text != "*":
                return tuple(exponents), value
            self._next()


def parse_polynomial(text: str, ring: PolynomialRing, *, line: Optional[int] = None) -> Polynomial:
    """Parse ``text`` into ``ring``; errors carry the 1-based column (and line when given)."""
    return _Parser(text, ring, line).parse()
