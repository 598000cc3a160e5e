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
"""Hilbert series of quotients by monomial ideals."""
import functools
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, NamedTuple, Tuple

import sympy

from zerogin.algebra.monomials import Monomial, colon, coprime
from zerogin.exceptions import UnitIdealError
from zerogin.monideal import series
from zerogin.monideal.ideal import MonomialIdeal, minimal_monomials
from zerogin.monideal.series import IntPoly

LOGGER = logging.getLogger(__name__)

HILBERT_VARIABLE = sympy.Symbol("d")


class ReducedSeries(NamedTuple):
    """N(t)/(1-t)^n = h(t)/(1-t)^dimension with h(1) = multiplicity != 0."""

    numerator: IntPoly
    dimension: int
    multiplicity: int


@dataclass(frozen=True)
class HilbertSeries:
    """Hilb(A/I) = numerator(t) / (1 - t)^nvars."""

    numerator: IntPoly
    nvars: int

    def value(self, d: int) -> int:
        """dim_K (A/I)_d."""
        if d < 0:
            return 0
        if self.nvars == 0:
            return series.coefficient(self.numerator, d)
        return sum(
            c * series.generalized_binomial(d - k + self.nvars - 1, self.nvars - 1)
            for k, c in enumerate(self.numerator)
            if k <= d
        )

    def values(self, start: int, stop: int) -> List[int]:
        """Values on the closed interval [start, stop]."""
        return [self.value(d) for d in range(start, stop + 1)]

    def reduced(self) -> ReducedSeries:
        numerator = series.normalize(self.numerator)
        dimension = self.nvars
        if not numerator:
            return ReducedSeries(numerator=(), dimension=-1, multiplicity=0)
        while dimension > 0:
            quotient, remainder = series.divmod_poly(numerator, (1, -1))
            if remainder:
                break
            numerator = quotient
            dimension -= 1
        return ReducedSeries(numerator=numerator, dimension=dimension, multiplicity=series.evaluate(numerator, 1))

    @property
    def dimension(self) -> int:
        """Krull dimension of A/I (-1 for the unit ideal)."""
        return self.reduced().dimension

    @property
    def multiplicity(self) -> int:
        return self.reduced().multiplicity

    def hilbert_polynomial_value(self, d: int) -> int:
        """HilbPol(d), exact for every integer d."""
        numerator, dimension, _ = self.reduced()
        if dimension <= 0:
            return 0
        return sum(
            c * series.generalized_binomial(d - k + dimension - 1, dimension - 1) for k, c in enumerate(numerator)
        )

    def hilbert_polynomial(self) -> sympy.Poly:
        """HilbPol as a polynomial in ``d`` with rational coefficients."""
        numerator, dimension, _ = self.reduced()
        d = HILBERT_VARIABLE
        if dimension <= 0:
            return sympy.Poly(0, d, domain=sympy.QQ)
        expression = sympy.Integer(0)
        for k, c in enumerate(numerator):
            falling = sympy.Integer(1)
            for i in range(dimension - 1):
                falling *= d - k + dimension - 1 - i
            expression += c * falling / sympy.factorial(dimension - 1)
        return sympy.Poly(sympy.expand(expression), d, domain=sympy.QQ)

    def regularity_index(self) -> int:
        """Smallest degree from which the Hilbert function agrees with the Hilbert polynomial."""
        numerator, dimension, _ = self.reduced()
        if dimension < 0:
            return 0
        return max(len(numerator) - 1 - dimension + 1, 0)

    def to_dict(self) -> Dict[str, Any]:
        reduced = self.reduced()
        return {
            "numerator": list(self.numerator),
            "nvars": self.nvars,
            "dimension": reduced.dimension,
            "multiplicity": reduced.multiplicity,
            "hilbert_polynomial": str(self.hilbert_polynomial().as_expr()),
        }


def _pairwise_coprime(gens: Tuple[Monomial, ...]) -> bool:
    return all(coprime(a, b) for i, a in enumerate(gens) for b in gens[i + 1 :])


@functools.lru_cache(maxsize=65536)
def _numerator(gens: Tuple[Monomial, ...]) -> IntPoly:
    """N(A/I) for minimal generators ``gens`` of a proper ideal."""
    if not gens:
        return series.ONE
    if _pairwise_coprime(gens):
        result = series.ONE
        for g in gens:
            result = series.mul(result, series.one_minus_t_to(sum(g)))
        return result
    # peel off generators from the lex-largest: N(I) = 1 - sum_k t^deg(u_k) N((u_k+1, ...) : u_k)
    ordered = sorted(gens, reverse=True)
    result = series.ONE
    for k, u in enumerate(ordered):
        rest = ordered[k + 1 :]
        if not rest:
            result = series.sub(result, series.shift(series.ONE, sum(u)))
            continue
        quotient = minimal_monomials(colon(v, u) for v in rest)
        result = series.sub(result, series.shift(_numerator(quotient), sum(u)))
    return result


def hilbert_numerator(ideal: MonomialIdeal) -> IntPoly:
    """Numerator of Hilb(A/I) over (1-t)^n; the unit ideal gives the zero polynomial."""
    if ideal.is_unit:
        return series.ZERO
    return _numerator(ideal.generators)


def hilbert_series(ideal: MonomialIdeal) -> HilbertSeries:
    return HilbertSeries(numerator=hilbert_numerator(ideal), nvars=ideal.nvars)


def hilbert(ideal: MonomialIdeal) -> HilbertSeries:
    if ideal.is_unit:
        raise UnitIdealError("The Hilbert series of A/A is zero; hilbert expects a proper ideal")
    return hilbert_series(ideal)


def hilbert_function(ideal: MonomialIdeal, start: int, stop: int) -> List[int]:
    return hilbert_series(ideal).values(start, stop)
