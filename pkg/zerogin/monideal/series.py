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
"""Integer polynomials in t stored as coefficient tuples, lowest degree first.

Arithmetic goes through sympy's dense univariate routines over ZZ, which keep the
highest coefficient first; the helpers below convert at the boundary.
"""
import math
from typing import Sequence, Tuple

from sympy.polys.densearith import dup_add, dup_div, dup_mul, dup_pow, dup_sub
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import ZZ

IntPoly = Tuple[int, ...]

ZERO: IntPoly = ()
ONE: IntPoly = (1,)


def _to_dup(p: Sequence[int]):
    return dup_strip([ZZ(c) for c in reversed(p)])


def _from_dup(f) -> IntPoly:
    return tuple(int(c) for c in reversed(f))


def normalize(p: Sequence[int]) -> IntPoly:
    coefficients = list(p)
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    return _from_dup(dup_add(_to_dup(p), _to_dup(q), ZZ))


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return _from_dup(dup_sub(_to_dup(p), _to_dup(q), ZZ))


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return _from_dup(dup_mul(_to_dup(p), _to_dup(q), ZZ))


def shift(p: IntPoly, k: int) -> IntPoly:
    """t^k * p."""
    return (0,) * k + p if p else ZERO


def one_minus_t_power(k: int) -> IntPoly:
    """(1 - t)^k."""
    return _from_dup(dup_pow(_to_dup((1, -1)), k, ZZ))


def one_minus_t_to(degree: int) -> IntPoly:
    """1 - t^degree."""
    if degree == 0:
        return ZERO
    return (1,) + (0,) * (degree - 1) + (-1,)


def divmod_poly(p: IntPoly, q: IntPoly) -> Tuple[IntPoly, IntPoly]:
    quotient, remainder = dup_div(_to_dup(p), _to_dup(q), ZZ)
    return _from_dup(quotient), _from_dup(remainder)


def degree(p: IntPoly) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(normalize(p)) - 1


def evaluate(p: IntPoly, t: int) -> int:
    return sum(c * t**k for k, c in enumerate(p))


def coefficient(p: IntPoly, k: int) -> int:
    return p[k] if 0 <= k < len(p) else 0


def generalized_binomial(x: int, k: int) -> int:
    """C(x, k) for any integer x (falling factorial over k!)."""
    if k < 0:
        return 0
    falling = 1
    for i in range(k):
        falling *= x - i
    return falling // math.factorial(k)
