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
"""Exponent-vector monomials and monomial orders (variables ordered X1 > X2 > ... > Xn)."""
from typing import Callable, List, Sequence, Tuple

from zerogin.exceptions import RingMismatchError
from zerogin.utils.enums import Parameter

Monomial = Tuple[int, ...]


class Ordering(Parameter):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


def _lex_key(m: Monomial):
    return m


def _deglex_key(m: Monomial):
    return (sum(m), m)


def _degrevlex_key(m: Monomial):
    # smaller exponent in the last differing variable wins
    return (sum(m), tuple(-e for e in reversed(m)))


class MonomialOrder(Parameter):
    LEX = "lex"
    DEGLEX = "deglex"
    DEGREVLEX = "degrevlex"

    @property
    def key(self) -> Callable[[Monomial], tuple]:
        """Sort key: ``a > b`` in the order iff ``key(a) > key(b)``."""
        return _ORDER_KEYS[self]


_ORDER_KEYS = {
    MonomialOrder.LEX: _lex_key,
    MonomialOrder.DEGLEX: _deglex_key,
    MonomialOrder.DEGREVLEX: _degrevlex_key,
}


def monomial_compare(a: Monomial, b: Monomial, order: MonomialOrder) -> Ordering:
    if len(a) != len(b):
        raise RingMismatchError(f"Monomials of different lengths: {len(a)} and {len(b)}")
    key_a, key_b = order.key(a), order.key(b)
    if key_a == key_b:
        return Ordering.EQ
    return Ordering.GT if key_a > key_b else Ordering.LT


def degree(m: Monomial) -> int:
    return sum(m)


def one(nvars: int) -> Monomial:
    return (0,) * nvars


def variable(nvars: int, index: int) -> Monomial:
    """Monomial X_{index + 1} (zero based index)."""
    return tuple(1 if i == index else 0 for i in range(nvars))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def multiply(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / b for b dividing a."""
    return tuple(x - y for x, y in zip(a, b))


def colon(a: Monomial, b: Monomial) -> Monomial:
    """a / gcd(a, b)."""
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return all(not x or not y for x, y in zip(a, b))


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def support(m: Monomial) -> Tuple[int, ...]:
    return tuple(i for i, e in enumerate(m) if e)


def max_index(m: Monomial) -> int:
    """m(u): 1-based index of the last variable dividing u, 0 for u = 1."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i + 1
    return 0


def exchange(m: Monomial, source: int, target: int, power: int = 1) -> Monomial:
    """m * X_target^power / X_source^power (zero based indices)."""
    exponents = list(m)
    exponents[source] -= power
    exponents[target] += power
    return tuple(exponents)


def p_adic_leq(k: int, ell: int, p: int) -> bool:
    """k <=_p ell: every base-p digit of k is at most the matching digit of ell."""
    while k or ell:
        if k % p > ell % p:
            return False
        k //= p
        ell //= p
    return True


def monomials_of_degree(nvars: int, d: int) -> List[Monomial]:
    """All monomials of degree d in decreasing lex order."""
    if nvars == 0:
        return [()] if d == 0 else []
    if nvars == 1:
        return [(d,)]
    result = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            result.append((first,) + rest)
    return result


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def default_variable_names(nvars: int) -> Tuple[str, ...]:
    if nvars <= 4:
        return tuple("xyzw"[:nvars])
    return tuple(f"x{i}" for i in range(1, nvars + 1))
