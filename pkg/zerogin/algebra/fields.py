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
"""Exact coefficient fields.

Three families are supported:

* ``PrimeField(p)`` -- residues ``0 <= a < p`` stored as ints,
* ``ExtensionField(p, k)`` -- GF(p^k) through Zech logarithm tables over a primitive modulus;
  an element is stored as ``0`` (zero) or ``e + 1`` for the power ``alpha^e`` of the primitive root,
* ``PolynomialExtensionField(p, k)`` -- GF(p^k) in the polynomial basis, used when the tables would be too big,
* ``RationalField`` -- sympy ``QQ`` elements (lowest terms, positive denominator).

Fields are immutable values; elements are plain Python objects manipulated through the field.
"""
import abc
import functools
import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

from sympy import factorint, isprime
from sympy.polys.domains import QQ, ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_gcdex,
    gf_irreducible_p,
    gf_mul,
    gf_neg,
    gf_pow_mod,
    gf_rem,
    gf_strip,
    gf_sub,
)

from zerogin.core import DEFAULT_ENTRY_BOUND, DEFAULT_MIN_FIELD_SIZE, DEFAULT_ZECH_TABLE_LIMIT, MODULAR_PRIME
from zerogin.exceptions import FieldError, RingMismatchError

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class FieldDescription:
    characteristic: int
    extension_degree: Optional[int]
    size: Optional[int]
    entry_bound: Optional[int] = None

    @property
    def label(self) -> str:
        if self.characteristic == 0:
            return f"QQ[|entries| <= {self.entry_bound}]"
        if self.extension_degree == 1:
            return f"GF({self.characteristic})"
        return f"GF({self.characteristic}^{self.extension_degree})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "characteristic": self.characteristic,
            "extension_degree": self.extension_degree,
            "size": self.size,
            "entry_bound": self.entry_bound,
            "label": self.label,
        }


class Field(abc.ABC):
    @property
    @abc.abstractmethod
    def characteristic(self) -> int:
        pass

    @property
    @abc.abstractmethod
    def size(self) -> Optional[int]:
        """Number of elements, ``None`` for infinite fields."""

    @property
    @abc.abstractmethod
    def zero(self) -> Any:
        pass

    @property
    @abc.abstractmethod
    def one(self) -> Any:
        pass

    @abc.abstractmethod
    def add(self, a, b):
        pass

    @abc.abstractmethod
    def neg(self, a):
        pass

    @abc.abstractmethod
    def mul(self, a, b):
        pass

    @abc.abstractmethod
    def inv(self, a):
        pass

    @abc.abstractmethod
    def from_int(self, value: int):
        pass

    @abc.abstractmethod
    def random_element(self, rng: random.Random):
        pass

    @abc.abstractmethod
    def to_str(self, a) -> str:
        pass

    @abc.abstractmethod
    def describe(self) -> FieldDescription:
        pass

    @abc.abstractmethod
    def enlarge(self, table_limit: int = DEFAULT_ZECH_TABLE_LIMIT) -> "Field":
        """Field of the same characteristic with (at least) squared size."""

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def pow(self, a, exponent: int):
        if exponent < 0:
            a, exponent = self.inv(a), -exponent
        result = self.one
        while exponent:
            if exponent & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            exponent >>= 1
        return result

    def convert(self, value, source: "Field"):
        """Map an element of ``source`` (its prime field or QQ) into this field."""
        if source == self:
            return value
        if isinstance(source, RationalField):
            numerator, denominator = int(value.numerator), int(value.denominator)
            if self.characteristic == 0:
                return QQ(numerator, denominator)
            if denominator % self.characteristic == 0:
                raise FieldError(f"{value} has no image in characteristic {self.characteristic}")
            return self.div(self.from_int(numerator), self.from_int(denominator))
        if isinstance(source, PrimeField) and source.characteristic == self.characteristic:
            return self.from_int(value)
        raise RingMismatchError(f"Cannot map elements of {source.describe().label} into {self.describe().label}")


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not isprime(self.p):
            raise FieldError(f"Characteristic must be prime, got {self.p}")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def size(self) -> int:
        return self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise FieldError("Division by zero")
        return pow(a, -1, self.p)

    def from_int(self, value: int):
        return int(value) % self.p

    def random_element(self, rng: random.Random):
        return rng.randrange(self.p)

    def to_str(self, a) -> str:
        return str(a)

    def describe(self) -> FieldDescription:
        return FieldDescription(characteristic=self.p, extension_degree=1, size=self.p)

    def enlarge(self, table_limit: int = DEFAULT_ZECH_TABLE_LIMIT) -> Field:
        return extension_field(self.p, 2, table_limit=table_limit)


class ZechTables(NamedTuple):
    modulus: Tuple[int, ...]
    log: List[int]
    antilog: List[int]
    zech: List[int]


def _encode(coefficients: List[int], p: int) -> int:
    code = 0
    for coefficient in reversed(coefficients):
        code = code * p + coefficient
    return code


@functools.lru_cache(maxsize=None)
def primitive_modulus(p: int, k: int) -> Tuple[int, ...]:
    """First (in lexicographic order of coefficients) primitive monic polynomial of degree k over GF(p)."""
    order = p**k - 1
    cofactors = [order // r for r in factorint(order)]
    x = [ZZ(1), ZZ(0)]
    for tail in itertools.product(range(p), repeat=k):
        if tail[-1] == 0:
            continue
        modulus = [ZZ(1)] + [ZZ(c) for c in tail]
        if not gf_irreducible_p(modulus, p, ZZ):
            continue
        if all(gf_pow_mod(x, c, modulus, p, ZZ) != [1] for c in cofactors):
            return tuple(int(c) for c in modulus)
    raise FieldError(f"No primitive polynomial of degree {k} over GF({p})")


@functools.lru_cache(maxsize=None)
def irreducible_modulus(p: int, k: int) -> Tuple[int, ...]:
    for tail in itertools.product(range(p), repeat=k):
        if tail[-1] == 0:
            continue
        modulus = [ZZ(1)] + [ZZ(c) for c in tail]
        if gf_irreducible_p(modulus, p, ZZ):
            return tuple(int(c) for c in modulus)
    raise FieldError(f"No irreducible polynomial of degree {k} over GF({p})")


@functools.lru_cache(maxsize=None)
def zech_tables(p: int, k: int) -> ZechTables:
    modulus = primitive_modulus(p, k)
    size = p**k
    order = size - 1
    # x^k = -(f_{k-1} x^{k-1} + ... + f_0)
    low = list(reversed(modulus[1:]))

    log = [-1] * size
    antilog = [0] * order
    power = [1] + [0] * (k - 1)
    for exponent in range(order):
        code = _encode(power, p)
        antilog[exponent] = code
        log[code] = exponent
        top = power[-1]
        power = [0] + power[:-1]
        if top:
            power = [(c - top * f) % p for c, f in zip(power, low)]

    zech = [-1] * order
    for exponent in range(order):
        code = antilog[exponent]
        constant = code % p
        shifted = code - constant + (constant + 1) % p
        zech[exponent] = log[shifted] if shifted else -1

    LOGGER.debug(f"Built Zech tables for GF({p}^{k}) over modulus {modulus}")
    return ZechTables(modulus=modulus, log=log, antilog=antilog, zech=zech)


@dataclass(frozen=True)
class ExtensionField(Field):
    p: int
    k: int
    _tables: ZechTables = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not isprime(self.p):
            raise FieldError(f"Characteristic must be prime, got {self.p}")
        if self.k < 1:
            raise FieldError(f"Extension degree must be positive, got {self.k}")
        object.__setattr__(self, "_tables", zech_tables(self.p, self.k))

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def size(self) -> int:
        return self.p**self.k

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def _order(self) -> int:
        return self.p**self.k - 1

    def add(self, a, b):
        if not a:
            return b
        if not b:
            return a
        order = self._order
        shift = self._tables.zech[(b - a) % order]
        if shift < 0:
            return 0
        return (a - 1 + shift) % order + 1

    def neg(self, a):
        if not a or self.p == 2:
            return a
        order = self._order
        return (a - 1 + order // 2) % order + 1

    def mul(self, a, b):
        if not a or not b:
            return 0
        return (a + b - 2) % self._order + 1

    def inv(self, a):
        if not a:
            raise FieldError("Division by zero")
        return (1 - a) % self._order + 1

    def from_int(self, value: int):
        constant = int(value) % self.p
        if not constant:
            return 0
        return self._tables.log[constant] + 1

    def random_element(self, rng: random.Random):
        return rng.randrange(self.size)

    def coefficients(self, a) -> List[int]:
        """Coordinates in the basis 1, alpha, ..., alpha^(k-1)."""
        code = self._tables.antilog[a - 1] if a else 0
        digits = []
        for _ in range(self.k):
            code, digit = divmod(code, self.p)
            digits.append(digit)
        return digits

    def to_str(self, a) -> str:
        return _format_coordinates(self.coefficients(a))

    def describe(self) -> FieldDescription:
        return FieldDescription(characteristic=self.p, extension_degree=self.k, size=self.size)

    def enlarge(self, table_limit: int = DEFAULT_ZECH_TABLE_LIMIT) -> Field:
        return extension_field(self.p, 2 * self.k, table_limit=table_limit)


@dataclass(frozen=True)
class PolynomialExtensionField(Field):
    """GF(p^k) as GF(p)[a]/(f); elements are tuples of coefficients, highest degree first."""

    p: int
    k: int
    modulus: Tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        if not isprime(self.p):
            raise FieldError(f"Characteristic must be prime, got {self.p}")
        object.__setattr__(self, "modulus", irreducible_modulus(self.p, self.k))

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def size(self) -> int:
        return self.p**self.k

    @property
    def zero(self) -> Tuple[int, ...]:
        return ()

    @property
    def one(self) -> Tuple[int, ...]:
        return (1,)

    def add(self, a, b):
        return tuple(gf_add(list(a), list(b), self.p, ZZ))

    def sub(self, a, b):
        return tuple(gf_sub(list(a), list(b), self.p, ZZ))

    def neg(self, a):
        return tuple(gf_neg(list(a), self.p, ZZ))

    def mul(self, a, b):
        if not a or not b:
            return ()
        return tuple(gf_rem(gf_mul(list(a), list(b), self.p, ZZ), list(self.modulus), self.p, ZZ))

    def inv(self, a):
        if not a:
            raise FieldError("Division by zero")
        s, _, h = gf_gcdex(list(a), list(self.modulus), self.p, ZZ)
        if list(h) != [1]:
            raise FieldError(f"{a} is not invertible")
        return tuple(s)

    def from_int(self, value: int):
        constant = int(value) % self.p
        return (constant,) if constant else ()

    def random_element(self, rng: random.Random):
        return tuple(gf_strip([ZZ(rng.randrange(self.p)) for _ in range(self.k)]))

    def to_str(self, a) -> str:
        return _format_coordinates([int(c) for c in reversed(a)])

    def describe(self) -> FieldDescription:
        return FieldDescription(characteristic=self.p, extension_degree=self.k, size=self.size)

    def enlarge(self, table_limit: int = DEFAULT_ZECH_TABLE_LIMIT) -> Field:
        return PolynomialExtensionField(self.p, 2 * self.k)


@dataclass(frozen=True)
class RationalField(Field):
    """QQ; ``entry_bound`` only bounds sampled random entries and does not change the field."""

    entry_bound: int = field(default=DEFAULT_ENTRY_BOUND, compare=False)

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def size(self) -> None:
        return None

    @property
    def zero(self):
        return QQ(0)

    @property
    def one(self):
        return QQ(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise FieldError("Division by zero")
        return QQ(1) / a

    def div(self, a, b):
        if not b:
            raise FieldError("Division by zero")
        return a / b

    def from_int(self, value: int):
        return QQ(int(value))

    def random_element(self, rng: random.Random):
        return QQ(rng.randint(-self.entry_bound, self.entry_bound))

    def to_str(self, a) -> str:
        if a.denominator == 1:
            return str(int(a.numerator))
        return f"{int(a.numerator)}/{int(a.denominator)}"

    def describe(self) -> FieldDescription:
        return FieldDescription(characteristic=0, extension_degree=None, size=None, entry_bound=self.entry_bound)

    def enlarge(self, table_limit: int = DEFAULT_ZECH_TABLE_LIMIT) -> Field:
        return RationalField(entry_bound=self.entry_bound**2)


def _format_coordinates(digits: List[int]) -> str:
    parts = []
    for power, digit in reversed(list(enumerate(digits))):
        if not digit:
            continue
        if power == 0:
            parts.append(str(digit))
        else:
            monomial = "a" if power == 1 else f"a^{power}"
            parts.append(monomial if digit == 1 else f"{digit}*{monomial}")
    if not parts:
        return "0"
    if len(parts) == 1:
        return parts[0]
    return "(" + " + ".join(parts) + ")"


def extension_field(p: int, k: int, *, table_limit: int = DEFAULT_ZECH_TABLE_LIMIT) -> Field:
    if k == 1:
        return PrimeField(p)
    if p**k <= table_limit:
        return ExtensionField(p, k)
    return PolynomialExtensionField(p, k)


def prime_field_or_rationals(characteristic: int) -> Field:
    """Ground field of a job: GF(p) or QQ."""
    if characteristic == 0:
        return RationalField()
    return PrimeField(characteristic)


def sampling_field(
    characteristic: int,
    min_size: int = DEFAULT_MIN_FIELD_SIZE,
    *,
    table_limit: int = DEFAULT_ZECH_TABLE_LIMIT,
    entry_bound: int = DEFAULT_ENTRY_BOUND,
    modular: bool = False,
) -> Field:
    """Smallest field of the given characteristic with at least ``min_size`` elements.

    In characteristic 0 this is QQ with integer samples in [-entry_bound, entry_bound],
    or GF(2^31 - 1) when ``modular`` is set.
    """
    if characteristic == 0:
        if modular:
            return PrimeField(MODULAR_PRIME)
        return RationalField(entry_bound=entry_bound)
    if not isprime(characteristic):
        raise FieldError(f"Characteristic must be 0 or prime, got {characteristic}")
    degree = 1
    while characteristic**degree < min_size:
        degree += 1
    return extension_field(characteristic, degree, table_limit=table_limit)


def validate_characteristic(characteristic: int) -> int:
    if characteristic != 0 and not isprime(characteristic):
        raise FieldError(f"characteristic must be 0 or prime, got {characteristic}")
    return characteristic
