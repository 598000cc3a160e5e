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
"""Monomial ideals tagged with a characteristic, and their combinatorics."""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from zerogin.algebra.fields import validate_characteristic
from zerogin.algebra.monomials import (
    Monomial,
    colon,
    default_variable_names,
    degree,
    divides,
    format_monomial,
    is_squarefree,
    lcm,
    one,
)
from zerogin.exceptions import OutOfRangeError, RingMismatchError, ZeroIdealError
from zerogin.utils.enums import Parameter

LOGGER = logging.getLogger(__name__)


def generator_key(m: Monomial):
    """Canonical listing: by degree, then lexicographically decreasing."""
    return (sum(m), tuple(-e for e in m))


def minimal_monomials(gens: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Divisibility antichain generating the same ideal, canonically sorted."""
    minimal: List[Monomial] = []
    for m in sorted({tuple(g) for g in gens}, key=generator_key):
        if not any(divides(kept, m) for kept in minimal):
            minimal.append(m)
    return tuple(minimal)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal of K[X_1..X_n] given by its minimal generators.

    The unit ideal is generated by the monomial 1, the zero ideal has no generators.
    """

    nvars: int
    characteristic: int
    generators: Tuple[Monomial, ...] = ()
    variables: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        validate_characteristic(self.characteristic)
        for g in self.generators:
            if len(g) != self.nvars:
                raise RingMismatchError(f"Generator {tuple(g)} does not live in {self.nvars} variables")
            if any(e < 0 for e in g):
                raise RingMismatchError(f"Generator {tuple(g)} has negative exponents")
        object.__setattr__(self, "generators", minimal_monomials(self.generators))
        names = tuple(self.variables) if self.variables else default_variable_names(self.nvars)
        if len(names) != self.nvars:
            raise RingMismatchError(f"Expected {self.nvars} variable names, got {list(names)}")
        object.__setattr__(self, "variables", names)

    @classmethod
    def unit(cls, nvars: int, characteristic: int, variables=None) -> "MonomialIdeal":
        return cls(nvars, characteristic, (one(nvars),), variables)

    @classmethod
    def zero(cls, nvars: int, characteristic: int, variables=None) -> "MonomialIdeal":
        return cls(nvars, characteristic, (), variables)

    def _with(self, generators: Iterable[Monomial]) -> "MonomialIdeal":
        return MonomialIdeal(self.nvars, self.characteristic, tuple(generators), self.variables)

    @property
    def is_unit(self) -> bool:
        return self.generators == (one(self.nvars),)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.generators)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(degree(g) for g in self.generators)

    @property
    def generating_degree(self) -> int:
        if self.is_zero:
            raise ZeroIdealError("The zero ideal has no generating degree")
        return max(self.degrees)

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)

    def __contains__(self, m: Monomial) -> bool:
        return self.contains(m)

    def is_subset(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.generators)

    def _check(self, other: "MonomialIdeal"):
        if self.nvars != other.nvars or self.characteristic != other.characteristic:
            raise RingMismatchError(
                f"Ideals live in different rings: {self.nvars} variables in characteristic {self.characteristic} "
                f"and {other.nvars} variables in characteristic {other.characteristic}"
            )

    def sum(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return self._with(self.generators + other.generators)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return self._with(lcm(a, b) for a in self.generators for b in other.generators)

    def with_characteristic(self, characteristic: int) -> "MonomialIdeal":
        return MonomialIdeal(self.nvars, characteristic, self.generators, self.variables)

    def pretty(self) -> List[str]:
        return [format_monomial(g, self.variables) for g in self.generators]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vars": list(self.variables),
            "char": self.characteristic,
            "gens": [list(g) for g in self.generators],
            "pretty": self.pretty(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MonomialIdeal":
        variables = tuple(data["vars"])
        return cls(len(variables), int(data["char"]), tuple(tuple(g) for g in data["gens"]), variables)

    def __str__(self):
        return "(" + ", ".join(self.pretty()) + ")" if self.generators else "(0)"


def minimalize(gens: Iterable[Monomial], nvars: int, characteristic: int = 0, variables=None) -> MonomialIdeal:
    return MonomialIdeal(nvars, characteristic, tuple(gens), variables)


class Saturation(Parameter):
    """Targets of colon_and_saturate other than a single monomial."""

    MAXIMAL = "maximal"


class GenStats(NamedTuple):
    D: int
    mu: int
    degrees: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {"D": self.D, "mu": self.mu, "degrees": list(self.degrees)}


def colon_monomial(ideal: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """I : u."""
    if len(u) != ideal.nvars:
        raise RingMismatchError(f"Monomial {u} does not live in {ideal.nvars} variables")
    return ideal._with(colon(g, u) for g in ideal.generators)


def saturate_variable(ideal: MonomialIdeal, index: int) -> MonomialIdeal:
    """I : X_{index+1}^inf."""
    if not 0 <= index < ideal.nvars:
        raise OutOfRangeError(f"Variable index {index} out of range for {ideal.nvars} variables")
    stripped = []
    for g in ideal.generators:
        exponents = list(g)
        exponents[index] = 0
        stripped.append(tuple(exponents))
    return ideal._with(stripped)


def saturate_maximal(ideal: MonomialIdeal) -> MonomialIdeal:
    """I : m^inf as the intersection of the variable saturations."""
    result = MonomialIdeal.unit(ideal.nvars, ideal.characteristic, ideal.variables)
    for index in range(ideal.nvars):
        result = result.intersect(saturate_variable(ideal, index))
    return result


def colon_and_saturate(ideal: MonomialIdeal, by: Union[Monomial, int, Saturation]) -> MonomialIdeal:
    """Dispatch: a monomial gives I : u, an int i gives I : X_i^inf (1-based), MAXIMAL gives I : m^inf."""
    if isinstance(by, Saturation) or by == Saturation.MAXIMAL.value:
        return saturate_maximal(ideal)
    if isinstance(by, int):
        return saturate_variable(ideal, by - 1)
    return colon_monomial(ideal, tuple(by))


def restrict(ideal: MonomialIdeal, j: int) -> MonomialIdeal:
    """I_[j]: generators supported on X_1..X_j, in the ring of the first j variables."""
    if not 0 <= j <= ideal.nvars:
        raise OutOfRangeError(f"Restriction index {j} out of range [0, {ideal.nvars}]")
    kept = tuple(g[:j] for g in ideal.generators if not any(g[j:]))
    return MonomialIdeal(j, ideal.characteristic, kept, ideal.variables[:j])


def frobenius_power(ideal: MonomialIdeal, p: int) -> MonomialIdeal:
    return ideal._with(tuple(p * e for e in g) for g in ideal.generators)


def gen_stats(ideal: MonomialIdeal) -> GenStats:
    if ideal.is_zero:
        raise ZeroIdealError("gen_stats needs a nonzero ideal")
    degrees = ideal.degrees
    return GenStats(D=max(degrees), mu=len(degrees), degrees=degrees)


def variables_ideal(nvars: int, characteristic: int, indices: Sequence[int], variables=None) -> MonomialIdeal:
    """The prime generated by the variables with the given zero based indices."""
    return MonomialIdeal(
        nvars,
        characteristic,
        tuple(tuple(1 if k == i else 0 for k in range(nvars)) for i in indices),
        variables,
    )
