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
import random
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from zerogin.algebra.fields import Field
from zerogin.algebra.polynomials import Polynomial, PolynomialRing
from zerogin.exceptions import FieldError, RingMismatchError

LOGGER = logging.getLogger(__name__)

Matrix = Tuple[Tuple[Any, ...], ...]


def _eliminate(field: Field, rows: List[List[Any]], width: int) -> Tuple[Any, List[List[Any]]]:
    """Gauss-Jordan on the first ``width`` columns; returns (determinant, reduced rows)."""
    determinant = field.one
    n = len(rows)
    for column in range(width):
        pivot = next((r for r in range(column, n) if not field.is_zero(rows[r][column])), None)
        if pivot is None:
            return field.zero, rows
        if pivot != column:
            rows[column], rows[pivot] = rows[pivot], rows[column]
            determinant = field.neg(determinant)
        pivot_value = rows[column][column]
        determinant = field.mul(determinant, pivot_value)
        inverse = field.inv(pivot_value)
        rows[column] = [field.mul(inverse, x) for x in rows[column]]
        for r in range(n):
            if r == column or field.is_zero(rows[r][column]):
                continue
            factor = rows[r][column]
            rows[r] = [field.sub(x, field.mul(factor, y)) for x, y in zip(rows[r], rows[column])]
    return determinant, rows


def determinant(field: Field, matrix: Sequence[Sequence[Any]]) -> Any:
    rows = [list(row) for row in matrix]
    value, _ = _eliminate(field, rows, len(rows))
    return value


@dataclass(frozen=True)
class LinearChange:
    """Invertible change of coordinates X_i -> sum_j matrix[i][j] X_j."""

    field: Field
    matrix: Matrix

    def __post_init__(self):
        matrix = tuple(tuple(row) for row in self.matrix)
        object.__setattr__(self, "matrix", matrix)
        if any(len(row) != len(matrix) for row in matrix):
            raise RingMismatchError("A linear change needs a square matrix")
        if self.field.is_zero(determinant(self.field, matrix)):
            raise FieldError("Linear change matrix is singular")

    @classmethod
    def identity(cls, field: Field, n: int) -> "LinearChange":
        return cls(field, tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)))

    @property
    def nvars(self) -> int:
        return len(self.matrix)

    def determinant(self):
        return determinant(self.field, self.matrix)

    def inverse(self) -> "LinearChange":
        field = self.field
        n = self.nvars
        augmented = [
            list(row) + [field.one if i == j else field.zero for j in range(n)] for i, row in enumerate(self.matrix)
        ]
        _, reduced = _eliminate(field, augmented, n)
        return LinearChange(field, tuple(tuple(row[n:]) for row in reduced))

    def compose(self, other: "LinearChange") -> "LinearChange":
        """Matrix product self * other: apply ``self`` to the images of ``other``."""
        field = self.field
        n = self.nvars
        product = []
        for i in range(n):
            row = []
            for j in range(n):
                value = field.zero
                for k in range(n):
                    value = field.add(value, field.mul(self.matrix[i][k], other.matrix[k][j]))
                row.append(value)
            product.append(tuple(row))
        return LinearChange(field, tuple(product))

    def images(self, ring: PolynomialRing) -> Tuple[Polynomial, ...]:
        """Images of the variables as linear forms of ``ring``."""
        n = self.nvars
        forms = []
        for row in self.matrix:
            forms.append(ring.from_dict({tuple(1 if k == j else 0 for k in range(n)): c for j, c in enumerate(row)}))
        return tuple(forms)


def apply_change(change: LinearChange, f: Polynomial) -> Polynomial:
    """Substitute X_i -> sum_j g_ij X_j in ``f`` and expand."""
    ring = f.ring
    if ring.nvars != change.nvars:
        raise RingMismatchError(f"Change on {change.nvars} variables applied to a polynomial in {ring.nvars}")
    if ring.field != change.field:
        ring = ring.with_field(change.field)
        f = ring.convert(f)
    forms = change.images(ring)
    powers: Dict[Tuple[int, int], Polynomial] = {}

    def _power(index: int, exponent: int) -> Polynomial:
        key = (index, exponent)
        if key not in powers:
            powers[key] = forms[index] if exponent == 1 else _power(index, exponent - 1) * forms[index]
        return powers[key]

    result = ring.zero
    for monomial, coefficient in f.terms:
        image = ring.constant(coefficient)
        for index, exponent in enumerate(monomial):
            if exponent:
                image = image * _power(index, exponent)
        result = result + image
    return result


def random_change(n: int, field: Field, seed: int) -> LinearChange:
    """Deterministic random invertible change; singular draws are resampled with derived seeds."""
    attempt = 0
    while True:
        rng = random.Random(f"{seed}:{attempt}")
        matrix = tuple(tuple(field.random_element(rng) for _ in range(n)) for _ in range(n))
        if not field.is_zero(determinant(field, matrix)):
            return LinearChange(field, matrix)
        LOGGER.debug(f"Singular draw for seed {seed}, attempt {attempt}; resampling")
        attempt += 1
