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

from zerogin.algebra.changes import LinearChange, apply_change, random_change
from zerogin.algebra.fields import ExtensionField, PrimeField, RationalField
from zerogin.algebra.parser import parse_polynomial
from zerogin.exceptions import FieldError, RingMismatchError
from tests.utils.ideals import ring


def test_swap_variables():
    field = RationalField()
    swap = LinearChange(field, ((field.zero, field.one), (field.one, field.zero)))
    f = parse_polynomial("x^2 + 2*y", ring(2))
    assert str(apply_change(swap, f)) == "y^2 + 2*x"
    assert swap.determinant() == field.from_int(-1)


def test_identity_is_neutral():
    field = PrimeField(7)
    f = parse_polynomial("x^3 + 3*x*y*z + z^2", ring(3, 7))
    assert apply_change(LinearChange.identity(field, 3), f) == f


def test_singular_and_non_square_rejected():
    field = PrimeField(5)
    with pytest.raises(FieldError):
        LinearChange(field, ((1, 2), (2, 4)))
    with pytest.raises(RingMismatchError):
        LinearChange(field, ((1, 2),))
    with pytest.raises(RingMismatchError):
        apply_change(LinearChange.identity(field, 3), parse_polynomial("x", ring(2, 5)))


@pytest.mark.parametrize("field", [PrimeField(7), ExtensionField(2, 3)])
def test_inverse_and_composition(field):
    change = random_change(3, field, seed=11)
    identity = LinearChange.identity(field, 3)
    assert change.compose(change.inverse()) == identity
    assert change.inverse().compose(change) == identity


def test_substitution_follows_matrix_product():
    field = PrimeField(11)
    target = ring(2, 11)
    f = parse_polynomial("x^2*y + 3*y^2 + x", target)
    first = random_change(2, field, seed=1)
    second = random_change(2, field, seed=2)
    assert apply_change(second, apply_change(first, f)) == apply_change(first.compose(second), f)


def test_apply_moves_rational_input_to_change_field():
    field = PrimeField(3)
    f = parse_polynomial("x^2 + 4*y^2", ring(2))
    image = apply_change(LinearChange.identity(field, 2), f)
    assert image.ring.field == field
    assert str(image) == "x^2 + y^2"


def test_random_change_is_deterministic():
    field = PrimeField(101)
    assert random_change(4, field, seed=5) == random_change(4, field, seed=5)
    assert random_change(4, field, seed=5) != random_change(4, field, seed=6)


def test_random_change_over_smallest_field_is_invertible():
    field = PrimeField(2)
    for seed in range(20):
        assert not field.is_zero(random_change(3, field, seed=seed).determinant())
