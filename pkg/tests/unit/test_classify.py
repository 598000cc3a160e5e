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
from hypothesis import given, settings

from zerogin.monideal.classify import (
    classify,
    is_borel_fixed,
    is_p_borel,
    is_stable,
    is_strongly_stable,
    is_weakly_stable,
)
from zerogin.monideal.ideal import MonomialIdeal
from tests.utils.corpus import monomial_ideals, strongly_stable_ideals
from tests.utils.ideals import monomials


@pytest.mark.parametrize(
    "ideal,strongly_stable,stable,weakly_stable",
    [
        (monomials((2, 0), (1, 1), (0, 3)), True, True, True),
        (monomials((1, 0, 0), (0, 2, 0)), True, True, True),
        (monomials((2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 1, 1)), False, True, True),
        (monomials((2, 0), (0, 2)), False, False, True),
        (monomials((1, 1)), False, False, False),
        (monomials((1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)), False, False, False),
    ],
)
def test_hierarchy_examples(ideal, strongly_stable, stable, weakly_stable):
    assert is_strongly_stable(ideal) is strongly_stable
    assert is_stable(ideal) is stable
    assert is_weakly_stable(ideal) is weakly_stable


def test_report_carries_witnesses():
    ideal = monomials((2, 0), (0, 2))
    report = classify(ideal)
    assert not report.borel_fixed and report.p_borel is None
    data = report.to_dict(ideal.variables)
    assert data["weakly_stable"] is True
    assert sorted(data["witnesses"]) == ["borel_fixed", "stable", "strongly_stable"]
    assert data["witnesses"]["strongly_stable"] == {"generator": "y^2", "image": "x*y", "reason": "X1*u/X2 not in I"}
    assert data["witnesses"]["borel_fixed"] == data["witnesses"]["strongly_stable"]


def test_frobenius_exchanges_in_positive_characteristic():
    assert is_p_borel(monomials((2, 0), (0, 2)), 2)
    assert not is_p_borel(monomials((2, 0), (0, 2)), 3)
    report = classify(monomials((2, 0), (0, 2), characteristic=2))
    assert report.borel_fixed and report.p_borel
    assert not report.strongly_stable
    assert "borel_fixed" not in report.witnesses
    failed = classify(monomials((2, 0), (0, 2), characteristic=3))
    assert failed.witnesses["p_borel"].reason == "X1^1*u/X2^1 not in I (1 <=_3 2)"
    assert failed.witnesses["borel_fixed"] == failed.witnesses["p_borel"]


def test_borel_fixed_characteristic_override():
    ideal = monomials((2, 0), (0, 2))
    assert not is_borel_fixed(ideal)
    assert is_borel_fixed(ideal, 2)
    assert is_borel_fixed(monomials((3, 0), (0, 3)), 3)
    assert not is_borel_fixed(monomials((3, 0), (0, 3)), 2)


def test_zero_and_unit_ideals_are_strongly_stable():
    for ideal in (MonomialIdeal.unit(2, 0), MonomialIdeal.zero(2, 0)):
        assert classify(ideal).strongly_stable


@settings(deadline=None, max_examples=80)
@given(monomial_ideals())
def test_hierarchy_implications(ideal):
    report = classify(ideal)
    if report.strongly_stable:
        assert report.stable
    if report.stable:
        assert report.weakly_stable
    for p in (2, 3, 5):
        if report.strongly_stable:
            assert is_p_borel(ideal, p)


@settings(deadline=None, max_examples=60)
@given(strongly_stable_ideals())
def test_borel_closure_is_strongly_stable(ideal):
    assert is_strongly_stable(ideal)
    assert is_borel_fixed(ideal)
