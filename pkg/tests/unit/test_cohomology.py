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

from zerogin.cohomology.profile import (
    CohomHilbert,
    Corner,
    cohom_eval_end,
    cohom_profile_auno,
    corners_from_profile,
    extremal_betti,
    h0_hilbert,
    local_cohomology_profile,
    pd_via_corners,
    regularity_depth_pd,
    serre_audit,
)
from zerogin.exceptions import NotWeaklyStableError, ZeroIdealError
from zerogin.monideal.betti import ek_betti
from zerogin.monideal.ideal import MonomialIdeal, gen_stats
from tests.utils.corpus import strongly_stable_ideals
from tests.utils.ideals import monomials

QUADRICS = monomials((2, 0), (0, 2))
EMBEDDED = monomials((2, 0), (1, 1))


def _profile(ideal):
    return [(c.i, c.P) for c in local_cohomology_profile(ideal)]


def test_finite_length_quotient():
    assert _profile(QUADRICS) == [(0, (1, 2, 1)), (1, ()), (2, ())]
    assert h0_hilbert(QUADRICS) == (1, 2, 1)
    assert regularity_depth_pd(QUADRICS) == (2, 3, 0, 2)
    assert extremal_betti(QUADRICS).corners == (Corner(2, 2, 1),)


def test_embedded_component():
    profile = local_cohomology_profile(EMBEDDED)
    assert [(c.i, c.P) for c in profile] == [(0, (0, 1)), (1, (1,)), (2, ())]
    first = profile[1]
    assert first.end == -1
    assert [first.value(d) for d in (-4, -2, -1, 0, 1)] == [1, 1, 1, 0, 0]
    regularity = regularity_depth_pd(EMBEDDED)
    assert (regularity.reg_quotient, regularity.depth, regularity.pd) == (1, 0, 2)
    assert extremal_betti(EMBEDDED).as_dict() == {(2, 1): 1}
    assert pd_via_corners(EMBEDDED) == 2
    assert cohom_eval_end(first, (-3, -1, 0)) == {"values": {-3: 1, -1: 1, 0: 0}, "end": -1}


def test_positive_depth():
    ideal = monomials((1, 0, 0), (0, 2, 0))
    profile = local_cohomology_profile(ideal)
    assert profile[1].P == (1, 1) and profile[1].end == 0
    regularity = regularity_depth_pd(ideal)
    assert (regularity.reg_quotient, regularity.depth, regularity.pd) == (1, 1, 2)


def test_zero_ideal():
    zero = MonomialIdeal.zero(2, 0)
    assert _profile(zero) == [(0, ()), (1, ()), (2, (1,))]
    top = local_cohomology_profile(zero)[2]
    assert top.value(-2) == 1 and top.value(-3) == 2 and top.value(-1) == 0
    assert regularity_depth_pd(zero).to_dict() == {"reg_quotient": 0, "reg_ideal": None, "depth": 2, "pd": 0}
    with pytest.raises(ZeroIdealError):
        extremal_betti(zero)


def test_unit_ideal_has_no_regularity():
    with pytest.raises(ZeroIdealError):
        regularity_depth_pd(MonomialIdeal.unit(2, 0))


def test_requires_weak_stability():
    with pytest.raises(NotWeaklyStableError, match="not weakly stable"):
        local_cohomology_profile(monomials((1, 1)))
    with pytest.raises(NotWeaklyStableError):
        h0_hilbert(monomials((1, 1)))


def test_cohom_hilbert_normalizes():
    cohomology = CohomHilbert(1, (2, 0, 0))
    assert cohomology.P == (2,)
    assert cohomology.to_dict() == {"i": 1, "P": [2], "end": -1}
    assert CohomHilbert(2, (0, 0)).end is None


def test_corners_keep_only_non_dominated_points():
    profile = (CohomHilbert(0, (0, 0, 1)), CohomHilbert(1, (1, 1, 1, 1)), CohomHilbert(2, (1,)))
    assert corners_from_profile(profile).as_dict() == {(2, 2): 1, (1, 3): 1}


@pytest.mark.parametrize("h", [1, 2])
@pytest.mark.parametrize("ideal", [QUADRICS, EMBEDDED, MonomialIdeal.zero(2, 0)])
def test_restriction_route_agrees(ideal, h):
    assert cohom_profile_auno(ideal, h) == local_cohomology_profile(ideal)[h:]


@pytest.mark.parametrize("h", [0, 3])
def test_restriction_route_range(h):
    with pytest.raises(ValueError):
        cohom_profile_auno(QUADRICS, h)


def test_serre_formula_on_examples():
    for ideal in (QUADRICS, EMBEDDED, MonomialIdeal.zero(2, 0), monomials((1, 0, 0), (0, 2, 0))):
        assert serre_audit(ideal, (-6, 8)) == 0


@settings(deadline=None, max_examples=60)
@given(strongly_stable_ideals())
def test_strongly_stable_invariants(ideal):
    regularity = regularity_depth_pd(ideal)
    betti = ek_betti(ideal)
    assert regularity.reg_ideal == gen_stats(ideal).D
    assert regularity.reg_ideal == betti.regularity
    assert regularity.pd == betti.projective_dimension + 1
    assert serre_audit(ideal, (-4, 6)) == 0
    for h in range(1, ideal.nvars + 1):
        assert cohom_profile_auno(ideal, h) == local_cohomology_profile(ideal)[h:]


@settings(deadline=None, max_examples=60)
@given(strongly_stable_ideals())
def test_corners_match_extremal_betti_numbers(ideal):
    extremal = ek_betti(ideal).quotient().extremal()
    assert extremal_betti(ideal).as_dict() == {(i, j - i): value for (i, j), value in extremal.items()}
