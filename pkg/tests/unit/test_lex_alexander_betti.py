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
import math

import pytest
from hypothesis import given, settings

from zerogin.algebra.monomials import monomials_of_degree
from zerogin.exceptions import NotSquarefreeError, NotStableError, OutOfRangeError
from zerogin.monideal import series
from zerogin.monideal.alexander import alexander_dual, stanley_reisner_facets
from zerogin.monideal.betti import BettiTable, ek_betti
from zerogin.monideal.classify import is_strongly_stable
from zerogin.monideal.hilbert import hilbert_numerator, hilbert_series
from zerogin.monideal.ideal import MonomialIdeal
from zerogin.monideal.lex import lex_segment, macaulay_bound, macaulay_representation
from tests.utils.corpus import monomial_ideals, strongly_stable_ideals
from tests.utils.ideals import monomials, rp2

CROSS = monomials((1, 1, 0, 0), (0, 0, 1, 1))


@pytest.mark.parametrize(
    "h,d,expected",
    [(3, 2, [3]), (5, 2, [3, 2]), (1, 2, [2]), (0, 3, []), (7, 1, [7])],
)
def test_macaulay_representation(h, d, expected):
    assert macaulay_representation(h, d) == expected
    assert sum(math.comb(k, d - index) for index, k in enumerate(expected)) == h


def test_macaulay_bound():
    assert macaulay_bound(3, 2) == 4
    assert macaulay_bound(5, 2) == 7
    assert macaulay_bound(1, 2) == 1
    assert macaulay_bound(0, 4) == 0


def test_lex_segments():
    assert lex_segment(monomials((2, 0), (0, 2))) == monomials((2, 0), (1, 1), (0, 3))
    expected = monomials(
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 4)
    )
    assert lex_segment(monomials((2, 0, 0), (0, 2, 0), (0, 0, 2))) == expected
    zero = MonomialIdeal.zero(2, 0)
    assert lex_segment(zero) == zero


def test_lex_segment_degree_limit():
    with pytest.raises(OutOfRangeError):
        lex_segment(monomials((2, 0, 0), (0, 2, 0), (0, 0, 2)), degree_limit=2)


@settings(deadline=None, max_examples=40)
@given(monomial_ideals(max_vars=3, max_degree=3))
def test_lex_segment_shares_hilbert_function(ideal):
    lex = lex_segment(ideal)
    assert hilbert_series(lex).values(0, 8) == hilbert_series(ideal).values(0, 8)
    assert is_strongly_stable(lex)
    for d in range(0, 6):
        members = [m in lex for m in monomials_of_degree(ideal.nvars, d)]
        assert members == sorted(members, reverse=True)


def test_alexander_dual_of_cross():
    dual = alexander_dual(CROSS)
    assert dual == monomials((1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1))
    assert alexander_dual(dual) == CROSS
    assert stanley_reisner_facets(CROSS) == ((0, 2), (0, 3), (1, 2), (1, 3))


def test_real_projective_plane_is_self_dual():
    ideal = rp2()
    assert alexander_dual(ideal) == ideal
    facets = stanley_reisner_facets(ideal)
    assert len(facets) == 10
    assert all(len(f) == 3 for f in facets)


def test_alexander_dual_needs_squarefree():
    with pytest.raises(NotSquarefreeError):
        alexander_dual(monomials((2, 0)))
    with pytest.raises(NotSquarefreeError):
        stanley_reisner_facets(monomials((1, 0), (0, 3)))


@settings(deadline=None, max_examples=60)
@given(monomial_ideals(max_vars=4, max_degree=3))
def test_alexander_duality_is_an_involution(ideal):
    squarefree = MonomialIdeal(ideal.nvars, 0, tuple(tuple(min(e, 1) for e in g) for g in ideal.generators))
    assert alexander_dual(alexander_dual(squarefree)) == squarefree


def test_ek_numbers():
    table = ek_betti(monomials((2, 0), (1, 1)))
    assert table.entries == {(0, 2): 2, (1, 3): 1}
    table = ek_betti(monomials((2, 0), (1, 1), (0, 2)))
    assert table.entries == {(0, 2): 3, (1, 3): 2}
    assert table.regularity == 2 and table.projective_dimension == 1
    assert table.extremal() == {(1, 3): 2}
    assert table.rows() == [[3, 2]]
    assert table.totals() == {0: 3, 1: 2}
    assert table.quotient().entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert table.to_dict()["entries"][0] == {"i": 0, "j": 2, "value": 3}


def test_ek_needs_stable_ideal():
    with pytest.raises(NotStableError):
        ek_betti(monomials((2, 0), (0, 2)))


def test_empty_table():
    table = BettiTable({(0, 2): 0})
    assert table.entries == {}
    assert table.rows() == []
    assert table.regularity == 0 and table.projective_dimension == 0


@settings(deadline=None, max_examples=60)
@given(strongly_stable_ideals())
def test_ek_numbers_recover_hilbert_numerator(ideal):
    quotient = ek_betti(ideal).quotient()
    alternating = series.ZERO
    for (i, j), value in quotient.entries.items():
        alternating = series.add(alternating, series.shift(((-1) ** i * value,), j))
    assert alternating == hilbert_numerator(ideal)
