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
"""Lex-segment ideals and Macaulay's growth bound."""
import logging
import math
from typing import List

from zerogin.algebra.monomials import Monomial, divides, monomials_of_degree
from zerogin.core import DEFAULT_LEX_DEGREE_LIMIT
from zerogin.exceptions import OutOfRangeError
from zerogin.monideal.hilbert import hilbert_series
from zerogin.monideal.ideal import MonomialIdeal

LOGGER = logging.getLogger(__name__)


def macaulay_representation(h: int, d: int) -> List[int]:
    """Greedy d-th binomial expansion h = C(k_d, d) + C(k_{d-1}, d-1) + ...; returns [k_d, k_{d-1}, ...]."""
    tops = []
    i = d
    while h > 0 and i > 0:
        k = i
        while math.comb(k + 1, i) <= h:
            k += 1
        tops.append(k)
        h -= math.comb(k, i)
        i -= 1
    return tops


def macaulay_bound(h: int, d: int) -> int:
    """h^<d>: the largest possible value in degree d+1 after value h in degree d (d >= 1)."""
    return sum(math.comb(k + 1, d - index + 1) for index, k in enumerate(macaulay_representation(h, d)))


def lex_segment(ideal: MonomialIdeal, *, degree_limit: int = DEFAULT_LEX_DEGREE_LIMIT) -> MonomialIdeal:
    """The lex-segment ideal with the Hilbert function of ``ideal``."""
    if ideal.is_zero or ideal.is_unit:
        return ideal
    n = ideal.nvars
    hilbert = hilbert_series(ideal)
    start = max(ideal.generating_degree, 1)
    generators: List[Monomial] = []
    d = 0
    while True:
        if d > degree_limit:
            raise OutOfRangeError(f"Lex segment did not stabilise below degree {degree_limit}")
        count = math.comb(d + n - 1, n - 1) - hilbert.value(d)
        for m in monomials_of_degree(n, d)[:count]:
            if not any(divides(g, m) for g in generators):
                generators.append(m)
        if d >= start and hilbert.value(d + 1) == macaulay_bound(hilbert.value(d), d):
            break
        d += 1
    LOGGER.debug(f"Lex segment of {ideal} stabilised in degree {d}")
    return MonomialIdeal(n, ideal.characteristic, tuple(generators), ideal.variables)
