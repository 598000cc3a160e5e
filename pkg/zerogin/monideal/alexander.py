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
from typing import Tuple

from zerogin.algebra.monomials import support
from zerogin.exceptions import NotSquarefreeError
from zerogin.monideal.ideal import MonomialIdeal, variables_ideal

LOGGER = logging.getLogger(__name__)


def _require_squarefree(ideal: MonomialIdeal):
    if not ideal.is_squarefree:
        offending = next(g for g in ideal.generators if any(e > 1 for e in g))
        raise NotSquarefreeError(f"Alexander duality needs a squarefree ideal; generator {offending} is not")


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """Intersection over the generators u of the primes (X_i : X_i divides u)."""
    _require_squarefree(ideal)
    result = MonomialIdeal.unit(ideal.nvars, ideal.characteristic, ideal.variables)
    for g in ideal.generators:
        prime = variables_ideal(ideal.nvars, ideal.characteristic, support(g), ideal.variables)
        result = result.intersect(prime)
    return result


def stanley_reisner_facets(ideal: MonomialIdeal) -> Tuple[Tuple[int, ...], ...]:
    """Facets (zero based vertex sets) of the simplicial complex whose face ideal is ``ideal``."""
    _require_squarefree(ideal)
    vertices = set(range(ideal.nvars))
    facets = (tuple(sorted(vertices - set(support(g)))) for g in alexander_dual(ideal).generators)
    return tuple(sorted(facets))
