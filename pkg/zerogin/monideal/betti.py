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
"""Graded Betti tables; Eliahou-Kervaire numbers of stable ideals."""
import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from zerogin.algebra.monomials import max_index
from zerogin.exceptions import NotStableError
from zerogin.monideal.classify import classify
from zerogin.monideal.ideal import MonomialIdeal

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiTable:
    """Nonzero graded Betti numbers beta_{i,j}, keyed by (i, j)."""

    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", {key: value for key, value in sorted(self.entries.items()) if value})

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def totals(self) -> Dict[int, int]:
        totals: Dict[int, int] = defaultdict(int)
        for (i, _), value in self.entries.items():
            totals[i] += value
        return dict(sorted(totals.items()))

    @property
    def regularity(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def extremal(self) -> Dict[Tuple[int, int], int]:
        """Entries beta_{i,j} with beta_{k,l} = 0 whenever k >= i, l - k >= j - i and (k, l) != (i, j)."""
        result = {}
        for (i, j), value in self.entries.items():
            dominated = any(
                (k, l) != (i, j) and k >= i and l - k >= j - i for (k, l) in self.entries
            )
            if not dominated:
                result[(i, j)] = value
        return result

    def quotient(self) -> "BettiTable":
        """Table of A/I from the table of I."""
        entries = {(i + 1, j): value for (i, j), value in self.entries.items()}
        entries[(0, 0)] = 1
        return BettiTable(entries)

    def rows(self) -> List[List[int]]:
        """Macaulay-style rows: row r lists beta_{i, i+r} for i = 0..pd."""
        if not self.entries:
            return []
        low = min(j - i for i, j in self.entries)
        return [
            [self.get(i, i + r) for i in range(self.projective_dimension + 1)] for r in range(low, self.regularity + 1)
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "entries": [{"i": i, "j": j, "value": value} for (i, j), value in self.entries.items()],
            "totals": {str(i): value for i, value in self.totals().items()},
            "regularity": self.regularity,
            "projective_dimension": self.projective_dimension,
        }


def ek_betti(ideal: MonomialIdeal) -> BettiTable:
    """beta_{i,i+d}(I) = sum over generators u of degree d of C(m(u) - 1, i)."""
    if not classify(ideal).stable:
        raise NotStableError(f"Eliahou-Kervaire numbers need a stable ideal, got {ideal}")
    entries: Dict[Tuple[int, int], int] = defaultdict(int)
    for u in ideal.generators:
        d = sum(u)
        m = max_index(u)
        for i in range(max(m, 1)):
            entries[(i, i + d)] += math.comb(m - 1, i) if m else 1
    return BettiTable(dict(entries))
