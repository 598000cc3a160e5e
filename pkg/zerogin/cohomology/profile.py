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
"""Hilbert functions of the local cohomology of A/I for weakly stable monomial ideals I.

``CohomHilbert(i, P)`` stands for the series P(t) * (sum_{j<0} t^j)^i, which is how a module
obtained by adjoining i variables to a finite length module looks like.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

from zerogin.exceptions import CohomologyDivisionError, NotWeaklyStableError, ZeroIdealError
from zerogin.monideal import series
from zerogin.monideal.classify import classify
from zerogin.monideal.hilbert import hilbert_numerator, hilbert_series
from zerogin.monideal.ideal import MonomialIdeal, restrict, saturate_variable
from zerogin.monideal.series import IntPoly

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class CohomHilbert:
    i: int
    P: IntPoly

    def __post_init__(self):
        object.__setattr__(self, "P", series.normalize(self.P))

    @property
    def is_zero(self) -> bool:
        return not self.P

    @property
    def end(self) -> Optional[int]:
        """Largest degree with a nonzero value; None stands for minus infinity."""
        if self.is_zero:
            return None
        return len(self.P) - 1 - self.i

    def value(self, d: int) -> int:
        if self.i == 0:
            return series.coefficient(self.P, d)
        top = len(self.P) - 1 - d
        return sum(
            series.generalized_binomial(k - 1, self.i - 1) * series.coefficient(self.P, d + k)
            for k in range(self.i, top + 1)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {"i": self.i, "P": list(self.P), "end": self.end}


class Regularity(NamedTuple):
    reg_quotient: int
    reg_ideal: Optional[int]
    depth: int
    pd: int

    def to_dict(self) -> Dict[str, Any]:
        return dict(self._asdict())


class Corner(NamedTuple):
    i: int
    d: int
    value: int


@dataclass(frozen=True)
class CornerTable:
    """Extremal Betti numbers beta_{i, i+d}(A/I), keyed by (homological index, diagonal)."""

    corners: Tuple[Corner, ...]

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return {(c.i, c.d): c.value for c in self.corners}

    def to_dict(self) -> Dict[str, Any]:
        return {"corners": [c._asdict() for c in self.corners]}


def _require_weakly_stable(ideal: MonomialIdeal):
    report = classify(ideal)
    if not report.weakly_stable:
        witness = report.witnesses["weakly_stable"]
        raise NotWeaklyStableError(
            f"{ideal} is not weakly stable: generator {witness.generator} fails ({witness.reason})"
        )


def _saturation_by_last(ideal: MonomialIdeal) -> MonomialIdeal:
    if ideal.nvars == 0:
        return MonomialIdeal.unit(0, ideal.characteristic)
    return saturate_variable(ideal, ideal.nvars - 1)


def _h0(ideal: MonomialIdeal) -> IntPoly:
    difference = series.sub(hilbert_numerator(ideal), hilbert_numerator(_saturation_by_last(ideal)))
    quotient, remainder = series.divmod_poly(difference, series.one_minus_t_power(ideal.nvars))
    if remainder:
        raise CohomologyDivisionError(
            f"Numerator difference {list(difference)} of {ideal} is not divisible by (1-t)^{ideal.nvars}"
        )
    return series.normalize(quotient)


def h0_hilbert(ideal: MonomialIdeal) -> IntPoly:
    """Hilb((I : X_n^inf) / I) as a finite polynomial."""
    _require_weakly_stable(ideal)
    return _h0(ideal)


def _azero(ideal: MonomialIdeal, i: int) -> CohomHilbert:
    n = ideal.nvars
    if i == 0:
        return CohomHilbert(0, _h0(ideal))
    j = restrict(saturate_variable(restrict(ideal, n - i + 1), n - i), n - i)
    return CohomHilbert(i, _h0(j))


def local_cohomology_profile(ideal: MonomialIdeal) -> Tuple[CohomHilbert, ...]:
    """Hilb(H^i(A/I)) for i = 0..n, each from one saturation and one restriction."""
    _require_weakly_stable(ideal)
    return tuple(_azero(ideal, i) for i in range(ideal.nvars + 1))


def cohom_profile_auno(ideal: MonomialIdeal, h: int) -> Tuple[CohomHilbert, ...]:
    """Hilb(H^i(A/I)) for i = h..n through H^h of the restrictions I_[n-i+h]."""
    _require_weakly_stable(ideal)
    n = ideal.nvars
    if not 0 < h <= n:
        raise ValueError(f"h must lie in [1, {n}], got {h}")
    profile = []
    for i in range(h, n + 1):
        lower = _azero(restrict(ideal, n - i + h), h)
        profile.append(CohomHilbert(i, lower.P))
    return tuple(profile)


def cohom_eval_end(cohomology: CohomHilbert, degrees: Tuple[int, ...] = ()) -> Dict[str, Any]:
    return {"values": {d: cohomology.value(d) for d in degrees}, "end": cohomology.end}


def regularity_from_profile(profile: Tuple[CohomHilbert, ...], nonzero_ideal: bool = True) -> Regularity:
    nonzero = [c for c in profile if not c.is_zero]
    if not nonzero:
        raise ZeroIdealError("A/I is zero; regularity is undefined for the unit ideal")
    reg_quotient = max(c.end + c.i for c in nonzero)
    depth = min(c.i for c in nonzero)
    n = len(profile) - 1
    return Regularity(
        reg_quotient=reg_quotient,
        reg_ideal=reg_quotient + 1 if nonzero_ideal else None,
        depth=depth,
        pd=n - depth,
    )


def regularity_depth_pd(ideal: MonomialIdeal) -> Regularity:
    return regularity_from_profile(local_cohomology_profile(ideal), nonzero_ideal=not ideal.is_zero)


def corners_from_profile(profile: Tuple[CohomHilbert, ...]) -> CornerTable:
    n = len(profile) - 1
    candidates = {(n - c.i, c.end + c.i): c for c in profile if not c.is_zero}
    corners: List[Corner] = []
    for (a, d), cohomology in sorted(candidates.items()):
        dominated = any((a2, d2) != (a, d) and a2 >= a and d2 >= d for a2, d2 in candidates)
        if not dominated:
            corners.append(Corner(a, d, cohomology.value(cohomology.end)))
    return CornerTable(tuple(corners))


def extremal_betti(ideal: MonomialIdeal) -> CornerTable:
    if ideal.is_zero:
        raise ZeroIdealError("extremal_betti needs a nonzero ideal")
    return corners_from_profile(local_cohomology_profile(ideal))


def pd_via_corners(ideal: MonomialIdeal) -> int:
    """Projective dimension of A/I read off the corners."""
    return max(c.i for c in extremal_betti(ideal).corners)


def serre_audit(ideal: MonomialIdeal, window: Tuple[int, int]) -> int:
    """max |H(d) - HP(d) - sum_i (-1)^i H^i_d| over the closed window."""
    profile = local_cohomology_profile(ideal)
    hilbert = hilbert_series(ideal)
    start, stop = window
    discrepancy = 0
    for d in range(start, stop + 1):
        alternating = sum((-1) ** c.i * c.value(d) for c in profile)
        difference = hilbert.value(d) - hilbert.hilbert_polynomial_value(d) - alternating
        discrepancy = max(discrepancy, abs(difference))
    LOGGER.debug(f"Serre audit of {ideal} on {window}: {discrepancy}")
    return discrepancy
