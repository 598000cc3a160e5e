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
"""Decision procedures and audits built on the zero-generic initial ideal."""
import logging
import math
from collections import Counter
from typing import Any, Dict, List, NamedTuple, Optional, Tuple, Union

from zerogin.algebra.monomials import MonomialOrder, format_monomial
from zerogin.algebra.polynomials import PolynomialIdeal
from zerogin.cohomology.profile import (
    CohomHilbert,
    CornerTable,
    Regularity,
    corners_from_profile,
    local_cohomology_profile,
    regularity_depth_pd,
    regularity_from_profile,
)
from zerogin.criteria.report import AuditReport, Verdict, merge_certificates, verdict_of
from zerogin.exceptions import (
    NotSquarefreeError,
    NotWeaklyStableError,
    OutOfRangeError,
    PreconditionError,
    TheoremViolationError,
    ZeroIdealError,
)
from zerogin.gin.config import GinConfig
from zerogin.gin.core import Gin0Result, as_monomial_ideal, gin, gin0
from zerogin.groebner.basis import minimal_generator_degrees
from zerogin.monideal.alexander import alexander_dual
from zerogin.monideal.betti import ek_betti
from zerogin.monideal.classify import classify
from zerogin.monideal.ideal import MonomialIdeal, frobenius_power, restrict
from zerogin.utils.enums import Parameter

LOGGER = logging.getLogger(__name__)

Ideal = Union[PolynomialIdeal, MonomialIdeal]

REVLEX = MonomialOrder.DEGREVLEX


class Target(Parameter):
    GIN0 = "gin0"
    GIN = "gin"


class Invariants(NamedTuple):
    reg: int
    pd: int
    depth: int
    corners: CornerTable
    gin0: Gin0Result

    def to_dict(self) -> Dict[str, Any]:
        return {
            "reg": self.reg,
            "pd": self.pd,
            "depth": self.depth,
            "corners": self.corners.to_dict()["corners"],
            "gin0": self.gin0.ideal.to_dict(),
        }


def degree_counts(ideal: Ideal) -> Dict[int, int]:
    """beta_{0,j}: number of minimal generators in each degree."""
    monomial = as_monomial_ideal(ideal)
    if monomial is not None:
        return dict(sorted(Counter(monomial.degrees).items()))
    return minimal_generator_degrees(ideal.generators)


def generating_degree(ideal: Ideal) -> int:
    counts = degree_counts(ideal)
    if not counts:
        raise ZeroIdealError("The zero ideal has no generating degree")
    return max(counts)


def number_of_generators(ideal: Ideal) -> int:
    return sum(degree_counts(ideal).values())


def _str_keys(counts: Dict[int, int]) -> Dict[str, int]:
    return {str(k): v for k, v in sorted(counts.items())}


def _weakly_stable_monomial(ideal: Ideal) -> MonomialIdeal:
    monomial = as_monomial_ideal(ideal)
    if monomial is None:
        raise PreconditionError("This audit needs a monomial ideal")
    if not classify(monomial).weakly_stable:
        raise NotWeaklyStableError(f"This audit needs a weakly stable ideal, got {monomial}")
    return monomial


def _quotient_regularity(ideal: MonomialIdeal) -> int:
    return regularity_depth_pd(ideal).reg_quotient


def invariants_via_gin0(ideal: Ideal, seed: int = 0, config: Optional[GinConfig] = None) -> Invariants:
    """reg I, pd A/I and the corners of A/I read off Gin0(I)."""
    result = gin0(ideal, REVLEX, seed, config=config)
    target = result.ideal
    if target.is_zero:
        raise ZeroIdealError("Invariants of the zero ideal are not defined")
    profile = local_cohomology_profile(target)
    regularity: Regularity = regularity_from_profile(profile)
    if regularity.reg_ideal != target.generating_degree:
        raise TheoremViolationError(
            f"Gin0 {target} is strongly stable but its regularity {regularity.reg_ideal} "
            f"differs from its generating degree {target.generating_degree}"
        )
    return Invariants(
        reg=regularity.reg_ideal,
        pd=regularity.pd,
        depth=regularity.depth,
        corners=corners_from_profile(profile),
        gin0=result,
    )


def componentwise_linear(ideal: Ideal, seed: int = 0, config: Optional[GinConfig] = None) -> AuditReport:
    """I is componentwise linear iff mu(I) = mu(Gin0(I))."""
    counts = degree_counts(ideal)
    result = gin0(ideal, REVLEX, seed, config=config)
    gin0_counts = dict(sorted(Counter(result.ideal.degrees).items()))
    mu_input, mu_gin0 = sum(counts.values()), sum(gin0_counts.values())
    witnesses = [
        {"degree": d, "input": counts.get(d, 0), "gin0": gin0_counts.get(d, 0)}
        for d in sorted(set(counts) | set(gin0_counts))
        if counts.get(d, 0) != gin0_counts.get(d, 0)
    ]
    return AuditReport(
        audit="componentwise_linear",
        verdict=verdict_of(mu_input == mu_gin0),
        lhs=mu_input,
        rhs=mu_gin0,
        payload={
            "mu_input": mu_input,
            "mu_gin0": mu_gin0,
            "degrees_input": _str_keys(counts),
            "degrees_gin0": _str_keys(gin0_counts),
            "gin0": result.ideal.to_dict(),
        },
        witnesses=witnesses if mu_input != mu_gin0 else [],
        certificates=result.certificates,
    )


def seqcm_squarefree(ideal: Ideal, seed: int = 0, config: Optional[GinConfig] = None) -> AuditReport:
    """A/I sequentially Cohen-Macaulay iff the Alexander dual of I is componentwise linear."""
    monomial = as_monomial_ideal(ideal)
    if monomial is None:
        raise PreconditionError("seqcm_squarefree needs a monomial ideal")
    if not monomial.is_squarefree:
        raise NotSquarefreeError(f"seqcm_squarefree needs a squarefree ideal, got {monomial}")
    if classify(monomial).weakly_stable:
        return AuditReport(
            audit="seqcm_squarefree",
            verdict=Verdict.PASS,
            payload={"route": "weakly-stable"},
        )
    dual = alexander_dual(monomial)
    linear = componentwise_linear(dual, seed, config)
    return AuditReport(
        audit="seqcm_squarefree",
        verdict=linear.verdict,
        lhs=linear.lhs,
        rhs=linear.rhs,
        payload={"route": "alexander-dual", "dual": dual.to_dict(), "componentwise_linear_dual": linear.payload},
        witnesses=linear.witnesses,
        certificates=linear.certificates,
    )


def _first_gap(degrees: List[int], start: int, stop: int) -> Optional[int]:
    present = set(degrees)
    return next((d for d in range(start, stop + 1) if d not in present), None)


def crystallization_audit(
    ideal: Ideal,
    order: MonomialOrder = REVLEX,
    seed: int = 0,
    target: Target = Target.GIN0,
    config: Optional[GinConfig] = None,
) -> AuditReport:
    """Once the target has a generator-free degree past D(I), it has no generators beyond it."""
    target = Target(target)
    input_degree = generating_degree(ideal)
    if target == Target.GIN0:
        result = gin0(ideal, order, seed, config=config)
        target_ideal, certificates = result.ideal, result.certificates
        target_regularity = target_ideal.generating_degree
    else:
        plain = gin(ideal, order, seed, config=config)
        target_ideal, certificates = plain.ideal, (plain.certificate,)
        if classify(target_ideal).weakly_stable:
            target_regularity = regularity_depth_pd(target_ideal).reg_ideal
        else:
            target_regularity = target_ideal.generating_degree
    scan_bound = target_regularity + 1
    degrees = sorted(target_ideal.degrees)
    gap = _first_gap(degrees, input_degree + 1, scan_bound)
    later = [g for g in target_ideal.generators if gap is not None and sum(g) > gap]
    payload: Dict[str, Any] = {
        "target": target.value,
        "input_generating_degree": input_degree,
        "target_degrees": degrees,
        "scan_bound": scan_bound,
        "first_free_degree": gap,
        "ideal": target_ideal.to_dict(),
    }
    if target == Target.GIN0:
        bound = input_degree + len(target_ideal.generators) - 1
        payload["gap_bound"] = bound
        payload["gap_bound_holds"] = target_ideal.generating_degree <= bound
    witnesses = []
    if later:
        first = later[0]
        names = target_ideal.variables
        witnesses.append(
            {
                "gap": list(range(gap, sum(first))),
                "generator": format_monomial(first, names),
                "degree": sum(first),
            }
        )
    report = AuditReport(
        audit="crystallization",
        verdict=verdict_of(not later),
        lhs=gap,
        rhs=max(degrees) if degrees else None,
        payload=payload,
        witnesses=witnesses,
        certificates=certificates,
    )
    if later and target == Target.GIN0:
        raise TheoremViolationError(f"gin0 {target_ideal} violates crystallization: {witnesses[0]}", report=report)
    return report


def restriction_regularity(ideal: Ideal, i: int, seed: int = 0, config: Optional[GinConfig] = None) -> AuditReport:
    """reg A_[i] / Gin(I)_[i] >= reg A_[i] / Gin0(I)_[i]."""
    n = ideal.nvars
    if not 0 <= i <= n:
        raise OutOfRangeError(f"Restriction index {i} out of range [0, {n}]")
    plain = gin(ideal, REVLEX, seed, config=config)
    zero_generic = gin0(ideal, REVLEX, seed, config=config)
    left = _quotient_regularity(restrict(plain.ideal, i))
    right = _quotient_regularity(restrict(zero_generic.ideal, i))
    holds = left >= right
    return AuditReport(
        audit="restriction_regularity",
        verdict=verdict_of(holds),
        lhs=left,
        rhs=right,
        payload={
            "i": i,
            "gin_restricted": restrict(plain.ideal, i).to_dict(),
            "gin0_restricted": restrict(zero_generic.ideal, i).to_dict(),
        },
        witnesses=[] if holds else [{"i": i, "left": left, "right": right}],
        certificates=merge_certificates((plain.certificate,), zero_generic.certificates),
    )


def recursive_regularity_bounds(generating_degree_: int, n: int) -> List[int]:
    """B_1 = D, B_j = D - 1 + prod_{i<j} (B_i + 1)."""
    bounds = [generating_degree_]
    for _ in range(1, n):
        bounds.append(generating_degree_ - 1 + math.prod(b + 1 for b in bounds))
    return bounds


def regularity_bound_audit(ideal: Ideal, seed: int = 0, config: Optional[GinConfig] = None) -> AuditReport:
    """reg I <= (2 D(I))^(2^(n-2)), the recursive bounds, and mu(Gin0) <= prod (D(Gin0_[i]) + 1)."""
    n = ideal.nvars
    if n < 2:
        raise OutOfRangeError(f"The regularity bound needs at least 2 variables, got {n}")
    input_degree = generating_degree(ideal)
    invariants = invariants_via_gin0(ideal, seed, config)
    reg = invariants.reg
    double_exponential = (2 * input_degree) ** (2 ** (n - 2))
    recursive = recursive_regularity_bounds(input_degree, n)
    target = invariants.gin0.ideal
    restricted_degrees = [restrict(target, i).generating_degree for i in range(1, n)]
    product = math.prod(d + 1 for d in restricted_degrees)
    mu_gin0 = len(target.generators)
    witnesses = []
    if reg > double_exponential:
        witnesses.append({"inequality": "reg <= (2D)^(2^(n-2))", "lhs": reg, "rhs": double_exponential})
    if reg > recursive[-1]:
        witnesses.append({"inequality": "reg <= B_n", "lhs": reg, "rhs": recursive[-1]})
    if mu_gin0 > product:
        witnesses.append({"inequality": "mu(Gin0) <= prod(D(Gin0_[i]) + 1)", "lhs": mu_gin0, "rhs": product})
    return AuditReport(
        audit="regularity_bound",
        verdict=verdict_of(not witnesses),
        lhs=reg,
        rhs=double_exponential,
        payload={
            "n": n,
            "D": input_degree,
            "reg": reg,
            "double_exponential_bound": double_exponential,
            "slack": double_exponential - reg,
            "recursive_bounds": recursive,
            "mu_gin0": mu_gin0,
            "mu_product_bound": product,
            "restricted_generating_degrees": restricted_degrees,
        },
        witnesses=witnesses,
        certificates=invariants.gin0.certificates,
    )


def _frobenius(ideal: Ideal, p: int) -> Ideal:
    if isinstance(ideal, MonomialIdeal):
        return frobenius_power(ideal, p)
    ring = ideal.ring
    images = tuple(ring.from_dict({tuple(p * e for e in m): c for m, c in g.terms}) for g in ideal.generators)
    return PolynomialIdeal(ring, images)


def frobenius_gap_witness(ideal: Ideal, seed: int = 0, config: Optional[GinConfig] = None) -> AuditReport:
    """gin(I) with a generator in degree D+1 forces gin(F(I)) to skip degree pD+p-1 and hit pD+p."""
    p = ideal.characteristic
    if p == 0:
        raise PreconditionError("The Frobenius gap needs a positive characteristic")
    input_degree = generating_degree(ideal)
    base = gin(ideal, REVLEX, seed, config=config)
    if input_degree + 1 not in base.ideal.degrees:
        return AuditReport(
            audit="frobenius_gap",
            verdict=Verdict.NOT_APPLICABLE,
            payload={"D": input_degree, "gin_degrees": sorted(base.ideal.degrees)},
            certificates=(base.certificate,),
        )
    frobenius = gin(_frobenius(ideal, p), REVLEX, seed, config=config)
    degrees = set(frobenius.ideal.degrees)
    expected, skipped = p * input_degree + p, p * input_degree + p - 1
    holds = expected in degrees and skipped not in degrees
    return AuditReport(
        audit="frobenius_gap",
        verdict=verdict_of(holds),
        lhs=sorted(degrees),
        rhs={"present": expected, "absent": skipped},
        payload={
            "p": p,
            "D": input_degree,
            "gin": base.ideal.to_dict(),
            "gin_frobenius": frobenius.ideal.to_dict(),
        },
        witnesses=[] if holds else [{"degrees": sorted(degrees), "expected": expected, "skipped": skipped}],
        certificates=(base.certificate, frobenius.certificate),
    )


def _profile_mismatches(
    left: Tuple[CohomHilbert, ...], right: Tuple[CohomHilbert, ...], indices
) -> List[Dict[str, Any]]:
    return [
        {"i": i, "lhs": left[i].to_dict(), "rhs": right[i].to_dict()} for i in indices if left[i].P != right[i].P
    ]


def seqcm_weakly_stable(ideal: Ideal, seed: int = 0, config: Optional[GinConfig] = None) -> AuditReport:
    """Compares the cohomology profiles of A/I and A/Gin0(I) for weakly stable monomial I."""
    monomial = _weakly_stable_monomial(ideal)
    result = gin0(monomial, REVLEX, seed, config=config)
    left = local_cohomology_profile(monomial)
    right = local_cohomology_profile(result.ideal)
    mismatches = _profile_mismatches(left, right, range(monomial.nvars + 1))
    return AuditReport(
        audit="seqcm_weakly_stable",
        verdict=verdict_of(not mismatches),
        payload={"profile": [c.to_dict() for c in left], "gin0_profile": [c.to_dict() for c in right]},
        witnesses=mismatches,
        certificates=result.certificates,
    )


def cohomology_bound_audit(
    ideal: Ideal, seed: int = 0, window: Optional[Tuple[int, int]] = None, config: Optional[GinConfig] = None
) -> AuditReport:
    """Hilb(H^i(A/I))_d <= Hilb(H^i(A/Gin0(I)))_d on the window, for weakly stable monomial I."""
    monomial = _weakly_stable_monomial(ideal)
    result = gin0(monomial, REVLEX, seed, config=config)
    left = local_cohomology_profile(monomial)
    right = local_cohomology_profile(result.ideal)
    n = monomial.nvars
    if window is None:
        top = regularity_from_profile(right).reg_quotient
        window = (-n - 5, top + 2)
    witnesses = []
    for i in range(n + 1):
        for d in range(window[0], window[1] + 1):
            lhs, rhs = left[i].value(d), right[i].value(d)
            if lhs > rhs:
                witnesses.append({"i": i, "degree": d, "lhs": lhs, "rhs": rhs})
    return AuditReport(
        audit="cohomology_bound",
        verdict=verdict_of(not witnesses),
        payload={"window": list(window)},
        witnesses=witnesses,
        certificates=result.certificates,
    )


def betti_comparison_audit(ideal: Ideal, seed: int = 0, config: Optional[GinConfig] = None) -> AuditReport:
    """beta_{0,j}(I) <= beta_{0,j}(Gin0(I)) always; beta_{1,j} as well for stable monomial I."""
    counts = degree_counts(ideal)
    result = gin0(ideal, REVLEX, seed, config=config)
    gin0_table = ek_betti(result.ideal)
    witnesses = [
        {"i": 0, "j": j, "lhs": value, "rhs": gin0_table.get(0, j)}
        for j, value in counts.items()
        if value > gin0_table.get(0, j)
    ]
    payload: Dict[str, Any] = {"beta0_input": _str_keys(counts), "gin0_betti": gin0_table.to_dict()}
    monomial = as_monomial_ideal(ideal)
    if monomial is not None and classify(monomial).stable:
        table = ek_betti(monomial)
        payload["input_betti"] = table.to_dict()
        for (i, j), value in table.entries.items():
            if i <= 1 and value > gin0_table.get(i, j):
                witnesses.append({"i": i, "j": j, "lhs": value, "rhs": gin0_table.get(i, j)})
        payload["compared"] = [0, 1]
    else:
        payload["compared"] = [0]
    return AuditReport(
        audit="betti_comparison",
        verdict=verdict_of(not witnesses),
        payload=payload,
        witnesses=witnesses,
        certificates=result.certificates,
    )


def restriction_miracle_audit(ideal: Ideal, seed: int = 0, config: Optional[GinConfig] = None) -> AuditReport:
    """For weakly stable I and every j: equal H^i (i > 0) and a dominated H^0 for I_[j] against Gin(I)_[j]."""
    monomial = _weakly_stable_monomial(ideal)
    plain = gin(monomial, REVLEX, seed, config=config)
    witnesses: List[Dict[str, Any]] = []
    regularities = []
    for j in range(1, monomial.nvars + 1):
        mine, theirs = restrict(monomial, j), restrict(plain.ideal, j)
        left, right = local_cohomology_profile(mine), local_cohomology_profile(theirs)
        for mismatch in _profile_mismatches(left, right, range(1, j + 1)):
            witnesses.append({"j": j, "check": "equal H^i", **mismatch})
        top = max(len(left[0].P), len(right[0].P))
        for d in range(top):
            if left[0].value(d) < right[0].value(d):
                witnesses.append(
                    {"j": j, "check": "H^0 dominates", "degree": d, "lhs": left[0].value(d), "rhs": right[0].value(d)}
                )
        reg_left = regularity_from_profile(left).reg_quotient
        reg_right = regularity_from_profile(right).reg_quotient
        regularities.append({"j": j, "lhs": reg_left, "rhs": reg_right})
        if reg_left < reg_right:
            witnesses.append({"j": j, "check": "regularity", "lhs": reg_left, "rhs": reg_right})
    return AuditReport(
        audit="restriction_miracle",
        verdict=verdict_of(not witnesses),
        payload={"gin": plain.ideal.to_dict(), "regularities": regularities},
        witnesses=witnesses,
        certificates=(plain.certificate,),
    )

