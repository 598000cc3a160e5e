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
"""Generic initial ideals by certified Monte Carlo sampling, and the zero-generic pipeline."""
import dataclasses
import logging
from collections import OrderedDict
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple, Union

from zerogin.algebra.changes import apply_change, random_change
from zerogin.algebra.fields import Field, PrimeField, RationalField, prime_field_or_rationals, sampling_field
from zerogin.algebra.monomials import MonomialOrder
from zerogin.algebra.polynomials import Polynomial, PolynomialIdeal, PolynomialRing, polynomials_from_monomials
from zerogin.core import GIN_CACHE_SIZE
from zerogin.exceptions import (
    GinCertificationError,
    NonHomogeneousError,
    OutOfRangeError,
    PreconditionError,
    UnitIdealError,
)
from zerogin.gin.certificate import CertificateMethod, GinCertificate, Stage
from zerogin.gin.config import GinConfig
from zerogin.groebner.basis import initial_ideal
from zerogin.monideal.classify import is_borel_fixed
from zerogin.monideal.hilbert import HilbertSeries, hilbert_series
from zerogin.monideal.ideal import MonomialIdeal
from zerogin.utils.timer import Timer

LOGGER = logging.getLogger(__name__)

Ideal = Union[PolynomialIdeal, MonomialIdeal]

_GIN_CACHE: "OrderedDict[tuple, GinResult]" = OrderedDict()


class GinResult(NamedTuple):
    ideal: MonomialIdeal
    certificate: GinCertificate


class Gin0Result(NamedTuple):
    ideal: MonomialIdeal
    intermediate: MonomialIdeal
    certificates: Tuple[GinCertificate, GinCertificate]


class RestrictionInvariant(NamedTuple):
    value: Any
    seeds: Tuple[int, ...]


def clear_cache():
    _GIN_CACHE.clear()


def _cached(key: tuple) -> Optional["GinResult"]:
    result = _GIN_CACHE.get(key)
    if result is not None:
        _GIN_CACHE.move_to_end(key)
    return result


def _remember(key: tuple, result: "GinResult") -> "GinResult":
    """Least recently used entries go first once GIN_CACHE_SIZE results are kept."""
    _GIN_CACHE[key] = result
    if len(_GIN_CACHE) > GIN_CACHE_SIZE:
        _GIN_CACHE.popitem(last=False)
    return result


def trial_seed(seed: int, attempt: int, trial: int, trials: int) -> int:
    """Seed of one trial; distinct across attempts and trials of a call."""
    return (seed << 16) + attempt * trials + trial


def as_polynomial_ideal(ideal: Ideal, order: MonomialOrder = MonomialOrder.DEGREVLEX) -> PolynomialIdeal:
    if isinstance(ideal, PolynomialIdeal):
        return ideal.with_order(order)
    ring = PolynomialRing(prime_field_or_rationals(ideal.characteristic), ideal.variables, order)
    return PolynomialIdeal(ring, polynomials_from_monomials(ring, ideal.generators))


def as_monomial_ideal(ideal: Ideal) -> Optional[MonomialIdeal]:
    """The ideal as a MonomialIdeal when all its generators are monomials."""
    if isinstance(ideal, MonomialIdeal):
        return ideal
    if not ideal.is_monomial:
        return None
    return MonomialIdeal(
        ideal.nvars,
        ideal.characteristic,
        tuple(g.leading_monomial for g in ideal.generators),
        ideal.ring.variables,
    )


def input_hilbert_series(ideal: Ideal) -> HilbertSeries:
    monomial = as_monomial_ideal(ideal)
    if monomial is not None:
        return hilbert_series(monomial)
    return hilbert_series(initial_ideal(ideal.generators, MonomialOrder.DEGREVLEX))


def _check_input(ideal: Ideal):
    if isinstance(ideal, PolynomialIdeal):
        if not ideal.is_homogeneous:
            offending = next(g for g in ideal.generators if not g.is_homogeneous)
            raise NonHomogeneousError(f"gin needs homogeneous generators; {offending} is not homogeneous")
        if ideal.is_unit:
            raise UnitIdealError("gin needs a proper ideal")
    elif ideal.is_unit:
        raise UnitIdealError("gin needs a proper ideal")


def _variables(ideal: Ideal) -> Tuple[str, ...]:
    return ideal.ring.variables if isinstance(ideal, PolynomialIdeal) else ideal.variables


def _is_ground_field(field: Field) -> bool:
    return isinstance(field, (PrimeField, RationalField))


def _initial_sampling_field(ideal: PolynomialIdeal, config: GinConfig) -> Tuple[Field, bool]:
    """Field to sample from and whether it may be enlarged on retries."""
    field = ideal.ring.field
    if not _is_ground_field(field):
        # inputs already over an extension field (general restrictions) stay there
        return field, False
    chosen = sampling_field(
        ideal.characteristic,
        config.min_field_size,
        table_limit=config.zech_table_limit,
        entry_bound=config.entry_bound,
        modular=config.modular,
    )
    return chosen, True


def _borel_fixed_certificate(ideal: MonomialIdeal, stage: Stage) -> GinCertificate:
    window = (0, (ideal.generating_degree if not ideal.is_zero else 0) + 2)
    return GinCertificate(
        stage=stage,
        method=CertificateMethod.BOREL_FIXED,
        seeds=(),
        trials=0,
        field=prime_field_or_rationals(ideal.characteristic).describe(),
        attempts=0,
        agreement=True,
        borel_fixed=True,
        hilbert_match=True,
        hilbert_window=window,
    )


def _sample(
    ideal: PolynomialIdeal, field: Field, order: MonomialOrder, seeds: List[int]
) -> List[MonomialIdeal]:
    ring = ideal.ring.with_field(field).with_order(order)
    generators = [ring.convert(g) for g in ideal.generators]
    outputs = []
    for trial_seed_ in seeds:
        change = random_change(ideal.nvars, field, trial_seed_)
        images: List[Polynomial] = [apply_change(change, g) for g in generators]
        leading = initial_ideal(images, order).generators if images else ()
        outputs.append(MonomialIdeal(ideal.nvars, ideal.characteristic, leading, ideal.ring.variables))
    return outputs


def gin(
    ideal: Ideal,
    order: MonomialOrder = MonomialOrder.DEGREVLEX,
    seed: int = 0,
    trials: Optional[int] = None,
    config: Optional[GinConfig] = None,
    stage: Stage = Stage.GIN,
) -> GinResult:
    """gin_order(I) with a certificate; raises GinCertificationError when no attempt certifies."""
    config = config or GinConfig()
    if trials is not None:
        config = dataclasses.replace(config, trials=trials)
    _check_input(ideal)
    order = MonomialOrder(order)
    key = (ideal, _variables(ideal), order, seed, dataclasses.astuple(config), stage)
    cached = _cached(key)
    if cached is not None:
        return cached

    monomial = as_monomial_ideal(ideal)
    if config.borel_fixed_shortcut and monomial is not None and is_borel_fixed(monomial):
        LOGGER.debug(f"[{stage}] {monomial} is Borel-fixed; it is its own gin")
        return _remember(key, GinResult(monomial, _borel_fixed_certificate(monomial, stage)))

    polynomial_ideal = as_polynomial_ideal(ideal, order)
    characteristic = polynomial_ideal.characteristic
    reference = input_hilbert_series(ideal)
    field, can_enlarge = _initial_sampling_field(polynomial_ideal, config)
    modular = config.modular and characteristic == 0
    history: List[Dict[str, Any]] = []
    for attempt in range(config.max_retries + 1):
        seeds = [trial_seed(seed, attempt, t, config.trials) for t in range(config.trials)]
        with Timer() as timer:
            outputs = _sample(polynomial_ideal, field, order, seeds)
        candidate = outputs[0]
        agreement = all(output == candidate for output in outputs)
        borel_fixed = is_borel_fixed(candidate, characteristic)
        top = (candidate.generating_degree if not candidate.is_zero else 0) + 2
        hilbert_match = hilbert_series(candidate).values(0, top) == reference.values(0, top)
        LOGGER.debug(
            f"[{stage}] attempt {attempt} over {field.describe().label}: agreement={agreement} "
            f"borel_fixed={borel_fixed} hilbert_match={hilbert_match} ({timer.duration():.3f}s)"
        )
        history.append(
            {
                "attempt": attempt,
                "field": field.describe().label,
                "seeds": seeds,
                "outputs": [output.pretty() for output in outputs],
            }
        )
        if agreement and borel_fixed and hilbert_match:
            certificate = GinCertificate(
                stage=stage,
                method=CertificateMethod.SAMPLED,
                seeds=tuple(seeds),
                trials=config.trials,
                field=field.describe(),
                attempts=attempt + 1,
                agreement=agreement,
                borel_fixed=borel_fixed,
                hilbert_match=hilbert_match,
                hilbert_window=(0, top),
                modular=modular,
            )
            return _remember(key, GinResult(candidate, certificate))
        if can_enlarge:
            field = field.enlarge(config.zech_table_limit)
            LOGGER.debug(f"[{stage}] enlarging the sampling field to {field.describe().label}")
    raise GinCertificationError(
        f"no certified gin after {config.max_retries + 1} attempts", stage=str(stage), trial_outputs=history
    )


def transport(ideal: MonomialIdeal, characteristic: int) -> MonomialIdeal:
    """Same exponents, new characteristic tag; only monomial ideals can be transported."""
    if not isinstance(ideal, MonomialIdeal):
        raise PreconditionError("Only monomial ideals can be transported between characteristics")
    return ideal.with_characteristic(characteristic)


def gin0(
    ideal: Ideal,
    order: MonomialOrder = MonomialOrder.DEGREVLEX,
    seed: int = 0,
    trials: Optional[int] = None,
    config: Optional[GinConfig] = None,
) -> Gin0Result:
    """gin over K, transported to characteristic 0, gin again, transported back."""
    characteristic = ideal.characteristic
    base, base_certificate = gin(ideal, order, seed, trials, config, Stage.GIN0_BASE)
    rational, zero_certificate = gin(transport(base, 0), order, seed, trials, config, Stage.GIN0_ZERO)
    result = transport(rational, characteristic)
    LOGGER.debug(f"gin0: {base} -> {result}")
    return Gin0Result(result, base, (base_certificate, zero_certificate))


def _truncate(f: Polynomial, ring: PolynomialRing) -> Polynomial:
    keep = ring.nvars
    return ring.from_dict({m[:keep]: c for m, c in f.terms if not any(m[keep:])})


def general_restriction(
    ideal: Ideal, i: int, seed: int = 0, config: Optional[GinConfig] = None
) -> Ideal:
    """I + (l_n, ..., l_{i+1}) for general linear forms, as an ideal of the first i variables."""
    config = config or GinConfig()
    n = ideal.nvars
    if not 0 <= i <= n:
        raise OutOfRangeError(f"Restriction index {i} out of range [0, {n}]")
    if i == n:
        return ideal
    polynomial_ideal = as_polynomial_ideal(ideal)
    field, _ = _initial_sampling_field(polynomial_ideal, config)
    ring = polynomial_ideal.ring.with_field(field)
    change = random_change(n, field, seed)
    target = ring.prefix(i)
    images = [_truncate(apply_change(change, ring.convert(g)), target) for g in polynomial_ideal.generators]
    return PolynomialIdeal(target, tuple(images))


def general_restriction_invariant(
    ideal: Ideal,
    i: int,
    fn: Callable[[Ideal], Any],
    seed: int = 0,
    trials: int = 2,
    config: Optional[GinConfig] = None,
) -> RestrictionInvariant:
    """Value of ``fn`` on general restrictions, required to agree across ``trials`` seeds."""
    seeds = tuple(trial_seed(seed, 0, t, trials) for t in range(trials))
    values = [fn(general_restriction(ideal, i, s, config)) for s in seeds]
    if any(value != values[0] for value in values):
        raise GinCertificationError(
            "general restrictions disagree on the requested invariant",
            stage=str(Stage.RESTRICTION),
            trial_outputs=[{"seed": s, "value": repr(v)} for s, v in zip(seeds, values)],
        )
    return RestrictionInvariant(values[0], seeds)
