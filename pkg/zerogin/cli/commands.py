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
from dataclasses import dataclass
from typing import Any, Callable, Dict, NamedTuple, Optional, Tuple, Union

from zerogin.algebra.monomials import MonomialOrder, format_monomial
from zerogin.algebra.polynomials import PolynomialIdeal, format_polynomial
from zerogin.cli.job import JobSpec, RunConfig
from zerogin.cohomology.profile import (
    cohom_profile_auno,
    corners_from_profile,
    local_cohomology_profile,
    regularity_from_profile,
    serre_audit,
)
from zerogin.criteria import audits
from zerogin.criteria.report import AuditReport, Verdict
from zerogin.exceptions import (
    GinCertificationError,
    JobSpecError,
    TheoremViolationError,
    UnitIdealError,
    ZeroGinException,
)
from zerogin.gin.certificate import GinCertificate
from zerogin.gin.config import GinConfig
from zerogin.gin.core import as_monomial_ideal, gin, gin0, input_hilbert_series
from zerogin.groebner.basis import buchberger, ideal_initial_ideal
from zerogin.monideal.alexander import alexander_dual, stanley_reisner_facets
from zerogin.monideal.betti import ek_betti
from zerogin.monideal.classify import classify
from zerogin.monideal.ideal import MonomialIdeal, gen_stats
from zerogin.monideal.lex import lex_segment
from zerogin.results import State, Status
from zerogin.validators import run_command_validators

LOGGER = logging.getLogger(__name__)


class Settings(NamedTuple):
    seed: int
    trials: int
    window: Optional[Tuple[int, int]]
    config: GinConfig


class Outcome(NamedTuple):
    result: Dict[str, Any]
    verdict: Optional[Verdict] = None
    certificates: Tuple[GinCertificate, ...] = ()


@dataclass(frozen=True)
class Command:
    name: str
    help: str
    run: Callable[[JobSpec, Settings], Outcome]


COMMANDS: Dict[str, Command] = {}


def command(name: str, help: str):
    def _register(fn: Callable[[JobSpec, Settings], Outcome]):
        COMMANDS[name] = Command(name=name, help=help, run=fn)
        return fn

    return _register


def resolve_settings(spec: JobSpec, run_config: RunConfig) -> Settings:
    def _pick(value, default):
        return default if value is None else value

    trials = _pick(spec.trials, run_config.trials)
    window = tuple(spec.window) if spec.window is not None else run_config.window
    try:
        config = GinConfig(
            trials=trials,
            min_field_size=run_config.min_field_size,
            entry_bound=run_config.entry_bound,
            modular=_pick(spec.modular, run_config.modular),
        )
    except ValueError as e:
        raise JobSpecError(str(e)) from e
    return Settings(seed=_pick(spec.seed, run_config.seed), trials=trials, window=window, config=config)


def _ideal(spec: JobSpec) -> Union[PolynomialIdeal, MonomialIdeal]:
    ideal = spec.ideal()
    return as_monomial_ideal(ideal) or ideal


def _audit(report: AuditReport) -> Outcome:
    result = report.to_dict()
    del result["certificates"]
    return Outcome(result, report.verdict, report.certificates)


@command("gb", "Reduced Groebner basis in the job's monomial order.")
def _gb(spec: JobSpec, settings: Settings) -> Outcome:
    basis = buchberger(spec.ideal().generators, spec.order)
    return Outcome(
        {
            "order": spec.order.value,
            "basis": [format_polynomial(g) for g in basis.elements],
            "leading_monomials": [format_monomial(m, spec.vars) for m in basis.leading_monomials],
        }
    )


@command("initial", "Initial ideal in the job's monomial order.")
def _initial(spec: JobSpec, settings: Settings) -> Outcome:
    return Outcome({"order": spec.order.value, "ideal": ideal_initial_ideal(spec.ideal(), spec.order).to_dict()})


@command("hilbert", "Hilbert series, polynomial and function values of A/I.")
def _hilbert(spec: JobSpec, settings: Settings) -> Outcome:
    ideal = _ideal(spec)
    if ideal.is_unit:
        raise UnitIdealError("The Hilbert series of A/A is zero; hilbert expects a proper ideal")
    series = input_hilbert_series(ideal)
    start, stop = settings.window or (0, series.regularity_index())
    return Outcome({**series.to_dict(), "window": [start, stop], "values": series.values(start, stop)})


@command("classify", "Borel-fixed, strongly stable, stable, p-Borel and weakly stable flags with witnesses.")
def _classify(spec: JobSpec, settings: Settings) -> Outcome:
    ideal = spec.monomial_ideal()
    result = classify(ideal).to_dict(ideal.variables)
    if not ideal.is_zero:
        result["stats"] = gen_stats(ideal).to_dict()
    return Outcome(result)


@command("gin", "Generic initial ideal in the job's characteristic.")
def _gin(spec: JobSpec, settings: Settings) -> Outcome:
    result = gin(_ideal(spec), spec.order, settings.seed, config=settings.config)
    return Outcome({"order": spec.order.value, "ideal": result.ideal.to_dict()}, None, (result.certificate,))


@command("gin0", "Zero-generic initial ideal.")
def _gin0(spec: JobSpec, settings: Settings) -> Outcome:
    result = gin0(_ideal(spec), spec.order, settings.seed, config=settings.config)
    return Outcome(
        {"order": spec.order.value, "ideal": result.ideal.to_dict(), "intermediate": result.intermediate.to_dict()},
        None,
        result.certificates,
    )


@command("cohomology", "Hilbert functions of local cohomology of A/I for weakly stable monomial I.")
def _cohomology(spec: JobSpec, settings: Settings) -> Outcome:
    ideal = spec.monomial_ideal()
    profile = local_cohomology_profile(ideal)
    regularity = regularity_from_profile(profile, nonzero_ideal=not ideal.is_zero)
    window = settings.window or (-ideal.nvars - 5, regularity.reg_quotient + 2)
    start, stop = window
    result: Dict[str, Any] = {
        "profile": [c.to_dict() for c in profile],
        "window": [start, stop],
        "values": {str(c.i): [c.value(d) for d in range(start, stop + 1)] for c in profile},
        "regularity": regularity.to_dict(),
        "corners": corners_from_profile(profile).to_dict()["corners"],
        "serre_defect": serre_audit(ideal, window),
    }
    if spec.h is not None:
        route = cohom_profile_auno(ideal, spec.h)
        result["restriction_route"] = [c.to_dict() for c in route]
        result["routes_agree"] = all(c.P == profile[c.i].P for c in route)
    return Outcome(result)


@command("invariants", "reg I, pd A/I and extremal Betti numbers read off Gin0(I).")
def _invariants(spec: JobSpec, settings: Settings) -> Outcome:
    invariants = audits.invariants_via_gin0(_ideal(spec), settings.seed, settings.config)
    return Outcome(invariants.to_dict(), None, invariants.gin0.certificates)


@command("cwl", "Componentwise linearity: mu(I) = mu(Gin0(I)).")
def _cwl(spec: JobSpec, settings: Settings) -> Outcome:
    return _audit(audits.componentwise_linear(_ideal(spec), settings.seed, settings.config))


@command("seqcm", "Sequential Cohen-Macaulayness of A/I for squarefree monomial I.")
def _seqcm(spec: JobSpec, settings: Settings) -> Outcome:
    return _audit(audits.seqcm_squarefree(spec.monomial_ideal(), settings.seed, settings.config))


@command("crystallize", "Crystallization audit of Gin0(I) (default) or Gin(I).")
def _crystallize(spec: JobSpec, settings: Settings) -> Outcome:
    target = audits.Target(spec.target or audits.Target.GIN0.value)
    return _audit(audits.crystallization_audit(_ideal(spec), spec.order, settings.seed, target, settings.config))


@command("restrict-reg", "reg of Gin(I)_[i] against reg of Gin0(I)_[i].")
def _restrict_reg(spec: JobSpec, settings: Settings) -> Outcome:
    return _audit(audits.restriction_regularity(_ideal(spec), spec.i, settings.seed, settings.config))


@command("bound-audit", "Regularity bounds in terms of the generating degree.")
def _bound_audit(spec: JobSpec, settings: Settings) -> Outcome:
    return _audit(audits.regularity_bound_audit(_ideal(spec), settings.seed, settings.config))


@command("frobenius-gap", "Generator gap of Gin(F(I)) forced by a generator of Gin(I) in degree D(I)+1.")
def _frobenius_gap(spec: JobSpec, settings: Settings) -> Outcome:
    return _audit(audits.frobenius_gap_witness(_ideal(spec), settings.seed, settings.config))


@command("seqcm-ws", "Cohomology profiles of A/I and A/Gin0(I) for weakly stable monomial I.")
def _seqcm_weakly_stable(spec: JobSpec, settings: Settings) -> Outcome:
    return _audit(audits.seqcm_weakly_stable(spec.monomial_ideal(), settings.seed, settings.config))


@command("cohom-bound", "H^i(A/I)_d <= H^i(A/Gin0(I))_d on a degree window.")
def _cohomology_bound(spec: JobSpec, settings: Settings) -> Outcome:
    report = audits.cohomology_bound_audit(spec.monomial_ideal(), settings.seed, settings.window, settings.config)
    return _audit(report)


@command("betti-compare", "Betti numbers of I against those of Gin0(I).")
def _betti_compare(spec: JobSpec, settings: Settings) -> Outcome:
    return _audit(audits.betti_comparison_audit(_ideal(spec), settings.seed, settings.config))


@command("miracle", "Cohomology of restrictions of weakly stable I against those of Gin(I).")
def _miracle(spec: JobSpec, settings: Settings) -> Outcome:
    return _audit(audits.restriction_miracle_audit(spec.monomial_ideal(), settings.seed, settings.config))


@command("lex", "Lex-segment ideal with the Hilbert function of I.")
def _lex(spec: JobSpec, settings: Settings) -> Outcome:
    ideal = _ideal(spec)
    if not isinstance(ideal, MonomialIdeal):
        ideal = ideal_initial_ideal(ideal, MonomialOrder.DEGREVLEX)
    return Outcome({"ideal": lex_segment(ideal).to_dict()})


@command("dual", "Alexander dual and Stanley-Reisner facets of a squarefree monomial ideal.")
def _dual(spec: JobSpec, settings: Settings) -> Outcome:
    ideal = spec.monomial_ideal()
    facets = stanley_reisner_facets(ideal)
    return Outcome(
        {
            "dual": alexander_dual(ideal).to_dict(),
            "facets": [[ideal.variables[k] for k in facet] for facet in facets],
        }
    )


@command("betti", "Eliahou-Kervaire Betti table of a stable monomial ideal.")
def _betti(spec: JobSpec, settings: Settings) -> Outcome:
    table = ek_betti(spec.monomial_ideal())
    return Outcome(
        {
            "ideal": table.to_dict(),
            "quotient": table.quotient().to_dict(),
            "rows": table.rows(),
            "extremal": [{"i": i, "j": j, "value": value} for (i, j), value in table.extremal().items()],
        }
    )


def run_command(spec: JobSpec, run_config: Optional[RunConfig] = None) -> Tuple[Dict[str, Any], int]:
    """Run the job's command; returns the report and the process exit code (0 pass, 2 fail, 1 error)."""
    run_config = run_config or RunConfig()
    name = spec.command or run_config.command
    report: Dict[str, Any] = {"command": name, "input": spec.echo()}
    outcome = Outcome({})
    try:
        if name not in COMMANDS:
            raise JobSpecError(f"Unknown command {name!r}; available: {', '.join(sorted(COMMANDS))}")
        settings = resolve_settings(spec, run_config)
        report.update(seed=settings.seed, trials=settings.trials)
        run_command_validators(name, spec)
        LOGGER.debug(f"Running {name} on {spec.gens}")
        outcome = COMMANDS[name].run(spec, settings)
    except TheoremViolationError as e:
        LOGGER.error(e.message)
        status = Status(State.ERROR, f"{type(e).__name__}: {e.message}")
        if e.report is not None:
            outcome = _audit(e.report)
    except GinCertificationError as e:
        status = Status(State.ERROR, f"{type(e).__name__}: {e.message}")
        report["trial_outputs"] = e.trial_outputs
    except ZeroGinException as e:
        status = Status(State.ERROR, f"{type(e).__name__}: {e.message}")
    else:
        failed = outcome.verdict == Verdict.FAIL
        status = Status(State.FAILED if failed else State.SUCCEEDED)
    report["status"] = status.to_dict()
    report["verdict"] = outcome.verdict.value if outcome.verdict is not None else None
    report["result"] = outcome.result
    report["certificates"] = [c.to_dict() for c in outcome.certificates]
    return report, status.exit_code
