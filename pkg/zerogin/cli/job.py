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
"""Job files: one ideal, its ring header and the command to run on it.

A job file is a JSON object::

    {"vars": ["x", "y"], "char": 3, "order": "degrevlex", "gens": ["x^6", "y^6"], "command": "gin0"}

Optional keys: ``command``, ``seed``, ``trials``, ``i`` (restriction index), ``h`` (first
cohomological index of the restriction route), ``target`` (``gin0`` or ``gin``), ``window``
(two degrees) and ``modular``.
"""
import dataclasses
import json
import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from zerogin.algebra.fields import prime_field_or_rationals, validate_characteristic
from zerogin.algebra.monomials import MonomialOrder
from zerogin.algebra.parser import parse_polynomial
from zerogin.algebra.polynomials import PolynomialIdeal, PolynomialRing
from zerogin.core import DEFAULT_ENTRY_BOUND, DEFAULT_MIN_FIELD_SIZE, DEFAULT_SEED, DEFAULT_TRIALS
from zerogin.exceptions import FieldError, JobSpecError, ParseError, PreconditionError
from zerogin.gin.core import as_monomial_ideal
from zerogin.monideal.ideal import MonomialIdeal
from zerogin.utils.config import BaseConfig

LOGGER = logging.getLogger(__name__)


class ReportFormat(Enum):
    JSON = "json"
    TEXT = "text"


@dataclass
class JobSpec(BaseConfig):
    vars: List[str]
    char: int
    gens: List[str]
    order: MonomialOrder = MonomialOrder.DEGREVLEX
    command: Optional[str] = None
    seed: Optional[int] = None
    trials: Optional[int] = None
    i: Optional[int] = None
    h: Optional[int] = None
    target: Optional[str] = None
    window: Optional[List[int]] = None
    modular: Optional[bool] = None

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def ring(self) -> PolynomialRing:
        return PolynomialRing(prime_field_or_rationals(self.char), tuple(self.vars), self.order)

    def ideal(self) -> PolynomialIdeal:
        ring = self.ring()
        generators = []
        for index, text in enumerate(self.gens):
            try:
                generators.append(parse_polynomial(text, ring))
            except ParseError as e:
                error = ParseError(f"gens[{index}] {text!r}: {e.message}")
                error.column = e.column
                raise error from e
        return PolynomialIdeal(ring, tuple(generators))

    def monomial_ideal(self) -> MonomialIdeal:
        monomial = as_monomial_ideal(self.ideal())
        if monomial is None:
            raise PreconditionError(f"Command {self.command} needs monomial generators, got {self.gens}")
        return monomial

    def echo(self) -> Dict[str, Any]:
        """Fields that were set, with enums flattened."""
        return {key: value for key, value in self.to_dict().items() if value is not None}


@dataclass
class JobDefaults(BaseConfig):
    """Defaults for the jobs of one invocation; keys present in a job file take precedence."""

    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    min_field_size: int = DEFAULT_MIN_FIELD_SIZE
    entry_bound: int = DEFAULT_ENTRY_BOUND
    window: Optional[Tuple[int, int]] = None
    modular: bool = False
    output_path: Optional[Path] = None
    format: ReportFormat = ReportFormat.JSON


@dataclass
class RunConfig(JobDefaults):
    command: Optional[str] = None
    workers: int = 1


def _check_header(spec: JobSpec):
    if len(set(spec.vars)) != len(spec.vars):
        raise JobSpecError(f"variable names must be unique, got {spec.vars}")
    try:
        validate_characteristic(spec.char)
    except FieldError as e:
        raise JobSpecError(e.message) from e
    if spec.window is not None and len(spec.window) != 2:
        raise JobSpecError(f"window must hold two degrees, got {spec.window}")


def job_from_dict(data: Dict[str, Any]) -> JobSpec:
    if not isinstance(data, dict):
        raise JobSpecError(f"A job must be a JSON object, got {type(data).__name__}")
    try:
        spec = JobSpec.from_dict(data)
    except (TypeError, ValueError) as e:
        raise JobSpecError(f"Invalid job: {e}") from e
    _check_header(spec)
    spec.ideal()
    return spec


def parse_ideal_file(text: str) -> JobSpec:
    """Decode and validate a job; JSON syntax errors carry their line and column."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from e
    return job_from_dict(data)


def load_job(path: Union[str, Path]) -> JobSpec:
    path = Path(path)
    LOGGER.debug(f"Loading job {path}")
    return parse_ideal_file(path.read_text(encoding="utf-8"))


def print_job_spec(spec: JobSpec) -> str:
    """Canonical JSON text of a job; parse_ideal_file reads it back to an equal JobSpec."""
    return json.dumps(spec.echo(), sort_keys=True, indent=2) + "\n"


def with_command(spec: JobSpec, command: Optional[str]) -> JobSpec:
    if command is None:
        return spec
    return dataclasses.replace(spec, command=command)
