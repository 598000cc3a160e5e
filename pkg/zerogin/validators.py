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
from abc import ABC, abstractmethod
from typing import List

from zerogin.algebra.polynomials import PolynomialIdeal
from zerogin.cli.job import JobSpec
from zerogin.criteria.audits import Target
from zerogin.exceptions import JobSpecError, NonHomogeneousError, OutOfRangeError

LOGGER = logging.getLogger(__name__)


class BaseValidator(ABC):
    @abstractmethod
    def validate(self, spec: JobSpec):
        pass


class CommandValidator(BaseValidator):
    commands_names: List[str]


class HomogeneousGenerators(CommandValidator):
    commands_names = [
        "hilbert",
        "gin",
        "gin0",
        "invariants",
        "cwl",
        "crystallize",
        "restrict-reg",
        "bound-audit",
        "frobenius-gap",
        "betti-compare",
        "lex",
    ]

    def validate(self, spec: JobSpec):
        ideal: PolynomialIdeal = spec.ideal()
        LOGGER.debug(f"HomogeneousGenerators gens={spec.gens}")
        for g in ideal.generators:
            if not g.is_homogeneous:
                raise NonHomogeneousError(f"This command needs homogeneous generators; {g} is not")


class RestrictionIndexConfiguration(CommandValidator):
    commands_names = ["restrict-reg"]

    def validate(self, spec: JobSpec):
        LOGGER.debug(f"RestrictionIndexConfiguration i={spec.i} nvars={spec.nvars}")
        if spec.i is None:
            raise JobSpecError("restrict-reg needs the restriction index 'i'")
        if not 0 <= spec.i <= spec.nvars:
            raise OutOfRangeError(f"Restriction index {spec.i} out of range [0, {spec.nvars}]")


class CohomologyIndexConfiguration(CommandValidator):
    commands_names = ["cohomology"]

    def validate(self, spec: JobSpec):
        LOGGER.debug(f"CohomologyIndexConfiguration h={spec.h} nvars={spec.nvars}")
        if spec.h is not None and not 1 <= spec.h <= spec.nvars:
            raise OutOfRangeError(f"Cohomological index h={spec.h} out of range [1, {spec.nvars}]")


class TargetConfiguration(CommandValidator):
    commands_names = ["crystallize"]

    def validate(self, spec: JobSpec):
        LOGGER.debug(f"TargetConfiguration target={spec.target}")
        if spec.target is not None and spec.target not in [t.value for t in Target]:
            raise JobSpecError(f"target must be one of {[t.value for t in Target]}, got {spec.target!r}")


class WindowConfiguration(CommandValidator):
    commands_names = ["hilbert", "cohomology", "cohom-bound"]

    def validate(self, spec: JobSpec):
        LOGGER.debug(f"WindowConfiguration window={spec.window}")
        if spec.window is not None and spec.window[0] > spec.window[1]:
            raise JobSpecError(f"window must be ordered, got {spec.window}")


class PositiveCharacteristicConfiguration(CommandValidator):
    commands_names = ["frobenius-gap"]

    def validate(self, spec: JobSpec):
        LOGGER.debug(f"PositiveCharacteristicConfiguration char={spec.char}")
        if spec.char == 0:
            raise JobSpecError("frobenius-gap needs a positive characteristic")


def run_command_validators(command_name: str, spec: JobSpec):
    for validator in _get_command_validators(command_name):
        LOGGER.debug(f"Running command validator: {validator}")
        validator.validate(spec)


def _get_command_validators(command_name) -> List[CommandValidator]:
    return [
        ValidatorCls()
        for ValidatorCls in CommandValidator.__subclasses__()
        if command_name in ValidatorCls.commands_names
    ]
