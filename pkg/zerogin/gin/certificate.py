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
from dataclasses import dataclass
from typing import Any, Dict, Tuple

from zerogin.algebra.fields import FieldDescription
from zerogin.utils.enums import Parameter


class Stage(Parameter):
    GIN = "gin"
    GIN0_BASE = "gin0:base"
    GIN0_ZERO = "gin0:zero"
    RESTRICTION = "restriction"


class CertificateMethod(Parameter):
    SAMPLED = "sampled"
    BOREL_FIXED = "borel-fixed"


@dataclass(frozen=True)
class GinCertificate:
    """Evidence that a sampled change of coordinates was generic.

    A sampled certificate is certified when every trial produced the same ideal, that ideal is
    Borel-fixed in the ambient characteristic, its Hilbert function matches the input's on
    ``hilbert_window`` and at least two trials ran. Modular results are never certified.
    """

    stage: Stage
    method: CertificateMethod
    seeds: Tuple[int, ...]
    trials: int
    field: FieldDescription
    attempts: int
    agreement: bool
    borel_fixed: bool
    hilbert_match: bool
    hilbert_window: Tuple[int, int]
    modular: bool = False

    @property
    def certified(self) -> bool:
        if self.modular:
            return False
        checks = self.agreement and self.borel_fixed and self.hilbert_match
        if self.method == CertificateMethod.BOREL_FIXED:
            return checks
        return checks and self.trials >= 2

    def to_dict(self) -> Dict[str, Any]:
        return {
            "stage": self.stage.value,
            "method": self.method.value,
            "seeds": list(self.seeds),
            "trials": self.trials,
            "field": self.field.to_dict(),
            "attempts": self.attempts,
            "agreement": self.agreement,
            "borel_fixed": self.borel_fixed,
            "hilbert_match": self.hilbert_match,
            "hilbert_window": list(self.hilbert_window),
            "modular": self.modular,
            "certified": self.certified,
        }
