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
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from zerogin.gin.certificate import GinCertificate
from zerogin.utils.enums import Parameter


class Verdict(Parameter):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class AuditReport:
    """Outcome of one audit; a FAIL always names at least one concrete witness."""

    audit: str
    verdict: Verdict
    lhs: Any = None
    rhs: Any = None
    payload: Dict[str, Any] = field(default_factory=dict)
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    certificates: Tuple[GinCertificate, ...] = ()

    def __post_init__(self):
        if self.verdict == Verdict.FAIL and not self.witnesses:
            raise ValueError(f"Audit {self.audit} failed without a witness")

    @property
    def passed(self) -> bool:
        return self.verdict != Verdict.FAIL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "audit": self.audit,
            "verdict": self.verdict.value,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "payload": self.payload,
            "witnesses": self.witnesses,
            "certificates": [c.to_dict() for c in self.certificates],
        }


def verdict_of(holds: bool) -> Verdict:
    return Verdict.PASS if holds else Verdict.FAIL


def merge_certificates(*groups: Optional[Tuple[GinCertificate, ...]]) -> Tuple[GinCertificate, ...]:
    merged: List[GinCertificate] = []
    for group in groups:
        for certificate in group or ():
            if certificate not in merged:
                merged.append(certificate)
    return tuple(merged)
