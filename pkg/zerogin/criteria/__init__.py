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
from zerogin.criteria.audits import (  # noqa: F401
    Invariants,
    Target,
    betti_comparison_audit,
    cohomology_bound_audit,
    componentwise_linear,
    crystallization_audit,
    degree_counts,
    frobenius_gap_witness,
    generating_degree,
    invariants_via_gin0,
    number_of_generators,
    recursive_regularity_bounds,
    regularity_bound_audit,
    restriction_miracle_audit,
    restriction_regularity,
    seqcm_squarefree,
    seqcm_weakly_stable,
)
from zerogin.criteria.report import AuditReport, Verdict  # noqa: F401
