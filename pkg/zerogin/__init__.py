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
from zerogin.__version__ import __version__  # noqa: F401
from zerogin.algebra import (  # noqa: F401
    LinearChange,
    MonomialOrder,
    Polynomial,
    PolynomialIdeal,
    PolynomialRing,
    parse_polynomial,
)
from zerogin.cohomology import local_cohomology_profile, regularity_depth_pd  # noqa: F401
from zerogin.criteria import (  # noqa: F401
    componentwise_linear,
    crystallization_audit,
    invariants_via_gin0,
    regularity_bound_audit,
    restriction_regularity,
    seqcm_squarefree,
)
from zerogin.gin import GinConfig, gin, gin0  # noqa: F401
from zerogin.groebner import buchberger, initial_ideal  # noqa: F401
from zerogin.monideal import MonomialIdeal, hilbert  # noqa: F401
