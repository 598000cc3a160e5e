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
from zerogin.cohomology.profile import (  # noqa: F401
    CohomHilbert,
    Corner,
    CornerTable,
    Regularity,
    cohom_eval_end,
    cohom_profile_auno,
    extremal_betti,
    h0_hilbert,
    local_cohomology_profile,
    pd_via_corners,
    regularity_depth_pd,
    serre_audit,
)
