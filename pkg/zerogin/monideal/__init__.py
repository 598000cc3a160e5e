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
from zerogin.monideal.alexander import alexander_dual, stanley_reisner_facets  # noqa: F401
from zerogin.monideal.betti import BettiTable, ek_betti  # noqa: F401
from zerogin.monideal.classify import ClassificationReport, ExchangeFailure, classify  # noqa: F401
from zerogin.monideal.hilbert import HilbertSeries, hilbert, hilbert_series  # noqa: F401
from zerogin.monideal.ideal import (  # noqa: F401
    GenStats,
    MonomialIdeal,
    Saturation,
    colon_and_saturate,
    frobenius_power,
    gen_stats,
    minimalize,
    restrict,
    saturate_maximal,
    saturate_variable,
)
from zerogin.monideal.lex import lex_segment, macaulay_bound  # noqa: F401
