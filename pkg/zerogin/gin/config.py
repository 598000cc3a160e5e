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

from zerogin.core import (
    DEFAULT_ENTRY_BOUND,
    DEFAULT_MAX_RETRIES,
    DEFAULT_MIN_FIELD_SIZE,
    DEFAULT_TRIALS,
    DEFAULT_ZECH_TABLE_LIMIT,
)
from zerogin.utils.config import BaseConfig


@dataclass
class GinConfig(BaseConfig):
    """Sampling parameters of the randomized gin computation.

    Args:
        trials: independent changes of coordinates per attempt; at least 2
        max_retries: how many times the sampling field may be enlarged after a failed attempt
        min_field_size: smallest field size sampled from in positive characteristic
        entry_bound: bound on the absolute value of sampled integers in characteristic 0
        modular: sample characteristic 0 stages over GF(2^31 - 1); results are never certified
        zech_table_limit: largest GF(p^k) represented with logarithm tables
        borel_fixed_shortcut: return a Borel-fixed monomial input as its own gin without sampling
    """

    trials: int = DEFAULT_TRIALS
    max_retries: int = DEFAULT_MAX_RETRIES
    min_field_size: int = DEFAULT_MIN_FIELD_SIZE
    entry_bound: int = DEFAULT_ENTRY_BOUND
    modular: bool = False
    zech_table_limit: int = DEFAULT_ZECH_TABLE_LIMIT
    borel_fixed_shortcut: bool = True

    def __post_init__(self):
        if self.trials < 2:
            raise ValueError(f"trials must be at least 2, got {self.trials}")
        if self.max_retries < 0:
            raise ValueError(f"max_retries must be non-negative, got {self.max_retries}")
        if self.min_field_size < 2:
            raise ValueError(f"min_field_size must be at least 2, got {self.min_field_size}")
        if self.entry_bound < 1:
            raise ValueError(f"entry_bound must be positive, got {self.entry_bound}")
