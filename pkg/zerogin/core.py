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

DEFAULT_MIN_FIELD_SIZE = 2**16
DEFAULT_ENTRY_BOUND = 10**6
DEFAULT_TRIALS = 2
DEFAULT_MAX_RETRIES = 3
DEFAULT_SEED = 0

# largest GF(p^k) backed by logarithm tables
DEFAULT_ZECH_TABLE_LIMIT = 2**20

# sampling prime of the uncertified modular mode
MODULAR_PRIME = 2**31 - 1

# lex segments are not built past this degree
DEFAULT_LEX_DEGREE_LIMIT = 400

# certified gin results kept per process
GIN_CACHE_SIZE = 512

REPORT_SCHEMA_VERSION = 1
