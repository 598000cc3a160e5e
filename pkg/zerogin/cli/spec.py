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
from pathlib import Path

from zerogin.utils.cli import CliSpec


def _parse_output_path(ctx, param, value) -> Path:
    path = Path(value)
    if path.exists() and not path.is_dir():
        raise ValueError(f"{path} exists and is not a directory")
    return path


def _parse_positive(ctx, param, value) -> int:
    if value < 1:
        raise ValueError("must be positive")
    return value


class JobDefaultsCli:
    seed = CliSpec(
        help="Seed of the random changes of coordinates, unless the job file sets one.",
        param_decls=["-s", "--seed"],
    )
    trials = CliSpec(
        help="Independent changes of coordinates per attempt; certification needs at least 2.",
        parse_and_verify_callback=_parse_positive,
    )
    min_field_size = CliSpec(
        help="Smallest field size sampled from in positive characteristic.",
        parse_and_verify_callback=_parse_positive,
    )
    entry_bound = CliSpec(
        help="Bound on sampled integers in characteristic 0.",
        parse_and_verify_callback=_parse_positive,
    )
    window = CliSpec(help="Closed degree window for Hilbert and cohomology values.")
    modular = CliSpec(help="Sample characteristic 0 stages over GF(2^31 - 1); results are never certified.")
    output_path = CliSpec(
        help="Directory to write one JSON report per job into; reports go to stdout when unset.",
        param_decls=["-o", "--output-path"],
        parse_and_verify_callback=_parse_output_path,
    )
    format = CliSpec(help="Rendering of reports printed to stdout.")


class RunConfigCli(JobDefaultsCli):
    command = CliSpec(help="Command for job files that do not name one.", param_decls=["-c", "--command"])
    workers = CliSpec(
        help="Processes to spread the job files over.",
        param_decls=["-w", "--workers"],
        parse_and_verify_callback=_parse_positive,
    )
