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
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import pytest
from click.testing import CliRunner

from zerogin.gin.core import clear_cache


@dataclass
class RunContext:
    cwd: Optional[Path] = None
    job_paths: List[Path] = field(default_factory=list)
    parameters: Dict[str, Any] = field(default_factory=dict)
    exit_code: Optional[int] = None
    output: Optional[str] = None
    runs: List[Path] = field(default_factory=list)


@pytest.fixture(scope="function")
def runner(request):
    return CliRunner()


@pytest.fixture(scope="function")
def run_context(request, tmp_path):
    return RunContext(cwd=tmp_path)


@pytest.fixture(scope="function")
def write_job(tmp_path):
    """Writes a job file into the test directory and returns its path."""

    def _write(name: str = "job", **job) -> Path:
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(job), encoding="utf-8")
        return path

    return _write


@pytest.fixture(scope="function")
def quiet_cli(mocker):
    """Keeps the CLI from installing log handlers on the runner's streams."""
    mocker.patch("zerogin.cli.run.init_logger")


@pytest.fixture(scope="function")
def fresh_gin_cache():
    clear_cache()
    yield
    clear_cache()
