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
import dataclasses
import json
import logging
import os
import tempfile
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional, Union

from zerogin.core import REPORT_SCHEMA_VERSION
from zerogin.exceptions import ZeroGinException

LOGGER = logging.getLogger(__name__)


class State(Enum):
    SUCCEEDED = "succeeded"
    FAILED = "failed"
    ERROR = "error"


_EXIT_CODES = {State.SUCCEEDED: 0, State.FAILED: 2, State.ERROR: 1}


@dataclasses.dataclass
class Status:
    state: State
    message: str = ""

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self.state]

    def to_dict(self) -> Dict[str, Any]:
        return {"state": self.state.value, "message": self.message}


def dumps_report(report: Dict[str, Any]) -> str:
    """Canonical report text: sorted keys, two-space indent, trailing newline."""
    return json.dumps({"schema": REPORT_SCHEMA_VERSION, **report}, sort_keys=True, indent=2) + "\n"


def write_atomic(path: Union[str, Path], text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    descriptor, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(descriptor, "w", encoding="utf-8") as tmp_file:
            tmp_file.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return path


class ResultsStore:
    """Directory of JSON reports, one file per job."""

    def __init__(self, output_path: Union[str, Path]):
        self._output_path = Path(output_path)

    @property
    def path(self) -> Path:
        return self._output_path

    def dump(self, name: str, report: Dict[str, Any]) -> Path:
        results_path = self.get_path(name)
        LOGGER.debug(f"Saving report {name} into {results_path}")
        return write_atomic(results_path, dumps_report(report))

    def load(self, name: str) -> Dict[str, Any]:
        results_path = self.get_path(name)
        if not results_path.exists():
            raise ZeroGinException(f"No report found for {name}")
        with results_path.open("r", encoding="utf-8") as results_file:
            return json.load(results_file)

    def get_path(self, name: str, suffix: Optional[str] = ".json") -> Path:
        return self._output_path / f"{name}{suffix}"
