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

import pytest

from zerogin.exceptions import ZeroGinException
from zerogin.results import ResultsStore, State, Status, dumps_report, write_atomic


@pytest.mark.parametrize("state,exit_code", [(State.SUCCEEDED, 0), (State.FAILED, 2), (State.ERROR, 1)])
def test_exit_codes(state, exit_code):
    assert Status(state).exit_code == exit_code


def test_status_dict():
    assert Status(State.ERROR, "JobSpecError: boom").to_dict() == {"state": "error", "message": "JobSpecError: boom"}


def test_reports_are_canonical():
    text = dumps_report({"verdict": None, "command": "gb", "result": {"b": 1, "a": [1, 2]}})
    assert text.endswith("}\n")
    assert json.loads(text)["schema"] == 1
    assert list(json.loads(text)) == ["command", "result", "schema", "verdict"]
    assert text == dumps_report({"result": {"a": [1, 2], "b": 1}, "command": "gb", "verdict": None})


def test_write_atomic_replaces_and_leaves_no_temporaries(tmp_path):
    target = tmp_path / "nested" / "report.json"
    write_atomic(target, "first")
    write_atomic(target, "second")
    assert target.read_text() == "second"
    assert [p.name for p in target.parent.iterdir()] == ["report.json"]


def test_store_round_trip(tmp_path):
    store = ResultsStore(tmp_path / "reports")
    path = store.dump("quadrics", {"command": "hilbert"})
    assert path == store.path / "quadrics.json"
    assert store.load("quadrics") == {"command": "hilbert", "schema": 1}
    with pytest.raises(ZeroGinException, match="No report found for cubic"):
        store.load("cubic")
