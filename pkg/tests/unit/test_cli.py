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

from zerogin.__version__ import __version__
from zerogin.cli.commands import COMMANDS
from zerogin.cli.job import RunConfig
from zerogin.cli.main import build_cli
from zerogin.cli.run import _config_from_kwargs
from zerogin.exceptions import ZeroGinCliException

pytestmark = pytest.mark.usefixtures("quiet_cli", "fresh_gin_cache")

QUADRICS = {"vars": ["x", "y"], "char": 0, "gens": ["x^2", "y^2"]}


def _report(path):
    return json.loads(path.read_text(encoding="utf-8"))


def test_every_command_is_registered(runner):
    cli = build_cli()
    assert set(cli.commands) == {"run", *COMMANDS}
    result = runner.invoke(cli, ["--help"])
    assert result.exit_code == 0
    assert "crystallize" in result.output


def test_version(runner):
    result = runner.invoke(build_cli(), ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_job_command_prints_json_report(runner, write_job):
    job = write_job("quadrics", **QUADRICS)
    result = runner.invoke(build_cli(), ["hilbert", str(job)])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["schema"] == 1
    assert report["command"] == "hilbert"
    assert report["result"]["values"] == [1, 2, 1, 0]


def test_job_command_overrides_the_job_command(runner, write_job, tmp_path):
    job = write_job("quadrics", command="gb", **QUADRICS)
    result = runner.invoke(build_cli(), ["classify", str(job), "-o", str(tmp_path / "out")])
    assert result.exit_code == 0, result.output
    assert _report(tmp_path / "out" / "quadrics.json")["command"] == "classify"


def test_window_and_text_format(runner, write_job):
    job = write_job("quadrics", **QUADRICS)
    result = runner.invoke(build_cli(), ["hilbert", str(job), "--window", "0", "2", "--format", "text"])
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0].split() == ["command", "hilbert"]
    assert lines[1].split() == ["state", "succeeded"]
    assert "[1,2,1]" in result.output


def test_defaults_from_config_file(runner, write_job, tmp_path):
    job = write_job("quadrics", **QUADRICS)
    config_path = tmp_path / "defaults.yaml"
    config_path.write_text("seed: 5\ntrials: 3\n", encoding="utf-8")
    out = tmp_path / "out"
    result = runner.invoke(build_cli(), ["hilbert", str(job), "--config-path", str(config_path), "-o", str(out)])
    assert result.exit_code == 0, result.output
    report = _report(out / "quadrics.json")
    assert (report["seed"], report["trials"]) == (5, 3)


def test_single_trial_is_an_error(runner, write_job, tmp_path):
    job = write_job("quadrics", **QUADRICS)
    out = tmp_path / "out"
    result = runner.invoke(build_cli(), ["gin", str(job), "--trials", "1", "-o", str(out)])
    assert result.exit_code == 1, result.output
    report = _report(out / "quadrics.json")
    assert report["status"]["state"] == "error"
    assert report["status"]["message"] == "JobSpecError: trials must be at least 2, got 1"
    assert report["certificates"] == []


def test_run_writes_one_report_per_job(runner, write_job, tmp_path):
    first = write_job("first", command="hilbert", **QUADRICS)
    second = write_job("second", command="cwl", **QUADRICS)
    out = tmp_path / "out"
    result = runner.invoke(build_cli(), ["run", str(first), str(second), "-o", str(out)])
    assert result.exit_code == 2, result.output
    assert _report(out / "first.json")["status"]["state"] == "succeeded"
    assert _report(out / "second.json")["verdict"] == "fail"


def test_run_command_option_fills_missing_commands(runner, write_job, tmp_path):
    first = write_job("first", **QUADRICS)
    second = write_job("second", command="gb", **QUADRICS)
    out = tmp_path / "out"
    result = runner.invoke(build_cli(), ["run", "-c", "hilbert", str(first), str(second), "-o", str(out)])
    assert result.exit_code == 0, result.output
    assert _report(out / "first.json")["command"] == "hilbert"
    assert _report(out / "second.json")["command"] == "gb"


def test_unreadable_job_is_reported_and_exits_with_one(runner, write_job, tmp_path):
    good = write_job("good", command="hilbert", **QUADRICS)
    bad = tmp_path / "bad.json"
    bad.write_text('{"vars": ["x"], "char": 0, "gens": ["x^2 +"]}', encoding="utf-8")
    out = tmp_path / "out"
    result = runner.invoke(build_cli(), ["run", str(good), str(bad), "-o", str(out)])
    assert result.exit_code == 1
    report = _report(out / "bad.json")
    assert report["input"] == {"file": "bad.json"}
    assert report["status"]["message"].startswith("ParseError: gens[0] 'x^2 +'")
    assert _report(out / "good.json")["status"]["state"] == "succeeded"


def test_parallel_run_matches_sequential_run(runner, write_job, tmp_path):
    jobs = [
        write_job("quadrics", command="gin0", **{**QUADRICS, "char": 2}),
        write_job("cubic", command="hilbert", vars=["x", "y", "z", "w"], char=0, gens=["x*z - y^2", "x*w - y*z", "y*w - z^2"]),
    ]
    for workers, out in (("1", tmp_path / "seq"), ("2", tmp_path / "par")):
        result = runner.invoke(build_cli(), ["run", "-w", workers, "-o", str(out), *map(str, jobs)])
        assert result.exit_code == 0, result.output
    for job in jobs:
        name = f"{job.stem}.json"
        assert (tmp_path / "seq" / name).read_text() == (tmp_path / "par" / name).read_text()


def test_output_path_must_not_be_a_file(runner, write_job, tmp_path):
    job = write_job("quadrics", **QUADRICS)
    taken = tmp_path / "taken"
    taken.write_text("", encoding="utf-8")
    result = runner.invoke(build_cli(), ["hilbert", str(job), "-o", str(taken)])
    assert result.exit_code == 2
    assert "is not a directory" in result.output


def test_run_requires_job_files(runner):
    result = runner.invoke(build_cli(), ["run"])
    assert result.exit_code == 2


def test_unusable_options_raise_cli_exception():
    with pytest.raises(ZeroGinCliException, match="Invalid options"):
        _config_from_kwargs(RunConfig, {"seed": "zero"})
    assert _config_from_kwargs(RunConfig, {"seed": 4}).seed == 4
