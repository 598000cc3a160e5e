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
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import click

from zerogin.cli.commands import COMMANDS, run_command
from zerogin.cli.job import JobDefaults, RunConfig, load_job, with_command
from zerogin.cli.report import render
from zerogin.cli.spec import JobDefaultsCli, RunConfigCli
from zerogin.exceptions import ZeroGinCliException, ZeroGinException
from zerogin.log import init_logger, log_dict
from zerogin.results import ResultsStore, State, Status
from zerogin.utils.cli import common_options, options_from_config

LOGGER = logging.getLogger("zerogin.run")

JobOutcome = Tuple[Dict[str, Any], int]


def _load_error_report(path: Path, error: ZeroGinException) -> Dict[str, Any]:
    status = Status(State.ERROR, f"{type(error).__name__}: {error.message}")
    return {
        "command": None,
        "input": {"file": path.name},
        "status": status.to_dict(),
        "verdict": None,
        "result": {},
        "certificates": [],
    }


def run_job_file(path: Path, run_config: RunConfig, force_command: Optional[str] = None) -> JobOutcome:
    try:
        spec = with_command(load_job(path), force_command)
    except ZeroGinException as e:
        LOGGER.error(f"{path}: {e.message}")
        return _load_error_report(path, e), Status(State.ERROR).exit_code
    report, exit_code = run_command(spec, run_config)
    if exit_code == Status(State.ERROR).exit_code:
        LOGGER.error(f"{path}: {report['status']['message']}")
    return report, exit_code


def run_jobs(paths: Sequence[Path], run_config: RunConfig, force_command: Optional[str] = None) -> List[JobOutcome]:
    """Outcomes in the order of ``paths``, whatever the number of workers."""
    if run_config.workers > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=run_config.workers) as executor:
            return list(
                executor.map(run_job_file, paths, itertools.repeat(run_config), itertools.repeat(force_command))
            )
    return [run_job_file(path, run_config, force_command) for path in paths]


def overall_exit_code(codes: Iterable[int]) -> int:
    codes = set(codes)
    for code in (Status(State.ERROR).exit_code, Status(State.FAILED).exit_code):
        if code in codes:
            return code
    return Status(State.SUCCEEDED).exit_code


def _emit(paths: Sequence[Path], outcomes: Sequence[JobOutcome], defaults: JobDefaults):
    store = ResultsStore(defaults.output_path) if defaults.output_path is not None else None
    for path, (report, _) in zip(paths, outcomes):
        if store is not None:
            written = store.dump(path.stem, report)
            LOGGER.info(f"Report for {path} written to {written}")
        else:
            click.echo(render(report, defaults.format), nl=False)


def _config_from_kwargs(config_cls, kwargs):
    try:
        return config_cls.from_dict(kwargs)
    except (TypeError, ValueError) as e:
        raise ZeroGinCliException(f"Invalid options: {e}")


def _run_and_exit(ctx, paths: Sequence[Path], run_config: RunConfig, force_command: Optional[str] = None):
    outcomes = run_jobs(paths, run_config, force_command)
    _emit(paths, outcomes, run_config)
    ctx.exit(overall_exit_code(code for _, code in outcomes))


CMD_NAME = "run"


@click.command(name=CMD_NAME, help="Run the command of every job file and report the outcomes.")
@common_options
@options_from_config(RunConfig, RunConfigCli)
@click.argument("job_files", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def run_cmd(ctx, verbose: bool, job_files: Tuple[str, ...], **kwargs):
    init_logger(verbose=verbose)
    LOGGER.debug(f"Running '{ctx.command_path}' on {len(job_files)} job file(s)")
    run_config = _config_from_kwargs(RunConfig, kwargs)
    if verbose:
        log_dict("zerogin run configuration:", run_config.to_dict())
    _run_and_exit(ctx, [Path(p) for p in job_files], run_config)


def _job_command(name: str, help_: str) -> click.Command:
    @click.command(name=name, help=f"{help_} Reads one job file.")
    @common_options
    @options_from_config(JobDefaults, JobDefaultsCli)
    @click.argument("job_file", type=click.Path(exists=True, dir_okay=False))
    @click.pass_context
    def _cmd(ctx, verbose: bool, job_file: str, **kwargs):
        init_logger(verbose=verbose)
        defaults = _config_from_kwargs(JobDefaults, kwargs)
        run_config = RunConfig(**dataclasses.asdict(defaults), command=name)
        if verbose:
            log_dict(f"zerogin {name} configuration:", run_config.to_dict())
        _run_and_exit(ctx, [Path(job_file)], run_config, force_command=name)

    return _cmd


def job_commands() -> List[click.Command]:
    return [_job_command(command.name, command.help) for command in COMMANDS.values()]
