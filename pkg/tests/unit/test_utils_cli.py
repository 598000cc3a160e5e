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
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import click
import pytest

from zerogin.algebra.monomials import MonomialOrder
from zerogin.utils.cli import CliSpec, common_options, options_from_config
from zerogin.utils.config import BaseConfig


@dataclass
class SweepConfig(BaseConfig):
    characteristic: int
    label: str
    order: MonomialOrder = MonomialOrder.DEGREVLEX
    trials: int = 2
    modular: bool = False
    borel_fixed_shortcut: bool = True
    window: Optional[Tuple[int, int]] = None


def _positive(ctx, param, value):
    if value < 1:
        raise ValueError("must be positive")
    return value


class SweepConfigCli:
    characteristic = CliSpec(help="help for characteristic")
    trials = CliSpec(help="help for trials", param_decls=["-t", "--trials"], parse_and_verify_callback=_positive)
    window = CliSpec(help="help for window")


def _command(config_cls=SweepConfig, cli_specs=SweepConfigCli):
    @click.command()
    @options_from_config(config_cls, cli_specs)
    def my_cmd_fun(**kwargs):
        print(config_cls.from_dict(kwargs))

    return my_cmd_fun


def test_cli_with_simple_config(runner):
    result = runner.invoke(_command(), ["--characteristic", "3", "--label", "sextics", "-t", "4"])
    assert not result.exception
    assert result.output.splitlines() == [str(SweepConfig(characteristic=3, label="sextics", trials=4))]


def test_cli_toggles_bool_flags(runner):
    result = runner.invoke(
        _command(), ["--characteristic", "0", "--label", "q", "--modular", "--borel-fixed-shortcut"]
    )
    assert not result.exception
    expected = SweepConfig(characteristic=0, label="q", modular=True, borel_fixed_shortcut=False)
    assert result.output.splitlines() == [str(expected)]


def test_cli_enum_and_sequence_options(runner):
    result = runner.invoke(
        _command(), ["--characteristic", "2", "--label", "q", "--order", "lex", "--window", "0", "4"]
    )
    assert not result.exception
    expected = SweepConfig(characteristic=2, label="q", order=MonomialOrder.LEX, window=(0, 4))
    assert result.output.splitlines() == [str(expected)]

    result = runner.invoke(_command(), ["--characteristic", "2", "--label", "q", "--order", "grevlex"])
    assert "Invalid value for" in result.output
    assert result.exit_code == 2


def test_cli_help_and_missing_options(runner):
    result = runner.invoke(_command(), ["--help"])
    assert result.exit_code == 0
    assert "help for characteristic" in result.output
    assert "help for window" in result.output

    result = runner.invoke(_command(), ["--label", "q"])
    assert "Missing option '--characteristic'" in result.output
    assert result.exit_code == 2


def test_cli_callback_rejects_value(runner):
    result = runner.invoke(_command(), ["--characteristic", "2", "--label", "q", "-t", "0"])
    assert result.exit_code == 2
    assert "must be positive" in result.output


class UnneededSpecCli:
    seeds = CliSpec(help="not a field")


class NotMatchingNameCli:
    trials = CliSpec(param_decls=["--attempts", "-t"])


@dataclass
class SequenceConfig(BaseConfig):
    degrees: List[int] = field(default_factory=list)


@dataclass
class MappingConfig(BaseConfig):
    counts: Dict[str, int] = field(default_factory=dict)


@dataclass
class VariadicConfig(BaseConfig):
    degrees: Tuple[int, ...] = ()


@dataclass
class MixedPairConfig(BaseConfig):
    pair: Optional[Tuple[int, str]] = None


@pytest.mark.parametrize(
    "config_cls,cli_specs",
    [
        (SweepConfig, UnneededSpecCli),
        (SweepConfig, NotMatchingNameCli),
        (SequenceConfig, None),
        (MappingConfig, None),
        (VariadicConfig, None),
        (MixedPairConfig, None),
    ],
)
def test_cli_rejects_unrepresentable_configs(config_cls, cli_specs):
    with pytest.raises(click.ClickException):
        _command(config_cls, cli_specs)


def test_common_options_read_defaults_from_yaml(runner, tmp_path):
    @click.command()
    @common_options
    @options_from_config(SweepConfig, SweepConfigCli)
    def my_cmd_fun(verbose, **kwargs):
        print(SweepConfig.from_dict(kwargs))

    config_path = tmp_path / "defaults.yaml"
    config_path.write_text("characteristic: 5\nlabel: from-file\norder: deglex\n")

    result = runner.invoke(my_cmd_fun, ["--config-path", str(config_path)])
    assert not result.exception
    assert result.output.splitlines() == [
        str(SweepConfig(characteristic=5, label="from-file", order=MonomialOrder.DEGLEX))
    ]

    result = runner.invoke(my_cmd_fun, ["--config-path", str(config_path), "--label", "from-cli"])
    assert result.output.splitlines() == [
        str(SweepConfig(characteristic=5, label="from-cli", order=MonomialOrder.DEGLEX))
    ]
