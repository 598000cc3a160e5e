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
"""Click options generated from config dataclasses.

Fields map to options by name (``min_field_size`` becomes ``--min-field-size``). Supported
field types are scalars, enums (rendered as choices), ``bool`` (a flag toggling the default)
and fixed-length homogeneous tuples such as ``Tuple[int, int]``; each may be ``Optional``.
"""
import functools
import logging
from dataclasses import MISSING, Field, dataclass, fields
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import click
from typing_inspect import get_args, is_optional_type, is_tuple_type

from zerogin.utils.config import YamlConfigFile

LOGGER = logging.getLogger(__name__)

_SCALARS = (int, str, Path)


@dataclass
class CliSpec:
    help: str = ""
    param_decls: Optional[List[str]] = None
    parse_and_verify_callback: Optional[Callable] = None


def _strip_optional(type_):
    if is_optional_type(type_):
        type_, _ = get_args(type_, evaluate=True)
    return type_


def _element_type(name: str, type_) -> Tuple[Any, int]:
    """Click type and nargs of a field type."""
    if is_tuple_type(type_):
        args = get_args(type_, evaluate=True)
        if not args or Ellipsis in args or len(set(args)) != 1 or args[0] not in _SCALARS:
            raise click.ClickException(f"{name} has no command line representation")
        return args[0], len(args)
    if isinstance(type_, type) and issubclass(type_, Enum):
        return click.Choice([item.value for item in type_]), 1
    if type_ is bool or type_ in _SCALARS:
        return type_, 1
    raise click.ClickException(f"{name} has no command line representation")


def _verify(parse_and_verify_callback: Optional[Callable]):
    @functools.wraps(parse_and_verify_callback or (lambda ctx, param, value: value))
    def _wrapper(ctx, param, value):
        if value is not None and parse_and_verify_callback is not None:
            try:
                value = parse_and_verify_callback(ctx, param, value)
            except ValueError as e:
                raise click.BadParameter(f"{value}; error details: {e}", ctx=ctx, param=param)
        return value

    return _wrapper


def _option(dataclass_field: Field, cli_spec: CliSpec):
    name = dataclass_field.name
    param_decls = cli_spec.param_decls or [f"--{name.replace('_', '-')}"]
    long_names = [decl[2:].replace("-", "_") for decl in param_decls if decl.startswith("--")]
    if long_names[:1] != [name]:
        raise click.ClickException(f"Provided parameters names: {param_decls} doesn't match field name: {name}")

    type_, nargs = _element_type(name, _strip_optional(dataclass_field.type))
    if dataclass_field.default_factory is not MISSING:
        default = dataclass_field.default_factory()
    elif dataclass_field.default is not MISSING:
        default = dataclass_field.default
    else:
        default = None
    if isinstance(default, Enum):
        default = default.value

    kwargs: Dict[str, Any] = {
        "default": default,
        "show_default": True,
        "help": cli_spec.help,
        "callback": _verify(cli_spec.parse_and_verify_callback),
    }
    if type_ is bool:
        kwargs.update(is_flag=True, flag_value=not default)
    else:
        required = default is None and not is_optional_type(dataclass_field.type)
        kwargs.update(type=type_, nargs=nargs, required=required)
    return click.option(*param_decls, **kwargs)


def options_from_config(config_dataclass, cli_specs=None):
    """Decorates a click command with one option per field of ``config_dataclass``.

    ``cli_specs`` is a class whose CliSpec attributes, named after fields, add help texts,
    short names and value checks.
    """
    config_fields = fields(config_dataclass)
    if cli_specs:
        names = {name for name in dir(cli_specs) if isinstance(getattr(cli_specs, name), CliSpec)}
        unknown = names - {f.name for f in config_fields}
        if unknown:
            raise click.ClickException(
                f"{cli_specs} class contains parameters: {', '.join(sorted(unknown))} "
                f"which doesn't match with {config_dataclass} config"
            )
    options = [_option(f, getattr(cli_specs, f.name, None) or CliSpec()) for f in config_fields]

    def wrapper_fn(cmd):
        for option in reversed(options):
            cmd = option(cmd)
        return cmd

    return wrapper_fn


def common_options(f):
    def _load_config_from_file(ctx, param, value):
        """Fills the defaults of the other options from a YAML file."""
        if not value:
            return value

        config_path = Path(value)
        ctx.default_map = ctx.default_map or {}
        with YamlConfigFile(config_path=config_path) as config_file:
            ctx.default_map.update(config_file.config_dict)

        return config_path

    options = [
        # config-path has to be processed first, it fills ctx.default_map
        click.option(
            "--config-path",
            help="Path to a YAML file containing default parameter values to use.",
            type=click.Path(dir_okay=False, exists=True),
            required=False,
            is_eager=True,
            expose_value=False,
            callback=_load_config_from_file,
        ),
        click.option(
            "-v",
            "--verbose",
            help="Provide verbose logs.",
            default=False,
            type=bool,
            is_flag=True,
        ),
    ]

    for option in reversed(options):
        f = option(f)

    return f
