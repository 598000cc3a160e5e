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
import logging

import click

from zerogin.__version__ import __version__ as zerogin_version
from zerogin.cli.run import job_commands, run_cmd

LOGGER = logging.getLogger("zerogin")

CMD_RUN = run_cmd.name


@click.group(name="zerogin")
@click.version_option(zerogin_version)
def cli():
    pass


def build_cli() -> click.Group:
    if CMD_RUN not in cli.commands:
        cli.add_command(cmd=run_cmd)
        for command in job_commands():
            cli.add_command(cmd=command)
    return cli


def main():
    build_cli()(max_content_width=160)


if __name__ == "__main__":
    main()
