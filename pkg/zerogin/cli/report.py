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
from typing import Any, Dict, List

from tabulate import tabulate

from zerogin.cli.job import ReportFormat
from zerogin.results import dumps_report


def _compact(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def render_text(report: Dict[str, Any]) -> str:
    header = [
        ["command", report.get("command")],
        ["state", report["status"]["state"]],
        ["verdict", report.get("verdict") or "-"],
        ["seed", report.get("seed", "-")],
    ]
    if report["status"]["message"]:
        header.append(["message", report["status"]["message"]])
    sections: List[str] = [tabulate(header, tablefmt="plain")]

    result = report.get("result") or {}
    if result:
        rows = [[key, _compact(value)] for key, value in sorted(result.items())]
        sections.append(tabulate(rows, headers=["result", "value"], tablefmt="simple"))

    certificates = report.get("certificates") or []
    if certificates:
        rows = [
            [c["stage"], c["method"], c["field"]["label"], c["trials"], c["attempts"], c["certified"]]
            for c in certificates
        ]
        sections.append(
            tabulate(rows, headers=["stage", "method", "field", "trials", "attempts", "certified"], tablefmt="simple")
        )
    return "\n\n".join(sections) + "\n"


def render(report: Dict[str, Any], report_format: ReportFormat) -> str:
    if ReportFormat(report_format) == ReportFormat.TEXT:
        return render_text(report)
    return dumps_report(report)
