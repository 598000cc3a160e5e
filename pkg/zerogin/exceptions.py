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
from typing import Any, Dict, List, Optional

from click import ClickException


class ZeroGinException(Exception):
    def __init__(self, message: str):
        super().__init__(message)
        self._message = message

    def __str__(self):
        return self._message

    @property
    def message(self):
        """Get the exception message.

        Returns
        -------
        str
            The message associated with this exception.

        """
        return self._message


class RingMismatchError(ZeroGinException):
    pass


class FieldError(ZeroGinException):
    pass


class NonHomogeneousError(ZeroGinException):
    pass


class UnitIdealError(ZeroGinException):
    pass


class ZeroIdealError(ZeroGinException):
    pass


class OutOfRangeError(ZeroGinException):
    pass


class PreconditionError(ZeroGinException):
    pass


class NotWeaklyStableError(PreconditionError):
    pass


class NotStableError(PreconditionError):
    pass


class NotSquarefreeError(PreconditionError):
    pass


class GinCertificationError(ZeroGinException):
    def __init__(self, message: str, *, stage: str, trial_outputs: Optional[List[Dict[str, Any]]] = None):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.trial_outputs = trial_outputs or []


class CohomologyDivisionError(ZeroGinException):
    pass


class TheoremViolationError(ZeroGinException):
    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


class ParseError(ZeroGinException):
    def __init__(self, message: str, *, line: Optional[int] = None, column: Optional[int] = None):
        location = ""
        if line is not None:
            location = f"line {line}, column {column}: "
        elif column is not None:
            location = f"column {column}: "
        super().__init__(f"{location}{message}")
        self.line = line
        self.column = column


class JobSpecError(ZeroGinException):
    pass


class ZeroGinCliException(ClickException):
    pass
