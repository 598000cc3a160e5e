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
import time
from typing import Optional

from zerogin.exceptions import ZeroGinException


class Timer:
    """Wall-clock measurement for log lines; durations never enter reports."""

    def __init__(self):
        self._start: Optional[float] = None
        self._end: Optional[float] = None

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, _exc_type, _exc_val, _exc_tb):
        self.stop()

    def start(self):
        if self._start:
            raise ZeroGinException("Timer has been already started. Use reset to perform new measurement.")

        self._start = time.monotonic()

    def stop(self):
        if not self._start:
            raise ZeroGinException("Timer has been not started.")

        self._end = time.monotonic()

    def reset(self):
        self._start = None
        self._end = None

    def duration(self) -> float:
        if self._start is None or self._end is None:
            raise ZeroGinException("Timer has been not started or stopped.")

        return self._end - self._start
