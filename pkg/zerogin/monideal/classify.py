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
"""Stability predicates for monomial ideals, with witnesses for every failed check."""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, NamedTuple, Optional

from zerogin.algebra.monomials import Monomial, exchange, format_monomial, max_index, p_adic_leq
from zerogin.monideal.ideal import MonomialIdeal

LOGGER = logging.getLogger(__name__)


class ExchangeFailure(NamedTuple):
    generator: Monomial
    image: Monomial
    reason: str

    def to_dict(self, names) -> Dict[str, Any]:
        return {
            "generator": format_monomial(self.generator, names),
            "image": format_monomial(self.image, names),
            "reason": self.reason,
        }


@dataclass(frozen=True)
class ClassificationReport:
    characteristic: int
    borel_fixed: bool
    strongly_stable: bool
    stable: bool
    weakly_stable: bool
    p_borel: Optional[bool] = None
    witnesses: Dict[str, ExchangeFailure] = field(default_factory=dict)

    def to_dict(self, names) -> Dict[str, Any]:
        return {
            "characteristic": self.characteristic,
            "borel_fixed": self.borel_fixed,
            "strongly_stable": self.strongly_stable,
            "stable": self.stable,
            "p_borel": self.p_borel,
            "weakly_stable": self.weakly_stable,
            "witnesses": {flag: failure.to_dict(names) for flag, failure in sorted(self.witnesses.items())},
        }


def _first(failures: Iterator[ExchangeFailure]) -> Optional[ExchangeFailure]:
    return next(failures, None)


def _strongly_stable_failures(ideal: MonomialIdeal) -> Iterator[ExchangeFailure]:
    for u in ideal.generators:
        for i, e in enumerate(u):
            if not e:
                continue
            for j in range(i):
                image = exchange(u, i, j)
                if image not in ideal:
                    yield ExchangeFailure(u, image, f"X{j + 1}*u/X{i + 1} not in I")


def _stable_failures(ideal: MonomialIdeal) -> Iterator[ExchangeFailure]:
    for u in ideal.generators:
        m = max_index(u) - 1
        for j in range(m):
            image = exchange(u, m, j)
            if image not in ideal:
                yield ExchangeFailure(u, image, f"X{j + 1}*u/X{m + 1} not in I")


def _p_borel_failures(ideal: MonomialIdeal, p: int) -> Iterator[ExchangeFailure]:
    for u in ideal.generators:
        for i, e in enumerate(u):
            for k in range(1, e + 1):
                if not p_adic_leq(k, e, p):
                    continue
                for j in range(i):
                    image = exchange(u, i, j, k)
                    if image not in ideal:
                        yield ExchangeFailure(u, image, f"X{j + 1}^{k}*u/X{i + 1}^{k} not in I ({k} <=_{p} {e})")


def _weakly_stable_failures(ideal: MonomialIdeal) -> Iterator[ExchangeFailure]:
    # membership of X_j^k * v is monotone in k, so the largest useful k settles it
    largest = [max((g[j] for g in ideal.generators), default=0) for j in range(ideal.nvars)]
    for u in ideal.generators:
        m = max_index(u) - 1
        if m < 0:
            continue
        stripped = list(u)
        stripped[m] = 0
        for j in range(m):
            k = max(largest[j], 1)
            image = list(stripped)
            image[j] += k
            image = tuple(image)
            if image not in ideal:
                yield ExchangeFailure(
                    u, image, f"X{j + 1}^{k}*u/X{m + 1}^{u[m]} not in I for every power of X{j + 1}"
                )


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    return _first(_strongly_stable_failures(ideal)) is None


def is_stable(ideal: MonomialIdeal) -> bool:
    return _first(_stable_failures(ideal)) is None


def is_p_borel(ideal: MonomialIdeal, p: int) -> bool:
    return _first(_p_borel_failures(ideal, p)) is None


def is_weakly_stable(ideal: MonomialIdeal) -> bool:
    return _first(_weakly_stable_failures(ideal)) is None


def is_borel_fixed(ideal: MonomialIdeal, characteristic: Optional[int] = None) -> bool:
    """Borel-fixed over a field of the given (default: the ideal's) characteristic."""
    characteristic = ideal.characteristic if characteristic is None else characteristic
    if characteristic == 0:
        return is_strongly_stable(ideal)
    return is_p_borel(ideal, characteristic)


def classify(ideal: MonomialIdeal) -> ClassificationReport:
    witnesses: Dict[str, ExchangeFailure] = {}

    def _check(flag: str, failures: Iterator[ExchangeFailure]) -> bool:
        failure = _first(failures)
        if failure is not None:
            witnesses[flag] = failure
        return failure is None

    strongly_stable = _check("strongly_stable", _strongly_stable_failures(ideal))
    stable = _check("stable", _stable_failures(ideal))
    weakly_stable = _check("weakly_stable", _weakly_stable_failures(ideal))
    p = ideal.characteristic
    if p:
        p_borel: Optional[bool] = _check("p_borel", _p_borel_failures(ideal, p))
        borel_fixed = bool(p_borel)
    else:
        p_borel = None
        borel_fixed = strongly_stable
    if not borel_fixed:
        witnesses["borel_fixed"] = witnesses["p_borel" if p else "strongly_stable"]
    report = ClassificationReport(
        characteristic=p,
        borel_fixed=borel_fixed,
        strongly_stable=strongly_stable,
        stable=stable,
        weakly_stable=weakly_stable,
        p_borel=p_borel,
        witnesses=witnesses,
    )
    LOGGER.debug(f"Classified {ideal}: {report}")
    return report
