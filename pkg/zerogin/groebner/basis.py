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
"""Normal forms, Buchberger's algorithm and initial ideals."""
import heapq
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from zerogin.algebra.monomials import Monomial, MonomialOrder, coprime, divides, lcm, quotient
from zerogin.algebra.polynomials import Polynomial, PolynomialIdeal, PolynomialRing
from zerogin.exceptions import NonHomogeneousError, RingMismatchError, ZeroIdealError
from zerogin.monideal.hilbert import HilbertSeries, hilbert_series
from zerogin.monideal.ideal import MonomialIdeal, minimal_monomials

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: Tuple[Polynomial, ...]
    reduced: bool = True

    @property
    def ring(self) -> PolynomialRing:
        return self.elements[0].ring

    @property
    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(g.leading_monomial for g in self.elements)

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.elements, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero

    def __len__(self):
        return len(self.elements)


def _common_ring(polynomials: Sequence[Polynomial], order: MonomialOrder) -> PolynomialRing:
    rings = {(f.ring.field, f.ring.variables) for f in polynomials}
    if len(rings) != 1:
        raise RingMismatchError("Polynomials do not share one coefficient field and variable set")
    return polynomials[0].ring.with_order(order)


def normal_form(f: Polynomial, divisors: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> Polynomial:
    """Full reduction of ``f``: leading term first, always by the first divisor in listed order."""
    order = order or f.ring.order
    ring = f.ring.with_order(order)
    if divisors:
        _common_ring([f, *divisors], order)
    divisors = [g.reorder(order) for g in divisors if not g.is_zero]
    field = ring.field
    key = order.key
    leading = [(g.leading_monomial, field.inv(g.leading_coefficient), g) for g in divisors]
    remaining: Dict[Monomial, object] = f.to_dict()
    remainder: Dict[Monomial, object] = {}
    while remaining:
        m = max(remaining, key=key)
        c = remaining.pop(m)
        for lm, lc_inverse, g in leading:
            if divides(lm, m):
                factor = field.mul(c, lc_inverse)
                shift = quotient(m, lm)
                for term, coefficient in g.terms[1:]:
                    target = tuple(a + b for a, b in zip(term, shift))
                    value = field.mul(factor, coefficient)
                    if target in remaining:
                        updated = field.sub(remaining[target], value)
                        if field.is_zero(updated):
                            del remaining[target]
                        else:
                            remaining[target] = updated
                    else:
                        remaining[target] = field.neg(value)
                break
        else:
            remainder[m] = c
    return ring.from_dict(remainder)


def _pair_key(lcm_monomial: Monomial, order: MonomialOrder, i: int, j: int):
    return (sum(lcm_monomial), order.key(lcm_monomial), i, j)


def _monomial_basis(ring: PolynomialRing, polynomials: Sequence[Polynomial], order: MonomialOrder) -> GroebnerBasis:
    monomials = minimal_monomials(f.leading_monomial for f in polynomials)
    elements = sorted((ring.term(m) for m in monomials), key=lambda g: order.key(g.leading_monomial))
    return GroebnerBasis(order=order, elements=tuple(elements), reduced=True)


def _reduce_basis(basis: List[Polynomial], order: MonomialOrder) -> Tuple[Polynomial, ...]:
    key = order.key
    ordered = sorted(basis, key=lambda g: key(g.leading_monomial))
    minimal: List[Polynomial] = []
    for g in ordered:
        if not any(divides(h.leading_monomial, g.leading_monomial) for h in minimal):
            minimal.append(g)
    reduced = []
    for index, g in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1 :]
        head = g.terms[0]
        tail = g.ring.from_dict(dict(g.terms[1:]))
        reduced_tail = normal_form(tail, others, order)
        reduced.append((g.ring.term(*head) + reduced_tail).monic())
    return tuple(sorted(reduced, key=lambda g: key(g.leading_monomial)))


def buchberger(generators: Sequence[Polynomial], order: MonomialOrder) -> GroebnerBasis:
    """Reduced Groebner basis; normal pair selection with the coprime and chain criteria."""
    polynomials = [f for f in generators if not f.is_zero]
    if not polynomials:
        raise ZeroIdealError("buchberger needs at least one nonzero generator")
    ring = _common_ring(polynomials, order)
    polynomials = [ring.convert(f).monic() for f in polynomials]
    if all(f.is_monomial for f in polynomials):
        return _monomial_basis(ring, polynomials, order)

    basis: List[Polynomial] = []
    pending: Set[Tuple[int, int]] = set()
    queue: List[tuple] = []

    def _add(f: Polynomial):
        index = len(basis)
        basis.append(f)
        for i in range(index):
            pair_lcm = lcm(basis[i].leading_monomial, f.leading_monomial)
            pending.add((i, index))
            heapq.heappush(queue, (_pair_key(pair_lcm, order, i, index), (i, index)))

    for f in polynomials:
        reduced = normal_form(f, basis, order)
        if not reduced.is_zero:
            _add(reduced.monic())

    skipped = 0
    processed = 0
    while queue:
        _, (i, j) = heapq.heappop(queue)
        pending.discard((i, j))
        lm_i, lm_j = basis[i].leading_monomial, basis[j].leading_monomial
        if coprime(lm_i, lm_j):
            skipped += 1
            continue
        pair_lcm = lcm(lm_i, lm_j)
        if _chain_criterion(basis, pending, i, j, pair_lcm):
            skipped += 1
            continue
        processed += 1
        s_polynomial = basis[i].mul_term(quotient(pair_lcm, lm_i), ring.field.one) - basis[j].mul_term(
            quotient(pair_lcm, lm_j), ring.field.one
        )
        remainder = normal_form(s_polynomial, basis, order)
        if not remainder.is_zero:
            _add(remainder.monic())

    LOGGER.debug(f"Buchberger: {processed} S-pairs reduced, {skipped} skipped, {len(basis)} raw elements")
    return GroebnerBasis(order=order, elements=_reduce_basis(basis, order), reduced=True)


def _chain_criterion(basis, pending, i: int, j: int, pair_lcm: Monomial) -> bool:
    for k in range(len(basis)):
        if k in (i, j):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        if divides(basis[k].leading_monomial, pair_lcm):
            return True
    return False


def initial_ideal(generators: Sequence[Polynomial], order: MonomialOrder) -> MonomialIdeal:
    """in(I): generated by the leading monomials of the reduced Groebner basis."""
    basis = buchberger(generators, order)
    ring = basis.ring
    return MonomialIdeal(ring.nvars, ring.characteristic, basis.leading_monomials, ring.variables)


def ideal_initial_ideal(ideal: PolynomialIdeal, order: MonomialOrder) -> MonomialIdeal:
    if ideal.is_zero:
        return MonomialIdeal.zero(ideal.nvars, ideal.characteristic, ideal.ring.variables)
    return initial_ideal(ideal.generators, order)


def minimal_generator_degrees(generators: Sequence[Polynomial]) -> Dict[int, int]:
    """Number of minimal generators per degree of a homogeneous ideal."""
    polynomials = [f for f in generators if not f.is_zero]
    if any(not f.is_homogeneous for f in polynomials):
        raise NonHomogeneousError("minimal_generator_degrees needs homogeneous generators")
    if not polynomials:
        return {}
    order = MonomialOrder.DEGREVLEX
    ring = _common_ring(polynomials, order)
    polynomials = [ring.convert(f) for f in polynomials]
    counts: Dict[int, int] = {}
    lower: List[Polynomial] = []
    for d in sorted({f.degree for f in polynomials}):
        same_degree = [f for f in polynomials if f.degree == d]
        divisors = list(buchberger(lower, order).elements) if lower else []
        echelon: List[Polynomial] = []
        for f in same_degree:
            reduced = normal_form(normal_form(f, divisors, order), echelon, order)
            if not reduced.is_zero:
                echelon.append(reduced.monic())
        if echelon:
            counts[d] = len(echelon)
        lower.extend(same_degree)
    return counts


def hilbert_of(generators: Sequence[Polynomial], order: MonomialOrder = MonomialOrder.DEGREVLEX) -> HilbertSeries:
    """Hilbert series of A/I through the initial ideal."""
    return hilbert_series(initial_ideal(generators, order))
