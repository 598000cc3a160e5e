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
from zerogin.algebra.changes import LinearChange, apply_change, random_change  # noqa: F401
from zerogin.algebra.fields import (  # noqa: F401
    ExtensionField,
    Field,
    FieldDescription,
    PolynomialExtensionField,
    PrimeField,
    RationalField,
    sampling_field,
)
from zerogin.algebra.monomials import Monomial, MonomialOrder, Ordering, monomial_compare  # noqa: F401
from zerogin.algebra.parser import parse_polynomial  # noqa: F401
from zerogin.algebra.polynomials import (  # noqa: F401
    Polynomial,
    PolynomialIdeal,
    PolynomialRing,
    format_polynomial,
    poly_arith,
)
