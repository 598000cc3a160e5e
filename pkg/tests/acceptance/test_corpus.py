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
"""Theorem checks over seeded corpora of monomial and homogeneous ideals in up to four variables."""
import pytest

from tests.utils.corpus import corpus, homogeneous_corpus
from zerogin.cohomology.profile import local_cohomology_profile, regularity_from_profile, serre_audit
from zerogin.criteria.audits import Target, crystallization_audit
from zerogin.criteria.report import Verdict
from zerogin.gin.core import gin0, input_hilbert_series
from zerogin.monideal.classify import is_strongly_stable

CORPUS = list(corpus(seed=0, size=200))
HOMOGENEOUS = list(homogeneous_corpus(seed=0, size=200))


def _check_gin0(ideal, seed):
    result = gin0(ideal, seed=seed)
    assert is_strongly_stable(result.ideal)
    assert input_hilbert_series(result.ideal) == input_hilbert_series(ideal)
    assert all(certificate.certified for certificate in result.certificates)

    profile = local_cohomology_profile(result.ideal)
    reg = regularity_from_profile(profile).reg_quotient
    assert serre_audit(result.ideal, (-ideal.nvars - 5, reg + 2)) == 0

    report = crystallization_audit(ideal, seed=seed)
    assert report.verdict == Verdict.PASS


@pytest.mark.parametrize("index", range(len(CORPUS)))
def test_gin0_of_corpus_member(index):
    _check_gin0(CORPUS[index], index)


@pytest.mark.parametrize("index", range(len(HOMOGENEOUS)))
def test_gin0_of_homogeneous_corpus_member(index):
    _check_gin0(HOMOGENEOUS[index], index)


def test_homogeneous_corpus_covers_every_characteristic():
    assert {ideal.characteristic for ideal in HOMOGENEOUS} == {0, 2, 3, 5}
    assert any(not ideal.is_monomial for ideal in HOMOGENEOUS)


def test_gin_crystallization_fails_on_some_frobenius_power():
    positive = [(index, ideal) for index, ideal in enumerate(CORPUS) if ideal.characteristic and index % 4 == 3]
    verdicts = [crystallization_audit(ideal, seed=index, target=Target.GIN).verdict for index, ideal in positive]
    assert Verdict.FAIL in verdicts
