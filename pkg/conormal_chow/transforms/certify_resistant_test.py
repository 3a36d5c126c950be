# Copyright 2020 Google Inc.  All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Tests for certify_resistant module."""

import unittest

import apache_beam as beam
from apache_beam.testing.test_pipeline import TestPipeline
from apache_beam.testing.util import assert_that
from apache_beam.testing.util import equal_to

from conormal_chow.libs import chow_expansion
from conormal_chow.libs import conormal
from conormal_chow.libs import eset
from conormal_chow.testing import asserts
from conormal_chow.testing import testdata_util
from conormal_chow.transforms import certify_resistant
from conormal_chow.transforms import combine_monomials


class CertifyResistantTest(unittest.TestCase):

  def test_pyramid(self):
    m = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)
    tables, _ = chow_expansion.canonical_delta_expansion(m, 5)
    pipeline = TestPipeline()
    total = (pipeline
             | beam.Create(tables)
             | 'CertifyResistant' >> certify_resistant.CertifyResistant(m, 1)
             | 'Combine' >> combine_monomials.CombineMonomials())
    assert_that(total, equal_to([chow_expansion.extended_nbc_sum(m, 1)]),
                label='Monomials')
    assert_that(total, asserts.monomial_sum_counts(6, 6), label='Counts')
    pipeline.run()

  def test_cube_table(self):
    m = testdata_util.load_corpus_matroid(testdata_util.CUBE)
    basis = eset.from_elements([0, 1, 5, 6, 7, 8, 11])
    table = chow_expansion.ExpansionTable(*conormal.nbc_biflag(m, basis))
    pipeline = TestPipeline()
    products = (pipeline
                | beam.Create([table])
                | 'CertifyResistant' >> certify_resistant.CertifyResistant(
                    m, 2))
    assert_that(products,
                equal_to([(conormal.extended_nbc_biflag(m, basis), 1)]))
    pipeline.run()

  def test_k_out_of_range(self):
    m = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)
    self.assertRaises(ValueError, certify_resistant.CertifyResistant, m, 4)


if __name__ == '__main__':
  unittest.main()
