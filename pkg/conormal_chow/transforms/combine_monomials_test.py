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

"""Tests for combine_monomials module."""

import unittest

import apache_beam as beam
from apache_beam.testing.test_pipeline import TestPipeline
from apache_beam.testing.util import assert_that
from apache_beam.testing.util import equal_to

from conormal_chow.libs import chow_expansion
from conormal_chow.libs import conormal
from conormal_chow.libs import eset
from conormal_chow.transforms import combine_monomials


def _monomial(*flats):
  return chow_expansion.Monomial(
      conormal.Biflat(eset.from_elements(flat), eset.full(3))
      for flat in flats)


class CombineMonomialsTest(unittest.TestCase):

  def test_sums_multiplicities(self):
    first = _monomial([0])
    second = _monomial([1])
    pipeline = TestPipeline()
    total = (pipeline
             | beam.Create([(first, 1), (second, 2), (first, 3)])
             | 'Combine' >> combine_monomials.CombineMonomials())
    assert_that(total, equal_to(
        [chow_expansion.MonomialSum([(first, 4), (second, 2)])]))
    pipeline.run()

  def test_empty_input(self):
    pipeline = TestPipeline()
    total = (pipeline
             | beam.Create([])
             | 'Combine' >> combine_monomials.CombineMonomials())
    assert_that(total, equal_to([chow_expansion.MonomialSum()]))
    pipeline.run()


if __name__ == '__main__':
  unittest.main()
