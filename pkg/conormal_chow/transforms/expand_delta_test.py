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

"""Tests for expand_delta module."""

import unittest

import apache_beam as beam
from apache_beam.testing.test_pipeline import TestPipeline
from apache_beam.testing.util import assert_that
from apache_beam.testing.util import equal_to

from conormal_chow.libs import chow_expansion
from conormal_chow.testing import asserts
from conormal_chow.testing import testdata_util
from conormal_chow.transforms import expand_delta

_EMPTY_TABLE = chow_expansion.ExpansionTable(chow_expansion.Monomial(), ())


def _pyramid():
  return testdata_util.load_corpus_matroid(testdata_util.PYRAMID)


class ExpandDeltaTest(unittest.TestCase):

  def test_pyramid_second_power(self):
    m = _pyramid()
    expected, _ = chow_expansion.canonical_delta_expansion(m, 2)
    pipeline = TestPipeline()
    tables = (pipeline
              | beam.Create([_EMPTY_TABLE])
              | 'ExpandDelta' >> expand_delta.ExpandDelta(m, 2))
    assert_that(tables, asserts.count_equals_to(352), label='Count')
    assert_that(tables, equal_to(expected), label='Tables')
    assert_that(tables, asserts.tables_are_canonical(m), label='Canonical')
    pipeline.run()

  def test_frontier_filter(self):
    m = _pyramid()
    frontier_filter = chow_expansion.theorem_path_filter(m, 1)
    expected, _ = chow_expansion.canonical_delta_expansion(
        m, 5, frontier_filter)
    pipeline = TestPipeline()
    tables = (pipeline
              | beam.Create([_EMPTY_TABLE])
              | 'ExpandDelta' >> expand_delta.ExpandDelta(
                  m, 5, frontier_filter))
    assert_that(tables, equal_to(expected))
    pipeline.run()

  def test_zeroth_power(self):
    pipeline = TestPipeline()
    tables = (pipeline
              | beam.Create([_EMPTY_TABLE])
              | 'ExpandDelta' >> expand_delta.ExpandDelta(_pyramid(), 0))
    assert_that(tables, equal_to([_EMPTY_TABLE]))
    pipeline.run()

  def test_top_power_of_triangle(self):
    m = testdata_util.load_corpus_matroid(testdata_util.TRIANGLE)
    expected, _ = chow_expansion.canonical_delta_expansion(m, 1)
    pipeline = TestPipeline()
    tables = (pipeline
              | beam.Create([_EMPTY_TABLE])
              | 'ExpandDelta' >> expand_delta.ExpandDelta(m, 1))
    assert_that(tables, equal_to(expected))
    pipeline.run()

  def test_power_out_of_range(self):
    self.assertRaises(ValueError, expand_delta.ExpandDelta, _pyramid(), 7)
    self.assertRaises(ValueError, expand_delta.ExpandDelta, _pyramid(), -1)


if __name__ == '__main__':
  unittest.main()
