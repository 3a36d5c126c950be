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

"""Tests for matroid_parser module."""


import unittest

from conormal_chow.libs import eset
from conormal_chow.libs import matroid_parser
from conormal_chow.testing import temp_dir
from conormal_chow.testing import testdata_util


class ParseGraphTest(unittest.TestCase):

  def test_comments_and_blank_lines(self):
    m = matroid_parser.parse_graph_lines([
        '# A triangle.\n',
        '\n',
        'edge 0 0 1  # first\n',
        'edge 2 2 0\n',
        'edge 1 1 2\n'])
    self.assertEqual(m.n_plus_1, 3)
    self.assertEqual(m.rank_total, 2)
    self.assertTrue(m.is_graphic)

  def test_bad_keyword_reports_line(self):
    with self.assertRaisesRegex(matroid_parser.MatroidFileFormatError,
                                r'g.graph:2: Expected "edge'):
      matroid_parser.parse_graph_lines(['edge 0 0 1\n', 'vertex 1\n'],
                                       'g.graph')

  def test_non_integer(self):
    with self.assertRaisesRegex(matroid_parser.MatroidFileFormatError,
                                'Expected an integer'):
      matroid_parser.parse_graph_lines(['edge 0 a 1\n'])

  def test_duplicate_label_reports_line(self):
    with self.assertRaisesRegex(matroid_parser.MatroidFileFormatError,
                                ':3: Duplicate edge label 1'):
      matroid_parser.parse_graph_lines(
          ['edge 0 0 1\n', 'edge 1 1 2\n', 'edge 1 2 0\n'])

  def test_label_gap(self):
    self.assertRaises(matroid_parser.MatroidFileFormatError,
                      matroid_parser.parse_graph_lines,
                      ['edge 0 0 1\n', 'edge 2 1 2\n'])

  def test_format_error_is_value_error(self):
    self.assertRaises(ValueError, matroid_parser.parse_graph_lines, ['x\n'])


class ParseBasesTest(unittest.TestCase):

  def test_uniform_corpus_file(self):
    m = testdata_util.load_corpus_matroid(testdata_util.U24)
    self.assertEqual(m.n_plus_1, 4)
    self.assertEqual(m.rank_total, 2)
    self.assertFalse(m.is_graphic)

  def test_missing_elements_line(self):
    with self.assertRaisesRegex(matroid_parser.MatroidFileFormatError,
                                'precedes'):
      matroid_parser.parse_bases_lines(['basis 0 1\n'])
    with self.assertRaisesRegex(matroid_parser.MatroidFileFormatError,
                                'Missing'):
      matroid_parser.parse_bases_lines(['# nothing\n'])

  def test_element_out_of_range(self):
    with self.assertRaisesRegex(matroid_parser.MatroidFileFormatError,
                                ':2: Elements \\[3\\]'):
      matroid_parser.parse_bases_lines(['elements 3\n', 'basis 0 3\n'])

  def test_unequal_bases(self):
    with self.assertRaisesRegex(matroid_parser.MatroidFileFormatError,
                                'unequal'):
      matroid_parser.parse_bases_lines(
          ['elements 3\n', 'basis 0 1\n', 'basis 2\n'])


class LoadMatroidTest(unittest.TestCase):

  def test_backend_from_extension(self):
    with temp_dir.TempDir() as tempdir:
      path = tempdir.create_temp_file(
          suffix='.bases', lines=['elements 2\n', 'basis 0\n', 'basis 1\n'])
      m = matroid_parser.load_matroid(path)
      self.assertEqual(m.rank(eset.from_elements([0, 1])), 1)
      self.assertEqual(m.source, path)

  def test_explicit_backend(self):
    with temp_dir.TempDir() as tempdir:
      path = tempdir.create_temp_file(suffix='.txt',
                                      lines=['edge 0 0 1\n', 'edge 1 0 1\n'])
      self.assertRaises(ValueError, matroid_parser.load_matroid, path)
      m = matroid_parser.load_matroid(path, matroid_parser.BackendType.GRAPH)
      self.assertEqual(m.rank_total, 1)

  def test_corpus_files(self):
    for name, size in ((testdata_util.PYRAMID, 8), (testdata_util.CUBE, 12),
                       (testdata_util.TRIANGLE, 3)):
      m = matroid_parser.load_matroid(testdata_util.get_corpus_path(name))
      self.assertEqual(m.n_plus_1, size)
      m.validate_for_conormal()


if __name__ == '__main__':
  unittest.main()
