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

"""Tests for conormal module."""


import itertools
import pickle
import unittest

from conormal_chow.libs import activity
from conormal_chow.libs import conormal
from conormal_chow.libs import eset
from conormal_chow.testing import testdata_util

_Biflat = conormal.Biflat


def _biflat(m, flat, coflat):
  return _Biflat(eset.from_labels(flat, m.n_plus_1),
                 eset.from_labels(coflat, m.n_plus_1))


def _all_biflats(m):
  dual = m.dual()
  return [_Biflat(f, g) for f in m.all_flats() for g in dual.all_flats()
          if conormal.is_biflat(m, f, g)]


def _pyramid_biflags(m):
  """Three nested biflags of the pyramid, the last one maximal."""
  single = conormal.Biflag([_biflat(m, '01256', '1347')])
  middle = conormal.Biflag([
      _biflat(m, '5', 'E'), _biflat(m, '56', 'E'),
      _biflat(m, '01256', '1347'), _biflat(m, 'E', '3')])
  maximal = conormal.Biflag([
      _biflat(m, 'E', '3'), _biflat(m, '01256', '347'),
      _biflat(m, '5', 'E'), _biflat(m, 'E', '347'),
      _biflat(m, '01256', '1347'), _biflat(m, '56', 'E')])
  return single, middle, maximal


class BiflagTest(unittest.TestCase):

  def setUp(self):
    self._pyramid = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)

  def test_biflat(self):
    m = self._pyramid
    self.assertTrue(conormal.is_biflat(m, *_biflat(m, '01256', '1347')))
    self.assertFalse(conormal.is_biflat(m, m.ground, m.ground))
    self.assertFalse(conormal.is_biflat(m, eset.EMPTY, m.ground))
    self.assertFalse(conormal.is_biflat(m, *_biflat(m, '5', '1347')))
    self.assertFalse(conormal.is_biflat(m, *_biflat(m, '03', 'E')))

  def test_nested_biflags(self):
    m = self._pyramid
    single, middle, maximal = _pyramid_biflags(m)
    for biflag in (single, middle, maximal):
      self.assertTrue(conormal.is_biflag(m, biflag))
    self.assertTrue(set(single).issubset(set(middle)))
    self.assertTrue(set(middle).issubset(set(maximal)))
    self.assertEqual(len(maximal), m.n_plus_1 - 2)

  def test_canonical_order_is_chain(self):
    m = self._pyramid
    _, _, maximal = _pyramid_biflags(m)
    self.assertEqual(
        [(eset.render(b.flat, 8), eset.render(b.coflat, 8)) for b in maximal],
        [('5', 'E'), ('56', 'E'), ('01256', '1347'), ('01256', '347'),
         ('E', '347'), ('E', '3')])

  def test_repeats_rejected(self):
    m = self._pyramid
    biflat = _biflat(m, '01256', '1347')
    self.assertFalse(conormal.is_biflag(m, [biflat, biflat]))

  def test_incompatible_rejected(self):
    m = self._pyramid
    self.assertFalse(conormal.is_biflag(
        m, [_biflat(m, '5', 'E'), _biflat(m, '6', 'E')]))

  def test_covering_rejected(self):
    m = self._pyramid
    self.assertFalse(conormal.is_biflag(
        m, [_biflat(m, '01256', 'E'), _biflat(m, 'E', '347')]))

  def test_inserted(self):
    m = self._pyramid
    single, middle, _ = _pyramid_biflags(m)
    grown = single.inserted(0, _biflat(m, '5', 'E'))
    grown = grown.inserted(1, _biflat(m, '56', 'E'))
    grown = grown.inserted(3, _biflat(m, 'E', '3'))
    self.assertEqual(grown, middle)
    self.assertEqual(hash(grown), hash(middle))

  def test_covered(self):
    m = self._pyramid
    _, middle, _ = _pyramid_biflags(m)
    self.assertEqual(middle.covered, eset.from_elements([1, 3, 5, 6]))

  def test_json_and_pickle(self):
    m = self._pyramid
    _, middle, _ = _pyramid_biflags(m)
    self.assertEqual(conormal.Biflag.from_json(middle.to_json()), middle)
    self.assertEqual(pickle.loads(pickle.dumps(middle)), middle)
    empty = conormal.Biflag()
    self.assertEqual(pickle.loads(pickle.dumps(empty)), empty)


class GapJumpTest(unittest.TestCase):

  def setUp(self):
    self._pyramid = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)

  def test_middle_biflag(self):
    m = self._pyramid
    _, middle, _ = _pyramid_biflags(m)
    data = conormal.gap_jump(m, middle)
    self.assertEqual(data.flat_jumps, (0, 1, 2, 3))
    self.assertEqual(data.coflat_jumps, (2, 3, 4))
    self.assertEqual(data.double_jumps, (2, 3))
    self.assertEqual(
        data.gaps,
        (eset.EMPTY, eset.EMPTY, eset.from_elements([0, 2]),
         eset.from_elements([4, 7]), eset.EMPTY))
    self.assertEqual(conormal.check_nongaps(m, middle), data)

  def test_single_biflat(self):
    m = self._pyramid
    single, _, _ = _pyramid_biflags(m)
    data = conormal.check_nongaps(m, single)
    self.assertEqual(data.gaps, (eset.from_elements([0, 2, 5, 6]),
                                 eset.from_elements([3, 4, 7])))
    self.assertEqual(data.double_jumps, (0, 1))

  def test_maximal_has_one_gap(self):
    m = self._pyramid
    _, _, maximal = _pyramid_biflags(m)
    data = conormal.check_nongaps(m, maximal)
    self.assertEqual(data.double_jumps, (2,))
    self.assertEqual([j for j, gap in enumerate(data.gaps) if gap], [2])
    self.assertEqual(data.gaps[2], eset.from_elements([0, 2]))

  def test_empty_biflag(self):
    m = self._pyramid
    data = conormal.check_nongaps(m, conormal.Biflag())
    self.assertEqual(data.gaps, (m.ground,))
    self.assertEqual(data.double_jumps, (0,))

  def test_not_a_biflag(self):
    m = self._pyramid
    self.assertRaises(
        ValueError, conormal.gap_jump, m,
        conormal.Biflag([_biflat(m, '5', 'E'), _biflat(m, '6', 'E')]))

  def test_nongaps_on_nbc_biflags(self):
    cube = testdata_util.load_corpus_matroid(testdata_util.CUBE)
    for record in activity.nbc_bases(cube):
      biflag, _ = conormal.nbc_biflag(cube, record.basis)
      data = conormal.check_nongaps(cube, biflag)
      self.assertEqual(len(data.double_jumps), 1)


class MaximalityTest(unittest.TestCase):

  def _check_maximal_lengths(self, m):
    biflats = _all_biflats(m)
    biflags = [subset
               for size in range(len(biflats) + 1)
               for subset in itertools.combinations(biflats, size)
               if conormal.is_biflag(m, subset)]
    for biflag in biflags:
      extendable = any(conormal.is_biflag(m, biflag + (b,))
                       for b in biflats if b not in biflag)
      if not extendable:
        self.assertEqual(len(biflag), m.n_plus_1 - 2)

  def test_all_maximal_biflags_small(self):
    for name in (testdata_util.TRIANGLE, testdata_util.U24):
      self._check_maximal_lengths(testdata_util.load_corpus_matroid(name))

  def test_extend_from_empty(self):
    for name in (testdata_util.PYRAMID, testdata_util.TRIANGLE,
                 testdata_util.U24):
      m = testdata_util.load_corpus_matroid(name)
      maximal = conormal.extend_to_maximal(m, conormal.Biflag())
      self.assertTrue(conormal.is_biflag(m, maximal))
      self.assertEqual(len(maximal), m.n_plus_1 - 2)

  def test_extend_keeps_biflats(self):
    m = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)
    single, middle, maximal = _pyramid_biflags(m)
    for biflag in (single, middle):
      extended = conormal.extend_to_maximal(m, biflag)
      self.assertTrue(conormal.is_biflag(m, extended))
      self.assertEqual(len(extended), 6)
      self.assertTrue(set(biflag).issubset(set(extended)))
    self.assertEqual(conormal.extend_to_maximal(m, maximal), maximal)

  def test_extend_rejects_non_biflag(self):
    m = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)
    self.assertRaises(
        ValueError, conormal.extend_to_maximal, m,
        conormal.Biflag([_biflat(m, '5', 'E'), _biflat(m, '6', 'E')]))

  def test_no_flat_and_coflat_union_of_size_n(self):
    for name in (testdata_util.PYRAMID, testdata_util.CUBE,
                 testdata_util.TRIANGLE, testdata_util.U24):
      m = testdata_util.load_corpus_matroid(name)
      flats = [f for f in m.all_flats() if f]
      coflats = [g for g in m.dual().all_flats() if g]
      for f in flats:
        for g in coflats:
          self.assertNotEqual(eset.cardinality(f | g), m.n_plus_1 - 1)

  def test_completion_keeps_union_proper(self):
    for name in (testdata_util.PYRAMID, testdata_util.CUBE):
      m = testdata_util.load_corpus_matroid(name)
      dual = m.dual()
      hyperplanes = [g for g in dual.all_flats()
                     if dual.rank(g) == dual.rank_total - 1]
      for independent in range(1 << m.n_plus_1):
        if not m.is_independent(independent):
          continue
        flat = m.closure(independent)
        completion = activity.greedy_completion(m, independent)
        for g in hyperplanes:
          if flat | g != m.ground:
            self.assertNotEqual(flat | g | completion, m.ground)


class NbcBiflagTest(unittest.TestCase):

  def setUp(self):
    self._pyramid = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)
    self._cube = testdata_util.load_corpus_matroid(testdata_util.CUBE)
    self._cube_basis = eset.from_elements([0, 1, 5, 6, 7, 8, 11])

  def test_cube_example(self):
    m = self._cube
    biflag, arrivals = conormal.nbc_biflag(m, self._cube_basis)
    self.assertEqual(arrivals, (11, 8, 7, 5, 3, 4, 9, 10))
    self.assertEqual([eset.render(f, 12) for f in biflag.flats()],
                     ['b', '8b', '78b', '578b', 'E', 'E', 'E', 'E'])
    self.assertEqual([eset.render(g, 12) for g in biflag.coflats()],
                     ['E', 'E', 'E', 'E', '03469a', '469a', '69a', 'a'])
    self.assertTrue(conormal.is_biflag(m, biflag))

  def test_pyramid_activity_one(self):
    m = self._pyramid
    biflag, arrivals = conormal.nbc_biflag(m, eset.from_elements([0, 4, 5, 6]))
    self.assertEqual(arrivals, (6, 5, 4, 2, 3, 7))
    self.assertEqual([eset.render(f, 8) for f in biflag.flats()],
                     ['6', '56', '4567', 'E', 'E', 'E'])
    self.assertEqual([eset.render(g, 8) for g in biflag.coflats()],
                     ['E', 'E', 'E', '23467', '347', '7'])
    self.assertTrue(conormal.is_biflag(m, biflag))

  def test_nbc_biflag_length(self):
    for record in activity.nbc_bases(self._cube):
      biflag, arrivals = conormal.nbc_biflag(self._cube, record.basis)
      k = eset.cardinality(record.internally_active) - 1
      self.assertEqual(len(biflag), self._cube.n_plus_1 - 2 - k)
      self.assertEqual(len(arrivals), len(biflag))

  def test_not_nbc(self):
    self.assertRaisesRegex(ValueError, 'not an NBC basis',
                           conormal.nbc_biflag, self._pyramid,
                           eset.from_elements([1, 2, 3, 5]))
    self.assertRaises(ValueError, conormal.nbc_biflag, self._pyramid,
                      eset.from_elements([0, 1, 5]))

  def test_extension_index(self):
    self.assertEqual(conormal.extension_index(self._cube, self._cube_basis), 2)

  def test_extended_cube_example(self):
    m = self._cube
    extended = conormal.extended_nbc_biflag(m, self._cube_basis)
    biflag, _ = conormal.nbc_biflag(m, self._cube_basis)
    self.assertEqual(len(extended), 10)
    self.assertEqual(set(extended) - set(biflag),
                     {_biflat(m, '5678b', 'E'),
                      _biflat(m, '1256789ab', '03469a')})
    self.assertTrue(conormal.is_biflag(m, extended))

  def test_extended_activity_one_is_nbc_biflag(self):
    m = self._pyramid
    for record in activity.nbc_bases(m, internal_activity=1):
      biflag, _ = conormal.nbc_biflag(m, record.basis)
      self.assertEqual(conormal.extended_nbc_biflag(m, record.basis), biflag)

  def test_extended_star(self):
    m = self._pyramid
    extended = conormal.extended_nbc_biflag(
        m, eset.from_elements([0, 1, 2, 3]))
    self.assertEqual(len(extended), 6)
    self.assertEqual(sorted({m.rank(f) for f in extended.flats()}),
                     [1, 2, 3, 4])

  def test_extended_is_maximal_for_all_nbc_bases(self):
    for name in (testdata_util.PYRAMID, testdata_util.CUBE,
                 testdata_util.TRIANGLE, testdata_util.U24):
      m = testdata_util.load_corpus_matroid(name)
      for record in activity.nbc_bases(m):
        biflag, _ = conormal.nbc_biflag(m, record.basis)
        extended = conormal.extended_nbc_biflag(m, record.basis)
        self.assertTrue(conormal.is_biflag(m, extended))
        self.assertEqual(len(extended), m.n_plus_1 - 2)
        self.assertTrue(set(biflag).issubset(set(extended)))

  def test_extended_cannot_grow(self):
    m = self._pyramid
    biflats = _all_biflats(m)
    for record in activity.nbc_bases(m):
      extended = conormal.extended_nbc_biflag(m, record.basis)
      for b in biflats:
        if b not in extended:
          self.assertFalse(conormal.is_biflag(m, extended.chain + (b,)))


class RenderTableTest(unittest.TestCase):

  def test_middle_biflag(self):
    m = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)
    _, middle, _ = _pyramid_biflags(m)
    rows = conormal.render_table(m, middle).split('\n')
    self.assertEqual(len(rows), 3)
    self.assertEqual(rows[0].split(), ['F', '∅', '5', '56', '01256', 'E', 'E'])
    self.assertEqual(rows[1].split(), ['G', 'E', 'E', 'E', '1347', '3', '∅'])
    self.assertEqual(rows[2].split(), ['d', '*', '*'])

  def test_with_arrivals(self):
    m = testdata_util.load_corpus_matroid(testdata_util.CUBE)
    biflag, arrivals = conormal.nbc_biflag(
        m, eset.from_elements([0, 1, 5, 6, 7, 8, 11]))
    rows = conormal.render_table(m, biflag, arrivals).split('\n')
    self.assertEqual(len(rows), 4)
    self.assertEqual(rows[2].split(),
                     ['e', 'b', '8', '7', '5', '3', '4', '9', 'a'])
    self.assertEqual(rows[3].split(), ['d', '*'])


if __name__ == '__main__':
  unittest.main()
