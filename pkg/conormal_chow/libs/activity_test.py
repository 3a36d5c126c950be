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

"""Tests for activity module."""


import unittest

import sympy

from conormal_chow.libs import activity
from conormal_chow.libs import eset
from conormal_chow.libs import matroid
from conormal_chow.testing import testdata_util

_S = eset.from_elements


def _independent_sets(m):
  return [mask for mask in range(1 << m.n_plus_1) if m.is_independent(mask)]


class ActivitiesTest(unittest.TestCase):

  def setUp(self):
    self._pyramid = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)
    self._cube = testdata_util.load_corpus_matroid(testdata_util.CUBE)

  def test_pyramid_nbc_basis(self):
    record = activity.activities(self._pyramid, _S([0, 4, 5, 6]))
    self.assertEqual(record.internally_active, _S([0]))
    self.assertEqual(record.externally_active, eset.EMPTY)
    self.assertEqual(record.internally_passive, _S([4, 5, 6]))
    self.assertEqual(record.externally_passive, _S([1, 2, 3, 7]))

  def test_cube_nbc_basis(self):
    record = activity.activities(self._cube, _S([0, 1, 5, 6, 7, 8, 11]))
    self.assertEqual(record.internally_active, _S([0, 1, 6]))
    self.assertEqual(record.externally_active, eset.EMPTY)

  def test_star_basis(self):
    record = activity.activities(self._pyramid, _S([0, 1, 2, 3]))
    self.assertEqual(record.internally_active, _S([0, 1, 2, 3]))
    self.assertEqual(record.externally_active, eset.EMPTY)

  def test_not_a_basis(self):
    self.assertRaises(ValueError, activity.activities, self._pyramid,
                      _S([0, 1, 5]))

  def test_activity_duality(self):
    for m in (self._pyramid, self._cube):
      dual = m.dual()
      for basis in activity.all_bases(m):
        record = activity.activities(m, basis)
        cobasis = m.ground & ~basis
        dual_external = _S(
            i for i in eset.elements(basis)
            if eset.min_element(dual.fundamental_circuit(cobasis, i)) == i)
        self.assertEqual(record.internally_active, dual_external)


class CircuitsTest(unittest.TestCase):

  def test_cycle_has_one_circuit(self):
    m = matroid.from_graph([(e, e, (e + 1) % 5) for e in range(5)])
    self.assertEqual(activity.circuits(m), [m.ground])

  def test_scan_cache_is_bounded(self):
    # pylint: disable=protected-access
    for size in range(3, activity._SCAN_CACHE_SIZE + 5):
      m = matroid.from_graph([(e, e, (e + 1) % size) for e in range(size)])
      self.assertEqual(len(activity.circuits(m)), 1)
    self.assertLessEqual(activity._scan_circuits.cache_info().currsize,
                         activity._SCAN_CACHE_SIZE)


class BasesTest(unittest.TestCase):

  def setUp(self):
    self._pyramid = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)
    self._cube = testdata_util.load_corpus_matroid(testdata_util.CUBE)

  def test_all_bases_sorted(self):
    bases = activity.all_bases(self._pyramid)
    self.assertEqual(len(bases), 45)
    self.assertEqual(bases, sorted(bases, key=eset.lex_key))
    self.assertEqual(bases[0], _S([0, 1, 2, 3]))
    self.assertTrue(all(self._pyramid.is_basis(b) for b in bases))

  def test_nbc_bases_of_activity_one(self):
    records = activity.nbc_bases(self._pyramid, internal_activity=1)
    self.assertEqual([r.basis for r in records],
                     [_S([0, 4, 5, 6]), _S([0, 4, 5, 7]), _S([0, 4, 6, 7])])

  def test_nbc_counts(self):
    self.assertEqual(len(activity.nbc_bases(self._pyramid)), 14)
    self.assertEqual(len(activity.nbc_bases(self._cube)), 133)

  def test_nbc_bases_contain_zero(self):
    for record in activity.nbc_bases(self._pyramid):
      self.assertTrue(eset.contains(record.basis, 0))
      self.assertTrue(eset.contains(record.internally_active, 0))


class TutteTest(unittest.TestCase):

  def test_pyramid(self):
    pyramid = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)
    polynomial = activity.tutte(pyramid)
    self.assertEqual([polynomial.coefficient(i, 0) for i in range(1, 5)],
                     [3, 6, 4, 1])
    self.assertEqual(polynomial.num_bases, 45)
    for (i, j) in polynomial.coefficients:
      self.assertEqual(polynomial.coefficient(i, j),
                       polynomial.coefficient(j, i))

  def test_cube(self):
    cube = testdata_util.load_corpus_matroid(testdata_util.CUBE)
    polynomial = activity.tutte(cube)
    self.assertEqual([polynomial.coefficient(i, 0) for i in range(1, 8)],
                     [11, 32, 40, 29, 15, 5, 1])
    self.assertEqual(polynomial.num_bases, len(activity.all_bases(cube)))

  def test_triangle_expression(self):
    triangle = testdata_util.load_corpus_matroid(testdata_util.TRIANGLE)
    x, y = sympy.symbols('x y')
    self.assertEqual(activity.tutte(triangle).as_expr(), x**2 + x + y)

  def test_uniform(self):
    u24 = testdata_util.load_corpus_matroid(testdata_util.U24)
    x, y = sympy.symbols('x y')
    self.assertEqual(activity.tutte(u24).as_expr(), x**2 + 2*x + 2*y + y**2)


class BrokenCircuitComplexTest(unittest.TestCase):

  def test_triangle(self):
    triangle = testdata_util.load_corpus_matroid(testdata_util.TRIANGLE)
    self.assertEqual(activity.broken_circuits(triangle), [_S([1, 2])])
    self.assertEqual(
        sorted(activity.bc_faces(triangle)),
        sorted([eset.EMPTY, _S([0]), _S([1]), _S([2]), _S([0, 1]),
                _S([0, 2])]))

  def test_pyramid_facets_contain_apex(self):
    pyramid = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)
    facets = [face for face in activity.bc_faces(pyramid)
              if eset.cardinality(face) == pyramid.rank_total]
    self.assertEqual(len(facets), 14)
    self.assertTrue(all(eset.contains(face, 0) for face in facets))
    self.assertEqual(
        sorted(facets),
        sorted(r.basis for r in activity.nbc_bases(pyramid)))

  def test_faces_are_independent(self):
    cube = testdata_util.load_corpus_matroid(testdata_util.CUBE)
    self.assertTrue(all(cube.is_independent(face)
                        for face in activity.bc_faces(cube)))

  def test_faces_restart(self):
    triangle = testdata_util.load_corpus_matroid(testdata_util.TRIANGLE)
    self.assertEqual(list(activity.bc_faces(triangle)),
                     list(activity.bc_faces(triangle)))


class FHVectorTest(unittest.TestCase):

  def test_h_from_f(self):
    self.assertEqual(activity.h_from_f([1, 7, 17, 14]), [1, 4, 6, 3])
    self.assertEqual(activity.h_from_f([1]), [1])

  def test_pyramid(self):
    pyramid = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)
    bc, rbc = activity.fh_vectors(pyramid)
    self.assertEqual(rbc.f, (1, 7, 17, 14))
    self.assertEqual(rbc.h, (1, 4, 6, 3))
    self.assertEqual(bc.h, (1, 4, 6, 3, 0))
    self.assertEqual(activity.beta_invariant(pyramid), 3)

  def test_cube(self):
    cube = testdata_util.load_corpus_matroid(testdata_util.CUBE)
    bc, rbc = activity.fh_vectors(cube)
    self.assertEqual(rbc.f, (1, 11, 55, 159, 282, 290, 133))
    self.assertEqual(rbc.h, (1, 5, 15, 29, 40, 32, 11))
    self.assertEqual(bc.h[:-1], rbc.h)
    self.assertEqual(bc.h[-1], 0)
    self.assertEqual(activity.beta_invariant(cube), 11)

  def test_h_matches_tutte_on_corpus(self):
    for name in (testdata_util.PYRAMID, testdata_util.CUBE,
                 testdata_util.TRIANGLE, testdata_util.U24):
      m = testdata_util.load_corpus_matroid(name)
      polynomial = activity.tutte(m)
      bc, rbc = activity.fh_vectors(m)
      r = m.rank_total - 1
      for k in range(r + 1):
        self.assertEqual(bc.h[r - k], polynomial.coefficient(k + 1, 0))
        self.assertEqual(rbc.h[r - k], polynomial.coefficient(k + 1, 0))

  def test_independence_complex(self):
    pyramid = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)
    independence = activity.independence_fh_vectors(pyramid)
    self.assertEqual(independence.f, (1, 8, 28, 52, 45))
    self.assertEqual(sum(independence.h), 45)


class CompletionTest(unittest.TestCase):

  def setUp(self):
    self._pyramid = testdata_util.load_corpus_matroid(testdata_util.PYRAMID)
    self._cube = testdata_util.load_corpus_matroid(testdata_util.CUBE)

  def test_greedy_completion(self):
    self.assertEqual(activity.greedy_completion(self._pyramid, _S([1, 5])),
                     _S([2, 3]))
    self.assertEqual(
        activity.greedy_completion(self._cube, _S([5, 7, 8, 11])),
        _S([0, 1, 6]))
    self.assertEqual(
        activity.greedy_completion(self._pyramid, _S([0, 4, 5, 6])),
        eset.EMPTY)
    self.assertRaises(ValueError, activity.greedy_completion, self._pyramid,
                      _S([0, 1, 5]))

  def test_set_activities(self):
    self.assertEqual(activity.set_activities(self._pyramid, _S([1, 5])),
                     (eset.EMPTY, _S([0])))
    self.assertEqual(activity.set_activities(self._pyramid, eset.EMPTY),
                     (eset.EMPTY, eset.EMPTY))
    self.assertEqual(activity.set_activities(self._cube, _S([5, 7, 8, 11])),
                     (eset.EMPTY, eset.EMPTY))

  def _check_completion_characterizations(self, m):
    bases = activity.all_bases(m)
    for independent in _independent_sets(m):
      completion = activity.greedy_completion(m, independent)
      self.assertEqual(
          activity.completion_by_cocircuits(m, independent), completion)
      self.assertEqual(
          activity.completion_by_closure_cocircuits(m, independent),
          completion)
      basis = independent | completion
      self.assertEqual(
          basis, min((b for b in bases if eset.is_subset(independent, b)),
                     key=eset.lex_key))
      record = activity.activities(m, basis)
      internal, external = activity.set_activities(m, independent)
      self.assertEqual(record.internally_active, internal | completion)
      self.assertEqual(record.externally_active, external)

  def test_completion_characterizations_pyramid(self):
    self._check_completion_characterizations(self._pyramid)

  def test_completion_characterizations_cube(self):
    self._check_completion_characterizations(self._cube)

  def test_completion_characterizations_small(self):
    for name in (testdata_util.TRIANGLE, testdata_util.U24):
      self._check_completion_characterizations(
          testdata_util.load_corpus_matroid(name))


if __name__ == '__main__':
  unittest.main()
