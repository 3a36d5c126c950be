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

"""Basis activities and the complexes they count.

For a basis B of an ordered matroid, an element i outside B is externally
active if it is the minimum of its fundamental circuit C(B, i), and an element
i of B is internally active if it is the minimum of its fundamental cocircuit.
Summing x^|IA(B)| y^|EA(B)| over all bases gives the Tutte polynomial. Bases
with no externally active element are the NBC bases, the facets of the broken
circuit complex BC(M). BC(M) is a cone with apex 0 over the reduced complex
RBC(M), and the h-vectors of both read off the coefficients t_{k+1,0}.
"""


import collections
import functools
import math
from typing import Dict, Iterator, List, Optional, Tuple  # pylint: disable=unused-import

import sympy

from conormal_chow.libs import eset
from conormal_chow.libs import matroid  # pylint: disable=unused-import

__all__ = ['ActivityRecord', 'TuttePolynomial', 'FHVector', 'activities',
           'all_bases', 'nbc_bases', 'tutte', 'circuits', 'cocircuits',
           'broken_circuits', 'bc_faces', 'h_from_f', 'fh_vectors',
           'independence_fh_vectors', 'beta_invariant', 'greedy_completion',
           'completion_by_cocircuits', 'completion_by_closure_cocircuits',
           'set_activities']

# Subset scans beyond this many elements are refused.
_MAX_SCAN_SIZE = 16
_SCAN_CACHE_SIZE = 8

ActivityRecord = collections.namedtuple(
    'ActivityRecord', ['basis', 'internally_active', 'externally_active',
                       'internally_passive', 'externally_passive'])


class TuttePolynomial():
  """The Tutte polynomial as its map of coefficients (i, j) -> t_{i,j}."""

  def __init__(self, coefficients):
    # type: (Dict[Tuple[int, int], int]) -> None
    self._coefficients = {
        key: value for key, value in coefficients.items() if value}

  def __eq__(self, other):
    return (isinstance(other, TuttePolynomial) and
            self._coefficients == other._coefficients)

  def __repr__(self):
    return 'TuttePolynomial({})'.format(self.as_expr())

  @property
  def coefficients(self):
    # type: () -> Dict[Tuple[int, int], int]
    return dict(self._coefficients)

  def coefficient(self, i, j):
    # type: (int, int) -> int
    return self._coefficients.get((i, j), 0)

  @property
  def num_bases(self):
    # type: () -> int
    return sum(self._coefficients.values())

  def as_expr(self):
    # type: () -> sympy.Expr
    x, y = sympy.symbols('x y')
    return sympy.expand(sum(
        (value * x**i * y**j
         for (i, j), value in sorted(self._coefficients.items())),
        sympy.Integer(0)))


class FHVector():
  """The f-vector (f_0, ..., f_D) of a complex and its h-vector."""

  def __init__(self, f):
    # type: (List[int]) -> None
    self.f = tuple(f)
    self.h = tuple(h_from_f(f))

  def __eq__(self, other):
    return isinstance(other, FHVector) and self.f == other.f

  def __repr__(self):
    return 'FHVector(f={}, h={})'.format(self.f, self.h)


def activities(m, basis):
  # type: (matroid.Matroid, int) -> ActivityRecord
  if not m.is_basis(basis):
    raise ValueError('Not a basis: {}'.format(eset.elements(basis)))
  complement = m.ground & ~basis
  externally_active = eset.from_elements(
      i for i in eset.elements(complement)
      if eset.min_element(m.fundamental_circuit(basis, i)) == i)
  internally_active = eset.from_elements(
      i for i in eset.elements(basis)
      if eset.min_element(m.fundamental_cocircuit(basis, i)) == i)
  return ActivityRecord(
      basis=basis,
      internally_active=internally_active,
      externally_active=externally_active,
      internally_passive=basis & ~internally_active,
      externally_passive=complement & ~externally_active)


def all_bases(m):
  # type: (matroid.MatroidView) -> List[int]
  """Returns all bases, sorted lexicographically.

  Bases are grown element by element; a branch is abandoned as soon as the
  remaining elements can no longer complete it to full rank.
  """
  rank_total = m.rank_total
  bases = []

  def _extend(current, size, start):
    if size == rank_total:
      bases.append(current)
      return
    for e in range(start, m.n_plus_1):
      candidate = current | 1 << e
      if m.rank(candidate) != size + 1:
        continue
      later = m.ground & ~((1 << (e + 1)) - 1)
      if m.rank(candidate | later) < rank_total:
        continue
      _extend(candidate, size + 1, e + 1)

  _extend(eset.EMPTY, 0, 0)
  return sorted(bases, key=eset.lex_key)


def nbc_bases(m, internal_activity=None):
  # type: (matroid.Matroid, Optional[int]) -> List[ActivityRecord]
  """Returns the activity records of the NBC bases, i.e. those with EA = {}.

  Args:
    m: The matroid.
    internal_activity: If given, only bases with this many internally active
      elements are returned.
  """
  records = []
  for basis in all_bases(m):
    record = activities(m, basis)
    if record.externally_active:
      continue
    if (internal_activity is not None and
        eset.cardinality(record.internally_active) != internal_activity):
      continue
    records.append(record)
  return records


def tutte(m):
  # type: (matroid.Matroid) -> TuttePolynomial
  coefficients = collections.Counter()  # type: Dict[Tuple[int, int], int]
  for basis in all_bases(m):
    record = activities(m, basis)
    coefficients[(eset.cardinality(record.internally_active),
                  eset.cardinality(record.externally_active))] += 1
  return TuttePolynomial(coefficients)


def circuits(m):
  # type: (matroid.MatroidView) -> List[int]
  """Returns the minimal dependent sets, found by a scan of all subsets."""
  return list(_scan_circuits(m))


@functools.lru_cache(maxsize=_SCAN_CACHE_SIZE)
def _scan_circuits(m):
  # type: (matroid.MatroidView) -> Tuple[int, ...]
  if m.n_plus_1 > _MAX_SCAN_SIZE:
    raise ValueError('Circuit scans are limited to {} elements, got {}'.format(
        _MAX_SCAN_SIZE, m.n_plus_1))
  result = []
  for mask in range(1, 1 << m.n_plus_1):
    size = eset.cardinality(mask)
    if m.rank(mask) != size - 1:
      continue
    if all(m.rank(mask & ~(1 << e)) == size - 1 for e in eset.elements(mask)):
      result.append(mask)
  return tuple(sorted(result, key=eset.lex_key))


def cocircuits(m):
  # type: (matroid.Matroid) -> List[int]
  return circuits(m.dual())


def broken_circuits(m):
  # type: (matroid.Matroid) -> List[int]
  """Returns the inclusion-minimal broken circuits C - min C."""
  broken = {c & ~(1 << eset.min_element(c)) for c in circuits(m)}
  minimal = [b for b in broken
             if not any(other != b and eset.is_subset(other, b)
                        for other in broken)]
  return sorted(minimal, key=eset.lex_key)


def bc_faces(m):
  # type: (matroid.Matroid) -> Iterator[int]
  """Yields the faces of BC(M), the sets containing no broken circuit."""
  broken = broken_circuits(m)

  def _faces(face, start):
    yield face
    for e in range(start, m.n_plus_1):
      candidate = face | 1 << e
      if any(eset.is_subset(b, candidate) for b in broken):
        continue
      yield from _faces(candidate, e + 1)

  return _faces(eset.EMPTY, 0)


def h_from_f(f):
  # type: (List[int]) -> List[int]
  """Returns the h-vector of the f-vector (f_0, ..., f_D).

  Uses h_k = sum_i (-1)^(k-i) C(D-i, k-i) f_i, the coefficient form of
  sum_i f_i q^(D-i) = sum_i h_i (q+1)^(D-i).
  """
  top = len(f) - 1
  return [sum((-1)**(k - i) * math.comb(top - i, k - i) * f[i]
              for i in range(k + 1))
          for k in range(top + 1)]


def _face_counts(faces, length):
  counts = [0] * length
  for face in faces:
    counts[eset.cardinality(face)] += 1
  return counts


def fh_vectors(m):
  # type: (matroid.Matroid) -> Tuple[FHVector, FHVector]
  """Returns the f/h-vectors of BC(M) and of RBC(M)."""
  if m.loops:
    raise ValueError('Broken circuit complexes need a loopless matroid.')
  faces = list(bc_faces(m))
  rank_total = m.rank_total
  bc = FHVector(_face_counts(faces, rank_total + 1))
  rbc = FHVector(_face_counts(
      (face for face in faces if not face & 1), rank_total))
  return bc, rbc


def independence_fh_vectors(m):
  # type: (matroid.Matroid) -> FHVector
  """Returns the f/h-vectors of IN(M), the complex of independent sets."""
  counts = [0] * (m.rank_total + 1)

  def _extend(current, size, start):
    counts[size] += 1
    for e in range(start, m.n_plus_1):
      candidate = current | 1 << e
      if m.rank(candidate) == size + 1:
        _extend(candidate, size + 1, e + 1)

  _extend(eset.EMPTY, 0, 0)
  return FHVector(counts)


def beta_invariant(m):
  # type: (matroid.Matroid) -> int
  """Returns beta(M) = h_r(BC(M))."""
  bc, _ = fh_vectors(m)
  return bc.h[m.rank_total - 1]


def greedy_completion(m, independent):
  # type: (matroid.Matroid, int) -> int
  """Returns P(S), the lexicographically smallest set completing S to a basis."""
  if not m.is_independent(independent):
    raise ValueError('Not an independent set: {}'.format(
        eset.elements(independent)))
  current = independent
  size = eset.cardinality(independent)
  for e in range(m.n_plus_1):
    if size == m.rank_total:
      break
    candidate = current | 1 << e
    if candidate != current and m.rank(candidate) == size + 1:
      current = candidate
      size += 1
  return current & ~independent


def _completion_from_cocircuits(m, avoided):
  # type: (matroid.Matroid, int) -> int
  return eset.from_elements(
      eset.min_element(c) for c in cocircuits(m) if not c & avoided)


def completion_by_cocircuits(m, independent):
  # type: (matroid.Matroid, int) -> int
  """{e not in S : e = min C* for some cocircuit C* inside E - S}."""
  return _completion_from_cocircuits(m, independent)


def completion_by_closure_cocircuits(m, independent):
  # type: (matroid.Matroid, int) -> int
  """{e not in S : e = min C* for some cocircuit C* inside E - cl(S)}."""
  return _completion_from_cocircuits(m, m.closure(independent))


def set_activities(m, subset):
  # type: (matroid.Matroid, int) -> Tuple[int, int]
  """Returns (IA(S), EA(S)) for an arbitrary subset S."""
  internally_active = eset.from_elements(
      eset.min_element(c) for c in cocircuits(m)
      if eset.cardinality(c & subset) == 1 and
      eset.contains(subset, eset.min_element(c)))
  externally_active = eset.from_elements(
      eset.min_element(c) for c in circuits(m)
      if eset.cardinality(c & ~subset) == 1 and
      not eset.contains(subset, eset.min_element(c)))
  return internally_active, externally_active
