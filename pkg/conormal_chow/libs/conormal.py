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

"""Biflats, biflags and the NBC biflag constructions.

A biflat F|G of a matroid M on E is a nonempty flat F of M together with a
nonempty flat G of the dual (a coflat), not both equal to E, with F + G = E.
Two biflats are compatible if F <= F' and G >= G' (or the other way round). A
biflag is a set of pairwise compatible biflats whose intersections F & G do not
jointly cover E. A biflag is written as a chain F_1 <= ... <= F_k,
G_1 >= ... >= G_k with the sentinels F_0 = {}, G_0 = E, F_{k+1} = E,
G_{k+1} = {}. Maximal biflags have length n - 1 for a matroid on n + 1
elements.
"""


import collections
from typing import Dict, Iterable, List, Optional, Sequence, Tuple  # pylint: disable=unused-import

from conormal_chow.libs import activity
from conormal_chow.libs import eset
from conormal_chow.libs import matroid  # pylint: disable=unused-import

__all__ = ['Biflat', 'Biflag', 'GapJumpData', 'ExpansionInvariantError',
           'is_biflat', 'compatible', 'is_biflag', 'gap_jump',
           'check_nongaps', 'extend_to_maximal', 'nbc_biflag',
           'extension_index', 'extended_nbc_biflag', 'render_table']

Biflat = collections.namedtuple('Biflat', ['flat', 'coflat'])

GapJumpData = collections.namedtuple(
    'GapJumpData', ['gaps', 'flat_jumps', 'coflat_jumps', 'double_jumps'])

_COLUMN_SEPARATOR = '  '
_DOUBLE_JUMP_MARKER = '*'


class ExpansionInvariantError(AssertionError):
  """Raised when a construction violates one of its proven invariants."""


def _biflat_key(biflat):
  # type: (Biflat) -> Tuple
  return (eset.cardinality(biflat.flat), -eset.cardinality(biflat.coflat),
          eset.lex_key(biflat.flat), eset.lex_key(biflat.coflat))


class Biflag():
  """A square-free product of biflats, kept in canonical chain order.

  The order is |F| ascending, then |G| descending, then lexicographic, which
  lists any biflag as its chain. Construction does not validate; use
  `is_biflag` for that.
  """

  __slots__ = ('_chain', '_covered', '_hash')

  def __init__(self, biflats=(), presorted=False):
    # type: (Iterable[Biflat], bool) -> None
    chain = tuple(Biflat(*b) for b in biflats)
    if not presorted:
      chain = tuple(sorted(chain, key=_biflat_key))
    self._chain = chain
    covered = eset.EMPTY
    for biflat in chain:
      covered |= biflat.flat & biflat.coflat
    self._covered = covered
    self._hash = hash(chain)

  def __eq__(self, other):
    return isinstance(other, Biflag) and self._chain == other._chain

  def __ne__(self, other):
    return not self == other

  def __hash__(self):
    return self._hash

  def __len__(self):
    return len(self._chain)

  def __iter__(self):
    return iter(self._chain)

  def __getitem__(self, index):
    return self._chain[index]

  def __repr__(self):
    return 'Biflag({})'.format(', '.join(
        '{}|{}'.format(eset.render(b.flat), eset.render(b.coflat))
        for b in self._chain))

  def __getstate__(self):
    return (self._chain,)

  def __setstate__(self, state):
    self.__init__(state[0], presorted=True)

  @property
  def chain(self):
    # type: () -> Tuple[Biflat, ...]
    return self._chain

  @property
  def covered(self):
    # type: () -> int
    """The union of the intersections F_j & G_j."""
    return self._covered

  @property
  def sort_key(self):
    # type: () -> Tuple
    return tuple(_biflat_key(b) for b in self._chain)

  def inserted(self, position, biflat):
    # type: (int, Biflat) -> Biflag
    """Returns the product with `biflat`, which must belong at `position`."""
    chain = self._chain[:position] + (biflat,) + self._chain[position:]
    return Biflag(chain, presorted=True)

  def flats(self):
    # type: () -> List[int]
    return [b.flat for b in self._chain]

  def coflats(self):
    # type: () -> List[int]
    return [b.coflat for b in self._chain]

  def to_json(self):
    # type: () -> List[Dict[str, List[int]]]
    return [{'F': eset.elements(b.flat), 'G': eset.elements(b.coflat)}
            for b in self._chain]

  @classmethod
  def from_json(cls, data):
    # type: (List[Dict[str, List[int]]]) -> Biflag
    return cls(Biflat(eset.from_elements(b['F']), eset.from_elements(b['G']))
               for b in data)


def is_biflat(m, flat, coflat):
  # type: (matroid.Matroid, int, int) -> bool
  ground = m.ground
  return (bool(flat) and bool(coflat) and
          not (flat == ground and coflat == ground) and
          flat | coflat == ground and
          m.is_flat(flat) and m.dual().is_flat(coflat))


def compatible(first, second):
  # type: (Biflat, Biflat) -> bool
  def _below(lower, upper):
    return (eset.is_subset(lower.flat, upper.flat) and
            eset.is_subset(upper.coflat, lower.coflat))
  return _below(first, second) or _below(second, first)


def is_biflag(m, biflats):
  # type: (matroid.Matroid, Iterable[Biflat]) -> bool
  """Whether the biflats form a biflag; repeated biflats are rejected."""
  biflats = [Biflat(*b) for b in biflats]
  if len(set(biflats)) != len(biflats):
    return False
  if not all(is_biflat(m, b.flat, b.coflat) for b in biflats):
    return False
  for i, first in enumerate(biflats):
    for second in biflats[i + 1:]:
      if not compatible(first, second):
        return False
  covered = eset.EMPTY
  for b in biflats:
    covered |= b.flat & b.coflat
  return covered != m.ground


def _sentinel_chains(m, biflag):
  # type: (matroid.Matroid, Biflag) -> Tuple[List[int], List[int]]
  """Returns [F_0, ..., F_{k+1}] and [G_0, ..., G_{k+1}]."""
  return ([eset.EMPTY] + biflag.flats() + [m.ground],
          [m.ground] + biflag.coflats() + [eset.EMPTY])


def gap_jump(m, biflag):
  # type: (matroid.Matroid, Biflag) -> GapJumpData
  """Returns the gaps D_j = E - (F_j + G_{j+1}) and the jump sets, j = 0..k."""
  if not is_biflag(m, biflag):
    raise ValueError('Not a biflag: {!r}'.format(biflag))
  flats, coflats = _sentinel_chains(m, biflag)
  k = len(biflag)
  gaps = tuple(m.ground & ~(flats[j] | coflats[j + 1]) for j in range(k + 1))
  flat_jumps = tuple(j for j in range(k + 1) if flats[j] != flats[j + 1])
  coflat_jumps = tuple(j for j in range(k + 1)
                       if coflats[j] != coflats[j + 1])
  double_jumps = tuple(j for j in flat_jumps if j in coflat_jumps)
  return GapJumpData(gaps, flat_jumps, coflat_jumps, double_jumps)


def check_nongaps(m, biflag):
  # type: (matroid.Matroid, Biflag) -> GapJumpData
  """Checks that the gaps are disjoint, cover E - U(F_j & G_j), sit on
  double jumps and never have a single element."""
  data = gap_jump(m, biflag)
  union = eset.EMPTY
  for j, gap in enumerate(data.gaps):
    if gap & union:
      raise ExpansionInvariantError(
          'Gaps of {!r} overlap at index {}'.format(biflag, j))
    union |= gap
    if gap and j not in data.double_jumps:
      raise ExpansionInvariantError(
          'Nonempty gap of {!r} at index {} is not a double jump'.format(
              biflag, j))
    if eset.cardinality(gap) == 1:
      raise ExpansionInvariantError(
          'Gap of {!r} at index {} has a single element'.format(biflag, j))
  if union != m.ground & ~biflag.covered:
    raise ExpansionInvariantError(
        'Gaps of {!r} do not cover the uncovered elements'.format(biflag))
  if not data.double_jumps:
    raise ExpansionInvariantError('{!r} has no double jump'.format(biflag))
  return data


def _lex_smallest(masks):
  # type: (Iterable[int]) -> Optional[int]
  masks = list(masks)
  return min(masks, key=eset.lex_key) if masks else None


def _insertion(m, biflag):
  # type: (matroid.Matroid, Biflag) -> Optional[Biflat]
  """Finds a biflat extending `biflag`, following the two maximality cases."""
  dual = m.dual()
  flats, coflats = _sentinel_chains(m, biflag)
  ranks = [m.rank(f) for f in flats]
  coranks = [dual.rank(g) for g in coflats]
  for i in range(1, len(flats)):
    if ranks[i] - ranks[i - 1] >= 2:
      flat = _lex_smallest(
          f for f in m.flats_between(flats[i - 1], flats[i])
          if f not in (flats[i - 1], flats[i]))
      if flat | coflats[i] != m.ground:
        return Biflat(flat, coflats[i - 1])
      return Biflat(flat, coflats[i])
    if coranks[i - 1] - coranks[i] >= 2:
      coflat = _lex_smallest(
          g for g in dual.flats_between(coflats[i], coflats[i - 1])
          if g not in (coflats[i], coflats[i - 1]))
      if flats[i - 1] | coflat != m.ground:
        return Biflat(flats[i], coflat)
      return Biflat(flats[i - 1], coflat)
  double_jumps = [i for i in range(1, len(flats))
                  if ranks[i] - ranks[i - 1] == 1 and
                  coranks[i - 1] - coranks[i] == 1]
  gapped = [i for i in range(1, len(flats))
            if flats[i - 1] | coflats[i] != m.ground]
  if not gapped:
    return None
  others = [i for i in double_jumps if i != gapped[0]]
  if not others:
    return None
  return Biflat(flats[others[0]], coflats[others[0] - 1])


def extend_to_maximal(m, biflag):
  # type: (matroid.Matroid, Biflag) -> Biflag
  """Inserts biflats into `biflag` until it has length n - 1.

  Where a flat (or coflat) has to be picked strictly inside a rank jump of at
  least two, the lexicographically smallest one is used.
  """
  if not is_biflag(m, biflag):
    raise ValueError('Not a biflag: {!r}'.format(biflag))
  maximal_length = m.n_plus_1 - 2
  while len(biflag) < maximal_length:
    biflat = _insertion(m, biflag)
    if biflat is None:
      raise ExpansionInvariantError(
          'No biflat extends {!r} below length {}'.format(
              biflag, maximal_length))
    biflag = Biflag(biflag.chain + (biflat,))
  return biflag


def _nbc_parts(m, basis):
  # type: (matroid.Matroid, int) -> Tuple[List[int], List[int], List[int]]
  """Returns IA(B) decreasing, B - IA(B) decreasing, B* - min B* increasing."""
  m.validate_for_conormal()
  record = activity.activities(m, basis)
  if record.externally_active:
    raise ValueError('{} is not an NBC basis; externally active: {}'.format(
        eset.elements(basis), eset.elements(record.externally_active)))
  cobasis = eset.elements(m.ground & ~basis)
  return (eset.elements(record.internally_active)[::-1],
          eset.elements(record.internally_passive)[::-1],
          cobasis[1:])


def nbc_biflag(m, basis):
  # type: (matroid.Matroid, int) -> Tuple[Biflag, Tuple[int, ...]]
  """Returns the NBC biflag of an NBC basis and its arrival sequence.

  With B - IA(B) = {e_1 > ... > e_{r-k}} and B* - min B* =
  {e_{r-k+1} < ... < e_{n-k-1}}, the chain is cl(e_1..e_j)|E for j <= r - k,
  followed by E|cl*(e_j..e_{n-k-1}).
  """
  _, passive, cobasis_tail = _nbc_parts(m, basis)
  biflats = []
  prefix = eset.EMPTY
  for e in passive:
    prefix |= 1 << e
    biflats.append(Biflat(m.closure(prefix), m.ground))
  for j in range(len(cobasis_tail)):
    biflats.append(Biflat(
        m.ground, m.coclosure(eset.from_elements(cobasis_tail[j:]))))
  return Biflag(biflats, presorted=True), tuple(passive + cobasis_tail)


def extension_index(m, basis):
  # type: (matroid.Matroid, int) -> int
  """Returns the index i at which the extended NBC biflag switches coflats.

  With IA(B) = {c_1 > ... > c_{k+1}}, S = B - IA(B) and T = B* - min B*, i is
  the smallest index with cl(S, c_1..c_i) + cl*(T) = E and also the largest
  index with c_i outside cl(S) + cl*(T). Both are computed and compared.
  """
  active, passive, cobasis_tail = _nbc_parts(m, basis)
  independent = eset.from_elements(passive)
  coflat = m.coclosure(eset.from_elements(cobasis_tail))
  by_closure = None
  prefix = independent
  for i, c in enumerate(active, start=1):
    prefix |= 1 << c
    if m.closure(prefix) | coflat == m.ground:
      by_closure = i
      break
  outside = m.closure(independent) | coflat
  by_element = max((i for i, c in enumerate(active, start=1)
                    if not eset.contains(outside, c)), default=None)
  if by_closure != by_element:
    raise ExpansionInvariantError(
        'Extension indices disagree for basis {}: {} vs {}'.format(
            eset.elements(basis), by_closure, by_element))
  return by_closure


def extended_nbc_biflag(m, basis):
  # type: (matroid.Matroid, int) -> Biflag
  """Returns the maximal biflag obtained by inserting k columns at the double
  jump of the NBC biflag, where |IA(B)| = k + 1."""
  active, passive, cobasis_tail = _nbc_parts(m, basis)
  biflag, _ = nbc_biflag(m, basis)
  index = extension_index(m, basis)
  coflat = m.coclosure(eset.from_elements(cobasis_tail))
  prefix = eset.from_elements(passive)
  inserted = []
  for t, c in enumerate(active[:-1], start=1):
    prefix |= 1 << c
    inserted.append(
        Biflat(m.closure(prefix), m.ground if t < index else coflat))
  return Biflag(biflag.chain + tuple(inserted))


def render_table(m, biflag, arrivals=None):
  # type: (matroid.Matroid, Biflag, Optional[Sequence[int]]) -> str
  """Renders a biflag as rows of flats, coflats and optional arrivals.

  The sentinel columns {}|E and E|{} are included and columns j with a double
  jump from j to j + 1 are marked.
  """
  flats, coflats = _sentinel_chains(m, biflag)
  n_plus_1 = m.n_plus_1
  rows = [['F'] + [eset.render(f, n_plus_1) for f in flats],
          ['G'] + [eset.render(g, n_plus_1) for g in coflats]]
  if arrivals is not None:
    rows.append(['e', ''] + [eset.element_label(e) for e in arrivals] + [''])
  double_jumps = gap_jump(m, biflag).double_jumps
  rows.append(['d'] + [_DOUBLE_JUMP_MARKER if j in double_jumps else ''
                       for j in range(len(flats))])
  widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
  return '\n'.join(
      _COLUMN_SEPARATOR.join(
          cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
      for row in rows)
