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

"""Ordered matroids on the ground set {0, ..., n} given by a rank oracle.

Two backends are supported: a graphic one (rank = size of a spanning forest
of an edge subset) and one given by the full list of bases. Every matroid has
a dual view whose rank is derived from the primal rank. All subsets are bit
masks as described in `eset`.

Matroids are immutable after construction. Rank, closure and flat-interval
queries are memoized in plain dicts keyed by subset masks; entries are
deterministic functions of the key, so concurrent readers may at worst
compute an entry twice.
"""


import itertools
import random
from typing import Dict, Iterable, List, Optional, Sequence, Tuple  # pylint: disable=unused-import

from networkx.utils import UnionFind

from conormal_chow.libs import eset

__all__ = ['Matroid', 'DualView', 'from_graph', 'from_bases']

# Upper bound of sampled basis pairs for the exchange axiom spot-check.
_EXCHANGE_SAMPLE_SIZE = 200
_EXCHANGE_SAMPLE_SEED = 0


class _RankBackend():
  """The interface of rank oracles backing a `Matroid`."""

  def rank(self, mask):
    # type: (int) -> int
    raise NotImplementedError


class GraphicBackend(_RankBackend):
  """Rank oracle of the cycle matroid of a multigraph."""

  def __init__(self, edges):
    # type: (Sequence[Tuple[int, int]]) -> None
    """Initializes the backend.

    Args:
      edges: The endpoints (u, v) of each edge, indexed by edge label.
    """
    self._edges = tuple(edges)

  @property
  def edges(self):
    # type: () -> Tuple[Tuple[int, int], ...]
    return self._edges

  def rank(self, mask):
    # type: (int) -> int
    forest = UnionFind()
    size = 0
    for e in eset.elements(mask):
      u, v = self._edges[e]
      if forest[u] != forest[v]:
        forest.union(u, v)
        size += 1
    return size


class BasesBackend(_RankBackend):
  """Rank oracle given by the list of all bases."""

  def __init__(self, bases):
    # type: (Sequence[int]) -> None
    self._bases = tuple(bases)

  @property
  def bases(self):
    # type: () -> Tuple[int, ...]
    return self._bases

  def rank(self, mask):
    # type: (int) -> int
    return max(eset.cardinality(mask & basis) for basis in self._bases)


class MatroidView():
  """Rank-based queries shared by a matroid and its dual view.

  Subclasses provide `_compute_rank` and `dual`.
  """

  def __init__(self, n_plus_1):
    # type: (int) -> None
    self._n_plus_1 = n_plus_1
    self._ground = eset.full(n_plus_1)
    self._rank_cache = {}  # type: Dict[int, int]
    self._closure_cache = {}  # type: Dict[int, int]
    self._interval_cache = {}  # type: Dict[Tuple[int, int, int], Tuple[int, ...]]
    self._rank_total = None  # type: Optional[int]

  @property
  def n_plus_1(self):
    # type: () -> int
    return self._n_plus_1

  @property
  def ground(self):
    # type: () -> int
    return self._ground

  @property
  def rank_total(self):
    # type: () -> int
    """The rank r+1 of the whole ground set."""
    if self._rank_total is None:
      self._rank_total = self.rank(self._ground)
    return self._rank_total

  def dual(self):
    # type: () -> MatroidView
    raise NotImplementedError

  def _compute_rank(self, mask):
    # type: (int) -> int
    raise NotImplementedError

  def rank(self, mask):
    # type: (int) -> int
    value = self._rank_cache.get(mask)
    if value is None:
      value = self._compute_rank(mask)
      self._rank_cache[mask] = value
    return value

  def closure(self, mask):
    # type: (int) -> int
    """Returns cl(S) = {e : rank(S + e) = rank(S)}."""
    value = self._closure_cache.get(mask)
    if value is None:
      base_rank = self.rank(mask)
      value = mask
      for e in eset.elements(self._ground & ~mask):
        if self.rank(mask | 1 << e) == base_rank:
          value |= 1 << e
      self._closure_cache[mask] = value
    return value

  def is_flat(self, mask):
    # type: (int) -> bool
    return self.closure(mask) == mask

  def is_independent(self, mask):
    # type: (int) -> bool
    return self.rank(mask) == eset.cardinality(mask)

  def is_basis(self, mask):
    # type: (int) -> bool
    return (eset.cardinality(mask) == self.rank_total and
            self.is_independent(mask))

  def fundamental_circuit(self, basis, element):
    # type: (int, int) -> int
    """Returns the unique circuit C(B, e) contained in B + e."""
    if not self.is_basis(basis):
      raise ValueError('Not a basis: {}'.format(eset.elements(basis)))
    if eset.contains(basis, element):
      raise ValueError('Element {} belongs to the basis {}'.format(
          element, eset.elements(basis)))
    circuit = 1 << element
    for b in eset.elements(basis):
      if self.is_basis((basis & ~(1 << b)) | 1 << element):
        circuit |= 1 << b
    return circuit

  @property
  def loops(self):
    # type: () -> int
    return eset.from_elements(
        e for e in range(self._n_plus_1) if self.rank(1 << e) == 0)

  @property
  def coloops(self):
    # type: () -> int
    return eset.from_elements(
        e for e in range(self._n_plus_1)
        if self.rank(self._ground & ~(1 << e)) < self.rank_total)

  def flats_between(self, lo, hi, containing=None):
    # type: (int, int, Optional[int]) -> List[int]
    """Returns all flats F with lo <= F <= hi, containing the given element.

    The interval is explored upwards from cl(lo + containing) by adding one
    element of `hi` at a time and closing, which reaches every flat of the
    interval. The result is sorted by cardinality and then lexicographically.

    Args:
      lo: A flat.
      hi: A flat containing `lo`.
      containing: An optional element of hi - lo every returned flat contains.
    """
    key = (lo, hi, -1 if containing is None else containing)
    cached = self._interval_cache.get(key)
    if cached is not None:
      return list(cached)
    if not self.is_flat(lo) or not self.is_flat(hi):
      raise ValueError('Interval bounds must be flats: {} and {}'.format(
          eset.elements(lo), eset.elements(hi)))
    if not eset.is_subset(lo, hi):
      raise ValueError('Lower bound {} is not contained in {}'.format(
          eset.elements(lo), eset.elements(hi)))
    start = lo
    if containing is not None:
      if not eset.contains(hi & ~lo, containing):
        raise ValueError('Element {} is not in the interval {} .. {}'.format(
            containing, eset.elements(lo), eset.elements(hi)))
      start = self.closure(lo | 1 << containing)
    found = set()
    if eset.is_subset(start, hi):
      found.add(start)
      pending = [start]
      while pending:
        flat = pending.pop()
        for e in eset.elements(hi & ~flat):
          cover = self.closure(flat | 1 << e)
          if cover not in found and eset.is_subset(cover, hi):
            found.add(cover)
            pending.append(cover)
    result = tuple(sorted(
        found, key=lambda f: (eset.cardinality(f), eset.lex_key(f))))
    self._interval_cache[key] = result
    return list(result)

  def all_flats(self):
    # type: () -> List[int]
    return self.flats_between(self.closure(eset.EMPTY), self._ground)


class Matroid(MatroidView):
  """A matroid on {0, ..., n} backed by a graph or by its list of bases."""

  def __init__(self, n_plus_1, backend, source=''):
    # type: (int, _RankBackend, str) -> None
    super().__init__(n_plus_1)
    self._backend = backend
    self._source = source
    self._dual = DualView(self)

  def __repr__(self):
    return 'Matroid(source={!r}, n_plus_1={}, rank={})'.format(
        self._source, self._n_plus_1, self.rank_total)

  @property
  def backend(self):
    # type: () -> _RankBackend
    return self._backend

  @property
  def is_graphic(self):
    # type: () -> bool
    return isinstance(self._backend, GraphicBackend)

  @property
  def source(self):
    # type: () -> str
    return self._source

  def dual(self):
    # type: () -> DualView
    return self._dual

  def _compute_rank(self, mask):
    # type: (int) -> int
    return self._backend.rank(mask)

  def coclosure(self, mask):
    # type: (int) -> int
    return self._dual.closure(mask)

  def fundamental_cocircuit(self, basis, element):
    # type: (int, int) -> int
    """Returns C*(B, e), the fundamental circuit of B* = E - B in the dual."""
    if not eset.contains(basis, element):
      raise ValueError('Element {} does not belong to the basis {}'.format(
          element, eset.elements(basis)))
    return self._dual.fundamental_circuit(self._ground & ~basis, element)

  def validate_for_conormal(self):
    # type: () -> None
    """Raises ValueError unless the matroid has no loops and no coloops."""
    loops = self.loops
    coloops = self.coloops
    if loops or coloops:
      raise ValueError(
          'Conormal computations need a matroid without loops and coloops; '
          '{} has loops {} and coloops {}.'.format(
              self._source or 'the input', eset.elements(loops),
              eset.elements(coloops)))


class DualView(MatroidView):
  """The dual M* with rank*(S) = |S| + rank(E - S) - rank(E)."""

  def __init__(self, primal):
    # type: (Matroid) -> None
    super().__init__(primal.n_plus_1)
    self._primal = primal

  def dual(self):
    # type: () -> Matroid
    return self._primal

  def _compute_rank(self, mask):
    # type: (int) -> int
    return (eset.cardinality(mask) +
            self._primal.rank(self._ground & ~mask) - self._primal.rank_total)


def from_graph(edges, source=''):
  # type: (Iterable[Tuple[int, int, int]], str) -> Matroid
  """Builds the cycle matroid of a graph.

  Args:
    edges: Triples (label, u, v). Labels must be exactly 0..n; they give the
      order of the ground set. Self-loops are kept and become matroid loops.
    source: A name for diagnostics, usually the input file.
  """
  by_label = {}  # type: Dict[int, Tuple[int, int]]
  for label, u, v in edges:
    if label in by_label:
      raise ValueError('Duplicate edge label {}'.format(label))
    by_label[label] = (u, v)
  if not by_label:
    raise ValueError('A graph needs at least one edge.')
  missing = sorted(set(range(len(by_label))) - set(by_label))
  if missing:
    raise ValueError('Edge labels must be exactly 0..{}; missing {}'.format(
        len(by_label) - 1, missing))
  n_plus_1 = len(by_label)
  if n_plus_1 > eset.MAX_GROUND_SET_SIZE:
    raise ValueError('At most {} edges are supported, got {}'.format(
        eset.MAX_GROUND_SET_SIZE, n_plus_1))
  backend = GraphicBackend([by_label[label] for label in range(n_plus_1)])
  return Matroid(n_plus_1, backend, source)


def from_bases(n_plus_1, bases, source=''):
  # type: (int, Iterable[int], str) -> Matroid
  """Builds a matroid from the list of all of its bases.

  The exchange axiom is spot-checked on a deterministic sample of pairs.
  """
  if not 0 < n_plus_1 <= eset.MAX_GROUND_SET_SIZE:
    raise ValueError('Ground set size must be in [1, {}]: {}'.format(
        eset.MAX_GROUND_SET_SIZE, n_plus_1))
  unique_bases = sorted(set(bases), key=eset.lex_key)
  if not unique_bases:
    raise ValueError('The list of bases is empty.')
  ground = eset.full(n_plus_1)
  sizes = {eset.cardinality(basis) for basis in unique_bases}
  if len(sizes) != 1:
    raise ValueError('Bases have unequal cardinalities {}'.format(
        sorted(sizes)))
  for basis in unique_bases:
    if not eset.is_subset(basis, ground):
      raise ValueError('Basis {} is not a subset of 0..{}'.format(
          eset.elements(basis), n_plus_1 - 1))
  _check_exchange(unique_bases)
  return Matroid(n_plus_1, BasesBackend(unique_bases), source)


def _check_exchange(bases):
  # type: (List[int]) -> None
  pairs = list(itertools.permutations(bases, 2))
  if len(pairs) > _EXCHANGE_SAMPLE_SIZE:
    pairs = random.Random(_EXCHANGE_SAMPLE_SEED).sample(
        pairs, _EXCHANGE_SAMPLE_SIZE)
  basis_set = set(bases)
  for first, second in pairs:
    for x in eset.elements(first & ~second):
      if not any((first & ~(1 << x)) | 1 << y in basis_set
                 for y in eset.elements(second & ~first)):
        raise ValueError(
            'Bases {} and {} violate the exchange axiom at {}'.format(
                eset.elements(first), eset.elements(second), x))
