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

"""Canonical expansion of delta powers and multiplication by gamma.

In the conormal Chow ring every monomial is a biflag. For any element e,
delta = delta_e is the sum of x_{F|G} over the biflats with e in F & G, and
for any c, gamma = gamma_c is the sum over the biflats with c in F != E.

The canonical expansion multiplies a monomial by delta_e for e the largest
element not covered by the sets F_j & G_j of the monomial. The new biflat then
has to sit in a single interval of the chain, so the products are enumerated
with `MatroidView.flats_between` on M and on its dual. Each term of delta^m
is recorded as an `ExpansionTable`, the monomial together with the arrival
sequence of pivots that introduced its biflats.

`expand_gamma_delta` computes gamma^k delta^(n-k-1) with one of two
strategies:

  * theorem-path: every table of delta^(n-k-1) that is the NBC monomial of an
    NBC basis B with |IA(B)| = k + 1 is certified and multiplied by
    gamma_{c_1} ... gamma_{c_k}, with c_1 > ... > c_k the largest internally
    active elements of B. Exactly one monomial survives, the extended NBC
    monomial of B.
  * exhaustive: every table is multiplied by gamma k times with the pivot
    chosen by a `PivotPolicy`, dropping only monomials that the eradication
    criterion (`eradicates`) proves to vanish.
"""


import collections
import json
import logging
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple  # pylint: disable=unused-import

from apache_beam.io import filesystems

from conormal_chow.libs import activity
from conormal_chow.libs import conormal
from conormal_chow.libs import eset
from conormal_chow.libs import matroid  # pylint: disable=unused-import
from conormal_chow.libs import metrics_util

__all__ = ['Monomial', 'ExpansionTable', 'MonomialSum', 'Census',
           'Certificate', 'GammaDeltaResult', 'Strategy', 'PivotPolicy',
           'pivot', 'check_table', 'delta_step', 'canonical_delta_expansion',
           'theorem_path_filter', 'eradication_filter', 'gamma_step',
           'is_initial', 'eradicates', 'multiply_gamma_power',
           'multiply_gamma_sequence', 'resistant_filter', 'certified_product',
           'check_resistant_table', 'expand_gamma_delta',
           'gamma_delta_power', 'extended_nbc_sum', 'degree']

Monomial = conormal.Biflag

Census = collections.namedtuple(
    'Census', ['with_multiplicity', 'distinct', 'peak_frontier'])

Certificate = collections.namedtuple(
    'Certificate', ['basis', 'internally_active', 'independent', 'completion'])

GammaDeltaResult = collections.namedtuple(
    'GammaDeltaResult', ['monomials', 'census', 'certificates'])

_SPILL_FILE_PATTERN = 'frontier-{power:02d}-{chunk:05d}.jsonl'

# Counter names.
_DELTA_TABLES = 'delta_tables'
_DELTA_ZERO_PRODUCTS = 'delta_zero_products'
_DELTA_PRUNED = 'delta_pruned'
_GAMMA_PRUNED = 'gamma_pruned'
_RESISTANT_TABLES = 'resistant_tables'
_REJECTED_TABLES = 'rejected_tables'


class Strategy():
  """How `expand_gamma_delta` multiplies the delta tables by gamma^k."""
  THEOREM_PATH = 'theorem-path'
  EXHAUSTIVE = 'exhaustive'
  ALL = (THEOREM_PATH, EXHAUSTIVE)


class PivotPolicy():
  """Which element c of E - F_l the exhaustive strategy multiplies by."""
  MIN = 'min'
  MAX = 'max'
  ALL = (MIN, MAX)


class ExpansionTable():
  """A monomial of a canonical expansion together with its arrival sequence.

  `arrivals[i]` is the pivot that introduced the i-th biflat of the chain and
  always lies in its F & G.

  When the ground set is given the constructor also checks that every arrival
  is the largest element left uncovered by the biflats of later arrivals;
  `check_table` additionally checks that the chain is a biflag.
  """

  __slots__ = ('_monomial', '_arrivals', '_hash')

  def __init__(self, monomial, arrivals, ground=None):
    # type: (Monomial, Iterable[int], Optional[int]) -> None
    arrivals = tuple(arrivals)
    if len(arrivals) != len(monomial):
      raise ValueError('{} arrivals for a monomial of degree {}'.format(
          len(arrivals), len(monomial)))
    if len(set(arrivals)) != len(arrivals):
      raise conormal.ExpansionInvariantError(
          'Repeated arrivals {} for {!r}'.format(arrivals, monomial))
    for biflat, e in zip(monomial, arrivals):
      if not eset.contains(biflat.flat & biflat.coflat, e):
        raise conormal.ExpansionInvariantError(
            'Arrival {} is not in F & G of {}|{}'.format(
                e, eset.render(biflat.flat), eset.render(biflat.coflat)))
    if ground is not None:
      _check_arrival_rule(monomial, arrivals, ground)
    self._monomial = monomial
    self._arrivals = arrivals
    self._hash = hash((monomial, arrivals))

  def __eq__(self, other):
    return (isinstance(other, ExpansionTable) and
            self._monomial == other._monomial and
            self._arrivals == other._arrivals)

  def __ne__(self, other):
    return not self == other

  def __hash__(self):
    return self._hash

  def __repr__(self):
    return 'ExpansionTable({!r}, arrivals={})'.format(self._monomial,
                                                      self._arrivals)

  def __getstate__(self):
    return (self._monomial, self._arrivals)

  def __setstate__(self, state):
    self.__init__(*state)

  @property
  def monomial(self):
    # type: () -> Monomial
    return self._monomial

  @property
  def arrivals(self):
    # type: () -> Tuple[int, ...]
    return self._arrivals

  @property
  def sort_key(self):
    # type: () -> Tuple
    return (self._monomial.sort_key, self._arrivals)

  def gap_jump(self, m):
    # type: (matroid.Matroid) -> conormal.GapJumpData
    return conormal.gap_jump(m, self._monomial)

  def to_json(self):
    # type: () -> Dict
    return {'chain': self._monomial.to_json(), 'arrivals': list(self._arrivals)}

  @classmethod
  def from_json(cls, data):
    # type: (Dict) -> ExpansionTable
    return cls(Monomial.from_json(data['chain']), data['arrivals'])


class MonomialSum():
  """A nonnegative integer combination of monomials."""

  def __init__(self, terms=()):
    # type: (Iterable[Tuple[Monomial, int]]) -> None
    self._terms = collections.Counter()  # type: Dict[Monomial, int]
    for monomial, multiplicity in terms:
      self.add(monomial, multiplicity)

  def __eq__(self, other):
    return isinstance(other, MonomialSum) and self._terms == other._terms

  def __ne__(self, other):
    return not self == other

  def __len__(self):
    return len(self._terms)

  def __contains__(self, monomial):
    return monomial in self._terms

  def __repr__(self):
    return 'MonomialSum({})'.format(
        ' + '.join('{}*{!r}'.format(c, m) for m, c in self.items()) or '0')

  def add(self, monomial, multiplicity=1):
    # type: (Monomial, int) -> None
    if multiplicity < 1:
      raise ValueError('Multiplicities must be positive: {}'.format(
          multiplicity))
    self._terms[monomial] += multiplicity

  def merge(self, other):
    # type: (MonomialSum) -> MonomialSum
    """Adds the terms of `other` to this sum and returns it."""
    for monomial, multiplicity in other._terms.items():  # pylint: disable=protected-access
      self._terms[monomial] += multiplicity
    return self

  def multiplicity(self, monomial):
    # type: (Monomial) -> int
    return self._terms.get(monomial, 0)

  def items(self):
    # type: () -> List[Tuple[Monomial, int]]
    """Returns (monomial, multiplicity) pairs in canonical order."""
    return sorted(self._terms.items(), key=lambda item: item[0].sort_key)

  def monomials(self):
    # type: () -> List[Monomial]
    return [monomial for monomial, _ in self.items()]

  @property
  def total(self):
    # type: () -> int
    return sum(self._terms.values())

  @property
  def distinct(self):
    # type: () -> int
    return len(self._terms)

  def to_json(self):
    # type: () -> Dict[str, List]
    items = self.items()
    return {'monomials': [monomial.to_json() for monomial, _ in items],
            'multiplicities': [multiplicity for _, multiplicity in items]}

  @classmethod
  def from_json(cls, data):
    # type: (Dict[str, List]) -> MonomialSum
    if len(data['monomials']) != len(data['multiplicities']):
      raise ValueError('Monomials and multiplicities differ in length.')
    return cls(zip((Monomial.from_json(m) for m in data['monomials']),
                   data['multiplicities']))


class _Frontier():
  """The tables of one power, held in memory or spilled to JSON lines files.

  Without a spill threshold everything stays in memory. Otherwise every
  `spill_threshold` tables are written to a new file under `spill_dir` and
  read back one file at a time on iteration.
  """

  def __init__(self, power, spill_threshold=None, spill_dir=None):
    # type: (int, Optional[int], Optional[str]) -> None
    self._power = power
    self._spill_threshold = spill_threshold
    self._spill_dir = spill_dir
    self._tables = []  # type: List[ExpansionTable]
    self._paths = []  # type: List[str]
    self._size = 0

  def __len__(self):
    return self._size

  def add(self, table):
    # type: (ExpansionTable) -> None
    self._tables.append(table)
    self._size += 1
    if (self._spill_threshold is not None and
        len(self._tables) >= self._spill_threshold):
      self._spill()

  def _spill(self):
    path = filesystems.FileSystems.join(
        self._spill_dir,
        _SPILL_FILE_PATTERN.format(power=self._power, chunk=len(self._paths)))
    with filesystems.FileSystems.create(path) as file_to_write:
      for table in self._tables:
        file_to_write.write(
            (json.dumps(table.to_json()) + '\n').encode('utf-8'))
    logging.debug('Spilled %d tables of power %d to %s.',
                  len(self._tables), self._power, path)
    self._paths.append(path)
    self._tables = []

  def __iter__(self):
    # type: () -> Iterator[ExpansionTable]
    for path in self._paths:
      with filesystems.FileSystems.open(path) as file_to_read:
        lines = file_to_read.read().decode('utf-8').splitlines()
      for line in lines:
        yield ExpansionTable.from_json(json.loads(line))
    for table in self._tables:
      yield table

  def discard(self):
    if self._paths:
      filesystems.FileSystems.delete(self._paths)
    self._paths = []
    self._tables = []


def pivot(m, monomial):
  # type: (matroid.Matroid, Monomial) -> int
  """Returns the largest element of E not covered by any F_j & G_j."""
  uncovered = m.ground & ~monomial.covered
  if not uncovered:
    raise ValueError('{!r} covers the ground set.'.format(monomial))
  return eset.max_element(uncovered)


def check_table(m, table):
  # type: (matroid.Matroid, ExpansionTable) -> None
  """Checks e_i = max(E - U{F_j & G_j : e_j > e_i}) for every arrival."""
  if not conormal.is_biflag(m, table.monomial):
    raise conormal.ExpansionInvariantError(
        '{!r} is not a biflag'.format(table))
  _check_arrival_rule(table.monomial, table.arrivals, m.ground)


def _check_arrival_rule(monomial, arrivals, ground):
  # type: (Monomial, Tuple[int, ...], int) -> None
  pairs = list(zip(monomial, arrivals))
  for _, e in pairs:
    covered = eset.EMPTY
    for biflat, other in pairs:
      if other > e:
        covered |= biflat.flat & biflat.coflat
    uncovered = ground & ~covered
    if not uncovered or eset.max_element(uncovered) != e:
      raise conormal.ExpansionInvariantError(
          'Arrival {} of {!r} is not the largest uncovered element'.format(
              e, monomial))


def _bounds(m, chain, position):
  # type: (matroid.Matroid, Tuple[conormal.Biflat, ...], int) -> Tuple[conormal.Biflat, conormal.Biflat]
  """Returns F_j|G_j and F_{j+1}|G_{j+1} around `position`, with sentinels."""
  lower = (chain[position - 1] if position > 0
           else conormal.Biflat(eset.EMPTY, m.ground))
  upper = (chain[position] if position < len(chain)
           else conormal.Biflat(m.ground, eset.EMPTY))
  return lower, upper


def _candidate_biflats(m, covered, flats, coflats):
  # type: (matroid.Matroid, int, List[int], List[int]) -> Iterator[conormal.Biflat]
  ground = m.ground
  for flat in flats:
    for coflat in coflats:
      if flat | coflat != ground:
        continue
      if flat == ground and coflat == ground:
        continue
      if covered | (flat & coflat) == ground:
        continue
      yield conormal.Biflat(flat, coflat)


def delta_step(m, table):
  # type: (matroid.Matroid, ExpansionTable) -> List[ExpansionTable]
  """Returns the terms of the canonical expansion of the table times delta.

  With e the pivot and j the number of flats of the chain that miss e, the
  new biflat F|G satisfies e in F & G, F_j <= F <= F_{j+1} and
  G_j >= G >= G_{j+1}, and is inserted at position j. An empty list means
  that the product is zero.
  """
  monomial = table.monomial
  chain = monomial.chain
  e = pivot(m, monomial)
  position = sum(1 for biflat in chain if not eset.contains(biflat.flat, e))
  lower, upper = _bounds(m, chain, position)
  if not eset.contains(lower.coflat & ~upper.coflat, e):
    raise conormal.ExpansionInvariantError(
        'Pivot {} of {!r} is not in G_j - G_(j+1)'.format(e, monomial))
  flats = m.flats_between(lower.flat, upper.flat, e)
  coflats = m.dual().flats_between(upper.coflat, lower.coflat, e)
  arrivals = table.arrivals
  new_arrivals = arrivals[:position] + (e,) + arrivals[position:]
  return [ExpansionTable(monomial.inserted(position, biflat), new_arrivals,
                         m.ground)
          for biflat in _candidate_biflats(m, monomial.covered, flats,
                                           coflats)]


def _check_power(m, power):
  # type: (matroid.Matroid, int) -> None
  max_power = m.n_plus_1 - 2
  if not 0 <= power <= max_power:
    raise ValueError('Power {} is out of range [0, {}].'.format(
        power, max_power))


def canonical_delta_expansion(m,  # type: matroid.Matroid
                              power,  # type: int
                              frontier_filter=None,  # type: Optional[Callable[[ExpansionTable], bool]]
                              counter_factory=None,  # type: Optional[metrics_util.CounterFactoryInterface]
                              spill_threshold=None,  # type: Optional[int]
                              spill_dir=None  # type: Optional[str]
                             ):
  # type: (...) -> Tuple[List[ExpansionTable], Census]
  """Returns the tables of the canonical expansion of delta^power.

  Only the frontier of the current power is kept. The census lists, for every
  power from 0 on, the number of tables and of distinct monomials that passed
  `frontier_filter`, and the largest frontier seen.

  Args:
    m: A loopless and coloopless matroid.
    power: The exponent, between 0 and n - 1.
    frontier_filter: If given, tables for which it returns False are dropped
      before the next power is expanded.
    counter_factory: Creates the table and prune counters.
    spill_threshold: If given, frontiers are written to `spill_dir` in chunks
      of this many tables.
    spill_dir: Directory for spilled frontiers. The files are deleted once
      the expansion is done.
  Returns:
    The tables of delta^power sorted by monomial and then by arrivals, and
    the census.
  """
  m.validate_for_conormal()
  _check_power(m, power)
  if spill_threshold is not None:
    if spill_threshold < 1:
      raise ValueError('The spill threshold must be positive: {}'.format(
          spill_threshold))
    if not spill_dir:
      raise ValueError('Spilling frontiers requires a spill directory.')
  factory = counter_factory or metrics_util.NoOpCounterFactory()
  tables_counter = factory.create_counter(_DELTA_TABLES)
  zero_counter = factory.create_counter(_DELTA_ZERO_PRODUCTS)
  pruned_counter = factory.create_counter(_DELTA_PRUNED)

  frontier = _Frontier(0, spill_threshold, spill_dir)
  frontier.add(ExpansionTable(Monomial(), ()))
  with_multiplicity = [1]
  distinct = [1]
  following = None  # type: Optional[_Frontier]
  try:
    for step in range(1, power + 1):
      following = _Frontier(step, spill_threshold, spill_dir)
      monomials = set()
      for table in frontier:
        products = delta_step(m, table)
        if not products:
          zero_counter.inc()
        for product in products:
          if frontier_filter is not None and not frontier_filter(product):
            pruned_counter.inc()
            continue
          following.add(product)
          monomials.add(product.monomial)
      frontier.discard()
      frontier = following
      tables_counter.inc(len(frontier))
      with_multiplicity.append(len(frontier))
      distinct.append(len(monomials))
      logging.info('delta^%d: %d tables, %d distinct monomials.', step,
                   len(frontier), len(monomials))
    tables = sorted(frontier, key=lambda t: t.sort_key)
  finally:
    frontier.discard()
    if following is not None:
      following.discard()
  return tables, Census(tuple(with_multiplicity), tuple(distinct),
                        max(with_multiplicity))


def _proper_flats(m, monomial):
  # type: (matroid.Matroid, Monomial) -> List[int]
  return sorted({biflat.flat for biflat in monomial if biflat.flat != m.ground})


def _is_mixed(m, biflat):
  # type: (matroid.Matroid, conormal.Biflat) -> bool
  return biflat.flat != m.ground and biflat.coflat != m.ground


def theorem_path_filter(m, k):
  # type: (matroid.Matroid, int) -> Callable[[ExpansionTable], bool]
  """Keeps the tables of delta powers that can still become resistant.

  A resistant table of delta^(n-k-1) has no mixed biflat and r - k distinct
  proper flats, and neither property can be repaired by adding biflats.
  """
  limit = m.rank_total - 1 - k

  def _keep(table):
    monomial = table.monomial
    return (not any(_is_mixed(m, biflat) for biflat in monomial) and
            len(_proper_flats(m, monomial)) <= limit)

  return _keep


def eradication_filter(m, k):
  # type: (matroid.Matroid, int) -> Callable[[ExpansionTable], bool]
  """Keeps the tables of delta powers whose monomial survives gamma^k."""

  def _keep(table):
    return not eradicates(m, table.monomial, k)

  return _keep


def gamma_step(m, monomial, c):
  # type: (matroid.Matroid, Monomial, int) -> List[Monomial]
  """Returns the terms of the monomial times gamma_c.

  With l the number of flats of the chain other than E, c must lie outside
  F_l. The new biflat satisfies F_l + c <= F < E and G_l >= G >= G_{l+1}.
  """
  if not 0 <= c < m.n_plus_1:
    raise ValueError('Element {} is not in the ground set.'.format(c))
  ground = m.ground
  chain = monomial.chain
  position = sum(1 for biflat in chain if biflat.flat != ground)
  lower, upper = _bounds(m, chain, position)
  if eset.contains(lower.flat, c):
    raise ValueError('gamma_{} needs an element outside F_l = {}'.format(
        c, eset.render(lower.flat, m.n_plus_1)))
  flats = [f for f in m.flats_between(lower.flat, ground, c) if f != ground]
  coflats = [g for g in m.dual().flats_between(upper.coflat, lower.coflat)
             if g]
  return [monomial.inserted(position, biflat)
          for biflat in _candidate_biflats(m, monomial.covered, flats,
                                           coflats)]


def is_initial(m, monomial):
  # type: (matroid.Matroid, Monomial) -> bool
  """Whether the distinct proper flats of the monomial have ranks 1, ..., s."""
  ranks = sorted(m.rank(f) for f in _proper_flats(m, monomial))
  return ranks == list(range(1, len(ranks) + 1))


def eradicates(m, monomial, k):
  # type: (matroid.Matroid, Monomial, int) -> bool
  """Whether the monomial times gamma^k is zero by counting its flats.

  With s distinct proper flats this holds when s + k > r, or when s + k = r
  and the monomial is not initial.
  """
  s = len(_proper_flats(m, monomial))
  r = m.rank_total - 1
  return s + k > r or (s + k == r and not is_initial(m, monomial))


def _top_flat(m, monomial):
  # type: (matroid.Matroid, Monomial) -> int
  proper = [b.flat for b in monomial if b.flat != m.ground]
  return proper[-1] if proper else eset.EMPTY


def _policy_pivot(m, monomial, pivot_policy):
  # type: (matroid.Matroid, Monomial, str) -> int
  choices = m.ground & ~_top_flat(m, monomial)
  if pivot_policy == PivotPolicy.MIN:
    return eset.min_element(choices)
  return eset.max_element(choices)


def _multiply_gamma(m, start, k, choose_pivot, prune, pruned_counter):
  # type: (matroid.Matroid, MonomialSum, int, Callable[[Monomial, int], int], bool, metrics_util.CounterInterface) -> MonomialSum
  current = start
  for step in range(k):
    following = MonomialSum()
    for monomial, multiplicity in current.items():
      if prune and eradicates(m, monomial, k - step):
        pruned_counter.inc(multiplicity)
        continue
      for product in gamma_step(m, monomial, choose_pivot(monomial, step)):
        following.add(product, multiplicity)
    current = following
  return current


def _check_gamma_power(k):
  # type: (int) -> None
  if k < 0:
    raise ValueError('The power of gamma must be nonnegative: {}'.format(k))


def multiply_gamma_power(m, monomial, k, pivot_policy=PivotPolicy.MIN,
                         prune=True, counter_factory=None):
  # type: (matroid.Matroid, Monomial, int, str, bool, Optional[metrics_util.CounterFactoryInterface]) -> MonomialSum
  """Returns the monomial times gamma^k, one gamma_c at a time.

  Each c is the smallest (or largest) element outside the top proper flat of
  the current monomial. With `prune`, monomials that `eradicates` proves to
  vanish are dropped early.
  """
  _check_gamma_power(k)
  if pivot_policy not in PivotPolicy.ALL:
    raise ValueError('Unknown pivot policy: {}'.format(pivot_policy))
  factory = counter_factory or metrics_util.NoOpCounterFactory()
  return _multiply_gamma(
      m, MonomialSum([(monomial, 1)]), k,
      lambda current, _: _policy_pivot(m, current, pivot_policy), prune,
      factory.create_counter(_GAMMA_PRUNED))


def multiply_gamma_sequence(m, monomial, pivots, counter_factory=None):
  # type: (matroid.Matroid, Monomial, List[int], Optional[metrics_util.CounterFactoryInterface]) -> MonomialSum
  """Returns the monomial times gamma_{c_1} ... gamma_{c_k}.

  After each factor the monomials that cannot survive the remaining factors
  are dropped, so every remaining c_t lies outside the top proper flat of
  the monomials it multiplies.
  """
  pivots = list(pivots)
  factory = counter_factory or metrics_util.NoOpCounterFactory()
  return _multiply_gamma(
      m, MonomialSum([(monomial, 1)]), len(pivots),
      lambda _, step: pivots[step], True,
      factory.create_counter(_GAMMA_PRUNED))


def _check_k(m, k):
  # type: (matroid.Matroid, int) -> None
  r = m.rank_total - 1
  if not 0 <= k <= r:
    raise ValueError('k = {} is out of range [0, {}].'.format(k, r))


def _strictly_increasing(masks):
  # type: (List[int]) -> bool
  return all(lower != upper and eset.is_subset(lower, upper)
             for lower, upper in zip(masks, masks[1:]))


def resistant_filter(m, table, k):
  # type: (matroid.Matroid, ExpansionTable, int) -> Optional[Certificate]
  """Returns the NBC certificate of a resistant table of delta^(n-k-1).

  A table is accepted when its chain is F_1 < ... < F_(r-k) < E over E,
  followed by E over G_(r-k+1) > ... > G_(n-k-1), its single double jump is
  at r - k, S = {e_1, ..., e_(r-k)} is independent with B = S + P(S) an NBC
  basis whose internally active set is P(S) of size k + 1, the arrivals are
  e_i = min F_i before the double jump and e_i = min(G_i - P(S)) after it,
  and the chain is the NBC biflag of B. Rejected tables give None.
  """
  _check_k(m, k)
  ground = m.ground
  chain = table.monomial.chain
  arrivals = table.arrivals
  length = m.n_plus_1 - 2 - k
  if len(chain) != length:
    raise ValueError('Expected a table of delta^{}, got degree {}.'.format(
        length, len(chain)))
  d = m.rank_total - 1 - k

  def _reject(reason):
    logging.debug('Rejected %r for k=%d: %s', table, k, reason)
    return None

  if (any(b.coflat != ground for b in chain[:d]) or
      any(b.flat != ground for b in chain[d:])):
    return _reject('mixed biflat or double jump away from r - k')
  if not _strictly_increasing(
      [eset.EMPTY] + [b.flat for b in chain[:d]] + [ground]):
    return _reject('flats do not increase strictly')
  if not _strictly_increasing(
      [eset.EMPTY] + [b.coflat for b in reversed(chain[d:])] + [ground]):
    return _reject('coflats do not decrease strictly')
  if table.gap_jump(m).double_jumps != (d,):
    return _reject('double jumps are not exactly at r - k')
  independent = eset.from_elements(arrivals[:d])
  if not m.is_independent(independent):
    return _reject('S is dependent')
  completion = activity.greedy_completion(m, independent)
  basis = independent | completion
  record = activity.activities(m, basis)
  if record.externally_active:
    return _reject('S + P(S) is not an NBC basis')
  if (record.internally_active != completion or
      eset.cardinality(completion) != k + 1):
    return _reject('IA(B) differs from P(S) or has the wrong size')
  for i in range(d):
    if arrivals[i] != eset.min_element(chain[i].flat):
      return _reject('e_{} is not the minimum of F_{}'.format(i + 1, i + 1))
  for i in range(d, length):
    remainder = chain[i].coflat & ~completion
    if not remainder or arrivals[i] != eset.min_element(remainder):
      return _reject('e_{} is not the minimum of G_{} - P(S)'.format(
          i + 1, i + 1))
  biflag, _ = conormal.nbc_biflag(m, basis)
  if biflag != table.monomial:
    return _reject('the chain is not the NBC biflag of B')
  certificate = Certificate(basis, record.internally_active, independent,
                            completion)
  check_resistant_table(m, table, certificate)
  return certificate


def _truncated_closure(m, members, top_rank):
  # type: (matroid.Matroid, int, int) -> int
  if m.rank(members) >= top_rank:
    return m.ground
  return m.closure(members)


def check_resistant_table(m, table, certificate):
  # type: (matroid.Matroid, ExpansionTable, Certificate) -> None
  """Checks the structure of an accepted resistant table.

  Verified are: the flat jumps are the descents of the arrivals plus 0 and
  the double jump d, and the coflat jumps are the ascents plus d and the
  length; arrivals never cross into a later coflat or an earlier flat; the
  chain is rebuilt from the arrivals, d and any x of the gap D; the flats
  and coflats have every rank; D lies below every arrival; and
  E - arrivals = P(S) + {x} with x = min(E - B) in D.
  """
  def _fail(message):
    raise conormal.ExpansionInvariantError('{!r}: {}'.format(table, message))

  ground = m.ground
  dual = m.dual()
  chain = table.monomial.chain
  arrivals = table.arrivals
  length = len(chain)
  d = eset.cardinality(certificate.independent)
  check_table(m, table)
  data = table.gap_jump(m)
  gap = data.gaps[d]

  descents = {i for i in range(1, length) if arrivals[i - 1] > arrivals[i]}
  ascents = {i for i in range(1, length) if arrivals[i - 1] < arrivals[i]}
  if set(data.flat_jumps) != descents | {0, d}:
    _fail('flat jumps are not the descents')
  if set(data.coflat_jumps) != ascents | {d, length}:
    _fail('coflat jumps are not the ascents')

  for i in range(length):
    for j in range(i + 1, length):
      if (arrivals[i] < arrivals[j] and
          eset.contains(chain[j].coflat, arrivals[i])):
        _fail('e_{} lies in G_{}'.format(i + 1, j + 1))
      if (arrivals[i] > arrivals[j] and
          eset.contains(chain[i].flat, arrivals[j])):
        _fail('e_{} lies in F_{}'.format(j + 1, i + 1))

  flat_steps = [i for i in data.flat_jumps if i != d]
  coflat_steps = [i for i in data.coflat_jumps if i != d]
  for x in eset.elements(gap):
    for j in range(1, length + 1):
      members = eset.from_elements(
          arrivals[i] for i in flat_steps if i + 1 <= j)
      comembers = eset.from_elements(
          arrivals[i - 1] for i in coflat_steps if i >= j)
      if j > d:
        members |= eset.bit(x)
      else:
        comembers |= eset.bit(x)
      if _truncated_closure(m, members, d + 1) != chain[j - 1].flat:
        _fail('F_{} is not rebuilt from the bottom row'.format(j))
      if m.coclosure(comembers) != chain[j - 1].coflat:
        _fail('G_{} is not rebuilt from the bottom row'.format(j))

  for i in range(d):
    if m.rank(chain[i].flat) != i + 1:
      _fail('F_{} has rank {}'.format(i + 1, m.rank(chain[i].flat)))
  for i in range(d, length):
    if dual.rank(chain[i].coflat) != length - i:
      _fail('G_{} has corank {}'.format(i + 1, dual.rank(chain[i].coflat)))

  if not gap or eset.max_element(gap) >= min(arrivals, default=m.n_plus_1):
    _fail('the gap is not below every arrival')
  x = eset.min_element(ground & ~certificate.basis)
  if not eset.contains(gap, x):
    _fail('min(E - B) = {} is not in the gap'.format(x))
  if ground & ~eset.from_elements(arrivals) != certificate.completion | 1 << x:
    _fail('E minus the arrivals is not P(S) + min(E - B)')


def certified_product(m, table, k, counter_factory=None):
  # type: (matroid.Matroid, ExpansionTable, int, Optional[metrics_util.CounterFactoryInterface]) -> Optional[Tuple[Certificate, Monomial]]
  """Returns the certificate and the gamma^k product of a resistant table.

  The table is multiplied by gamma_{c_1} ... gamma_{c_k} with c_1 > ... > c_k
  the largest internally active elements of its basis; the product must be
  the extended NBC monomial of the basis. Rejected tables give None.
  """
  factory = counter_factory or metrics_util.NoOpCounterFactory()
  certificate = resistant_filter(m, table, k)
  if certificate is None:
    factory.create_counter(_REJECTED_TABLES).inc()
    return None
  factory.create_counter(_RESISTANT_TABLES).inc()
  pivots = eset.elements(certificate.internally_active)[::-1][:k]
  product = multiply_gamma_sequence(m, table.monomial, pivots, factory)
  expected = conormal.extended_nbc_biflag(m, certificate.basis)
  if product != MonomialSum([(expected, 1)]):
    raise conormal.ExpansionInvariantError(
        'gamma^{} times the NBC monomial of {} is {!r}, not {!r}'.format(
            k, eset.elements(certificate.basis), product, expected))
  return certificate, expected


def extended_nbc_sum(m, k):
  # type: (matroid.Matroid, int) -> MonomialSum
  """Returns the extended NBC monomials of the NBC bases with |IA| = k + 1."""
  _check_k(m, k)
  return MonomialSum(
      (conormal.extended_nbc_biflag(m, record.basis), 1)
      for record in activity.nbc_bases(m, internal_activity=k + 1))


def expand_gamma_delta(m,  # type: matroid.Matroid
                       k,  # type: int
                       strategy=Strategy.THEOREM_PATH,  # type: str
                       prune=True,  # type: bool
                       pivot_policy=PivotPolicy.MIN,  # type: str
                       counter_factory=None,  # type: Optional[metrics_util.CounterFactoryInterface]
                       spill_threshold=None,  # type: Optional[int]
                       spill_dir=None  # type: Optional[str]
                      ):
  # type: (...) -> GammaDeltaResult
  """Expands gamma^k delta^(n-k-1) into monomials of degree n - 1.

  Args:
    m: A loopless and coloopless matroid.
    k: The power of gamma, between 0 and r.
    strategy: A `Strategy` value.
    prune: Whether to drop delta tables early. The theorem path drops tables
      with a mixed biflat or too many flats; the exhaustive strategy drops
      monomials that `eradicates` proves to vanish.
    pivot_policy: The `PivotPolicy` of the exhaustive strategy.
    counter_factory: Creates the expansion counters.
    spill_threshold: See `canonical_delta_expansion`.
    spill_dir: See `canonical_delta_expansion`.
  Returns:
    The monomials with multiplicities, the census of the delta expansion and,
    for the theorem path, the certificates of the resistant tables.
  """
  m.validate_for_conormal()
  _check_k(m, k)
  if strategy not in Strategy.ALL:
    raise ValueError('Unknown strategy: {}'.format(strategy))
  if pivot_policy not in PivotPolicy.ALL:
    raise ValueError('Unknown pivot policy: {}'.format(pivot_policy))
  factory = counter_factory or metrics_util.NoOpCounterFactory()
  power = m.n_plus_1 - 2 - k
  if strategy == Strategy.THEOREM_PATH:
    frontier_filter = theorem_path_filter(m, k) if prune else None
  else:
    frontier_filter = eradication_filter(m, k) if prune else None
  tables, census = canonical_delta_expansion(
      m, power, frontier_filter, factory, spill_threshold, spill_dir)

  monomials = MonomialSum()
  certificates = []  # type: List[Certificate]
  if strategy == Strategy.THEOREM_PATH:
    for table in tables:
      certified = certified_product(m, table, k, factory)
      if certified is None:
        continue
      certificate, expected = certified
      if expected in monomials:
        raise conormal.ExpansionInvariantError(
            'Two resistant tables give {!r}'.format(expected))
      monomials.add(expected)
      certificates.append(certificate)
  else:
    grouped = MonomialSum((table.monomial, 1) for table in tables)
    monomials = _multiply_gamma(
        m, grouped, k,
        lambda current, _: _policy_pivot(m, current, pivot_policy), prune,
        factory.create_counter(_GAMMA_PRUNED))
  logging.info('gamma^%d delta^%d (%s): %d monomials, %d distinct.', k, power,
               strategy, monomials.total, monomials.distinct)
  return GammaDeltaResult(monomials, census, certificates)


def gamma_delta_power(m, k, strategy=Strategy.THEOREM_PATH, prune=True,
                      pivot_policy=PivotPolicy.MIN):
  # type: (matroid.Matroid, int, str, bool, str) -> MonomialSum
  return expand_gamma_delta(m, k, strategy, prune, pivot_policy).monomials


def degree(m, monomials):
  # type: (matroid.Matroid, MonomialSum) -> int
  """Returns the degree of a sum of monomials of degree n - 1.

  Each monomial that is a biflag has degree 1; other products have degree 0.
  """
  expected = m.n_plus_1 - 2
  total = 0
  for monomial, multiplicity in monomials.items():
    if len(monomial) != expected:
      raise ValueError('The degree map needs monomials of degree {}, got '
                       '{!r}'.format(expected, monomial))
    if conormal.is_biflag(m, monomial):
      total += multiplicity
  return total
