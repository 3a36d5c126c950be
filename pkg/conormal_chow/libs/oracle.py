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

"""Brute-force cross-checks of the activity and expansion modules.

The checks here recompute on small instances what the main modules compute
with interval enumeration and fundamental circuits: flats come from a scan of
all subsets, graph cycles and bonds from `networkx`, and h-vectors from a
`sympy` polynomial expansion. Every check records its outcome in a
`CrossCheckReport`; a failing check carries the offending object rendered.
"""


import collections
import functools
import logging
import random
from typing import Dict, Iterable, List, Optional, Sequence, Tuple  # pylint: disable=unused-import

import networkx as nx
import sympy

from conormal_chow.libs import activity
from conormal_chow.libs import chow_expansion
from conormal_chow.libs import conormal
from conormal_chow.libs import eset
from conormal_chow.libs import matroid

__all__ = ['CheckResult', 'CrossCheckReport', 'h_vector_by_polynomial',
           'hvector_triple_check', 'step_lemma_bruteforce',
           'logconcavity_check', 'activity_bruteforce', 'activity_crosscheck',
           'random_graphic_matroids']

# Subset scans beyond 2^_MAX_SCAN_SIZE subsets are refused.
_MAX_SCAN_SIZE = 16
_SCAN_CACHE_SIZE = 8
_MAX_STEP_LEMMA_SIZE = 8

CheckResult = collections.namedtuple('CheckResult',
                                     ['name', 'passed', 'payload'])


class CrossCheckReport():
  """The outcomes of the checks run on one instance.

  `values` holds the numbers a check computed, e.g. the h-vector, so that
  callers can report them next to the verdict.
  """

  def __init__(self, instance):
    # type: (str) -> None
    self.instance = instance
    self.values = {}  # type: Dict[str, object]
    self._results = []  # type: List[CheckResult]

  def add(self, name, passed, payload=''):
    # type: (str, bool, str) -> None
    if not passed and not payload:
      raise ValueError('The failing check {} has no counterexample.'.format(
          name))
    if not passed:
      logging.warning('%s: check %s failed: %s', self.instance, name, payload)
    self._results.append(CheckResult(name, bool(passed), payload))

  @property
  def results(self):
    # type: () -> List[CheckResult]
    return list(self._results)

  @property
  def passed(self):
    # type: () -> bool
    return all(result.passed for result in self._results)

  def failures(self):
    # type: () -> List[CheckResult]
    return [result for result in self._results if not result.passed]

  def render(self):
    # type: () -> str
    lines = ['{}: {} checks, {} failed'.format(
        self.instance, len(self._results), len(self.failures()))]
    for result in self._results:
      if result.passed:
        lines.append('  PASS {}'.format(result.name))
      else:
        lines.append('  FAIL {}: {}'.format(result.name, result.payload))
    return '\n'.join(lines)


def _instance_name(m):
  # type: (matroid.Matroid) -> str
  return m.source or repr(m)


def h_vector_by_polynomial(f):
  # type: (Sequence[int]) -> List[int]
  """Returns the h-vector of (f_0, ..., f_D) by expanding a polynomial.

  sum_i f_i (t - 1)^(D - i) equals sum_k h_k t^(D - k).
  """
  top = len(f) - 1
  t = sympy.Symbol('t')
  polynomial = sympy.Poly(
      sum((value * (t - 1)**(top - i) for i, value in enumerate(f)),
          sympy.Integer(0)), t)
  return [int(polynomial.coeff_monomial(t**(top - k)))
          for k in range(top + 1)]


def hvector_triple_check(m,  # type: matroid.Matroid
                         strategy=chow_expansion.Strategy.THEOREM_PATH,  # type: str
                         ks=None  # type: Optional[Iterable[int]]
                        ):
  # type: (...) -> CrossCheckReport
  """Compares h_(r-k) of BC(M) computed by independent routes.

  The routes are the Tutte coefficient t_(k+1,0), the f -> h transform of
  BC(M) and of RBC(M), the polynomial expansion of the f-vector of BC(M),
  and the degree of gamma^k delta^(n-k-1).

  Args:
    m: A loopless and coloopless matroid.
    strategy: The `chow_expansion.Strategy` of the expansion route.
    ks: The powers of gamma to check; all of 0..r by default.
  Returns:
    The report. `values['h_vector']` maps each k to the expansion degree.
  """
  m.validate_for_conormal()
  report = CrossCheckReport(_instance_name(m))
  r = m.rank_total - 1
  polynomial = activity.tutte(m)
  bc, rbc = activity.fh_vectors(m)
  expanded = h_vector_by_polynomial(bc.f)
  report.add('polynomial h-vector', tuple(expanded) == bc.h,
             'f={} gives {} by expansion and {} by binomials'.format(
                 bc.f, tuple(expanded), bc.h))
  degrees = {}  # type: Dict[int, int]
  for k in (range(r + 1) if ks is None else ks):
    monomials = chow_expansion.gamma_delta_power(m, k, strategy)
    routes = (polynomial.coefficient(k + 1, 0), bc.h[r - k], rbc.h[r - k],
              expanded[r - k], chow_expansion.degree(m, monomials))
    degrees[k] = routes[-1]
    report.add(
        'h_{} (k={})'.format(r - k, k), len(set(routes)) == 1,
        'tutte={} bc={} rbc={} polynomial={} expansion={}'.format(*routes))
  report.values['h_vector'] = degrees
  return report


def _scan_flats(m):
  # type: (matroid.MatroidView) -> List[int]
  flats = []
  for mask in range(1 << m.n_plus_1):
    rank = m.rank(mask)
    if all(m.rank(mask | 1 << e) > rank
           for e in eset.elements(m.ground & ~mask)):
      flats.append(mask)
  return flats


def _all_biflats(m):
  # type: (matroid.Matroid) -> List[conormal.Biflat]
  ground = m.ground
  coflats = [g for g in _scan_flats(m.dual()) if g]
  return [conormal.Biflat(f, g)
          for f in _scan_flats(m) if f
          for g in coflats
          if f | g == ground and not (f == ground and g == ground)]


def _comparable(first, second):
  # type: (conormal.Biflat, conormal.Biflat) -> bool
  return ((first.flat & ~second.flat == 0 and
           second.coflat & ~first.coflat == 0) or
          (second.flat & ~first.flat == 0 and
           first.coflat & ~second.coflat == 0))


def _extensions(m, monomial, biflats):
  # type: (matroid.Matroid, chow_expansion.Monomial, Iterable[conormal.Biflat]) -> set
  """Returns the biflags obtained by adding one of `biflats` to the monomial."""
  result = set()
  for biflat in biflats:
    if biflat in monomial.chain:
      continue
    if monomial.covered | (biflat.flat & biflat.coflat) == m.ground:
      continue
    if all(_comparable(biflat, other) for other in monomial):
      result.add(chow_expansion.Monomial(monomial.chain + (biflat,)))
  return result


def _render_difference(expected, actual):
  # type: (set, set) -> str
  return 'missing {} extra {}'.format(
      sorted(expected - actual, key=lambda b: b.sort_key),
      sorted(actual - expected, key=lambda b: b.sort_key))


def step_lemma_bruteforce(m, max_power=None):
  # type: (matroid.Matroid, Optional[int]) -> CrossCheckReport
  """Checks `delta_step` and `gamma_step` against a filter of all biflats.

  For every distinct monomial of delta^p with p < max_power, the product with
  delta_e for e the pivot, and with gamma_c for every c outside the top
  proper flat, must be the set of biflags that add one biflat containing e
  (resp. containing c with F != E) to the monomial.

  Args:
    m: A loopless and coloopless matroid with at most 8 elements.
    max_power: One more than the largest power whose monomials are checked;
      all powers by default.
  """
  if m.n_plus_1 > _MAX_STEP_LEMMA_SIZE:
    raise ValueError('Step lemma checks are limited to {} elements, got '
                     '{}'.format(_MAX_STEP_LEMMA_SIZE, m.n_plus_1))
  m.validate_for_conormal()
  top_power = m.n_plus_1 - 1
  if max_power is None:
    max_power = top_power
  if not 0 < max_power <= top_power:
    raise ValueError('max_power {} is out of range [1, {}].'.format(
        max_power, top_power))
  report = CrossCheckReport(_instance_name(m))
  ground = m.ground
  biflats = _all_biflats(m)
  report.values['biflats'] = len(biflats)
  checked = 0
  for power in range(max_power):
    tables, _ = chow_expansion.canonical_delta_expansion(m, power)
    seen = set()
    delta_failures = []
    gamma_failures = []
    for table in tables:
      monomial = table.monomial
      if monomial in seen:
        continue
      seen.add(monomial)
      e = chow_expansion.pivot(m, monomial)
      expected = _extensions(
          m, monomial,
          (b for b in biflats if eset.contains(b.flat & b.coflat, e)))
      actual = {t.monomial for t in chow_expansion.delta_step(m, table)}
      if expected != actual:
        delta_failures.append('{!r} times delta_{}: {}'.format(
            monomial, e, _render_difference(expected, actual)))
      top = eset.EMPTY
      for biflat in monomial:
        if biflat.flat != ground:
          top = biflat.flat
      for c in eset.elements(ground & ~top):
        expected = _extensions(
            m, monomial,
            (b for b in biflats
             if b.flat != ground and eset.contains(b.flat, c)))
        actual = set(chow_expansion.gamma_step(m, monomial, c))
        if expected != actual:
          gamma_failures.append('{!r} times gamma_{}: {}'.format(
              monomial, c, _render_difference(expected, actual)))
    checked += len(seen)
    report.add('delta step at power {}'.format(power), not delta_failures,
               delta_failures[0] if delta_failures else '')
    report.add('gamma step at power {}'.format(power), not gamma_failures,
               gamma_failures[0] if gamma_failures else '')
  report.values['monomials'] = checked
  return report


def logconcavity_check(sequence):
  # type: (Sequence[int]) -> bool
  """Whether a_i^2 >= a_(i-1) a_(i+1) inside the support of the sequence."""
  values = list(sequence)
  if any(value < 0 for value in values):
    raise ValueError('Log-concavity needs a nonnegative sequence: {}'.format(
        values))
  support = [i for i, value in enumerate(values) if value]
  if not support:
    return True
  values = values[support[0]:support[-1] + 1]
  return all(values[i]**2 >= values[i - 1] * values[i + 1]
             for i in range(1, len(values) - 1))


def _graph_of(m):
  # type: (matroid.Matroid) -> Tuple[int, ...]
  if not m.is_graphic:
    raise ValueError('Graph oracles need a graphic matroid, got {!r}'.format(
        m))
  if m.n_plus_1 > _MAX_SCAN_SIZE:
    raise ValueError('Graph scans are limited to {} edges, got {}'.format(
        _MAX_SCAN_SIZE, m.n_plus_1))
  return m.backend.edges


def _multigraph(edges, mask, nodes=()):
  # type: (Tuple[Tuple[int, int], ...], int, Iterable[int]) -> nx.MultiGraph
  graph = nx.MultiGraph()
  graph.add_nodes_from(nodes)
  graph.add_edges_from(edges[e] for e in eset.elements(mask))
  return graph


@functools.lru_cache(maxsize=_SCAN_CACHE_SIZE)
def _cycles_and_bonds(edges):
  # type: (Tuple[Tuple[int, int], ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]
  """Returns the edge sets of all cycles and all bonds of the multigraph."""
  size = len(edges)
  ground = (1 << size) - 1
  nodes = sorted({node for edge in edges for node in edge})
  components = nx.number_connected_components(
      _multigraph(edges, ground, nodes))

  def _components_without(mask):
    return nx.number_connected_components(
        _multigraph(edges, ground & ~mask, nodes))

  cycles = []
  bonds = []
  for mask in range(1, 1 << size):
    subgraph = _multigraph(edges, mask)
    if (all(degree == 2 for _, degree in subgraph.degree()) and
        nx.is_connected(subgraph)):
      cycles.append(mask)
    if (_components_without(mask) == components + 1 and
        all(_components_without(mask & ~(1 << e)) == components
            for e in eset.elements(mask))):
      bonds.append(mask)
  logging.debug('Found %d cycles and %d bonds on %d edges.', len(cycles),
                len(bonds), size)
  return tuple(cycles), tuple(bonds)


def activity_bruteforce(m, basis):
  # type: (matroid.Matroid, int) -> activity.ActivityRecord
  """Returns the activities of a spanning tree from explicit cycles and bonds.

  The fundamental cycle of e outside the tree is the only cycle inside
  B + e; the fundamental bond of e in the tree is the only bond inside
  (E - B) + e.
  """
  edges = _graph_of(m)
  cycles, bonds = _cycles_and_bonds(edges)
  ground = m.ground
  complement = ground & ~basis
  nodes = sorted({node for edge in edges for node in edge})
  forest = _multigraph(edges, basis, nodes)
  components = nx.number_connected_components(forest)
  if (components != nx.number_connected_components(
      _multigraph(edges, ground, nodes)) or
      forest.number_of_edges() != len(nodes) - components):
    raise ValueError('Not a spanning tree: {}'.format(eset.elements(basis)))

  def _unique(candidates, containing, inside):
    found = [c for c in candidates
             if eset.contains(c, containing) and eset.is_subset(c, inside)]
    if len(found) != 1:
      raise conormal.ExpansionInvariantError(
          '{} fundamental sets for element {} and {}'.format(
              len(found), containing, eset.elements(basis)))
    return found[0]

  externally_active = eset.from_elements(
      e for e in eset.elements(complement)
      if eset.min_element(_unique(cycles, e, basis | 1 << e)) == e)
  internally_active = eset.from_elements(
      e for e in eset.elements(basis)
      if eset.min_element(_unique(bonds, e, complement | 1 << e)) == e)
  return activity.ActivityRecord(
      basis=basis,
      internally_active=internally_active,
      externally_active=externally_active,
      internally_passive=basis & ~internally_active,
      externally_passive=complement & ~externally_active)


def activity_crosscheck(m, bases=None):
  # type: (matroid.Matroid, Optional[Iterable[int]]) -> CrossCheckReport
  """Compares `activity.activities` with `activity_bruteforce`.

  Args:
    m: A graphic matroid.
    bases: The spanning trees to compare; all of them by default.
  """
  report = CrossCheckReport(_instance_name(m))
  bases = activity.all_bases(m) if bases is None else list(bases)
  mismatches = []
  for basis in bases:
    expected = activity_bruteforce(m, basis)
    actual = activity.activities(m, basis)
    if expected != actual:
      mismatches.append('B={} IA {} vs {} EA {} vs {}'.format(
          eset.render(basis), eset.render(expected.internally_active),
          eset.render(actual.internally_active),
          eset.render(expected.externally_active),
          eset.render(actual.externally_active)))
  report.values['bases'] = len(bases)
  report.add('activities', not mismatches,
             mismatches[0] if mismatches else '')
  return report


def random_graphic_matroids(count=20, size=8, nodes=5, seed=0):
  # type: (int, int, int, int) -> List[matroid.Matroid]
  """Returns random bridgeless graphs with `size` edges as matroids.

  Graphs are drawn with `networkx.gnm_random_graph` from seeds produced by a
  generator seeded with `seed`, so the list is reproducible.
  """
  if size > nodes * (nodes - 1) // 2:
    raise ValueError('{} nodes cannot carry {} edges.'.format(nodes, size))
  rng = random.Random(seed)
  result = []
  while len(result) < count:
    graph_seed = rng.randrange(1 << 30)
    graph = nx.gnm_random_graph(nodes, size, seed=graph_seed)
    if nx.has_bridges(graph):
      continue
    edges = sorted(tuple(sorted(edge)) for edge in graph.edges())
    result.append(matroid.from_graph(
        ((label, u, v) for label, (u, v) in enumerate(edges)),
        source='gnm-{}-{}-{}'.format(nodes, size, graph_seed)))
  return result
