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

"""A PTransform multiplying monomials by a power of gamma."""

import json
from typing import Iterable, Tuple  # pylint: disable=unused-import

import apache_beam as beam

from conormal_chow.libs import chow_expansion
from conormal_chow.libs import matroid  # pylint: disable=unused-import
from conormal_chow.libs import metrics_util


def _monomial_key(monomial):
  # type: (chow_expansion.Monomial) -> str
  return json.dumps(monomial.to_json(), sort_keys=True)


class MultiplyGamma(beam.PTransform):
  """Multiplies every monomial of a PCollection by gamma^k.

  Equal monomials are counted first, so each distinct monomial is expanded
  once. The output holds (monomial, multiplicity) pairs; equal monomials may
  come out of different inputs and are merged by `CombineMonomials`.
  """

  def __init__(self, m, k, pivot_policy=chow_expansion.PivotPolicy.MIN,
               prune=True):
    # type: (matroid.Matroid, int, str, bool) -> None
    """Initializes the transform.

    Args:
      m: A loopless and coloopless matroid.
      k: The power of gamma.
      pivot_policy: The `chow_expansion.PivotPolicy` choosing each gamma_c.
      prune: Whether monomials that `eradicates` proves to vanish are dropped.
    """
    super().__init__()
    if k < 0:
      raise ValueError('The power of gamma must be nonnegative: {}'.format(k))
    if pivot_policy not in chow_expansion.PivotPolicy.ALL:
      raise ValueError('Unknown pivot policy: {}'.format(pivot_policy))
    self._matroid = m
    self._k = k
    self._pivot_policy = pivot_policy
    self._prune = prune
    self._counter_factory = metrics_util.CounterFactory()

  def _multiply(self, keyed_count):
    # type: (Tuple[str, int]) -> Iterable[Tuple[chow_expansion.Monomial, int]]
    key, count = keyed_count
    monomial = chow_expansion.Monomial.from_json(json.loads(key))
    products = chow_expansion.multiply_gamma_power(
        self._matroid, monomial, self._k, self._pivot_policy, self._prune,
        self._counter_factory)
    for product, multiplicity in products.items():
      yield product, multiplicity * count

  def expand(self, pcoll):
    return (pcoll
            | 'KeyByChain' >> beam.Map(_monomial_key)
            | 'CountMonomials' >> beam.combiners.Count.PerElement()
            | 'MultiplyByGamma' >> beam.FlatMap(self._multiply))
