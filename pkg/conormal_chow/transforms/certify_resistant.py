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

"""A PTransform keeping the resistant tables of a delta expansion."""

from typing import Iterable, Tuple  # pylint: disable=unused-import

import apache_beam as beam

from conormal_chow.libs import chow_expansion
from conormal_chow.libs import matroid  # pylint: disable=unused-import
from conormal_chow.libs import metrics_util


class CertifyResistant(beam.PTransform):
  """Maps the resistant tables of delta^(n-k-1) to their gamma^k products.

  Tables rejected by `resistant_filter` are dropped. Each accepted table gives
  (extended NBC monomial of its basis, 1).
  """

  def __init__(self, m, k):
    # type: (matroid.Matroid, int) -> None
    super().__init__()
    r = m.rank_total - 1
    if not 0 <= k <= r:
      raise ValueError('k = {} is out of range [0, {}].'.format(k, r))
    self._matroid = m
    self._k = k
    self._counter_factory = metrics_util.CounterFactory()

  def _certify(self, table):
    # type: (chow_expansion.ExpansionTable) -> Iterable[Tuple[chow_expansion.Monomial, int]]
    certified = chow_expansion.certified_product(
        self._matroid, table, self._k, self._counter_factory)
    if certified is not None:
      _, monomial = certified
      yield monomial, 1

  def expand(self, pcoll):
    return pcoll | 'CertifyResistant' >> beam.FlatMap(self._certify)
