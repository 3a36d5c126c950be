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

"""A PTransform for the canonical expansion of powers of delta."""

from typing import Callable, Iterable, Optional  # pylint: disable=unused-import

import apache_beam as beam

from conormal_chow.libs import chow_expansion
from conormal_chow.libs import matroid  # pylint: disable=unused-import
from conormal_chow.libs import metrics_util
from conormal_chow.transforms import fusion_break

_TableFilter = Callable[[chow_expansion.ExpansionTable], bool]


class _DeltaStepFn(beam.DoFn):
  """Multiplies each table by delta and drops the products the filter rejects."""

  def __init__(self, m, frontier_filter=None):
    # type: (matroid.Matroid, Optional[_TableFilter]) -> None
    super().__init__()
    self._matroid = m
    self._frontier_filter = frontier_filter
    self._counter_factory = metrics_util.CounterFactory()
    self._tables_counter = self._counter_factory.create_counter('delta_tables')
    self._zero_counter = self._counter_factory.create_counter(
        'delta_zero_products')
    self._pruned_counter = self._counter_factory.create_counter('delta_pruned')

  def process(self, table):
    # type: (chow_expansion.ExpansionTable) -> Iterable[chow_expansion.ExpansionTable]
    products = chow_expansion.delta_step(self._matroid, table)
    if not products:
      self._zero_counter.inc()
    for product in products:
      if (self._frontier_filter is not None and
          not self._frontier_filter(product)):
        self._pruned_counter.inc()
        continue
      self._tables_counter.inc()
      yield product


class ExpandDelta(beam.PTransform):
  """Applies `power` canonical delta steps to a PCollection of tables.

  The input is usually the single empty table. Each step is followed by a
  `FusionBreak` so that every power is redistributed across workers.
  """

  def __init__(self, m, power, frontier_filter=None):
    # type: (matroid.Matroid, int, Optional[_TableFilter]) -> None
    """Initializes the transform.

    Args:
      m: A loopless and coloopless matroid.
      power: The number of delta steps, between 0 and n - 1.
      frontier_filter: If given, tables for which it returns False are dropped
        after every step.
    """
    super().__init__()
    m.validate_for_conormal()
    if not 0 <= power <= m.n_plus_1 - 2:
      raise ValueError('Power {} is out of range [0, {}].'.format(
          power, m.n_plus_1 - 2))
    self._matroid = m
    self._power = power
    self._frontier_filter = frontier_filter

  def expand(self, pcoll):
    for step in range(1, self._power + 1):
      pcoll = (pcoll
               | 'DeltaStep{}'.format(step) >> beam.ParDo(
                   _DeltaStepFn(self._matroid, self._frontier_filter))
               | 'FusionBreak{}'.format(step) >> fusion_break.FusionBreak())
    return pcoll
