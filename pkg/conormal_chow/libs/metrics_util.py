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

"""Counters for the expansion engine, backed by Beam metrics or a dict.

The expansion functions in `chow_expansion` take a counter factory instead of
calling Beam directly, so the same code counts tables inside a Beam pipeline
(`CounterFactory`), in a plain process run (`DictCounterFactory`) or not at
all (`NoOpCounterFactory`):

```
factory = DictCounterFactory()
tables, census = chow_expansion.canonical_delta_expansion(
    m, 6, counter_factory=factory)
factory.values()['delta_tables']
```
"""


import collections
import logging
from typing import Dict  # pylint: disable=unused-import

from apache_beam import metrics
from apache_beam.metrics import metric

__all__ = ['CounterInterface', 'CounterFactoryInterface', 'NoOpCounterFactory',
           'CounterFactory', 'DictCounterFactory', 'log_all_counters']

# The name space in which all metrics created by this module are.
_METRICS_NAMESPACE = 'conormal_chow_metrics'

# The name of the entry for counters in the dictionary that metrics().query() of
# Beam returns.
_COUNTERS = 'counters'


class CounterInterface():
  """The interface of counter objects"""

  def inc(self, n=1):
    # type: (int) -> None
    """Subclass implementations should do increment by `n`."""
    raise NotImplementedError


class _NoOpCounter(CounterInterface):

  def inc(self, n=1):
    # type: (int) -> None
    pass


class _CounterWrapper(CounterInterface):
  """A wrapper for Beam counters."""

  def __init__(self, counter_name):
    # type: (str) -> None
    self._counter = metrics.Metrics.counter(_METRICS_NAMESPACE, counter_name)

  def inc(self, n=1):
    # type: (int) -> None
    self._counter.inc(n)


class _DictCounter(CounterInterface):

  def __init__(self, values, counter_name):
    # type: (Dict[str, int], str) -> None
    self._values = values
    self._counter_name = counter_name

  def inc(self, n=1):
    # type: (int) -> None
    self._values[self._counter_name] += n


class CounterFactoryInterface():
  """The interface for counter factories."""

  def create_counter(self, counter_name):
    # type: (str) -> CounterInterface
    """Returns a counter with the given name."""
    raise NotImplementedError


class NoOpCounterFactory(CounterFactoryInterface):
  """A factory that creates counters that do nothing."""

  def create_counter(self, counter_name):
    # type: (str) -> CounterInterface
    return _NoOpCounter()


class CounterFactory(CounterFactoryInterface):
  """A factory for Beam counters in the project's metrics namespace."""

  def create_counter(self, counter_name):
    # type: (str) -> CounterInterface
    return _CounterWrapper(counter_name)


class DictCounterFactory(CounterFactoryInterface):
  """A factory whose counters add up in a shared dictionary.

  Counters created with the same name share their value.
  """

  def __init__(self):
    self._values = collections.Counter()  # type: Dict[str, int]

  def create_counter(self, counter_name):
    # type: (str) -> CounterInterface
    self._values[counter_name] += 0
    return _DictCounter(self._values, counter_name)

  def values(self):
    # type: () -> Dict[str, int]
    return dict(self._values)


def log_all_counters(pipeline_result):
  """Logs all counters that belong to _METRICS_NAMESPACE."""
  counter_filter = metric.MetricsFilter().with_namespace(_METRICS_NAMESPACE)
  query_result = pipeline_result.metrics().query(counter_filter)
  for counter in query_result[_COUNTERS]:
    logging.info('Counter %s = %d', counter.key.metric.name, counter.committed)
