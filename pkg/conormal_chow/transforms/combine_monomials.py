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

"""Beam combiner function for summing monomials."""

from typing import Iterable, Tuple  # pylint: disable=unused-import

import apache_beam as beam

from conormal_chow.libs import chow_expansion


class _SumMonomialsFn(beam.CombineFn):
  """Combiner function adding (monomial, multiplicity) pairs into a sum."""

  def create_accumulator(self):
    return chow_expansion.MonomialSum()

  def add_input(self,
                total,  # type: chow_expansion.MonomialSum
                term  # type: Tuple[chow_expansion.Monomial, int]
               ):
    # type: (...) -> chow_expansion.MonomialSum
    monomial, multiplicity = term
    total.add(monomial, multiplicity)
    return total

  def merge_accumulators(self, accumulators):
    # type: (Iterable[chow_expansion.MonomialSum]) -> chow_expansion.MonomialSum
    merged = self.create_accumulator()
    for total in accumulators:
      merged.merge(total)
    return merged

  def extract_output(self, total):
    # type: (chow_expansion.MonomialSum) -> chow_expansion.MonomialSum
    return total


class CombineMonomials(beam.PTransform):
  """A PTransform summing (monomial, multiplicity) pairs.

  Reads a PCollection of pairs and produces a PCollection with a single
  `MonomialSum`, which is empty when the input is.
  """

  def expand(self, pcoll):
    return pcoll | 'SumMonomials' >> beam.CombineGlobally(_SumMonomialsFn())
