# Copyright 2019 Google LLC.
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

"""A PTransform that materializes a frontier between two expansion steps.

A delta step can multiply the number of tables by an order of magnitude, and a
runner that fuses consecutive steps runs them with the parallelism of the
first, smallest frontier. Materializing the frontier lets the runner split the
next step anew.

Read more:
  https://cloud.google.com/dataflow/docs/guides/deploying-a-pipeline#fusion-optimization
"""

import apache_beam as beam


class FusionBreak(beam.PTransform):
  """PTransform that returns a PCollection equal to its input.

  The output depends on a side input computed from the input, so the runner
  cannot fuse the producing and the consuming steps.
  """

  def expand(self, pcoll):
    nothing = pcoll | 'DropAll' >> beam.FlatMap(lambda unused_element: ())
    return pcoll | 'Materialize' >> beam.Map(
        lambda element, unused_side: element, beam.pvalue.AsIter(nothing))
