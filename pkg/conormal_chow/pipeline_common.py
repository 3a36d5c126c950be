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

"""Common functions used by the conormal command line tool.

It includes parsing the command line arguments, loading and validating the
matroid, and building and running the Beam pipeline of an expansion.
"""

from typing import Dict, List, Optional, Tuple  # pylint: disable=unused-import
import argparse
import json
import logging
import re
import tempfile

import apache_beam as beam
from apache_beam.io import filesystems
from apache_beam.options import pipeline_options

from conormal_chow.libs import chow_expansion
from conormal_chow.libs import conormal
from conormal_chow.libs import matroid  # pylint: disable=unused-import
from conormal_chow.libs import matroid_parser
from conormal_chow.libs import metrics_util
from conormal_chow.options import conormal_options  # pylint: disable=unused-import
from conormal_chow.transforms import certify_resistant
from conormal_chow.transforms import combine_monomials
from conormal_chow.transforms import expand_delta
from conormal_chow.transforms import multiply_gamma

_DATAFLOW_RUNNER_ARG_VALUE = 'DataflowRunner'
_MONOMIALS_FILE_NAME = 'gamma-{k}-delta-{power}.json'


def parse_args(argv, command_line_options):
  # type: (List[str], Dict[str, List[type]]) -> Tuple[argparse.Namespace, List[str]]
  """Parses the arguments.

  Args:
    argv: A list of strings: the command followed by its arguments.
    command_line_options: Maps each command to the list of
      ``ConormalOptions`` types whose options it takes.
  Returns:
    The parsed arguments, with the command in ``command``, and the arguments
    that are left for the Beam pipeline options.
  """
  parser = argparse.ArgumentParser(prog='conormal')
  subparsers = parser.add_subparsers(dest='command')
  subparsers.required = True
  options = {}  # type: Dict[str, List[conormal_options.ConormalOptions]]
  for command, option_types in command_line_options.items():
    subparser = subparsers.add_parser(command)
    subparser.register('type', 'bool', lambda v: v.lower() == 'true')
    options[command] = [option() for option in option_types]
    for command_options in options[command]:
      command_options.add_arguments(subparser)
  known_args, pipeline_args = parser.parse_known_args(argv)
  for command_options in options[known_args.command]:
    command_options.validate(known_args)
  _raise_error_on_invalid_flags(pipeline_args)
  return known_args, pipeline_args


def load_matroid(known_args):
  # type: (argparse.Namespace) -> matroid.Matroid
  """Loads the matroid named by ``known_args.input``."""
  m = matroid_parser.load_matroid(known_args.input, known_args.backend)
  logging.info('Loaded %r.', m)
  return m


def validate_parameters(known_args, m):
  # type: (argparse.Namespace, matroid.Matroid) -> None
  """Checks the numeric arguments against the ranks of the loaded matroid.

  Raises:
    ValueError: If a power is out of range, or if an expansion is requested
      for a matroid with loops or coloops.
  """
  r = m.rank_total - 1
  max_power = m.n_plus_1 - 2
  k = getattr(known_args, 'k', None)
  if k is not None and k > r:
    raise ValueError('--k must be at most r = {}, got {}.'.format(r, k))
  power = getattr(known_args, 'power', None)
  if power is not None and power > max_power:
    raise ValueError('--power must be at most n - 1 = {}, got {}.'.format(
        max_power, power))
  activity_value = getattr(known_args, 'activity', None)
  if activity_value is not None and activity_value > r + 1:
    raise ValueError('--activity must be at most r + 1 = {}, got {}.'.format(
        r + 1, activity_value))
  if hasattr(known_args, 'k') or hasattr(known_args, 'power'):
    m.validate_for_conormal()


def _raise_error_on_invalid_flags(pipeline_args):
  # type: (List[str]) -> None
  """Raises an error if there are unrecognized flags."""
  parser = argparse.ArgumentParser()
  for cls in pipeline_options.PipelineOptions.__subclasses__():
    if '_add_argparse_args' in cls.__dict__:
      cls._add_argparse_args(parser)  # pylint: disable=protected-access
  known_pipeline_args, unknown = parser.parse_known_args(pipeline_args)
  if unknown:
    raise ValueError('Unrecognized flag(s): {}'.format(unknown))
  job_name_re = r'^[a-z][-a-z\d]*[a-z\d]+$'
  if (known_pipeline_args.job_name and
      not re.match(job_name_re, known_pipeline_args.job_name)):
    raise ValueError(
        '--job_name must consist of only the characters [-a-z0-9] starting '
        'with a letter and ending with a letter or number')
  if (known_pipeline_args.runner == _DATAFLOW_RUNNER_ARG_VALUE and
      not known_pipeline_args.setup_file):
    raise ValueError('The --setup_file flag is required for DataflowRunner. '
                     'Please provide a path to the setup.py file.')


def _read_monomials(file_path):
  # type: (str) -> chow_expansion.MonomialSum
  with filesystems.FileSystems.open(file_path) as file_to_read:
    lines = file_to_read.read().decode('utf-8').splitlines()
  if len(lines) != 1:
    raise ValueError('Expected one line of monomials in {}, found {}.'.format(
        file_path, len(lines)))
  return chow_expansion.MonomialSum.from_json(json.loads(lines[0]))


def run_gamma_delta_pipeline(
    m,  # type: matroid.Matroid
    k,  # type: int
    strategy=chow_expansion.Strategy.THEOREM_PATH,  # type: str
    pipeline_args=None,  # type: Optional[List[str]]
    pivot_policy=chow_expansion.PivotPolicy.MIN,  # type: str
    prune=True,  # type: bool
    output_dir=None  # type: Optional[str]
    ):
  # type: (...) -> chow_expansion.MonomialSum
  """Expands gamma^k delta^(n-k-1) with a Beam pipeline.

  The frontier of every delta power is a PCollection; the resulting sum is
  written as one JSON line and read back.

  Args:
    m: A loopless and coloopless matroid.
    k: The power of gamma, between 0 and r.
    strategy: A `chow_expansion.Strategy` value.
    pipeline_args: Beam pipeline options; the DirectRunner by default.
    pivot_policy: The pivot policy of the exhaustive strategy.
    prune: Whether to drop delta tables and monomials that cannot contribute.
    output_dir: Where the result file is written. A temporary directory is
      used, and deleted, if not provided.
  Returns:
    The same sum as `chow_expansion.gamma_delta_power`.
  """
  m.validate_for_conormal()
  r = m.rank_total - 1
  if not 0 <= k <= r:
    raise ValueError('k = {} is out of range [0, {}].'.format(k, r))
  if strategy not in chow_expansion.Strategy.ALL:
    raise ValueError('Unknown strategy: {}'.format(strategy))
  power = m.n_plus_1 - 2 - k
  if strategy == chow_expansion.Strategy.THEOREM_PATH:
    frontier_filter = chow_expansion.theorem_path_filter(m, k)
  else:
    frontier_filter = chow_expansion.eradication_filter(m, k)
  if not prune:
    frontier_filter = None
  delete_output = output_dir is None
  output_dir = output_dir or tempfile.mkdtemp()
  output_path = filesystems.FileSystems.join(
      output_dir, _MONOMIALS_FILE_NAME.format(k=k, power=power))

  pipeline = beam.Pipeline(
      options=pipeline_options.PipelineOptions(pipeline_args or []))
  tables = (pipeline
            | 'CreateEmptyTable' >> beam.Create(
                [chow_expansion.ExpansionTable(chow_expansion.Monomial(), ())])
            | 'ExpandDelta' >> expand_delta.ExpandDelta(
                m, power, frontier_filter))
  if strategy == chow_expansion.Strategy.THEOREM_PATH:
    products = tables | 'CertifyResistant' >> (
        certify_resistant.CertifyResistant(m, k))
  else:
    products = (tables
                | 'ExtractMonomials' >> beam.Map(lambda table: table.monomial)
                | 'MultiplyGamma' >> multiply_gamma.MultiplyGamma(
                    m, k, pivot_policy, prune))
  _ = (products
       | 'CombineMonomials' >> combine_monomials.CombineMonomials()
       | 'ToJson' >> beam.Map(lambda total: json.dumps(total.to_json()))
       | 'WriteMonomials' >> beam.io.WriteToText(output_path,
                                                 shard_name_template=''))
  result = pipeline.run()
  result.wait_until_finish()
  metrics_util.log_all_counters(result)

  try:
    monomials = _read_monomials(output_path)
  finally:
    if delete_output:
      filesystems.FileSystems.delete([output_dir])
  if strategy == chow_expansion.Strategy.THEOREM_PATH:
    for monomial, multiplicity in monomials.items():
      if multiplicity != 1:
        raise conormal.ExpansionInvariantError(
            '{} resistant tables give {!r}'.format(multiplicity, monomial))
  logging.info('Pipeline for gamma^%d delta^%d (%s): %d monomials.', k, power,
               strategy, monomials.total)
  return monomials
