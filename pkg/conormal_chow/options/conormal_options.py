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

import argparse  # pylint: disable=unused-import

from apache_beam.io import filesystems

from conormal_chow.libs import chow_expansion
from conormal_chow.libs import matroid_parser
from conormal_chow.libs import report_generator

# Runs both strategies in `verify`.
BOTH_STRATEGIES = 'both'


class ConormalOptions():
  """Base class for defining groups of options for the conormal tool.

  Commands should create a derived class of ``ConormalOptions`` and override
  the ``add_arguments`` and ``validate`` methods. ``add_arguments`` should add
  all command line arguments of the group to the command's parser.
  ``validate`` should validate the resulting arguments after they are parsed.
  Checks that need the loaded matroid live in
  ``pipeline_common.validate_parameters``.
  """

  def add_arguments(self, parser):
    # type: (argparse.ArgumentParser) -> None
    """Adds all options of this group to parser."""
    raise NotImplementedError

  def validate(self, parsed_args):
    # type: (argparse.Namespace) -> None
    """Validates this group's options parsed from the command line."""


class InputOptions(ConormalOptions):
  """Options for reading the matroid file."""

  def add_arguments(self, parser):
    parser.add_argument(
        'input',
        help=('The matroid file: a .graph file of labelled edges or a .bases '
              'file listing all bases.'))
    parser.add_argument(
        '--backend',
        default=matroid_parser.BackendType.AUTO,
        choices=[matroid_parser.BackendType.AUTO,
                 matroid_parser.BackendType.GRAPH,
                 matroid_parser.BackendType.BASES],
        help=('The parser to use. By default it is picked from the file '
              'extension.'))

  def validate(self, parsed_args):
    # type: (argparse.Namespace) -> None
    if not filesystems.FileSystems.exists(parsed_args.input):
      raise ValueError('Input file {} doesn\'t exist.'.format(
          parsed_args.input))


class OutputOptions(ConormalOptions):
  """Options for writing the report."""

  def add_arguments(self, parser):
    parser.add_argument(
        '--format',
        default=report_generator.OutputFormat.TEXT,
        choices=list(report_generator.OutputFormat.ALL),
        help=('The report format. Text renders elements from 10 on as letters; '
              'JSON always lists element numbers.'))
    parser.add_argument(
        '--output',
        default='',
        help='If provided, the report is written here instead of stdout.')


class NbcOptions(ConormalOptions):
  """Options for listing NBC bases."""

  def add_arguments(self, parser):
    parser.add_argument(
        '--activity',
        type=int, default=None,
        help=('If provided, only NBC bases with this many internally active '
              'elements are listed.'))

  def validate(self, parsed_args):
    # type: (argparse.Namespace) -> None
    if parsed_args.activity is not None and parsed_args.activity < 0:
      raise ValueError('--activity must be nonnegative, got {}.'.format(
          parsed_args.activity))


class ExpansionOptions(ConormalOptions):
  """Options for the canonical expansion of a power of delta."""

  def add_arguments(self, parser):
    parser.add_argument(
        '--power',
        type=int, default=None,
        help='The power of delta to expand. Defaults to n - 1.')
    parser.add_argument(
        '--census',
        type='bool', default=False, nargs='?', const=True,
        help=('If true, the report lists the number of tables and of distinct '
              'monomials at every power, and the largest frontier.'))
    parser.add_argument(
        '--spill_threshold',
        type=int, default=None,
        help=('If provided, frontiers are written to --spill_dir in chunks of '
              'this many tables instead of being held in memory.'))
    parser.add_argument(
        '--spill_dir',
        default='',
        help='Directory for spilled frontiers.')

  def validate(self, parsed_args):
    # type: (argparse.Namespace) -> None
    if parsed_args.power is not None and parsed_args.power < 0:
      raise ValueError('--power must be nonnegative, got {}.'.format(
          parsed_args.power))
    if parsed_args.spill_threshold is not None:
      if parsed_args.spill_threshold < 1:
        raise ValueError('--spill_threshold must be positive, got {}.'.format(
            parsed_args.spill_threshold))
      if not parsed_args.spill_dir:
        raise ValueError('--spill_threshold requires --spill_dir.')


class VerifyOptions(ConormalOptions):
  """Options for verifying the expansion of gamma^k delta^(n-k-1)."""

  def add_arguments(self, parser):
    parser.add_argument(
        '--k',
        type=int, default=None,
        help='The power of gamma to verify. Either this or --all is required.')
    parser.add_argument(
        '--all',
        type='bool', default=False, nargs='?', const=True,
        help='If true, every power of gamma from 0 to r is verified.')
    parser.add_argument(
        '--strategy',
        default=BOTH_STRATEGIES,
        choices=list(chow_expansion.Strategy.ALL) + [BOTH_STRATEGIES],
        help=('The expansion strategy to run. The exhaustive strategy '
              'multiplies every delta table by gamma and is much slower on '
              'large matroids.'))
    parser.add_argument(
        '--pivot_policy',
        default=chow_expansion.PivotPolicy.MIN,
        choices=list(chow_expansion.PivotPolicy.ALL),
        help=('Which element outside the top flat the exhaustive strategy '
              'multiplies by.'))
    parser.add_argument(
        '--prune',
        type='bool', default=True, nargs='?', const=True,
        help=('If true, delta tables that cannot contribute are dropped while '
              'expanding.'))
    parser.add_argument(
        '--cross_check',
        type='bool', default=False, nargs='?', const=True,
        help=('If true, the degrees are also compared with the Tutte '
              'polynomial, the broken circuit complexes and a polynomial '
              'expansion of their f-vector.'))
    parser.add_argument(
        '--use_beam',
        type='bool', default=False, nargs='?', const=True,
        help=('If true, the expansions of every strategy run as Beam '
              'pipelines. Unrecognized flags are passed to the pipeline '
              'options.'))

  def validate(self, parsed_args):
    # type: (argparse.Namespace) -> None
    if (parsed_args.k is None) == (not parsed_args.all):
      raise ValueError('Exactly one of --k and --all has to be provided.')
    if parsed_args.k is not None and parsed_args.k < 0:
      raise ValueError('--k must be nonnegative, got {}.'.format(
          parsed_args.k))
