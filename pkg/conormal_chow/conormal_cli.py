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

r"""Command line tool for the conormal Chow ring of ordered matroids.

Run locally:
python -m conormal_chow.conormal_cli info conormal_chow/data/corpus/cube.graph

python -m conormal_chow.conormal_cli expand \
  conormal_chow/data/corpus/pyramid.graph --power 6 --census

python -m conormal_chow.conormal_cli verify \
  conormal_chow/data/corpus/pyramid.graph --all --format json \
  --output pyramid-verify.json

Run the theorem-path expansion as a Beam pipeline:
python -m conormal_chow.conormal_cli verify \
  conormal_chow/data/corpus/cube.graph --k 2 --strategy theorem-path \
  --use_beam --direct_num_workers=4

The exit code is 0 when every requested check passes, 1 when a check fails and
2 when the input or the arguments are invalid.
"""


import argparse  # pylint: disable=unused-import
import logging
import sys
from typing import Dict, List, Optional, Tuple  # pylint: disable=unused-import

from conormal_chow import pipeline_common
from conormal_chow.libs import activity
from conormal_chow.libs import chow_expansion
from conormal_chow.libs import eset
from conormal_chow.libs import matroid  # pylint: disable=unused-import
from conormal_chow.libs import metrics_util
from conormal_chow.libs import oracle
from conormal_chow.libs import report_generator
from conormal_chow.options import conormal_options

_EXIT_SUCCESS = 0
_EXIT_FAILED_CHECK = 1
_EXIT_INVALID_INPUT = 2

_REPORT_OPTIONS = [conormal_options.InputOptions,
                   conormal_options.OutputOptions]

_COMMAND_LINE_OPTIONS = {
    'info': _REPORT_OPTIONS,
    'hvec': _REPORT_OPTIONS,
    'tutte': _REPORT_OPTIONS,
    'nbc': _REPORT_OPTIONS + [conormal_options.NbcOptions],
    'expand': _REPORT_OPTIONS + [conormal_options.ExpansionOptions],
    'verify': _REPORT_OPTIONS + [conormal_options.VerifyOptions],
    'logcheck': _REPORT_OPTIONS,
}


def _fh(vector):
  # type: (activity.FHVector) -> Dict[str, List[int]]
  return {'f': list(vector.f), 'h': list(vector.h)}


def _info(m, known_args, pipeline_args):
  # pylint: disable=unused-argument
  return report_generator.build_report('info', m)


def _hvec(m, known_args, pipeline_args):
  # pylint: disable=unused-argument
  bc, rbc = activity.fh_vectors(m)
  return report_generator.build_report(
      'hvec', m, bc=_fh(bc), rbc=_fh(rbc),
      independence=_fh(activity.independence_fh_vectors(m)),
      beta=activity.beta_invariant(m))


def _tutte(m, known_args, pipeline_args):
  # pylint: disable=unused-argument
  coefficients = activity.tutte(m).coefficients
  return report_generator.build_report(
      'tutte', m, tutte=[{'i': i, 'j': j, 't': coefficients[(i, j)]}
                         for i, j in sorted(coefficients)])


def _nbc(m, known_args, pipeline_args):
  # pylint: disable=unused-argument
  records = activity.nbc_bases(m, known_args.activity)
  return report_generator.build_report(
      'nbc', m, nbc_bases=[
          {'basis': eset.elements(record.basis),
           'internally_active': eset.elements(record.internally_active)}
          for record in records])


def _expand(m, known_args, pipeline_args):
  # pylint: disable=unused-argument
  power = m.n_plus_1 - 2 if known_args.power is None else known_args.power
  factory = metrics_util.DictCounterFactory()
  tables, census = chow_expansion.canonical_delta_expansion(
      m, power, counter_factory=factory,
      spill_threshold=known_args.spill_threshold,
      spill_dir=known_args.spill_dir or None)
  logging.info('Expansion counters: %s', factory.values())
  monomials = chow_expansion.MonomialSum(
      (table.monomial, 1) for table in tables)
  return report_generator.build_report(
      'expand', m, power=power,
      census=census if known_args.census else None, monomials=monomials)


def _expand_gamma_delta(m, k, strategy, known_args, pipeline_args):
  # type: (matroid.Matroid, int, str, argparse.Namespace, List[str]) -> Tuple[chow_expansion.MonomialSum, Optional[chow_expansion.Census]]
  """Returns the expansion of gamma^k delta^(n-k-1) and its delta census.

  The Beam pipeline only logs its per-power counters, so it has no census.
  """
  if known_args.use_beam:
    return pipeline_common.run_gamma_delta_pipeline(
        m, k, strategy, pipeline_args, known_args.pivot_policy,
        known_args.prune), None
  result = chow_expansion.expand_gamma_delta(
      m, k, strategy, known_args.prune, known_args.pivot_policy)
  return result.monomials, result.census


def _verify(m, known_args, pipeline_args):
  r = m.rank_total - 1
  ks = list(range(r + 1)) if known_args.all else [known_args.k]
  strategies = (chow_expansion.Strategy.ALL
                if known_args.strategy == conormal_options.BOTH_STRATEGIES
                else (known_args.strategy,))
  bc, _ = activity.fh_vectors(m)
  rows = []
  computed = []
  passed = True
  monomials = None  # type: Optional[chow_expansion.MonomialSum]
  census = None  # type: Optional[chow_expansion.Census]
  for k in ks:
    row = {'k': k, 'expected': bc.h[r - k], 'theorem_path': None,
           'exhaustive': None, 'bijective': None}
    for strategy in strategies:
      expansion, expansion_census = _expand_gamma_delta(
          m, k, strategy, known_args, pipeline_args)
      if strategy == chow_expansion.Strategy.THEOREM_PATH:
        count = expansion.total
        row['theorem_path'] = count
        row['bijective'] = expansion == chow_expansion.extended_nbc_sum(m, k)
        if not row['bijective']:
          logging.error('gamma^%d: the theorem-path monomials are not the '
                        'extended NBC monomials.', k)
      else:
        count = chow_expansion.degree(m, expansion)
        row['exhaustive'] = count
        if (set(expansion.monomials()) !=
            set(chow_expansion.extended_nbc_sum(m, k).monomials())):
          # Only the degree is proven to agree for other pivot choices.
          logging.warning('gamma^%d (exhaustive, %s pivots): the monomials '
                          'differ from the extended NBC monomials.', k,
                          known_args.pivot_policy)
      if count != row['expected']:
        logging.error('gamma^%d (%s): degree %d, expected h_%d = %d.', k,
                      strategy, count, r - k, row['expected'])
        passed = False
      if monomials is None:
        monomials, census = expansion, expansion_census
    passed = passed and row['bijective'] is not False
    computed.append(row['theorem_path'] if row['theorem_path'] is not None
                    else row['exhaustive'])
    rows.append(row)

  cross_check_lines = None  # type: Optional[List[str]]
  if known_args.cross_check:
    oracle_strategy = (chow_expansion.Strategy.EXHAUSTIVE
                       if known_args.strategy ==
                       chow_expansion.Strategy.EXHAUSTIVE
                       else chow_expansion.Strategy.THEOREM_PATH)
    cross_check = oracle.hvector_triple_check(m, oracle_strategy, ks)
    cross_check_lines = cross_check.render().splitlines()
    passed = passed and cross_check.passed
  single_k = len(ks) == 1
  return report_generator.build_report(
      'verify', m, k=known_args.k,
      power=m.n_plus_1 - 2 - ks[0] if single_k else None,
      census=census if single_k else None,
      monomials=monomials if single_k else None,
      h_vector_check={'expected': [row['expected'] for row in rows],
                      'computed': computed},
      cross_check=cross_check_lines, verification=rows, passed=passed)


def _logcheck(m, known_args, pipeline_args):
  # pylint: disable=unused-argument
  bc, rbc = activity.fh_vectors(m)
  entries = []
  for name, vector in (('BC', bc), ('RBC', rbc),
                       ('IN', activity.independence_fh_vectors(m))):
    for kind, values in (('f', vector.f), ('h', vector.h)):
      logconcave = oracle.logconcavity_check(values)
      if not logconcave:
        logging.error('The %s-vector %s of %s is not log-concave.', kind,
                      values, name)
      entries.append({'complex': name, 'vector': kind, 'values': list(values),
                      'logconcave': logconcave})
  return report_generator.build_report(
      'logcheck', m, logconcavity=entries,
      passed=all(entry['logconcave'] for entry in entries))


_COMMANDS = {
    'info': _info,
    'hvec': _hvec,
    'tutte': _tutte,
    'nbc': _nbc,
    'expand': _expand,
    'verify': _verify,
    'logcheck': _logcheck,
}


def _write(report, known_args):
  # type: (Dict, argparse.Namespace) -> None
  if known_args.output:
    report_generator.write_report(report, known_args.format, known_args.output)
    logging.info('Report written to %s.', known_args.output)
  else:
    sys.stdout.write(report_generator.render(report, known_args.format))


def run(argv=None):
  # type: (Optional[List[str]]) -> int
  """Runs one command and returns the exit code."""
  argv = sys.argv[1:] if argv is None else argv
  logging.info('Command: %s', ' '.join(argv))
  try:
    known_args, pipeline_args = pipeline_common.parse_args(
        argv, _COMMAND_LINE_OPTIONS)
    m = pipeline_common.load_matroid(known_args)
    pipeline_common.validate_parameters(known_args, m)
    report = _COMMANDS[known_args.command](m, known_args, pipeline_args)
    _write(report, known_args)
  except ValueError as e:
    logging.error('%s', e)
    return _EXIT_INVALID_INPUT
  if report.get('passed') is False:
    logging.error('Some checks failed.')
    return _EXIT_FAILED_CHECK
  return _EXIT_SUCCESS


def main():
  logging.getLogger().setLevel(logging.INFO)
  sys.exit(run())


if __name__ == '__main__':
  main()
