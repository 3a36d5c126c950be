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

"""Generates the JSON and text reports of the command line tool.

A report is a dictionary whose top-level fields always appear in the order of
`_FIELD_ORDER`, so that writing a report, reading it back with `load_report`
and writing it again gives the same bytes. JSON reports list sets as element
numbers; text reports render elements from 10 on as letters and the ground set
as E.

Text output example (`expand pyramid.graph --power 2 --census`):
matroid  .../pyramid.graph
backend  graph
n+1      8
r+1      4
r*+1     4
loops    ∅
coloops  ∅
bases    45
power  2
Census
power  tables  distinct
0      1       1
1      29      29
2      352     333
peak frontier  352
Monomials
1  5|E 45|E
..."""


import json
from typing import Dict, List, Optional  # pylint: disable=unused-import

from apache_beam.io import filesystems

from conormal_chow.libs import activity
from conormal_chow.libs import chow_expansion
from conormal_chow.libs import eset
from conormal_chow.libs import matroid  # pylint: disable=unused-import

__all__ = ['OutputFormat', 'matroid_summary', 'build_report', 'render_json',
           'render_text', 'render', 'write_report', 'load_report',
           'monomials_from_report']

_FIELD_ORDER = ('command', 'matroid', 'k', 'power', 'census', 'monomials',
                'multiplicities', 'h_vector_check', 'cross_check',
                'verification', 'bc', 'rbc', 'independence', 'beta', 'tutte',
                'nbc_bases', 'logconcavity', 'passed')
# Rendered oracle output; JSON reports leave it out.
_TEXT_ONLY_FIELDS = ('cross_check',)
_DELIMITER = '  '


class OutputFormat():
  TEXT = 'text'
  JSON = 'json'
  ALL = (TEXT, JSON)


def matroid_summary(m):
  # type: (matroid.Matroid) -> Dict
  return {'source': m.source,
          'backend': 'graph' if m.is_graphic else 'bases',
          'n_plus_1': m.n_plus_1,
          'rank': m.rank_total,
          'corank': m.dual().rank_total,
          'loops': eset.elements(m.loops),
          'coloops': eset.elements(m.coloops),
          'bases': activity.tutte(m).num_bases}


def build_report(command, m, **fields):
  # type: (str, matroid.Matroid, **object) -> Dict
  """Returns the report of `command` on `m` with its fields in order.

  `MonomialSum` and `Census` values are converted to their JSON form; a
  `monomials` MonomialSum also fills the `multiplicities` field.
  """
  unknown = sorted(set(fields) - set(_FIELD_ORDER))
  if unknown:
    raise ValueError('Unknown report fields: {}'.format(unknown))
  values = dict(fields)
  values['command'] = command
  values['matroid'] = matroid_summary(m)
  monomials = values.get('monomials')
  if isinstance(monomials, chow_expansion.MonomialSum):
    values.update(monomials.to_json())
  census = values.get('census')
  if isinstance(census, chow_expansion.Census):
    values['census'] = {'with_multiplicity': list(census.with_multiplicity),
                        'distinct': list(census.distinct),
                        'peak_frontier': census.peak_frontier}
  return _ordered(values)


def _ordered(report):
  # type: (Dict) -> Dict
  return {key: report[key] for key in _FIELD_ORDER
          if key in report and report[key] is not None}


def render_json(report):
  # type: (Dict) -> str
  report = {key: value for key, value in _ordered(report).items()
            if key not in _TEXT_ONLY_FIELDS}
  return json.dumps(report, indent=2, ensure_ascii=False) + '\n'


def _set(members, n_plus_1):
  # type: (List[int], int) -> str
  return eset.render(eset.from_elements(members), n_plus_1)


def _rows(rows):
  # type: (List[List[object]]) -> List[str]
  """Left-aligns the columns of `rows`."""
  cells = [[str(cell) for cell in row] for row in rows]
  widths = [max(len(row[i]) for row in cells if i < len(row))
            for i in range(max(len(row) for row in cells))]
  return [_DELIMITER.join(cell.ljust(widths[i])
                          for i, cell in enumerate(row)).rstrip()
          for row in cells]


def _matroid_lines(summary):
  # type: (Dict) -> List[str]
  n_plus_1 = summary['n_plus_1']
  return _rows([['matroid', summary['source']],
                ['backend', summary['backend']],
                ['n+1', n_plus_1],
                ['r+1', summary['rank']],
                ['r*+1', summary['corank']],
                ['loops', _set(summary['loops'], n_plus_1)],
                ['coloops', _set(summary['coloops'], n_plus_1)],
                ['bases', summary['bases']]])


def _census_lines(census):
  # type: (Dict) -> List[str]
  rows = [['power', 'tables', 'distinct']]
  rows.extend([power, tables, distinct] for power, (tables, distinct) in
              enumerate(zip(census['with_multiplicity'], census['distinct'])))
  return (['Census'] + _rows(rows) +
          ['peak frontier{}{}'.format(_DELIMITER, census['peak_frontier'])])


def _monomial_lines(report, n_plus_1):
  # type: (Dict, int) -> List[str]
  lines = ['Monomials']
  for chain, multiplicity in zip(report['monomials'],
                                 report['multiplicities']):
    lines.append('{}{}{}'.format(multiplicity, _DELIMITER, ' '.join(
        '{}|{}'.format(_set(b['F'], n_plus_1), _set(b['G'], n_plus_1))
        for b in chain)))
  return lines


def _h_vector_lines(check):
  # type: (Dict) -> List[str]
  return ['h-vector check'] + _rows(
      [['expected'] + check['expected'], ['computed'] + check['computed']])


def _vector_lines(title, vector):
  # type: (str, Dict) -> List[str]
  return ['{} f={} h={}'.format(title, tuple(vector['f']), tuple(vector['h']))]


def _table_lines(title, entries, columns):
  # type: (str, List[Dict], List[str]) -> List[str]
  rows = [columns]
  rows.extend([entry[column] for column in columns] for entry in entries)
  return [title] + _rows(rows)


def render_text(report):
  # type: (Dict) -> str
  """Renders a report for reading next to hand-made tables."""
  report = _ordered(report)
  n_plus_1 = report['matroid']['n_plus_1']
  lines = _matroid_lines(report['matroid'])
  for key in ('k', 'power'):
    if key in report:
      lines.append('{}{}{}'.format(key, _DELIMITER, report[key]))
  if 'census' in report:
    lines.extend(_census_lines(report['census']))
  if 'monomials' in report:
    lines.extend(_monomial_lines(report, n_plus_1))
  if 'h_vector_check' in report:
    lines.extend(_h_vector_lines(report['h_vector_check']))
  if 'cross_check' in report:
    lines.extend(report['cross_check'])
  if 'verification' in report:
    lines.extend(_table_lines(
        'Verification', report['verification'],
        ['k', 'expected', 'theorem_path', 'exhaustive', 'bijective']))
  for key, title in (('bc', 'BC'), ('rbc', 'RBC'), ('independence', 'IN')):
    if key in report:
      lines.extend(_vector_lines(title, report[key]))
  if 'beta' in report:
    lines.append('beta{}{}'.format(_DELIMITER, report['beta']))
  if 'tutte' in report:
    lines.extend(_table_lines('Tutte coefficients', report['tutte'],
                              ['i', 'j', 't']))
  if 'nbc_bases' in report:
    lines.append('NBC bases')
    lines.extend(_rows(
        [['basis', 'IA']] +
        [[_set(entry['basis'], n_plus_1),
          _set(entry['internally_active'], n_plus_1)]
         for entry in report['nbc_bases']]))
  if 'logconcavity' in report:
    lines.extend(_rows(
        [['complex', 'vector', 'values', 'log-concave']] +
        [[entry['complex'], entry['vector'], tuple(entry['values']),
          entry['logconcave']] for entry in report['logconcavity']]))
  if 'passed' in report:
    lines.append('passed{}{}'.format(_DELIMITER, report['passed']))
  return '\n'.join(lines) + '\n'


def render(report, output_format):
  # type: (Dict, str) -> str
  if output_format == OutputFormat.JSON:
    return render_json(report)
  if output_format == OutputFormat.TEXT:
    return render_text(report)
  raise ValueError('Unknown output format: {}'.format(output_format))


def write_report(report, output_format, file_path):
  # type: (Dict, str, str) -> None
  """Writes the rendered report to `file_path`."""
  content = render(report, output_format)
  with filesystems.FileSystems.create(file_path) as file_to_write:
    file_to_write.write(content.encode('utf-8'))


def load_report(file_path):
  # type: (str) -> Dict
  """Reads a JSON report written by `write_report`."""
  with filesystems.FileSystems.open(file_path) as file_to_read:
    content = file_to_read.read().decode('utf-8')
  try:
    report = json.loads(content)
  except ValueError as e:
    raise ValueError('{} is not a JSON report: {}'.format(file_path, e)) from e
  if not isinstance(report, dict) or 'matroid' not in report:
    raise ValueError('{} is not a JSON report.'.format(file_path))
  return report


def monomials_from_report(report):
  # type: (Dict) -> chow_expansion.MonomialSum
  if 'monomials' not in report:
    raise ValueError('The report has no monomials.')
  return chow_expansion.MonomialSum.from_json(
      {'monomials': report['monomials'],
       'multiplicities': report['multiplicities']})
