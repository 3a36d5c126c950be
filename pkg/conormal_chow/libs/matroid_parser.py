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

"""Parsers for the `.graph` and `.bases` matroid file formats.

A `.graph` file lists the edges of a graph, one per line:

  # The pyramid.
  edge 0 3 4
  edge 1 2 4

An edge line is `edge <label> <u> <v>`; labels must be exactly 0..n and give
the order of the ground set. A `.bases` file lists all bases of a matroid:

  elements 4
  basis 0 1
  basis 0 2

Everything after `#` is a comment and blank lines are ignored.
"""


import os
from typing import Iterable, List, Tuple  # pylint: disable=unused-import

from apache_beam.io import filesystems

from conormal_chow.libs import eset
from conormal_chow.libs import matroid

__all__ = ['MatroidFileFormatError', 'BackendType', 'parse_graph_lines',
           'parse_bases_lines', 'load_matroid']

_COMMENT_CHARACTER = '#'
_EDGE_KEYWORD = 'edge'
_ELEMENTS_KEYWORD = 'elements'
_BASIS_KEYWORD = 'basis'


class BackendType():
  """Input backends understood by `load_matroid`."""
  GRAPH = 'graph'
  BASES = 'bases'
  AUTO = 'auto'


_EXTENSIONS = {'.graph': BackendType.GRAPH, '.bases': BackendType.BASES}


class MatroidFileFormatError(ValueError):
  """Raised for malformed matroid files; the message names file and line."""

  def __init__(self, source, line_number, message):
    # type: (str, int, str) -> None
    super().__init__('{}:{}: {}'.format(source, line_number, message))
    self.source = source
    self.line_number = line_number


def _tokenized_lines(lines):
  # type: (Iterable[str]) -> Iterable[Tuple[int, List[str]]]
  for line_number, line in enumerate(lines, start=1):
    content = line.split(_COMMENT_CHARACTER, 1)[0].strip()
    if content:
      yield line_number, content.split()


def _parse_int(token, source, line_number):
  # type: (str, str, int) -> int
  try:
    return int(token)
  except ValueError as e:
    raise MatroidFileFormatError(
        source, line_number, 'Expected an integer, got {!r}'.format(
            token)) from e


def parse_graph_lines(lines, source='<graph>'):
  # type: (Iterable[str], str) -> matroid.Matroid
  edges = []
  last_line = 0
  for line_number, tokens in _tokenized_lines(lines):
    last_line = line_number
    if tokens[0] != _EDGE_KEYWORD or len(tokens) != 4:
      raise MatroidFileFormatError(
          source, line_number,
          'Expected "edge <label> <u> <v>", got {!r}'.format(' '.join(tokens)))
    label, u, v = (_parse_int(t, source, line_number) for t in tokens[1:])
    if label < 0:
      raise MatroidFileFormatError(
          source, line_number, 'Negative edge label {}'.format(label))
    if any(label == existing for existing, _, _ in edges):
      raise MatroidFileFormatError(
          source, line_number, 'Duplicate edge label {}'.format(label))
    edges.append((label, u, v))
  try:
    return matroid.from_graph(edges, source)
  except ValueError as e:
    raise MatroidFileFormatError(source, last_line, str(e)) from e


def parse_bases_lines(lines, source='<bases>'):
  # type: (Iterable[str], str) -> matroid.Matroid
  n_plus_1 = None
  bases = []
  last_line = 0
  for line_number, tokens in _tokenized_lines(lines):
    last_line = line_number
    keyword, values = tokens[0], tokens[1:]
    if keyword == _ELEMENTS_KEYWORD:
      if n_plus_1 is not None or len(values) != 1:
        raise MatroidFileFormatError(
            source, line_number,
            'Expected a single "elements <n+1>" line before the bases.')
      n_plus_1 = _parse_int(values[0], source, line_number)
    elif keyword == _BASIS_KEYWORD:
      if n_plus_1 is None:
        raise MatroidFileFormatError(
            source, line_number, 'A basis precedes the "elements" line.')
      members = [_parse_int(v, source, line_number) for v in values]
      bad = [e for e in members if not 0 <= e < n_plus_1]
      if bad:
        raise MatroidFileFormatError(
            source, line_number, 'Elements {} are outside 0..{}'.format(
                bad, n_plus_1 - 1))
      if len(set(members)) != len(members):
        raise MatroidFileFormatError(
            source, line_number, 'Repeated element in basis {}'.format(
                members))
      bases.append(eset.from_elements(members))
    else:
      raise MatroidFileFormatError(
          source, line_number, 'Unknown keyword {!r}'.format(keyword))
  if n_plus_1 is None:
    raise MatroidFileFormatError(source, last_line, 'Missing "elements" line.')
  try:
    return matroid.from_bases(n_plus_1, bases, source)
  except ValueError as e:
    raise MatroidFileFormatError(source, last_line, str(e)) from e


def load_matroid(path, backend=BackendType.AUTO):
  # type: (str, str) -> matroid.Matroid
  """Loads a matroid file, picking the parser from `backend` or the extension."""
  if backend == BackendType.AUTO:
    extension = os.path.splitext(path)[1]
    if extension not in _EXTENSIONS:
      raise ValueError(
          'Cannot infer the backend of {}; use a .graph or .bases file or '
          'pass the backend explicitly.'.format(path))
    backend = _EXTENSIONS[extension]
  with filesystems.FileSystems.open(path) as f:
    lines = f.read().decode('utf-8').splitlines()
  if backend == BackendType.GRAPH:
    return parse_graph_lines(lines, path)
  if backend == BackendType.BASES:
    return parse_bases_lines(lines, path)
  raise ValueError('Unknown backend: {}'.format(backend))
