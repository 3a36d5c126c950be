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

"""Helpers for subsets of an ordered ground set encoded as bit masks.

An ESet is a plain `int` whose bit `e` is set iff element `e` is a member.
Elements are the integers 0..n with their natural order, and the ground set
holds at most `MAX_GROUND_SET_SIZE` elements, so every subset fits in a
machine word.

Text rendering follows the convention of writing elements 10, 11, ... as
lowercase letters, e.g. the set {5, 6, 7, 8, 11} renders as '5678b'.
"""


import string
from typing import Iterable, List, Tuple  # pylint: disable=unused-import

__all__ = ['MAX_GROUND_SET_SIZE', 'EMPTY', 'bit', 'full', 'from_elements',
           'elements', 'cardinality', 'min_element', 'max_element',
           'contains', 'is_subset', 'lex_key', 'element_label', 'render',
           'from_labels']

MAX_GROUND_SET_SIZE = 64
EMPTY = 0

_LETTER_LABELS = string.ascii_lowercase
_FULL_SET_LABEL = 'E'
_EMPTY_SET_LABEL = '∅'


def bit(element):
  # type: (int) -> int
  return 1 << element


def full(n_plus_1):
  # type: (int) -> int
  """Returns the ground set {0, ..., n} of a matroid on `n_plus_1` elements."""
  if not 0 <= n_plus_1 <= MAX_GROUND_SET_SIZE:
    raise ValueError('Ground set size must be in [0, {}]: {}'.format(
        MAX_GROUND_SET_SIZE, n_plus_1))
  return (1 << n_plus_1) - 1


def from_elements(members):
  # type: (Iterable[int]) -> int
  mask = EMPTY
  for e in members:
    if not 0 <= e < MAX_GROUND_SET_SIZE:
      raise ValueError('Element out of range: {}'.format(e))
    mask |= 1 << e
  return mask


def elements(mask):
  # type: (int) -> List[int]
  """Returns the members of `mask` in increasing order."""
  result = []
  while mask:
    low = mask & -mask
    result.append(low.bit_length() - 1)
    mask ^= low
  return result


def cardinality(mask):
  # type: (int) -> int
  return bin(mask).count('1')


def min_element(mask):
  # type: (int) -> int
  if not mask:
    raise ValueError('The empty set has no minimum.')
  return (mask & -mask).bit_length() - 1


def max_element(mask):
  # type: (int) -> int
  if not mask:
    raise ValueError('The empty set has no maximum.')
  return mask.bit_length() - 1


def contains(mask, element):
  # type: (int, int) -> bool
  return bool(mask >> element & 1)


def is_subset(mask, other):
  # type: (int, int) -> bool
  return not mask & ~other


def lex_key(mask):
  # type: (int) -> Tuple[int, ...]
  """Sort key comparing sets as increasing element sequences."""
  return tuple(elements(mask))


def element_label(element):
  # type: (int) -> str
  if element < 10:
    return str(element)
  if element < 10 + len(_LETTER_LABELS):
    return _LETTER_LABELS[element - 10]
  return '[{}]'.format(element)


def render(mask, n_plus_1=None):
  # type: (int, int) -> str
  """Renders `mask` as a label string, using 'E' for the full ground set."""
  if n_plus_1 is not None and mask == full(n_plus_1):
    return _FULL_SET_LABEL
  if not mask:
    return _EMPTY_SET_LABEL
  return ''.join(element_label(e) for e in elements(mask))


def from_labels(labels, n_plus_1=None):
  # type: (str, int) -> int
  """Inverse of `render` for single-character labels, e.g. '5678b'."""
  if labels == _FULL_SET_LABEL:
    if n_plus_1 is None:
      raise ValueError('The size of the ground set is needed to parse E.')
    return full(n_plus_1)
  if labels == _EMPTY_SET_LABEL:
    return EMPTY
  members = []
  for label in labels:
    if label.isdigit():
      members.append(int(label))
    elif label in _LETTER_LABELS:
      members.append(10 + _LETTER_LABELS.index(label))
    else:
      raise ValueError('Invalid element label {!r} in {!r}'.format(
          label, labels))
  return from_elements(members)
