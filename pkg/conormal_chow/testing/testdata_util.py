# Copyright 2017 Google Inc.  All Rights Reserved.
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

"""Util functions for accessing the matroid corpus."""


import functools
import os.path

from conormal_chow.libs import matroid  # pylint: disable=unused-import
from conormal_chow.libs import matroid_parser

__all__ = ['get_corpus_path', 'get_corpus_dir', 'load_corpus_matroid']

PYRAMID = 'pyramid.graph'
CUBE = 'cube.graph'
TRIANGLE = 'triangle.graph'
U24 = 'u24.bases'


def get_corpus_dir():
  """Returns the full path of the packaged corpus directory."""
  return os.path.join(
      os.path.dirname(os.path.dirname(__file__)), 'data', 'corpus')


def get_corpus_path(file_name):
  """Returns the full path of the specified ``file_name`` in the corpus."""
  return os.path.join(get_corpus_dir(), file_name)


@functools.lru_cache(maxsize=None)
def load_corpus_matroid(file_name):
  # type: (str) -> matroid.Matroid
  """Loads a corpus matroid; instances are shared across tests."""
  return matroid_parser.load_matroid(get_corpus_path(file_name))
