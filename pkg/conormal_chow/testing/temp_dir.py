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

"""Scratch directories for parser, spill and CLI tests."""


import os
import shutil
import tempfile
from typing import List, Optional  # pylint: disable=unused-import

__all__ = ['TempDir']


class TempDir():
  """Context Manager to create and clean-up a temporary directory."""

  def __init__(self):
    self._tempdir = tempfile.mkdtemp()

  def __enter__(self):
    return self

  def __exit__(self, *args):
    if os.path.exists(self._tempdir):
      shutil.rmtree(self._tempdir)

  def get_path(self):
    """Returns the path to the temporary directory."""
    return self._tempdir

  def create_temp_file(self, suffix='', lines=None):
    # type: (str, Optional[List[str]]) -> str
    """Creates a temporary file in the temporary directory.

    Args:
      suffix: The filename suffix of the temporary file (e.g. '.graph'), which
        also selects the matroid parser in backend auto-detection.
      lines: Lines written to the file as UTF-8; newlines are not added.
    Returns:
      The name of the temporary file created.
    """
    with tempfile.NamedTemporaryFile(delete=False,
                                     dir=self._tempdir,
                                     suffix=suffix) as f:
      if lines:
        f.write(''.join(lines).encode('utf-8'))
      return f.name
