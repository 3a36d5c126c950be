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

"""Biflats, canonical expansions and activities of ordered matroids."""

import setuptools

REQUIRED_PACKAGES = [
    'apache-beam>=2.24.0',
    'networkx>=2.5',
    'sympy>=1.6',
    # Used by the tests.
    'mock',
]

setuptools.setup(
    name='conormal_chow',
    version='0.1.0',
    description=('Library and command line tool for the conormal Chow ring of '
                 'ordered matroids: canonical expansions of powers of delta, '
                 'multiplication by gamma and their verification against '
                 'Tutte activities'),
    author='Google',
    license='Apache 2.0',

    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers for the list
    # of values.
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
    ],

    install_requires=REQUIRED_PACKAGES,
    packages=setuptools.find_packages(),
    package_data={
        'conormal_chow': ['data/corpus/*.graph', 'data/corpus/*.bases']
    },
    entry_points={
        'console_scripts': ['conormal=conormal_chow.conormal_cli:main'],
    },
)
