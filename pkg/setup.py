#!/usr/bin/env python

# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

import os
from setuptools import setup

# generate MANIFEST.in to add the json schemas and the workspace scripts
with open("MANIFEST.in", "w") as manifest:
    manifest.write("include commaSeq/core/*.json\n")
    manifest.write("include commaSeq/services/*.json\n")
    manifest.write("include commaSeq/tests/pytest.ini\n")
    manifest.write("include workspace/*.*\n")

setup(name='commaSeq',
      install_requires=[
        "jsonschema>=3.2.0",
        "h5py>=2.10.0",
        "numpy>=1.17",
        "requests>=2.22",
        "sympy>=1.6",
        "setuptools>=41.0.0",
        'importlib-metadata >= 1.0 ; python_version < "3.8"',
      ],
      extras_require={
        "test": ["pytest", "pytest-cov", "pytest-timeout", "pytest-xdist", "hypothesis"],
      },
      python_requires=">=3.8",
      version=os.environ.get("COMMASEQ_VERSION", "0.0.0"),
      description='Comma sequences, their landmines and branch-points in arbitrary bases.',
      license="Apache-2",
      include_package_data = True,
      packages=['commaSeq', 'commaSeq.core', 'commaSeq.services', 'commaSeq.tests', 'commaSeq.tests.core',
                'commaSeq.tests.services', 'commaSeq.tests.integration'],
      entry_points = {
        'console_scripts' : ['commaSeq=commaSeq.core.AppConsole:mainConsole',
                            ],
      },
     )
