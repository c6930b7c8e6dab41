# pyzeta - Numerical laboratory for the Riemann zeta function, its zeros and the primes
#
# Copyright (C) 2026 pyzeta developers. All rights reserved.
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 2
# of the License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# Author:
#   pyzeta developers
#

# Standard imports
from sys import exit
from os import system
from setuptools import setup, Command
# Custom imports
import pyzeta


class DocumentationCommand(Command):
    """Custom command for building the documentation with Sphinx.
    """

    description = "Builds the documentation using Sphinx"
    user_options = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        """Runs Sphinx
        """
        exit(system("cd docs && make html"))


with open("README.md", "r") as fh:
    long_description = fh.read()


setup(name=pyzeta.__title__,  # Package information
      version=pyzeta.__version__,
      author='pyzeta developers',
      description='Numerical laboratory for the Riemann zeta function, its zeros and the primes',
      long_description=long_description,
      long_description_content_type="text/markdown",
      url=pyzeta.__url__,
      download_url=pyzeta.__url__,
      license=pyzeta.__license__,
      classifiers=['Development Status :: 3 - Alpha',
                   'Intended Audience :: Science/Research',
                   'Intended Audience :: Education',
                   'License :: OSI Approved :: GNU General Public License v2 or later (GPLv2+)',
                   'Programming Language :: Python :: 3',
                   'Topic :: Scientific/Engineering :: Mathematics'],
      # Packages list
      packages=['pyzeta', 'pyzeta.utils', 'pyzeta.utils.crypto'],
      provides=['pyzeta'],
      python_requires='>=3.8',

      # Script files
      scripts=['bin/pyzeta'],

      # Tests command
      test_suite='tests.test_suite',

      # Documentation commands
      cmdclass={'doc': DocumentationCommand},

      # Requirements
      install_requires=open('requirements.txt').read().splitlines(),

      # Optional requirements for docs and some examples
      extras_require={"docs": open('requirements-docs.txt').read().splitlines(),
                      "examples": open('requirements-examples.txt').read().splitlines()},
      )
