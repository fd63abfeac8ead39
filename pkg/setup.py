#
# setup.py
#
# Copyright (c) 2026 droop-snr developers
#
# This file is part of droop-snr.
#
# droop-snr is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# droop-snr is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with droop-snr.  If not, see <http://www.gnu.org/licenses/>.
#
# pylint: skip-file
"""Package information of the generalized droop formula SNR calculator.
"""
from os import path
from setuptools import setup, find_packages


def read(fname):
    """Read a file.
    """
    with open(path.join(path.dirname(__file__), fname)) as fp:
        return fp.read()


def load_requires_from_file(filepath):
    """Read a package list from a given file path.

    Args:
      filepath: file path of the package list.

    Returns:
      a list of package names.
    """
    with open(filepath) as fp:
        return [
            line.split("#")[0].strip() for line in fp
            if line.split("#")[0].strip()]


setup(
    name='droop-snr',
    version='0.1.0',
    author="droop-snr developers",
    description="GDF and GN-model SNR of power-mode amplified optical links",
    long_description=read("README.rst"),
    packages=find_packages(exclude=["tests"]),
    package_data={"droop": ["data/reference.json"]},
    install_requires=load_requires_from_file("requirements.txt"),
    entry_points={
        "console_scripts": [
            "droop-snr = droop.cli:main",
        ],
    },
    test_suite='tests.suite',
    license="GPLv3",
    python_requires=">=3.5",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Natural Language :: English",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Physics"
    ]
)
