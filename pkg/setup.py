# setup
# Setup script for the aoistat package
#
# Created:  Sat Oct 17 20:44:19 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: setup.py [] $

"""
Setup script for the aoistat package
"""

##########################################################################
## Imports
##########################################################################

import os

from setuptools import setup, find_packages

##########################################################################
## Package Information
##########################################################################

HERE = os.path.abspath(os.path.dirname(__file__))


def read_requirements(path="requirements.txt"):
    """
    Runtime requirements are the pinned lines above the test section.
    """
    requirements = []
    with open(os.path.join(HERE, path), 'r') as data:
        for line in data:
            line = line.strip()
            if line.startswith("## Testing"):
                break
            if line and not line.startswith('#'):
                requirements.append(line)
    return requirements


if __name__ == '__main__':
    setup(
        name="aoistat",
        version="0.1.0",
        description="Average age of information under source-aware packet management",
        license="MIT",
        packages=find_packages(exclude=("tests", "tests.*")),
        package_data={"aoistat.reporting": ["templates/*"]},
        python_requires=">=3.8",
        install_requires=read_requirements(),
        entry_points={"console_scripts": ["aoistat=aoistat.console:main"]},
    )
