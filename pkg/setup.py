#!/usr/bin/env python3

from setuptools import setup, find_packages
import sys


if sys.version_info[:2] < (3, 5):
    raise Exception("You need Python 3.5+")


setup(
    name="legalc",
    version="1.0.dev",
    author="The legalc authors",
    description="Compiler from Arabic legal texts to XML",
    long_description=open("README.rst", encoding="utf-8").read(),
    license="GPLv3+",
    classifiers="""\
Development Status :: 3 - Alpha
Environment :: Console
Intended Audience :: Legal Industry
License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)
Natural Language :: Arabic
Operating System :: OS Independent
Programming Language :: Python :: 3
Topic :: Software Development :: Compilers
Topic :: Text Processing :: Markup :: XML
""".splitlines(),
    install_requires=[
        "numpy",
    ],
    packages=find_packages(),
    package_data={
        "legalc.test": ["corpus/*"],
    },
    include_package_data=True,
    entry_points={
        "console_scripts": [
            "legalc = legalc.cli:main",
            ],
    }
)
