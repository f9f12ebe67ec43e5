# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function
from setuptools import setup, find_packages
import io
import os
import re

root_path = os.path.dirname(os.path.abspath(__file__))


def read(name):
    with io.open(os.path.join(root_path, name), encoding='utf-8') as f:
        return f.read()


# Version number lives in emf_coverage/version.py
match = re.search(r"^version = ['\"]([^'\"]*)['\"]",
                  read(os.path.join('emf_coverage', 'version.py')), re.M)
if not match:
    raise RuntimeError("Unable to find version string")

# README.rst followed by CHANGELOG.rst
long_description = "{}\n\n{}\n".format(read('README.rst').strip(),
                                       read('CHANGELOG.rst').strip())


setup(
    name='emf-coverage',
    version=match.group(1),
    author='emf-coverage contributors',
    description='EMF Exposure and SINR Analytics of Cellular Networks',
    long_description=long_description,
    license='BSD',
    keywords='emf exposure sinr coverage stochastic geometry ginibre',
    packages=find_packages(exclude=['tests', 'tests.*', 'examples',
                                    'examples.*']),
    package_data={'emf_coverage': ['presets/*.json']},
    python_requires='>=3.8, <4',
    install_requires=[
        'numpy>=1.22',
        'scipy>=1.8',
        'pydantic>=2.0,<3',
    ],
    extras_require={
        'test': [
            'flake8>=5.0',
            'mock>=4.0',
            'mpmath>=1.2',
            'pytest>=7.0',
            'pytest-cov>=4.0',
        ],
    },
    entry_points={
        'console_scripts': [
            'emf-coverage = emf_coverage.cli:main',
        ],
    },
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
