#!/usr/bin/env python
"""Build script for poissonhopf.

Pure Python; the exact rank computations use numpy object arrays of
Fractions and set partitions come from sympy. The shipped .alg catalog
files are installed as package data and located at run time through
poissonhopf.config.datadir.
"""

from setuptools import setup
import os
import io

# Helper to read README for long_description
here = os.path.abspath(os.path.dirname(__file__))
def _read(fname):
    try:
        with io.open(os.path.join(here, fname), 'r', encoding='utf-8') as f:
            return f.read()
    except IOError:
        return ''

setup(
    name="poissonhopf",
    version="0.1dev",
    description="Exact arithmetic for Poisson Hopf algebras, their enveloping algebras and Poisson cohomology",
    long_description=_read('README.md'),
    long_description_content_type='text/markdown',
    packages=['poissonhopf'],
    package_dir={'poissonhopf':'src/poissonhopf'},
    package_data={'poissonhopf' : ['data/*.alg',
                                   'data/Readme.md',
                           ]},
    entry_points={
        'console_scripts': ['poissonhopf=poissonhopf.cli:main'],
    },
    install_requires=[
        'numpy>=1.16',
        'sympy>=1.5',
    ],
    extras_require={
        'test': ['pytest>=6'],
    },
    python_requires='>=3.8',
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    license='MIT'
)
