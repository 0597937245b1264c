"""pyTTEI package setup file

to install it::

  pip install . [--user]

with the test requirements::

  pip install .[test]
"""

import setuptools
from setuptools import setup

long_description="""\
Best-arm identification with top-two expected improvement

Sampling rules (TTEI, adaptive TTEI, EI, TTTS, KG, proportion oracles),
stopping rules (posterior confidence, Chernoff GLR), optimal proportions
and complexity solvers, and a seeded Monte-Carlo harness with a command
line interface reproducing the benchmark tables.

You can find more about the rules and how to use this module in the
provided documentation in `doc/` (`using the python package
<../description.html#using-the-python-package>`_)
"""

setup(
    name='pyTTEI',
    version='0.1.0',
    author='the pyTTEI developers',
    packages=setuptools.find_packages(exclude=['doc', 'doc.*']),
    license='GNU GENERAL PUBLIC LICENSE',
    description=(
        'Best-arm identification with top-two expected improvement'),
    python_requires='>=3.11',
    install_requires=[
        'numpy',
        'scipy'],
    extras_require={
        'test': ['pytest'],
        },
    entry_points={
        'console_scripts': ['pyttei=pyttei.cli:main'],
        },
    long_description=long_description,
    )
