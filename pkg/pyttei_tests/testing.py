"""Getting imports

assertion helpers shared by the tests: the ``numpy.testing`` ones and the
``unittest`` ones under their function names.

run at the root of the package::

  pytest pyttei_tests -v

and, for the long Monte-Carlo checks of the benchmark tables::

  PYTTEI_SLOW=1 pytest pyttei_tests -v -m slow
"""
import os
import unittest
from unittest import SkipTest, TestCase

import numpy as np
import pytest

from numpy.testing import assert_almost_equal
from numpy.testing import assert_allclose
from numpy.testing import assert_array_equal
from numpy.testing import assert_array_almost_equal
from numpy.testing import assert_array_less

_case = unittest.TestCase()
_case.maxDiff = None
assert_equal = _case.assertEqual
assert_not_equal = _case.assertNotEqual
assert_true = _case.assertTrue
assert_false = _case.assertFalse
assert_raises = _case.assertRaises
assert_is_none = _case.assertIsNone
assert_less_equal = _case.assertLessEqual

_run_slow = os.environ.get('PYTTEI_SLOW') == '1'

def slow(test):
    """marks a long Monte-Carlo test, skipped unless PYTTEI_SLOW=1"""
    test = pytest.mark.skipif(not _run_slow,
                              reason='set PYTTEI_SLOW=1 to run')(test)
    return pytest.mark.slow(test)

def binomial_tolerance(p, n, n_sigma=3.):
    """half-width of an ``n_sigma`` interval for a binomial frequency"""
    return n_sigma * np.sqrt(p * (1. - p) / n)
