"""tests for pyttei.stopping
"""

from ..testing import *

import types

import numpy as np

import pyttei.banditModel as bm
import pyttei.stopping as stopping

def _random_state(rng, k, zero_counts=False):
    counts = rng.integers(1, 30, k)
    if zero_counts:
        counts[rng.integers(0, k)] = 0
    return stopping.GlrState(counts, rng.normal(0, 1, k),
                             rng.uniform(0.2, 3.))

def test_glr_examples():
    state = stopping.GlrState([1, 1], [1., 0.], 1.)
    assert_almost_equal(stopping.glr_statistic(state, 0, 1), 0.25)
    assert_almost_equal(stopping.glr_statistic(state, 1, 0), -0.25)
    equal = stopping.GlrState([3, 7], [0.4, 0.4], 1.)
    assert_equal(stopping.glr_statistic(equal, 0, 1), 0.)
    empty = stopping.GlrState([0, 0, 2], [0., 0., 1.], 1.)
    assert_equal(stopping.glr_statistic(empty, 0, 1), 0.)
    assert_raises(ValueError, stopping.glr_statistic, state, 1, 1)
    assert_raises(IndexError, stopping.glr_statistic, state, 0, 2)

def test_glr_closed_form():
    """Z = T_i T_j / (T_i + T_j) (mu_i - mu_j)^2 / (2 sigma^2)"""
    state = stopping.GlrState([3, 5], [1.2, -0.4], 2.)
    expected = 3. * 5. / 8. * 1.6**2 / 4.
    assert_allclose(stopping.glr_statistic(state, 0, 1), expected,
                    rtol=1e-12)

def test_glr_antisymmetry():
    rng = np.random.default_rng(0)
    for _ in range(1000):
        state = _random_state(rng, 4, zero_counts=rng.random() < 0.2)
        i, j = rng.choice(4, 2, replace=False)
        assert_allclose(stopping.glr_statistic(state, i, j),
                        -stopping.glr_statistic(state, j, i),
                        rtol=0, atol=1e-15)

def test_unpulled_arm_mean_is_zero():
    state = stopping.GlrState.from_observations([2, 0], [3., 0.], 1.)
    assert_array_equal(state.means, [1.5, 0.])
    assert_equal(state.n, 3)
    forced = stopping.GlrState([0, 1], [5., 1.], 1.)
    assert_equal(forced.means[0], 0.)
    assert_raises(ValueError, stopping.GlrState, [-1, 1], [0., 0.], 1.)

def test_glr_matrix():
    rng = np.random.default_rng(1)
    state = _random_state(rng, 5)
    Z = stopping.glr_matrix(state)
    assert_array_almost_equal(Z, -Z.T)
    assert_array_equal(np.diag(Z), np.zeros(5))
    assert_equal(Z[1, 3], stopping.glr_statistic(state, 1, 3))

def test_chernoff_Z_examples():
    equal = stopping.GlrState([2, 3, 4], [1., 1., 1.], 1.)
    assert_equal(stopping.chernoff_Z(equal)[0], 0.)
    two = stopping.GlrState([4, 6], [0.1, 0.9], 1.)
    z, candidate = stopping.chernoff_Z(two)
    assert_equal(candidate, 1)
    assert_equal(z, stopping.glr_statistic(two, 1, 0))

def test_chernoff_Z_brute_force():
    """the fast path through the empirical best matches the max-min over
    all pairs"""
    rng = np.random.default_rng(2)
    for _ in range(300):
        state = _random_state(rng, 5, zero_counts=rng.random() < 0.2)
        Z = stopping.glr_matrix(state)
        brute = max(min(Z[i, j] for j in range(5) if j != i)
                    for i in range(5))
        z, candidate = stopping.chernoff_Z(state)
        assert_allclose(z, brute, rtol=1e-12, atol=1e-15)
        assert_equal(candidate, np.argmax(state.means))

def test_sign_structure():
    """min_j Z_ij >= 0 exactly for the empirical best"""
    rng = np.random.default_rng(3)
    for _ in range(200):
        state = _random_state(rng, 4)
        best = np.argmax(state.means)
        for i in range(4):
            inner = min(stopping.glr_statistic(state, i, j)
                        for j in range(4) if j != i)
            assert_equal(inner >= 0, i == best)

def test_scale_property():
    rng = np.random.default_rng(4)
    state = _random_state(rng, 4)
    scaled = stopping.GlrState(state.counts, 2.5 * state.means,
                               2.5**2 * state.noise_variance)
    assert_allclose(stopping.glr_matrix(scaled), stopping.glr_matrix(state),
                    rtol=1e-12, atol=1e-15)

def test_threshold():
    unit = types.SimpleNamespace(c_const=1., alpha=1., delta=1.)
    assert_equal(stopping.threshold(1, unit), 0.)
    config = stopping.GlrConfig(delta=0.1, alpha=2., c_const=2.)
    assert_allclose(stopping.threshold(10, config), np.log(2000.),
                    rtol=1e-14)
    assert_almost_equal(stopping.threshold(10, config), 7.6009, decimal=4)
    halved = stopping.GlrConfig(delta=0.05, alpha=2., c_const=2.)
    assert_allclose(stopping.threshold(10, halved)
                    - stopping.threshold(10, config), np.log(2.),
                    rtol=1e-12)
    values = [stopping.threshold(n, config) for n in range(1, 200)]
    assert_true(np.all(np.diff(values) > 0))
    assert_raises(ValueError, stopping.threshold, 0, config)

def test_glr_config_validation():
    assert_raises(ValueError, stopping.GlrConfig, delta=1.)
    assert_raises(ValueError, stopping.GlrConfig, delta=0.1, alpha=1.)
    assert_raises(ValueError, stopping.GlrConfig, delta=0.1, c_const=0.)

def test_should_stop():
    config = stopping.GlrConfig(delta=0.1, alpha=2., c_const=2.)
    single = stopping.GlrState([1, 0], [0.7, 0.], 1.)
    assert_is_none(stopping.should_stop(single, config))
    # Z = T/2 * 4 / 2 = 10 against a threshold of 7.6
    strong = stopping.GlrState([10, 10], [0., 2.], 1., n=10)
    assert_allclose(stopping.chernoff_Z(strong)[0], 10.)
    assert_equal(stopping.should_stop(strong, config), 1)
    weak = stopping.GlrState([10, 10], [0., 1.], 1., n=10)
    assert_is_none(stopping.should_stop(weak, config))

def test_expected_tau_bounds():
    lower, upper = stopping.expected_tau_bounds(0.125, 0.125, 1.2, 0.01)
    assert_allclose(lower, np.log(100.) / 0.125)
    assert_allclose(upper, 1.2 * np.log(100.) / 0.125)
    assert_raises(ValueError, stopping.expected_tau_bounds, 0.1, 0.1, 1.2,
                  1.)

class ConfidenceRuleTestCase(TestCase):

    def setUp(self):
        super(ConfidenceRuleTestCase, self).setUp()
        self.rule = stopping.ConfidenceRule(0.95)

    def _belief(self, means, variances):
        k = len(means)
        return bm.BeliefState(means, variances, np.ones(k, dtype=int),
                              k + 1, np.zeros(k, dtype=bool))

    def test_levels(self):
        assert_raises(ValueError, stopping.ConfidenceRule, 1.)
        assert_raises(ValueError, stopping.ConfidenceRule, 0.)

    def test_check(self):
        assert_is_none(self.rule.check(bm.new_belief(3)))
        sure = self._belief([0., 1., -1.], [1e-3, 1e-3, 1e-3])
        assert_equal(self.rule.check(sure), 1)
        unsure = self._belief([0., 0.1, -1.], [1., 1., 1.])
        assert_is_none(self.rule.check(unsure))

    def test_low_level(self):
        """below 1/2 every probability is computed"""
        rule = stopping.ConfidenceRule(0.3)
        belief = self._belief([0., 0.1, -1.], [1., 1., 1.])
        assert_equal(rule.check(belief), 1)
