"""tests for pyttei.banditModel
"""

from ..testing import *

import numpy as np
from scipy import special

import pyttei.banditModel as bm
import pyttei.tools.gaussTools as gt

def _belief(means, variances, counts=None):
    means = np.asarray(means, dtype=float)
    if counts is None:
        counts = np.ones(means.size, dtype=int)
    return bm.BeliefState(means, variances, counts,
                          step=int(np.sum(counts)) + 1,
                          seeded=np.zeros(means.size, dtype=bool))

def _random_belief(rng, k):
    return _belief(rng.normal(0, 1, k), rng.uniform(0.05, 2., k))

class BanditInstanceTestCase(TestCase):

    def setUp(self):
        super(BanditInstanceTestCase, self).setUp()
        self.tied = bm.BanditInstance((5., 4., 1., 1., 1.))
        self.graded = bm.BanditInstance((1., 2., 5., 4., 3.), 2.)

    def test_properties(self):
        assert_equal(self.tied.k, 5)
        assert_equal(self.tied.best_arm, 0)
        assert_equal(self.graded.best_arm, 2)
        assert_false(self.tied.strictly_unique)
        assert_true(self.graded.strictly_unique)
        assert_equal(self.tied.delta_min, 0.)
        assert_equal(self.graded.delta_min, 1.)
        assert_equal(self.graded.delta_max, 4.)
        assert_array_equal(self.graded.gaps, [4., 3., 0., 1., 2.])

    def test_validation(self):
        assert_raises(ValueError, bm.BanditInstance, (1.,))
        assert_raises(ValueError, bm.BanditInstance, (1., np.nan))
        assert_raises(ValueError, bm.BanditInstance, (1., 0.), -1.)
        # the noiseless limit is accepted
        assert_equal(bm.BanditInstance((1., 0.), 0.).noise_variance, 0.)

    def test_simulate_observation(self):
        noiseless = bm.BanditInstance((1.5, 0.), 0.)
        rng = np.random.default_rng(0)
        assert_equal(bm.simulate_observation(noiseless, 0, rng), 1.5)
        a = bm.simulate_observation(self.graded, 3, np.random.default_rng(4))
        b = bm.simulate_observation(self.graded, 3, np.random.default_rng(4))
        assert_equal(a, b)
        assert_raises(IndexError, bm.simulate_observation, self.graded, 5,
                      rng)

    def test_simulate_observation_mean(self):
        instance = bm.BanditInstance((5., 0.))
        rng = np.random.default_rng(1)
        draws = [bm.simulate_observation(instance, 0, rng)
                 for _ in range(100000)]
        assert_allclose(np.mean(draws), 5., atol=0.015)

def test_new_belief():
    belief = bm.new_belief(3)
    assert_array_equal(belief.means, np.zeros(3))
    assert_array_equal(belief.variances, np.full(3, np.inf))
    assert_array_equal(belief.counts, np.zeros(3))
    assert_equal(belief.step, 1)
    assert_true(np.all(belief.improper))
    prior = bm.new_belief(2, [(1., 4.), (0., 9.)])
    assert_equal(prior.arms[0], bm.ArmPosterior(1., 4., 0))
    assert_equal(prior.arms[1], bm.ArmPosterior(0., 9., 0))
    assert_raises(ValueError, bm.new_belief, 1)
    assert_raises(ValueError, bm.new_belief, 2, [(1., 0.), (0., 1.)])

def test_update_examples():
    belief = bm.update(bm.new_belief(2), 0, 2., 1.)
    assert_equal(belief.arms[0], bm.ArmPosterior(2., 1., 1))
    assert_equal(belief.step, 2)
    assert_true(belief.improper[1])

    prior = bm.new_belief(2, [(0., 1.), (0., 1.)])
    after = bm.update(prior, 0, 2., 1.)
    assert_almost_equal(after.means[0], 1.)
    assert_almost_equal(after.variances[0], 0.5)
    # the original state is untouched
    assert_equal(prior.means[0], 0.)

    seeded = bm.belief_from_observations(2, [(0, 1.)] * 4, 1.)
    assert_equal(seeded.counts[0], 4)
    fifth = bm.update(seeded, 0, 1., 1.)
    assert_equal(fifth.counts[0], 5)
    assert_equal(fifth.variances[0], 0.2)
    assert_raises(IndexError, bm.update, seeded, 2, 1., 1.)
    assert_raises(ValueError, bm.update, seeded, 0, np.nan, 1.)

def test_posterior_equals_empirical():
    """under the improper prior the posterior is the sample mean with
    variance sigma^2 / T"""
    rng = np.random.default_rng(2)
    arms = rng.integers(0, 3, 200)
    ys = rng.normal(0, 3, 200)
    belief = bm.belief_from_observations(3, zip(arms, ys), 2.)
    for i in range(3):
        assert_allclose(belief.means[i], ys[arms == i].mean(), rtol=1e-12,
                        atol=1e-12)
        assert_equal(belief.variances[i], 2. / np.sum(arms == i))
        assert_equal(belief.counts[i], np.sum(arms == i))
    assert_equal(belief.step, 201)
    assert_equal(belief.counts.sum(), belief.step - 1)

def test_update_commutes():
    prior = bm.new_belief(2, [(0.3, 2.), (0., 1.)])
    ab = bm.update(bm.update(prior, 0, 1.7, 0.5), 0, -0.4, 0.5)
    ba = bm.update(bm.update(prior, 0, -0.4, 0.5), 0, 1.7, 0.5)
    assert_allclose(ab.means, ba.means, rtol=1e-12)
    assert_allclose(ab.variances, ba.variances, rtol=1e-12)

def test_ei_value():
    belief = _belief([0., -1.], [1., 1.])
    assert_almost_equal(bm.ei_value(belief, 0), 0.3989422804, decimal=10)
    assert_almost_equal(bm.ei_value(belief, 1), 0.0833154706, decimal=10)
    assert_true(bm.ei_value(belief, 1) < bm.ei_value(belief, 0))

def test_ei_value_improper():
    belief = bm.new_belief(3)
    assert_array_equal(bm.ei_values(belief), np.full(3, np.inf))
    partly = bm.update(belief, 0, 1., 1.)
    values = bm.ei_values(partly)
    assert_equal(values[1], np.inf)
    assert_true(np.isfinite(values[0]))

def test_ei_value_grows_with_variance():
    """equal posterior means: the larger variance has the larger EI"""
    belief = _belief([1., 0., 0.], [0.5, 0.2, 0.8])
    assert_true(bm.ei_value(belief, 2) > bm.ei_value(belief, 1))
    logs = bm.log_ei_values(belief)
    assert_true(logs[2] > logs[1])

def test_pairwise_ei():
    belief = _belief([0., 0., 1., 0.], [0.5, 0.5, 1., 1.])
    assert_equal(bm.pairwise_ei(belief, 2, 2), 0.)
    assert_almost_equal(bm.pairwise_ei(belief, 0, 1), 0.3989422804,
                        decimal=10)
    expected = np.sqrt(2.) * gt.f_ei(1. / np.sqrt(2.))
    assert_almost_equal(bm.pairwise_ei(belief, 2, 3), expected)
    logs = bm.log_pairwise_ei_against(belief, 3)
    assert_equal(logs[3], -np.inf)
    assert_almost_equal(logs[2], np.log(expected))

def test_pairwise_ei_monte_carlo():
    """E[(theta_i - theta_j)^+] against 10^7 draws, 1e-3 relative"""
    belief = _belief([1., 0.], [1., 1.])
    rng = np.random.default_rng(3)
    total = 0.
    for _ in range(10):
        diff = (rng.normal(1., 1., 10**6) - rng.normal(0., 1., 10**6))
        total += np.maximum(diff, 0.).sum()
    assert_allclose(bm.pairwise_ei(belief, 0, 1), total / 1e7, rtol=1e-3)

def test_pairwise_ei_correlated():
    belief = _belief([0.7, -0.1], [0.4, 1.3])
    assert_almost_equal(bm.pairwise_ei_correlated(0.7, -0.1, 0.4, 1.3, 0.),
                        bm.pairwise_ei(belief, 0, 1))
    assert_equal(bm.pairwise_ei_correlated(0.5, 0., 1., 1., 1.), 0.5)
    assert_almost_equal(bm.pairwise_ei_correlated(0., 0., 1., 1., 0.5),
                        0.3989422804, decimal=10)
    assert_raises(ValueError, bm.pairwise_ei_correlated, 0., 0., 1., 1., 2.)
    assert_raises(ValueError, bm.pairwise_ei_correlated, 0., 0., -1., 1., 0.)

def test_prob_best_examples():
    assert_almost_equal(bm.prob_best(_belief([0.3, 0.3], [2., 2.]), 0), 0.5)
    two = _belief([1., 0.], [1., 1.])
    assert_allclose(bm.prob_best(two, 0), special.ndtr(1. / np.sqrt(2.)),
                    rtol=0, atol=1e-6)
    assert_almost_equal(bm.prob_best(two, 0), 0.7602499, decimal=6)
    three = _belief([0.2, 0.2, 0.2], [0.7, 0.7, 0.7])
    assert_allclose(bm.prob_best_all(three), np.full(3, 1. / 3.),
                    rtol=0, atol=1e-6)

def test_prob_best_needs_proper_arms():
    belief = bm.update(bm.new_belief(3), 0, 1., 1.)
    assert_raises(ValueError, bm.prob_best, belief, 0)
    assert_raises(IndexError, bm.prob_best, _belief([0., 1.], [1., 1.]), 2)

def test_prob_best_sums_to_one():
    rng = np.random.default_rng(5)
    for k in (2, 3, 5, 8):
        for _ in range(5):
            probs = bm.prob_best_all(_random_belief(rng, k))
            assert_allclose(probs.sum(), 1., rtol=0, atol=1e-6)
            assert_true(np.all((probs >= 0) & (probs <= 1)))

def test_prob_best_monte_carlo():
    """quadrature against 10^6 Monte-Carlo draws"""
    rng = np.random.default_rng(6)
    for k in (2, 3, 4, 5):
        belief = _random_belief(rng, k)
        p, se = bm.prob_best_mc(belief, rng, draws=10**6)
        probs = bm.prob_best_all(belief)
        assert_true(np.all(np.abs(probs - p) <= 4 * se + 1e-6))

def test_prob_best_point_masses():
    assert_equal(bm.prob_best(_belief([1., 0.], [0., 0.]), 0), 1.)
    assert_equal(bm.prob_best(_belief([1., 0.], [0., 0.]), 1), 0.)
    mixed = _belief([1., 0.], [0., 1.])
    assert_almost_equal(bm.prob_best(mixed, 0), special.ndtr(1.))
    assert_almost_equal(bm.prob_best(mixed, 1), special.ndtr(-1.))
    # truncated integral: P(theta_1 > 0.5, theta_1 > theta_2)
    three = _belief([0.5, 0., 0.], [0., 1., 1.])
    phi = special.ndtr(0.5)
    assert_allclose(bm.prob_best(three, 0), phi**2, atol=1e-9)
    assert_allclose(bm.prob_best(three, 1), (1. - phi**2) / 2., atol=1e-7)

def test_log_prob_not_best_saturated():
    """1 - alpha far below the double resolution"""
    belief = _belief([1., 0.], [1e-3, 1e-3])
    expected = special.log_ndtr(-1. / np.sqrt(2e-3))
    assert_allclose(bm.log_prob_not_best(belief, 0), expected, rtol=1e-10)
    assert_true(bm.log_prob_not_best(belief, 0) < -200)
    moderate = _belief([1., 0.], [1., 1.])
    assert_allclose(bm.log_prob_not_best(moderate, 0),
                    np.log(special.ndtr(-1. / np.sqrt(2.))), rtol=1e-6)

def test_log_prob_not_best_many_arms():
    belief = _belief([1., 0., -0.2], [2e-3, 2e-3, 2e-3])
    value = bm.log_prob_not_best(belief, 0)
    logs = [bm.log_prob_best(belief, j) for j in (1, 2)]
    assert_allclose(value, special.logsumexp(logs), rtol=1e-12)
    assert_true(np.isfinite(value))

def test_leader():
    belief = _belief([1., 3., 3.], [1., 1., 1.])
    assert_equal(belief.leader, 1)
    assert_equal(bm.new_belief(4).leader, 0)
