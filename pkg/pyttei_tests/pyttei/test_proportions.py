"""tests for pyttei.proportions
"""

from ..testing import *

import numpy as np

import pyttei.proportions as pr
from pyttei.tools.utils import perturb_duplicates

def _exponents(means, w, noise_variance=1.):
    means = np.asarray(means)
    w = np.asarray(w)
    best = np.argmax(means)
    others = np.arange(means.size) != best
    return ((means[others] - means[best])**2
            / (2 * noise_variance * (1. / w[others] + 1. / w[best])))

def _random_instance(rng, k):
    return rng.permutation(np.cumsum(rng.uniform(0.05, 1., k)))

def test_two_arms():
    """the single suboptimal arm takes the residual mass"""
    w, gamma = pr.solve_proportions([0., 3.], 1., 0.3)
    assert_allclose(np.asarray(w), [0.7, 0.3], rtol=1e-12)
    assert_allclose(gamma, 9. / (2. * (1. / 0.7 + 1. / 0.3)), rtol=1e-12)

def test_best_arm_gets_beta():
    w, _ = pr.solve_proportions([1., 2., 5., 4., 3.], 1., 0.4)
    assert_equal(w[2], 0.4)
    assert_allclose(np.sum(np.asarray(w)), 1., rtol=0, atol=1e-12)
    assert_true(np.all(np.asarray(w) > 0))

def test_duplicates_rejected():
    assert_raises(ValueError, pr.solve_proportions, [2., 1., 1.], 1., 0.5)
    assert_raises(ValueError, pr.solve_optimal_beta, [5., 4., 1., 1., 1.],
                  1.)
    assert_raises(ValueError, pr.solve_proportions, [2., 1.], 1., 1.)
    assert_raises(ValueError, pr.solve_proportions, [2., 1.], 0., 0.5)

def test_near_equal_gaps():
    """arms with nearly equal gaps get nearly equal weights"""
    w, _ = pr.solve_proportions([5., 4., 1., 1.01, 0.99], 1., 0.5)
    far = np.asarray(w)[2:]
    assert_true((far.max() - far.min()) / far.min() < 0.02)

def test_equalization():
    """every suboptimal arm gets the same exponent"""
    rng = np.random.default_rng(0)
    for k in range(2, 9):
        means = _random_instance(rng, k)
        for beta in (0.1, 0.5, 0.8):
            w, gamma = pr.solve_proportions(means, 1.3, beta)
            exps = _exponents(means, w, 1.3)
            assert_allclose(exps, gamma, rtol=1e-9)
            assert_almost_equal(w[np.argmax(means)], beta)

def test_complexity_of_allocation():
    assert_equal(pr.complexity_of_allocation([1., 0., 0.5], 1.,
                                             [0.5, 0.5, 0.]), 0.)
    assert_allclose(pr.complexity_of_allocation([1., 0.], 1., [0.5, 0.5]),
                    0.125, rtol=1e-15)
    means = [3., 1., 2.2, 0.]
    w, gamma = pr.solve_proportions(means, 1., 0.45)
    assert_allclose(pr.complexity_of_allocation(means, 1., w), gamma,
                    rtol=1e-9)
    assert_raises(ValueError, pr.complexity_of_allocation, [1., 0.], 1.,
                  [0.6, 0.6])

def test_simplex_slice_optimality():
    """w^beta beats random allocations giving beta to the best arm"""
    rng = np.random.default_rng(1)
    means = np.array([2., 0.8, 0.6, 0.4, 0.2])
    beta = 0.5
    _, gamma = pr.solve_proportions(means, 1., beta)
    for _ in range(1000):
        rest = rng.dirichlet(np.ones(4)) * (1. - beta)
        w = np.concatenate([[beta], rest])
        assert_true(pr.complexity_of_allocation(means, 1., w)
                    <= gamma * (1 + 1e-12))

def test_optimal_beta_instances():
    """beta* of the three benchmark instances"""
    for means, beta_star in (([5., 4., 1., 1., 1.], 0.48),
                             ([5., 4., 3., 2., 1.], 0.45),
                             ([2., .8, .6, .4, .2], 0.35)):
        summary = pr.solve_optimal_beta(perturb_duplicates(means), 1.)
        assert_allclose(summary.beta_star, beta_star, atol=0.01)
        assert_true(summary.gamma_beta <= summary.gamma_star)
        assert_true(summary.gamma_beta >= summary.gamma_star / 2.)
        assert_almost_equal(summary.w_star[np.argmax(
            perturb_duplicates(means))], summary.beta_star)

def test_optimal_beta_two_arms():
    summary = pr.solve_optimal_beta([1., 0.], 1.)
    assert_allclose(summary.beta_star, 0.5, atol=1e-3)
    assert_allclose(summary.gamma_star, 0.125, rtol=1e-9)
    assert_allclose(summary.gamma_beta, 0.125, rtol=1e-9)

def test_optimal_beta_is_a_maximum():
    rng = np.random.default_rng(2)
    means = _random_instance(rng, 6)
    summary = pr.solve_optimal_beta(means, 1.)
    betas = np.linspace(0.01, 0.99, 99)
    curve = pr.gamma_curve(means, 1., betas)
    assert_true(np.all(curve <= summary.gamma_star + 1e-9))

def test_solve_tied():
    summary = pr.solve_tied([5., 4., 1., 1., 1.], 1.)
    w = np.asarray(summary.w_star)
    assert_allclose(w.sum(), 1., atol=1e-12)
    assert_allclose(w[2:], w[2], rtol=1e-6)

def test_robustness_bound():
    rng = np.random.default_rng(3)
    for _ in range(5):
        means = _random_instance(rng, 5)
        summary = pr.solve_optimal_beta(means, 1.)
        for beta in np.arange(0.05, 0.96, 0.05):
            _, gamma = pr.solve_proportions(means, 1., beta)
            bound = pr.robustness_bound(summary.gamma_star,
                                        summary.beta_star, beta)
            assert_true(gamma >= bound * (1 - 1e-6))

def test_scale_equivariance():
    means = np.array([1.3, 0.2, -0.7, 0.9])
    w1, g1 = pr.solve_proportions(means, 1., 0.5)
    w2, g2 = pr.solve_proportions(3. * means, 9., 0.5)
    assert_allclose(np.asarray(w1), np.asarray(w2), rtol=1e-9)
    assert_allclose(g1, g2, rtol=1e-9)

def test_gamma_curve():
    means = [5., 4., 3., 2., 1.]
    betas = np.array([0.1, 0.3, 0.45, 0.7, 0.9])
    curve = pr.gamma_curve(means, 1., betas)
    expected = [pr.solve_proportions(means, 1., b)[1] for b in betas]
    assert_allclose(curve, expected, rtol=1e-8)
    assert_raises(ValueError, pr.gamma_curve, means, 1., [0., 0.5])

def test_proportion_vector():
    w = pr.ProportionVector([0.25, 0.75])
    assert_equal(len(w), 2)
    assert_equal(w[1], 0.75)
    assert_equal(w.tolist(), [0.25, 0.75])
    assert_array_equal(np.asarray(w), [0.25, 0.75])
    assert_raises(ValueError, pr.ProportionVector, [0.5, 0.6])
    assert_raises(ValueError, pr.ProportionVector, [1.5, -0.5])
    assert_raises(ValueError, pr.ProportionVector, [1.])
