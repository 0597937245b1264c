"""Optimal sampling proportions and problem complexity

For a tuning parameter :math:`\\beta \\in (0, 1)` the optimal proportions
:math:`w^\\beta` give the fraction :math:`\\beta` to the best arm (written
arm 1 below) and split the remaining :math:`1 - \\beta` so that the
evidence against every suboptimal arm grows at the same rate:

.. math::

    \\frac{(\\mu_i - \\mu_1)^2}{1/w^\\beta_i + 1/\\beta} = C
    \\quad \\forall i \\neq 1,
    \\qquad \\sum_{i \\neq 1} w^\\beta_i = 1 - \\beta

and the complexity measure is :math:`\\Gamma^*_\\beta = C / (2\\sigma^2)`.
:math:`\\Gamma^* = \\max_\\beta \\Gamma^*_\\beta` is reached at
:math:`\\beta^*`, with proportions :math:`w^* = w^{\\beta^*}`.

For a fixed C, :math:`w_i = C / ((\\mu_i - \\mu_1)^2 - C/\\beta)` is
increasing in C, so C is found by a bracketed scalar root search on
:math:`(0, \\beta(1-\\beta)\\min_i(\\mu_i - \\mu_1)^2]`, the upper end being
where the closest arm alone would use up :math:`1 - \\beta`.

Means must be pairwise distinct. The experiment suites apply
:py:func:`pyttei.tools.utils.perturb_duplicates` to tied instances
before calling the solver.
"""

import dataclasses

import numpy as np
from scipy import optimize

from .tools.utils import argmax_lowest, perturb_duplicates

beta_bounds = (1e-4, 1. - 1e-4)
sum_tol = 1e-12

class ProportionVector(object):
    """allocation weights on the simplex

    :param weights: k nonnegative reals summing to 1 (within 1e-10)
    """

    def __init__(self, weights):
        weights = np.array(weights, dtype=float).ravel()
        if weights.size < 2:
            raise ValueError("a proportion vector needs at least 2 entries")
        if np.any(weights < 0) or not np.all(np.isfinite(weights)):
            raise ValueError("weights must be finite and nonnegative: %s"
                             % str(weights))
        if abs(weights.sum() - 1.) > 1e-10:
            raise ValueError("weights must sum to 1, got %.15g"
                             % weights.sum())
        self.weights = weights

    def __len__(self):
        return self.weights.size

    def __getitem__(self, i):
        return self.weights[i]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.weights.copy()
        return self.weights.astype(dtype)

    def __repr__(self):
        return "ProportionVector(%s)" % np.array2string(self.weights,
                                                        precision=6)

    def tolist(self):
        return self.weights.tolist()

@dataclasses.dataclass(frozen=True)
class ComplexitySummary(object):
    """complexity of an instance

    :var gamma_beta: :math:`\\Gamma^*_\\beta` at the requested ``beta``
    :var beta: the requested tuning parameter
    :var gamma_star: :math:`\\Gamma^*`
    :var beta_star: :math:`\\beta^*`
    :var w_star: :py:class:`ProportionVector` :math:`w^*`
    """
    gamma_beta: float
    beta: float
    gamma_star: float
    beta_star: float
    w_star: ProportionVector

def _split(means, noise_variance):
    means = np.asarray(means, dtype=float).ravel()
    if means.size < 2:
        raise ValueError("at least 2 arms are needed")
    if not np.all(np.isfinite(means)):
        raise ValueError("means must be finite")
    if not (noise_variance > 0) or not np.isfinite(noise_variance):
        raise ValueError("noise_variance must be positive and finite")
    if np.min(np.diff(np.sort(means))) == 0:
        raise ValueError("means must be pairwise distinct (delta_min = 0): "
                         "%s" % str(means))
    best = argmax_lowest(means)
    others = np.arange(means.size) != best
    gaps2 = (means[others] - means[best])**2
    return means, best, others, gaps2

def _check_beta(beta):
    if not (0 < beta < 1):
        raise ValueError("beta must lie in (0, 1), got %s" % str(beta))

def _allocation(gaps2, beta, C):
    return C / (gaps2 - C / beta)

def _common_exponent(gaps2, beta):
    """C such that the suboptimal weights sum to 1 - beta"""
    upper = beta * (1. - beta) * gaps2.min()
    target = 1. - beta
    excess = lambda C: _allocation(gaps2, beta, C).sum() - target
    if excess(upper) <= 0:
        # the closest arm alone uses up 1 - beta: k = 2 or exact root
        return upper
    return optimize.brentq(excess, 0., upper, xtol=upper * 1e-16)

def _common_exponent_grid(gaps2, betas, maxiter=200):
    """vectorized bisection of :py:func:`_common_exponent` over ``betas``
    """
    betas = np.asarray(betas, dtype=float)
    target = 1. - betas
    lo = np.zeros_like(betas)
    hi = betas * (1. - betas) * gaps2.min()
    for it in range(maxiter):
        C = 0.5 * (lo + hi)
        S = _allocation(gaps2[None, :], betas[:, None], C[:, None]).sum(1)
        above = S > target
        hi = np.where(above, C, hi)
        lo = np.where(above, lo, C)
        if np.all(np.abs(S - target) < sum_tol) or np.all(hi - lo <= 0):
            break
    return hi

def _finish(means, best, others, gaps2, beta, C, noise_variance):
    sub = _allocation(gaps2, beta, C)
    sub *= (1. - beta) / sub.sum()
    w = np.empty(means.size)
    w[best] = beta
    w[others] = sub
    gamma = np.min(gaps2 / (1. / sub + 1. / beta)) / (2. * noise_variance)
    return w, gamma

def solve_proportions(means, noise_variance, beta):
    """optimal proportions :math:`w^\\beta` and :math:`\\Gamma^*_\\beta`

    :param means: k pairwise distinct arm means, in any order
    :param double noise_variance: :math:`\\sigma^2 > 0`
    :param double beta: share of the best arm, in (0, 1)

    :returns:
      `(w, gamma_beta)` - :py:class:`ProportionVector` in the caller's
      arm order (the best arm gets exactly ``beta``) and
      :math:`\\Gamma^*_\\beta`.
    """
    _check_beta(beta)
    means, best, others, gaps2 = _split(means, noise_variance)
    C = _common_exponent(gaps2, beta)
    w, gamma = _finish(means, best, others, gaps2, beta, C, noise_variance)
    return ProportionVector(w), float(gamma)

def gamma_curve(means, noise_variance, betas):
    """:math:`\\Gamma^*_\\beta` for every beta of ``betas`` (vectorized)
    """
    betas = np.atleast_1d(np.asarray(betas, dtype=float))
    if np.any(betas <= 0) or np.any(betas >= 1):
        raise ValueError("betas must lie in (0, 1)")
    means, best, others, gaps2 = _split(means, noise_variance)
    C = _common_exponent_grid(gaps2, betas)
    sub = _allocation(gaps2[None, :], betas[:, None], C[:, None])
    sub *= ((1. - betas) / sub.sum(1))[:, None]
    exps = gaps2[None, :] / (1. / sub + 1. / betas[:, None])
    return exps.min(1) / (2. * noise_variance)

def complexity_of_allocation(means, noise_variance, w):
    """value of the inner minimum at allocation ``w``

    .. math::

        \\min_{i \\neq 1} \\frac{(\\mu_i - \\mu_1)^2}
                               {2\\sigma^2 (1/w_i + 1/w_1)}

    An allocation leaving a suboptimal arm unsampled gives 0.
    """
    means = np.asarray(means, dtype=float).ravel()
    w = np.asarray(w, dtype=float).ravel()
    if w.shape != means.shape:
        raise ValueError("w and means should have the same length")
    if np.any(w < 0) or abs(w.sum() - 1.) > 1e-10:
        raise ValueError("w must lie on the simplex")
    best = argmax_lowest(means)
    if w[best] <= 0:
        raise ValueError("the best arm must have positive weight")
    others = np.arange(means.size) != best
    wo = w[others]
    if np.any(wo == 0):
        return 0.
    gaps2 = (means[others] - means[best])**2
    return float(np.min(gaps2 / (2. * noise_variance
                                 * (1. / wo + 1. / w[best]))))

def _refine(means, noise_variance, lo, hi):
    res = optimize.minimize_scalar(
        lambda b: -solve_proportions(means, noise_variance, b)[1],
        bounds=(lo, hi), method='bounded', options={'xatol': 1e-7})
    return float(res.x), float(-res.fun)

def solve_optimal_beta(means, noise_variance, beta=0.5, grid_step=1e-3):
    """:math:`\\beta^*`, :math:`\\Gamma^*`, :math:`w^*` and
    :math:`\\Gamma^*_\\beta` at ``beta``

    A bounded Brent/golden-section search over
    :py:data:`beta_bounds` is checked against a scan with step
    ``grid_step``; if the scan finds a larger value (by more than 1e-9),
    the search is restarted around the best grid point. Unimodality of
    :math:`\\beta \\mapsto \\Gamma^*_\\beta` is therefore not assumed.
    """
    _check_beta(beta)
    _split(means, noise_variance)
    beta_star, gamma_star = _refine(means, noise_variance, *beta_bounds)
    grid = np.arange(grid_step, 1., grid_step)
    grid = grid[(grid > 0) & (grid < 1)]
    if grid.size:
        values = gamma_curve(means, noise_variance, grid)
        ind = int(np.argmax(values))
        if values[ind] > gamma_star + 1e-9:
            lo = max(grid[ind] - grid_step, beta_bounds[0])
            hi = min(grid[ind] + grid_step, beta_bounds[1])
            beta_star, gamma_star = _refine(means, noise_variance, lo, hi)
            if values[ind] > gamma_star:
                beta_star, gamma_star = float(grid[ind]), float(values[ind])
    w_star, gamma_star = solve_proportions(means, noise_variance, beta_star)
    gamma_beta = solve_proportions(means, noise_variance, beta)[1]
    return ComplexitySummary(gamma_beta=gamma_beta, beta=float(beta),
                             gamma_star=gamma_star, beta_star=beta_star,
                             w_star=w_star)

def robustness_bound(gamma_star, beta_star, beta):
    """lower bound on :math:`\\Gamma^*_\\beta` implied by
    :math:`\\Gamma^*`

    .. math::

        \\Gamma^*_\\beta \\geq \\Gamma^* / \\max\\{\\beta^*/\\beta,
        (1-\\beta^*)/(1-\\beta)\\}
    """
    _check_beta(beta)
    return gamma_star / max(beta_star / beta,
                            (1. - beta_star) / (1. - beta))

def solve_tied(means, noise_variance, beta=0.5, eps=1e-9):
    """:py:func:`solve_optimal_beta` after
    :py:func:`~pyttei.tools.utils.perturb_duplicates`"""
    return solve_optimal_beta(perturb_duplicates(means, eps),
                              noise_variance, beta)
