"""\
Description
-----------

Gaussian bandit models and the per-arm conjugate posterior.

A :py:class:`BanditInstance` is the ground truth: arm means
:math:`\\mu_1, \\ldots, \\mu_k` and a common, known noise variance
:math:`\\sigma^2`. A :py:class:`BeliefState` holds, for each arm, the
Gaussian posterior :math:`N(\\mu_{n,i}, \\sigma^2_{n,i})` and the pull count
:math:`T_{n,i}` at period :math:`n`.

Arms are indexed from 0 in the whole package.

The default prior is improper (mean 0, variance ``inf``): the posterior of
an arm that has been pulled is then exactly the sample mean with variance
:math:`\\sigma^2 / T_{n,i}`.

Expected-improvement measures
-----------------------------

.. math::

    v_{n,i} = \\sigma_{n,i} f\\left(\\frac{\\mu_{n,i} - \\mu_{n,I^*_n}}
                                        {\\sigma_{n,i}}\\right)

    v_{n,i,j} = \\sqrt{\\sigma^2_{n,i} + \\sigma^2_{n,j}}
        f\\left(\\frac{\\mu_{n,i} - \\mu_{n,j}}
                     {\\sqrt{\\sigma^2_{n,i} + \\sigma^2_{n,j}}}\\right)

with :math:`f(x) = x\\Phi(x) + \\phi(x)`
(see :py:mod:`pyttei.tools.gaussTools`).

Probability of optimality
-------------------------

.. math::

    \\alpha_{n,i} = \\int \\phi_i(x) \\prod_{j \\neq i} \\Phi_j(x) dx

is computed by Gauss-Legendre quadrature in log space, see
:py:func:`log_prob_best`.
"""

import dataclasses
from functools import lru_cache

import numpy as np
from scipy import optimize, special

from .tools import gaussTools as gt
from .tools.utils import argmax_lowest

# window half-depth, in nats below the mode of the log-integrand
window_depth = 40.
quad_nodes = (200, 400, 800, 1600)
complement_switch = 1. - 1e-12

########## Ground truth ##########
@dataclasses.dataclass(frozen=True, eq=False)
class BanditInstance(object):
    """Gaussian bandit: arm means and common noise variance.

    :param means: sequence of k >= 2 finite reals
    :param double noise_variance: :math:`\\sigma^2 \\geq 0`. The value 0 is
        accepted as the noiseless limit.
    :param str name: optional label used in reports
    """
    means: tuple
    noise_variance: float = 1.
    name: str = None

    def __post_init__(self):
        means = tuple(float(m) for m in np.ravel(self.means))
        if len(means) < 2:
            raise ValueError("A bandit needs at least 2 arms, got %d"
                             % len(means))
        if not np.all(np.isfinite(means)):
            raise ValueError("Arm means must be finite: %s" % str(means))
        if not np.isfinite(self.noise_variance) or self.noise_variance < 0:
            raise ValueError("noise_variance must be finite and >= 0")
        object.__setattr__(self, 'means', means)
        object.__setattr__(self, 'noise_variance', float(self.noise_variance))

    @property
    def k(self):
        return len(self.means)

    @property
    def best_arm(self):
        return argmax_lowest(self.means)

    @property
    def gaps(self):
        """:math:`\\mu_{best} - \\mu_i` for every arm (0 for the best)"""
        m = np.asarray(self.means)
        return m.max() - m

    @property
    def delta_min(self):
        m = np.sort(self.means)
        return float(np.min(np.diff(m)))

    @property
    def delta_max(self):
        return float(max(self.means) - min(self.means))

    @property
    def strictly_unique(self):
        """True when all pairwise gaps are nonzero"""
        return self.delta_min > 0

    def to_dict(self):
        return {'means': list(self.means),
                'noise_variance': self.noise_variance}

def simulate_observation(instance, arm, rng):
    """draws :math:`Y \\sim N(\\mu_{arm}, \\sigma^2)` from the stream ``rng``

    With a zero noise variance the arm mean is returned exactly. One
    normal variate is always consumed, so the stream position does not
    depend on the noise level.
    """
    _check_arm(arm, instance.k)
    return float(rng.normal(instance.means[arm],
                            np.sqrt(instance.noise_variance)))

########## Posterior ##########
@dataclasses.dataclass(frozen=True)
class ArmPosterior(object):
    """posterior of one arm; ``variance`` is ``inf`` for an improper arm"""
    mean: float
    variance: float
    pulls: int

    @property
    def improper(self):
        return np.isinf(self.variance)

class BeliefState(object):
    """Per-arm Gaussian posteriors, pull counts and period counter.

    Instances are treated as values: :py:func:`update` returns a new
    state. The invariant :math:`\\sum_i T_{n,i} = n - 1` holds for states
    built by :py:func:`new_belief` and :py:func:`update`.

    :var numpy.ndarray means: posterior means :math:`\\mu_{n,i}`
    :var numpy.ndarray variances: posterior variances, ``inf`` if improper
    :var numpy.ndarray counts: pull counts :math:`T_{n,i}`
    :var integer step: period counter :math:`n`, starting at 1
    """

    def __init__(self, means, variances, counts, step=1, seeded=None):
        self.means = np.array(means, dtype=float)
        self.variances = np.array(variances, dtype=float)
        self.counts = np.array(counts, dtype=int)
        self.step = int(step)
        # arms whose prior was improper: their variance is sigma^2 / T
        if seeded is None:
            seeded = np.isinf(self.variances)
        self.seeded = np.array(seeded, dtype=bool)
        if self.step < 1:
            raise ValueError("step must be >= 1")

    @property
    def k(self):
        return self.means.size

    @property
    def arms(self):
        return tuple(ArmPosterior(float(m), float(v), int(t))
                     for m, v, t in zip(self.means, self.variances,
                                        self.counts))

    @property
    def improper(self):
        """boolean mask of the arms still under the improper prior"""
        return np.isinf(self.variances)

    @property
    def stds(self):
        return np.sqrt(self.variances)

    @property
    def leader(self):
        """:math:`I^*_n`: largest posterior mean among proper arms, lowest
        index on ties; 0 when every arm is improper."""
        proper = ~self.improper
        if not np.any(proper):
            return 0
        return argmax_lowest(np.where(proper, self.means, -np.inf))

    def copy(self):
        return BeliefState(self.means, self.variances, self.counts,
                           self.step, self.seeded)

    def __repr__(self):
        return ("BeliefState(step=%d, means=%s, variances=%s, counts=%s)"
                % (self.step, self.means, self.variances, self.counts))

def _check_arm(arm, k):
    if not (0 <= arm < k):
        raise IndexError("arm index %s out of range for %d arms"
                         % (str(arm), k))

def new_belief(k, prior=None):
    """initial belief over k arms

    :param integer k: number of arms, >= 2
    :param prior: optional sequence of k ``(mean, variance)`` pairs.
        Without it every arm gets the improper prior (mean 0, variance
        ``inf``).
    :returns: :py:class:`BeliefState` at step 1
    """
    if k < 2:
        raise ValueError("A bandit needs at least 2 arms, got %d" % k)
    if prior is None:
        return BeliefState(np.zeros(k), np.full(k, np.inf),
                           np.zeros(k, dtype=int))
    prior = np.asarray(prior, dtype=float)
    if prior.shape != (k, 2):
        raise ValueError("prior should hold %d (mean, variance) pairs" % k)
    if np.any(prior[:, 1] <= 0) or np.any(np.isnan(prior)):
        raise ValueError("prior variances must be > 0")
    return BeliefState(prior[:, 0], prior[:, 1], np.zeros(k, dtype=int))

def update(belief, arm, y, noise_variance):
    """precision-weighted posterior update of ``arm`` with observation ``y``

    .. math::

        \\sigma^2_{n+1,i} = \\left(\\frac{1}{\\sigma^2_{n,i}}
            + \\frac{1}{\\sigma^2}\\right)^{-1}, \\quad
        \\mu_{n+1,i} = \\sigma^2_{n+1,i}\\left(
            \\frac{\\mu_{n,i}}{\\sigma^2_{n,i}} + \\frac{y}{\\sigma^2}\\right)

    The improper prior has zero precision. Other arms are untouched, the
    pull count and the step are incremented. A new state is returned.
    """
    _check_arm(arm, belief.k)
    if not np.isfinite(y):
        raise ValueError("observation must be finite, got %s" % str(y))
    new = belief.copy()
    pulls = new.counts[arm] + 1
    mean = new.means[arm]
    var = new.variances[arm]
    if noise_variance == 0:
        new_var, new_mean = 0., y
    elif var == 0:
        new_var, new_mean = 0., mean
    elif new.seeded[arm]:
        # seeded from the improper prior: the sample mean and sigma^2 / T
        new_var = noise_variance / pulls
        new_mean = mean + (y - mean) / pulls
    else:
        new_var = 1. / (1. / var + 1. / noise_variance)
        new_mean = new_var * (mean / var + y / noise_variance)
    new.means[arm] = new_mean
    new.variances[arm] = new_var
    new.counts[arm] = pulls
    new.step += 1
    return new

def belief_from_observations(k, observations, noise_variance, prior=None):
    """belief after feeding ``observations``, a sequence of
    ``(arm, y)`` pairs, to :py:func:`update` in order"""
    belief = new_belief(k, prior)
    for arm, y in observations:
        belief = update(belief, arm, y, noise_variance)
    return belief

########## Expected improvement ##########
def ei_values(belief):
    """vector of :math:`v_{n,i}`; improper arms get ``inf``"""
    leader = belief.leader
    gaps = belief.means - belief.means[leader]
    return gt.scaled_improvement(gaps, belief.stds)

def log_ei_values(belief):
    """log of :py:func:`ei_values`, for ranking"""
    leader = belief.leader
    gaps = belief.means - belief.means[leader]
    return gt.log_scaled_improvement(gaps, belief.stds)

def ei_value(belief, i):
    """EI value of arm i, :math:`v_{n,i}`"""
    _check_arm(i, belief.k)
    leader = belief.leader
    return gt.scaled_improvement(belief.means[i] - belief.means[leader],
                                 belief.stds[i])

def pairwise_ei(belief, i, j):
    """:math:`v_{n,i,j} = E[(\\theta_i - \\theta_j)^+]`; 0 when i == j"""
    _check_arm(i, belief.k)
    _check_arm(j, belief.k)
    if i == j:
        return 0.
    scale = np.sqrt(belief.variances[i] + belief.variances[j])
    return gt.scaled_improvement(belief.means[i] - belief.means[j], scale)

def log_pairwise_ei_against(belief, j):
    """vector of :math:`\\log v_{n,i,j}` over i, ``-inf`` at i == j"""
    _check_arm(j, belief.k)
    scales = np.sqrt(belief.variances + belief.variances[j])
    out = gt.log_scaled_improvement(belief.means - belief.means[j], scales)
    out[j] = -np.inf
    return out

def pairwise_ei_correlated(mu_i, mu_j, s_ii, s_jj, s_ij):
    """pairwise EI under a correlated normal posterior

    .. math::

        E[(\\theta_i - \\theta_j)^+] =
        \\sqrt{\\Sigma_{ii} + \\Sigma_{jj} - 2\\Sigma_{ij}}
        f\\left(\\frac{\\mu_i - \\mu_j}
        {\\sqrt{\\Sigma_{ii} + \\Sigma_{jj} - 2\\Sigma_{ij}}}\\right)

    A zero combined variance gives :math:`\\max(\\mu_i - \\mu_j, 0)`.
    """
    if s_ii < 0 or s_jj < 0:
        raise ValueError("variances must be nonnegative")
    combined = s_ii + s_jj - 2. * s_ij
    if combined < -1e-12 * max(s_ii + s_jj, 1.):
        raise ValueError("negative combined variance %g: not a valid "
                         "covariance restriction" % combined)
    combined = max(combined, 0.)
    return gt.scaled_improvement(mu_i - mu_j, np.sqrt(combined))

########## Probability of optimality ##########
@lru_cache(maxsize=None)
def _legendre(n):
    return np.polynomial.legendre.leggauss(n)

def _require_proper(belief):
    if np.any(belief.improper):
        raise ValueError("probability of optimality needs every arm to be "
                         "proper (pulled at least once under the improper "
                         "prior)")

class _LogIntegrand(object):
    """log of :math:`\\phi_i(x) \\prod_{j \\in C} \\Phi_j(x)` over the
    continuous competitors C, and its first two derivatives"""

    def __init__(self, mean, sd, other_means, other_sds):
        self.mean = mean
        self.sd = sd
        self.other_means = other_means
        self.other_sds = other_sds

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        z = (x[..., None] - self.other_means) / self.other_sds
        return (gt.std_normal_logpdf((x - self.mean) / self.sd)
                - np.log(self.sd)
                + special.log_ndtr(z).sum(axis=-1))

    def _ratios(self, x):
        z = (x - self.other_means) / self.other_sds
        # phi(z) / Phi(z), stable in the left tail
        return z, np.exp(gt.std_normal_logpdf(z) - special.log_ndtr(z))

    def derivative(self, x):
        z, r = self._ratios(x)
        return -(x - self.mean) / self.sd**2 + np.sum(r / self.other_sds)

    def curvature(self, x):
        z, r = self._ratios(x)
        return (-1. / self.sd**2
                - np.sum(r * (z + r) / self.other_sds**2))

def _find_mode(g):
    lo = g.mean
    if g.derivative(lo) <= 0:
        return lo
    step = g.sd
    hi = lo + step
    while g.derivative(hi) > 0:
        step *= 2.
        hi = lo + step
    return optimize.brentq(g.derivative, lo, hi, xtol=1e-14 * g.sd)

def _walk(g, start, level, direction, width, bound=None):
    """point beyond ``start`` (in ``direction``) where g falls to
    ``level``; stops at ``bound``"""
    step = width
    while True:
        x = start + direction * step
        if bound is not None and direction * (x - bound) >= 0:
            if g(bound) >= level:
                return bound
            x = bound
            break
        if g(x) < level:
            break
        step *= 2.
    a, b = sorted((start, x))
    return optimize.brentq(lambda t: g(t) - level, a, b,
                           xtol=1e-12 * width)

def _log_quadrature(g, a, b):
    previous = None
    for n in quad_nodes:
        nodes, weights = _legendre(n)
        half = 0.5 * (b - a)
        x = half * nodes + 0.5 * (a + b)
        value = special.logsumexp(g(x) + np.log(weights * half))
        if previous is not None:
            if (abs(np.exp(value) - np.exp(previous)) < 1e-8
                    and abs(value - previous) < 1e-10):
                break
        previous = value
    return value

def _log_prob_best_moments(means, sds, i):
    """:math:`\\log \\alpha_i` for posterior moments ``means``, ``sds``
    (all finite, possibly 0)"""
    k = means.size
    others = np.arange(k) != i
    mu, s = means[i], sds[i]
    o_means, o_sds = means[others], sds[others]
    point = o_sds == 0
    if s == 0:
        # point mass at mu: every competitor must fall below it
        out = 0.
        if np.any(point) and np.any(o_means[point] >= mu):
            return -np.inf
        if np.any(~point):
            out += special.log_ndtr((mu - o_means[~point])
                                    / o_sds[~point]).sum()
        return float(out)
    lower = o_means[point].max() if np.any(point) else None
    c_means, c_sds = o_means[~point], o_sds[~point]
    if c_means.size == 0:
        if lower is None:
            return 0.
        return float(special.log_ndtr((mu - lower) / s))
    if c_means.size == 1 and lower is None:
        # two arms: closed form through the difference
        return float(special.log_ndtr(
            (mu - c_means[0]) / np.sqrt(s**2 + c_sds[0]**2)))
    g = _LogIntegrand(mu, s, c_means, c_sds)
    mode = _find_mode(g)
    if lower is not None and mode < lower:
        mode = lower
    width = 1. / np.sqrt(-g.curvature(mode))
    level = g(mode) - window_depth
    b = _walk(g, mode, level, 1., width)
    if lower is not None and mode == lower:
        a = lower
    else:
        a = _walk(g, mode, level, -1., width, bound=lower)
    return float(_log_quadrature(g, a, b))

def log_prob_best(belief, i):
    """:math:`\\log \\alpha_{n,i}`

    The integrand :math:`\\phi_i \\prod_{j \\neq i} \\Phi_j` is
    log-concave: its mode is located by a bracketing root search on the
    derivative, and the integration window extends on both sides until
    the log-integrand has dropped by :py:data:`window_depth` nats.
    Gauss-Legendre rules with 200, 400, ... nodes are applied until two
    successive values agree to 1e-8 (absolute) and 1e-10 (log).
    Posteriors with zero variance are point masses and are handled
    exactly.
    """
    _check_arm(i, belief.k)
    _require_proper(belief)
    return _log_prob_best_moments(belief.means, belief.stds, i)

def prob_best(belief, i):
    """posterior probability :math:`\\alpha_{n,i}` that arm i is optimal,
    clamped to [0, 1]"""
    return float(np.clip(np.exp(log_prob_best(belief, i)), 0., 1.))

def prob_best_all(belief):
    """vector of :math:`\\alpha_{n,i}`, i = 0..k-1"""
    _require_proper(belief)
    return np.array([prob_best(belief, i) for i in range(belief.k)])

def log_prob_not_best(belief, i):
    """:math:`\\log(1 - \\alpha_{n,i})`

    When :math:`\\alpha_{n,i} > 1 - 10^{-12}` the complement is computed as
    :math:`\\log \\sum_{j \\neq i} \\alpha_{n,j}` in log space, which keeps
    it meaningful long after :math:`1 - \\alpha_{n,i}` has left the double
    range.
    """
    log_alpha = log_prob_best(belief, i)
    if np.exp(log_alpha) <= complement_switch:
        return float(np.log1p(-np.exp(log_alpha)))
    logs = [log_prob_best(belief, j) for j in range(belief.k) if j != i]
    return float(special.logsumexp(logs))

def prob_best_mc(belief, rng, draws=10**5):
    """Monte-Carlo estimate of every :math:`\\alpha_{n,i}`, for
    cross-checking the quadrature

    :returns: `(estimates, standard_errors)`
    """
    _require_proper(belief)
    theta = rng.normal(belief.means, belief.stds, size=(draws, belief.k))
    wins = np.bincount(np.argmax(theta, axis=1), minlength=belief.k)
    p = wins / float(draws)
    return p, np.sqrt(p * (1. - p) / draws)
