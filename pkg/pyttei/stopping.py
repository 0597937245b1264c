"""\
Description
-----------

Stopping rules.

Chernoff's rule stops at

.. math::

    \\tau_\\delta = \\inf\\{n : Z_n > \\log(C n^\\alpha / \\delta)\\},
    \\qquad Z_n = \\max_i \\min_{j \\neq i} Z_{n,i,j}

where, with empirical means :math:`\\hat\\mu_{n,i}` and the weighted mean
:math:`\\hat\\mu_{n,i,j} = (T_{n,i}\\hat\\mu_{n,i} + T_{n,j}\\hat\\mu_{n,j})
/ (T_{n,i} + T_{n,j})`,

.. math::

    Z_{n,i,j} = T_{n,i} d(\\hat\\mu_{n,i}, \\hat\\mu_{n,i,j})
              + T_{n,j} d(\\hat\\mu_{n,j}, \\hat\\mu_{n,i,j})

if :math:`\\hat\\mu_{n,i} \\geq \\hat\\mu_{n,j}` and
:math:`Z_{n,i,j} = -Z_{n,j,i}` otherwise. The arm recommended at stopping
is the empirical best.

The constant C is not derived here: the default ``c_const=1`` is a
heuristic value, and the realized error rate should be measured.

:py:class:`ConfidenceRule` stops as soon as some posterior probability of
optimality reaches a level c.
"""

import dataclasses

import numpy as np

from . import banditModel as bm
from .tools.distances import gaussian_kl
from .tools.utils import argmax_lowest

@dataclasses.dataclass(frozen=True)
class GlrConfig(object):
    """parameters of Chernoff's rule

    :var delta: target error probability, in (0, 1)
    :var alpha: threshold exponent, > 1
    :var c_const: threshold constant C, > 0
    """
    delta: float
    alpha: float = 1.2
    c_const: float = 1.

    def __post_init__(self):
        if not (0 < self.delta < 1):
            raise ValueError("delta must lie in (0, 1), got %s"
                             % str(self.delta))
        if not (self.alpha > 1):
            raise ValueError("alpha must be > 1, got %s" % str(self.alpha))
        if not (self.c_const > 0):
            raise ValueError("c_const must be > 0, got %s"
                             % str(self.c_const))

class GlrState(object):
    """empirical summary at period n

    :param counts: pull counts :math:`T_{n,i}`
    :param means: empirical means, forced to 0 for unpulled arms
    :param double noise_variance: :math:`\\sigma^2`
    :param integer n: period counter, defaults to :math:`\\sum_i T_{n,i}+1`
    """

    def __init__(self, counts, means, noise_variance, n=None):
        self.counts = np.array(counts, dtype=int)
        self.means = np.array(means, dtype=float)
        if self.counts.shape != self.means.shape or self.counts.ndim != 1:
            raise ValueError("counts and means should be vectors of the "
                             "same length")
        if np.any(self.counts < 0):
            raise ValueError("counts must be nonnegative")
        self.means[self.counts == 0] = 0.
        self.noise_variance = float(noise_variance)
        self.n = int(self.counts.sum() + 1 if n is None else n)
        if self.n < 1:
            raise ValueError("n must be >= 1")

    @classmethod
    def from_observations(cls, counts, sums, noise_variance, n=None):
        """state from per-arm counts and sums of observations"""
        counts = np.asarray(counts, dtype=int)
        sums = np.asarray(sums, dtype=float)
        with np.errstate(invalid='ignore', divide='ignore'):
            means = np.where(counts > 0, sums / np.maximum(counts, 1), 0.)
        return cls(counts, means, noise_variance, n)

    @property
    def k(self):
        return self.counts.size

    @property
    def empirical_best(self):
        return argmax_lowest(self.means)

    def __repr__(self):
        return ("GlrState(n=%d, counts=%s, means=%s)"
                % (self.n, self.counts, self.means))

def _glr_ordered(ti, tj, mi, mj, noise_variance):
    """the display for :math:`\\hat\\mu_i \\geq \\hat\\mu_j`"""
    if ti + tj == 0:
        return 0.
    mij = (ti * mi + tj * mj) / float(ti + tj)
    out = 0.
    if ti:
        out += ti * gaussian_kl(mi, mij, noise_variance)
    if tj:
        out += tj * gaussian_kl(mj, mij, noise_variance)
    return float(out)

def glr_statistic(state, i, j):
    """:math:`Z_{n,i,j}`, antisymmetric in (i, j)"""
    for arm in (i, j):
        if not (0 <= arm < state.k):
            raise IndexError("arm index %s out of range for %d arms"
                             % (str(arm), state.k))
    if i == j:
        raise ValueError("the GLR statistic needs two distinct arms")
    ti, tj = state.counts[i], state.counts[j]
    mi, mj = state.means[i], state.means[j]
    if mi >= mj:
        return _glr_ordered(ti, tj, mi, mj, state.noise_variance)
    return -_glr_ordered(tj, ti, mj, mi, state.noise_variance)

def glr_matrix(state):
    """k x k matrix of :math:`Z_{n,i,j}`, 0 on the diagonal"""
    Z = np.zeros((state.k, state.k))
    for i in range(state.k):
        for j in range(i + 1, state.k):
            Z[i, j] = glr_statistic(state, i, j)
            Z[j, i] = -Z[i, j]
    return Z

def chernoff_Z(state):
    """
    z, candidate = chernoff_Z(state)

    :math:`Z_n` and the arm achieving the outer maximum. When the
    empirical best is unique only its row is computed; otherwise every
    pair is (lowest index on ties).
    """
    means = state.means
    best = argmax_lowest(means)
    if np.sum(means == means[best]) == 1:
        z = min(glr_statistic(state, best, j)
                for j in range(state.k) if j != best)
        return float(z), best
    Z = glr_matrix(state)
    np.fill_diagonal(Z, np.inf)
    inner = Z.min(axis=1)
    candidate = argmax_lowest(inner)
    return float(inner[candidate]), candidate

def threshold(n, config):
    """:math:`\\log(C n^\\alpha / \\delta)`"""
    if n < 1:
        raise ValueError("n must be >= 1")
    return float(np.log(config.c_const) + config.alpha * np.log(n)
                 - np.log(config.delta))

def should_stop(state, config):
    """the empirical best when :math:`Z_n` exceeds the threshold at
    ``state.n``, else None"""
    z, candidate = chernoff_Z(state)
    if z > threshold(state.n, config):
        return candidate
    return None

def expected_tau_bounds(gamma_beta, gamma_star, alpha, delta):
    """asymptotic bracket of :math:`E[\\tau_\\delta]`

    :returns: `(log(1/delta) / gamma_star, alpha log(1/delta) / gamma_beta)`
    """
    if not (0 < delta < 1):
        raise ValueError("delta must lie in (0, 1)")
    if gamma_beta <= 0 or gamma_star <= 0:
        raise ValueError("complexities must be positive")
    L = np.log(1. / delta)
    return L / gamma_star, alpha * L / gamma_beta

class ConfidenceRule(object):
    """stop when :math:`\\max_i \\alpha_{n,i} \\geq c`

    For c > 1/2 only the arm with the largest posterior mean can reach c
    (:math:`\\alpha_{n,i} > 1/2` requires :math:`\\mu_{n,i} > \\mu_{n,j}`
    for every j), so only its probability is computed.
    """

    def __init__(self, c):
        if not (0 < c < 1):
            raise ValueError("confidence level must lie in (0, 1), got %s"
                             % str(c))
        self.c = float(c)

    def check(self, belief):
        """recommended arm, or None while the level is not reached"""
        if np.any(belief.improper):
            return None
        if self.c > 0.5:
            arm = argmax_lowest(belief.means)
            alpha = bm.prob_best(belief, arm)
        else:
            probs = bm.prob_best_all(belief)
            arm = argmax_lowest(probs)
            alpha = probs[arm]
        return arm if alpha >= self.c else None

    def __repr__(self):
        return "ConfidenceRule(c=%g)" % self.c
