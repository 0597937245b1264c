"""Knowledge gradient (KG) for independent normal beliefs

The KG factor of arm i is

.. math::

    \\nu_i = \\tilde\\sigma_i f\\left(-\\frac{|\\mu_{n,i} - \\max_{j \\neq i}
    \\mu_{n,j}|}{\\tilde\\sigma_i}\\right), \\qquad
    \\tilde\\sigma_i = \\frac{\\sigma^2_{n,i}}{\\sqrt{\\sigma^2_{n,i} + \\sigma^2}}

where :math:`\\tilde\\sigma_i` is the standard deviation of the change of
the posterior mean of arm i after one more measurement. KG measures the
arm with the largest factor.
"""
import numpy as np

from .base import SamplingPolicy, SelectionRecord
from ..tools import gaussTools as gt
from ..tools.utils import argmax_lowest

def _kg_terms(belief, noise_variance):
    if np.any(belief.improper):
        raise ValueError("KG needs every arm to be proper")
    var = belief.variances
    total = var + noise_variance
    with np.errstate(invalid='ignore', divide='ignore'):
        step_sd = np.where(var > 0, var / np.sqrt(total), 0.)
    means = belief.means
    order = np.argsort(-means, kind='stable')
    first, second = means[order[0]], means[order[1]]
    best_other = np.where(np.arange(means.size) == order[0], second, first)
    return -np.abs(means - best_other), step_sd

def kg_values(belief, noise_variance):
    """vector of KG factors :math:`\\nu_i`"""
    gaps, step_sd = _kg_terms(belief, noise_variance)
    return gt.scaled_improvement(gaps, step_sd)

def kg_select(belief, noise_variance):
    """measure :math:`\\arg\\max_i \\nu_i`, lowest index on ties"""
    gaps, step_sd = _kg_terms(belief, noise_variance)
    return SelectionRecord(chosen=argmax_lowest(
        gt.log_scaled_improvement(gaps, step_sd)))

class KGPolicy(SamplingPolicy):
    policyname = 'kg'

    def __init__(self, noise_variance=1., **kwargs):
        self.noise_variance = noise_variance

    def select(self, belief, rng):
        return kg_select(belief, self.noise_variance)
