"""Oracle rules that know the optimal proportions in advance

* random sampling oracle (RSO): draws the arm from :math:`w`,
* tracking oracle (TO): measures the arm with the largest ratio of its
  target to its empirical proportion.
"""
import numpy as np

from .base import SamplingPolicy, SelectionRecord, check_weights
from ..tools.utils import argmax_lowest

def rso_select(w, rng):
    """categorical draw from the proportions ``w``"""
    w = check_weights(w)
    return SelectionRecord(chosen=int(rng.choice(w.size, p=w / w.sum())))

def to_ratios(w, counts, n=None):
    """:math:`w_i / (T_{n,i}/n)`; ``inf`` for unpulled arms with
    :math:`w_i > 0` and 0 for arms with :math:`w_i = 0`

    :param n: period counter, defaults to :math:`\\sum_i T_{n,i} + 1`
    """
    w = check_weights(w)
    counts = np.asarray(counts, dtype=float)
    if counts.shape != w.shape:
        raise ValueError("counts and w should have the same length")
    if n is None:
        n = counts.sum() + 1
    ratios = np.zeros(w.size)
    pulled = counts > 0
    ratios[pulled] = w[pulled] * n / counts[pulled]
    ratios[~pulled & (w > 0)] = np.inf
    return ratios

def to_select(w, counts, n=None):
    """tracking oracle: arm with the largest ratio, lowest index on
    ties"""
    return SelectionRecord(chosen=argmax_lowest(to_ratios(w, counts, n)))

class RSOPolicy(SamplingPolicy):
    policyname = 'rso'

    def __init__(self, oracle_w=None, **kwargs):
        if oracle_w is None:
            raise ValueError("RSO needs the oracle proportions oracle_w")
        self.oracle_w = check_weights(oracle_w)

    def select(self, belief, rng):
        return rso_select(self.oracle_w, rng)

class TOPolicy(SamplingPolicy):
    policyname = 'to'

    def __init__(self, oracle_w=None, **kwargs):
        if oracle_w is None:
            raise ValueError("TO needs the oracle proportions oracle_w")
        self.oracle_w = check_weights(oracle_w)

    def select(self, belief, rng):
        return to_select(self.oracle_w, belief.counts, belief.step)
