"""Top-two Thompson sampling (TTTS)

A sample :math:`\\theta \\sim \\Pi_n` designates the leader. With
probability :math:`\\beta` the leader is measured; otherwise
:math:`\\theta` is redrawn until another arm is the argmax, and that arm
is measured. The number of redraws is capped (``max_resamples``); past
the cap the challenger is the pairwise-EI challenger of the leader, so
a selection always terminates.
"""
import numpy as np

from .base import SamplingPolicy, SelectionRecord
from .. import banditModel as bm
from ..tools.utils import argmax_lowest, argmax_lowest_excluding

def _thompson_draw(belief, rng):
    return argmax_lowest(rng.normal(belief.means, belief.stds))

def ttts_select(belief, beta, rng, max_resamples=100):
    """TTTS rule

    :param belief: :py:class:`pyttei.banditModel.BeliefState`, every arm
        proper
    :param double beta: probability of measuring the leader, in (0, 1]
    :param rng: :py:class:`numpy.random.Generator`
    :param integer max_resamples: cap on the number of redraws
    """
    if not (0 < beta <= 1):
        raise ValueError("beta must lie in (0, 1], got %s" % str(beta))
    if np.any(belief.improper):
        raise ValueError("TTTS needs every arm to be proper")
    leader = _thompson_draw(belief, rng)
    if rng.random() < beta:
        return SelectionRecord(chosen=leader, leader=leader,
                               used_top_slot=True)
    for _ in range(max_resamples):
        candidate = _thompson_draw(belief, rng)
        if candidate != leader:
            break
    else:
        candidate = argmax_lowest_excluding(
            bm.log_pairwise_ei_against(belief, leader), leader)
    return SelectionRecord(chosen=candidate, leader=leader,
                           challenger=candidate, used_top_slot=False)

class TTTSPolicy(SamplingPolicy):
    """top-two Thompson sampling with a fixed :math:`\\beta`"""
    policyname = 'ttts'

    def __init__(self, beta=0.5, max_resamples=100, **kwargs):
        self.beta = beta
        self.max_resamples = int(max_resamples)

    def select(self, belief, rng):
        return ttts_select(belief, self.beta, rng, self.max_resamples)

    def __repr__(self):
        return "TTTSPolicy(beta=%g)" % self.beta
