"""Expected-improvement sampling rules: EI, top-two EI (TTEI) and TTEI
with an adaptive :math:`\\beta` (aTTEI)

TTEI measures, with probability :math:`\\beta`, the EI leader

.. math::

    I^{(1)}_n = \\arg\\max_i v_{n,i}

and otherwise the challenger

.. math::

    I^{(2)}_n = \\arg\\max_i v_{n,i,I^{(1)}_n}

Since :math:`v_{n,i,i} = 0`, the challenger always differs from the leader.
With :math:`\\beta = 1`, TTEI is EI.

Candidates are ranked on the log of the improvement measures
(:py:func:`pyttei.tools.gaussTools.log_scaled_improvement`): far in a run
the improvements themselves underflow to 0 and would all tie.
"""
import dataclasses
import warnings

from .base import SamplingPolicy, SelectionRecord
from .. import banditModel as bm
from ..proportions import solve_optimal_beta
from ..tools.utils import argmax_lowest, argmax_lowest_excluding

def _check_beta(beta):
    if not (0 < beta <= 1):
        raise ValueError("beta must lie in (0, 1], got %s" % str(beta))

def ei_leader(belief):
    """:math:`\\arg\\max_i v_{n,i}`; improper arms first, lowest index on
    ties"""
    return argmax_lowest(bm.log_ei_values(belief))

def ei_select(belief):
    """EI rule: measure :math:`\\arg\\max_i v_{n,i}`"""
    leader = ei_leader(belief)
    return SelectionRecord(chosen=leader, leader=leader)

def ttei_challenger(belief, leader):
    return argmax_lowest_excluding(bm.log_pairwise_ei_against(belief, leader),
                                   leader)

def ttei_select(belief, beta, rng):
    """TTEI rule

    :param belief: :py:class:`pyttei.banditModel.BeliefState`
    :param double beta: probability of measuring the leader, in (0, 1]
    :param rng: :py:class:`numpy.random.Generator`, one uniform draw is
        consumed per call

    :returns: :py:class:`SelectionRecord` with leader, challenger and the
        coin outcome
    """
    _check_beta(beta)
    leader = ei_leader(belief)
    challenger = ttei_challenger(belief, leader)
    top = bool(rng.random() < beta)
    return SelectionRecord(chosen=leader if top else challenger,
                           leader=leader, challenger=challenger,
                           used_top_slot=top)

@dataclasses.dataclass(frozen=True)
class AdaptiveState(object):
    """state of adaptive TTEI

    :var beta: current tuning parameter
    :var rounds: selections made so far
    :var refresh_period: rounds between two refreshes
    :var noise_variance: :math:`\\sigma^2` used by the plug-in solve
    """
    beta: float = 0.5
    rounds: int = 0
    refresh_period: int = 10
    noise_variance: float = 1.

def attei_select(belief, state, rng, verbose=0):
    """adaptive TTEI

    Rounds are counted in selections. Rounds 1 to ``refresh_period`` use
    the initial :math:`\\beta`; before each round r > refresh_period with
    r = 1 mod refresh_period, :math:`\\beta` is replaced by
    :math:`\\hat\\beta^*`, the maximizer of :math:`\\Gamma^*_\\beta` with the
    posterior means plugged in. If that solve fails (tied or improper
    means), :math:`\\beta` is kept.

    :returns: `(record, new_state)`
    """
    rounds = state.rounds + 1
    beta = state.beta
    period = state.refresh_period
    refresh = rounds > period and (rounds - 1) % period == 0
    if refresh and not belief.improper.any():
        try:
            beta = solve_optimal_beta(belief.means,
                                      state.noise_variance).beta_star
        except ValueError as err:
            if verbose > 1:
                warnings.warn("aTTEI keeps beta=%g: %s" % (beta, err))
    record = ttei_select(belief, beta, rng)
    return record, dataclasses.replace(state, beta=beta, rounds=rounds)

class EIPolicy(SamplingPolicy):
    """standard expected improvement"""
    policyname = 'ei'

    def select(self, belief, rng):
        return ei_select(belief)

class TTEIPolicy(SamplingPolicy):
    """top-two expected improvement with a fixed :math:`\\beta`"""
    policyname = 'ttei'

    def __init__(self, beta=0.5, **kwargs):
        _check_beta(beta)
        self.beta = beta

    def select(self, belief, rng):
        return ttei_select(belief, self.beta, rng)

    def __repr__(self):
        return "TTEIPolicy(beta=%g)" % self.beta

class AdaptiveTTEIPolicy(SamplingPolicy):
    """TTEI whose :math:`\\beta` follows the plug-in :math:`\\hat\\beta^*`
    """
    policyname = 'attei'

    def __init__(self, noise_variance=1., refresh_period=10, beta=0.5,
                 verbose=0, **kwargs):
        _check_beta(beta)
        self.initial = AdaptiveState(beta=beta, rounds=0,
                                     refresh_period=int(refresh_period),
                                     noise_variance=noise_variance)
        self.state = self.initial
        self.verbose = verbose

    @property
    def beta(self):
        return self.state.beta

    def select(self, belief, rng):
        record, self.state = attei_select(belief, self.state, rng,
                                          self.verbose)
        return record

    def reset(self):
        self.state = self.initial
