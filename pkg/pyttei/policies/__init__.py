"""Sampling rules

All the rules sub-class :py:class:`pyttei.policies.base.SamplingPolicy`
and are registered in :py:data:`policies` by kind.
"""
from .base import (PolicyKind, PolicyConfig, SelectionRecord,
                   SamplingPolicy)
from .expectedImprovement import (EIPolicy, TTEIPolicy, AdaptiveTTEIPolicy,
                                  AdaptiveState, ei_select, ttei_select,
                                  attei_select)
from .thompson import TTTSPolicy, ttts_select
from .knowledgeGradient import KGPolicy, kg_select, kg_values
from .oracles import RSOPolicy, TOPolicy, rso_select, to_select

policies = {
    PolicyKind.EI: EIPolicy,
    PolicyKind.TTEI: TTEIPolicy,
    PolicyKind.ATTEI: AdaptiveTTEIPolicy,
    PolicyKind.TTTS: TTTSPolicy,
    PolicyKind.KG: KGPolicy,
    PolicyKind.RSO: RSOPolicy,
    PolicyKind.TO: TOPolicy}

def make_policy(config, instance, verbose=0):
    """builds the rule described by ``config`` for ``instance``

    :param config: :py:class:`PolicyConfig`; ``beta='star'`` and missing
        oracle proportions are resolved on ``instance``
    :param instance: :py:class:`pyttei.banditModel.BanditInstance`
    :returns: a fresh :py:class:`SamplingPolicy`
    """
    config = config.resolved(instance)
    return policies[config.kind](
        beta=config.beta,
        refresh_period=config.refresh_period,
        oracle_w=config.oracle_w,
        max_resamples=config.max_resamples,
        noise_variance=instance.noise_variance,
        verbose=verbose)
