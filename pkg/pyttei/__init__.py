"""pyTTEI: best-arm identification with top-two expected improvement

Gaussian bandits with known noise variance, the TTEI sampling rule and
its competitors, optimal proportions, stopping rules and a seeded
experiment harness.
"""
__version__ = '0.1.0'

from .banditModel import (BanditInstance, BeliefState, new_belief, update,
                          prob_best)
from .proportions import (ProportionVector, solve_proportions,
                          solve_optimal_beta)
from .policies import PolicyConfig, make_policy
from .stopping import GlrConfig, GlrState, should_stop
from .experiment import (ExperimentConfig, StopConfig, run_trial,
                         run_experiment)
