"""tests for pyttei.policies (configuration and registry)
"""

from ...testing import *

import numpy as np

import pyttei.policies as policies
from pyttei.banditModel import BanditInstance

class RegistryTestCase(TestCase):

    def setUp(self):
        super(RegistryTestCase, self).setUp()
        self.instance = BanditInstance((5., 4., 3., 2., 1.))
        self.configkwargs = {
            'refresh_period': 10,
            'max_resamples': 100,
            }

    def test_every_kind_registered(self):
        for kind in policies.PolicyKind:
            assert_true(kind in policies.policies)
            assert_equal(policies.policies[kind].policyname, kind.value)

    def test_beta_star(self):
        config = policies.PolicyConfig(kind='ttei', beta='star',
                                       **self.configkwargs)
        policy = policies.make_policy(config, self.instance)
        assert_true(isinstance(policy, policies.TTEIPolicy))
        assert_allclose(policy.beta, 0.45, atol=0.01)

    def test_oracle_weights_filled(self):
        for kind in ('rso', 'to'):
            config = policies.PolicyConfig(kind=kind, **self.configkwargs)
            policy = policies.make_policy(config, self.instance)
            assert_allclose(policy.oracle_w.sum(), 1.)
            assert_allclose(policy.oracle_w[0], 0.45, atol=0.01)

    def test_tied_instance(self):
        config = policies.PolicyConfig(kind='ttts', beta='star')
        policy = policies.make_policy(
            config, BanditInstance((5., 4., 1., 1., 1.)))
        assert_allclose(policy.beta, 0.48, atol=0.01)

    def test_unknown_kind(self):
        assert_raises(NotImplementedError, policies.PolicyConfig,
                      kind='ucb')

    def test_bad_values(self):
        assert_raises(ValueError, policies.PolicyConfig, kind='ttei',
                      beta=0.)
        assert_raises(ValueError, policies.PolicyConfig, kind='attei',
                      refresh_period=0)

    def test_labels(self):
        assert_equal(policies.PolicyConfig(kind='ttei', beta=0.5).label,
                     'TTEI-0.5')
        assert_equal(policies.PolicyConfig(kind='ttts', beta='star').label,
                     'TTTS-star')
        assert_equal(policies.PolicyConfig(kind='attei').label, 'aTTEI')
        assert_equal(policies.PolicyConfig(kind='kg').label, 'KG')

    def test_selection_record(self):
        assert_raises(ValueError, policies.SelectionRecord, chosen=1,
                      leader=1, challenger=1)
