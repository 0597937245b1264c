"""Base objects shared by the sampling rules
"""
import dataclasses
import enum

import numpy as np

class PolicyKind(enum.Enum):
    EI = 'ei'
    TTEI = 'ttei'
    ATTEI = 'attei'
    TTTS = 'ttts'
    KG = 'kg'
    RSO = 'rso'
    TO = 'to'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise NotImplementedError(
                "policy kind %s not implemented, choose among %s"
                % (value, ', '.join(k.value for k in cls)))

@dataclasses.dataclass(frozen=True)
class SelectionRecord(object):
    """outcome of one selection

    :var chosen: measured arm :math:`I_n`
    :var leader: :math:`I^{(1)}_n`, for the rules that have one
    :var challenger: :math:`I^{(2)}_n`, for the top-two rules
    :var used_top_slot: outcome of the :math:`\\beta`-coin
    """
    chosen: int
    leader: int = None
    challenger: int = None
    used_top_slot: bool = None

    def __post_init__(self):
        if (self.leader is not None and self.challenger is not None
                and self.leader == self.challenger):
            raise ValueError("leader and challenger must differ")

@dataclasses.dataclass(frozen=True)
class PolicyConfig(object):
    """parameters of a sampling rule

    :param kind: :py:class:`PolicyKind` or its name
    :param beta: share of the leader, in (0, 1] (TTEI, TTTS). The string
        ``'star'`` is resolved to :math:`\\beta^*` of the instance by
        :py:meth:`resolved`.
    :param integer refresh_period: rounds between two updates of
        :math:`\\beta` in adaptive TTEI
    :param oracle_w: proportions followed by RSO and TO; filled with
        :math:`w^*` by :py:meth:`resolved` when missing
    :param integer max_resamples: cap on TTTS redraws
    """
    kind: PolicyKind = PolicyKind.TTEI
    beta: object = 0.5
    refresh_period: int = 10
    oracle_w: tuple = None
    max_resamples: int = 100

    def __post_init__(self):
        object.__setattr__(self, 'kind', PolicyKind.parse(self.kind))
        if self.beta != 'star':
            beta = float(self.beta)
            if not (0 < beta <= 1):
                raise ValueError("beta must lie in (0, 1], got %g" % beta)
            object.__setattr__(self, 'beta', beta)
        if int(self.refresh_period) < 1:
            raise ValueError("refresh_period must be a positive integer")
        if int(self.max_resamples) < 0:
            raise ValueError("max_resamples must be nonnegative")
        if self.oracle_w is not None:
            object.__setattr__(self, 'oracle_w',
                               tuple(float(x) for x in self.oracle_w))

    @property
    def label(self):
        """short name used in reports, e.g. ``TTEI-0.5``"""
        name = {PolicyKind.EI: 'EI', PolicyKind.TTEI: 'TTEI',
                PolicyKind.ATTEI: 'aTTEI', PolicyKind.TTTS: 'TTTS',
                PolicyKind.KG: 'KG', PolicyKind.RSO: 'RSO',
                PolicyKind.TO: 'TO'}[self.kind]
        if self.kind in (PolicyKind.TTEI, PolicyKind.TTTS):
            beta = self.beta if self.beta == 'star' else '%g' % self.beta
            return '%s-%s' % (name, beta)
        return name

    def resolved(self, instance):
        """copy with ``beta='star'`` and a missing ``oracle_w`` replaced by
        the values of ``instance`` (ties perturbed before solving)"""
        from ..proportions import solve_tied
        needs_star = self.beta == 'star'
        needs_w = (self.oracle_w is None
                   and self.kind in (PolicyKind.RSO, PolicyKind.TO))
        if not (needs_star or needs_w):
            return self
        summary = solve_tied(instance.means, instance.noise_variance)
        changes = {}
        if needs_star:
            changes['beta'] = summary.beta_star
        if needs_w:
            changes['oracle_w'] = summary.w_star.tolist()
        return dataclasses.replace(self, **changes)

    def to_dict(self):
        return {'kind': self.kind.value, 'beta': self.beta,
                'refresh_period': self.refresh_period,
                'max_resamples': self.max_resamples,
                'oracle_w': (None if self.oracle_w is None
                             else list(self.oracle_w))}

class SamplingPolicy(object):
    """SamplingPolicy is the base class of the sampling rules. All the
    rules sub-classing it should implement:

    * :py:meth:`SamplingPolicy.select`, returning a
      :py:class:`SelectionRecord` for the current belief,

    * :py:meth:`SamplingPolicy.reset`, if the rule keeps internal state
      across selections (adaptive TTEI).

    Random draws only come from the ``rng`` passed to ``select``.
    """
    policyname = 'dummy'

    def __init__(self, **kwargs):
        pass

    def select(self, belief, rng):
        raise NotImplementedError("select is not defined for %s"
                                  % self.policyname)

    def reset(self):
        pass

    def __repr__(self):
        return "%s()" % self.__class__.__name__

def check_weights(w):
    w = np.asarray(w, dtype=float).ravel()
    if np.any(w < 0) or abs(w.sum() - 1.) > 1e-10:
        raise ValueError("oracle weights must lie on the simplex: %s"
                         % str(w))
    return w
