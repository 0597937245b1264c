"""\
Description
-----------

Seeded Monte-Carlo experiments.

A trial plays every arm once (arms 0, 1, ..., k-1 in order), which under
the improper prior seeds each arm with :math:`N(Y_{i,i}, \\sigma^2)`, and
then alternates selection, observation and posterior update until the
stopping rule fires or ``horizon_cap`` pulls have been made (the trial is
then *censored*).

Every trial draws from its own stream, derived from
``(base_seed, trial_index)`` by :py:func:`pyttei.tools.utils.trial_generator`,
so that the results of an experiment do not depend on the order in which
its trials are run nor on the number of workers.

Usage
-----

::

    >>> from pyttei.banditModel import BanditInstance
    >>> from pyttei.policies import PolicyConfig
    >>> from pyttei.experiment import ExperimentConfig, StopConfig
    >>> from pyttei.experiment import run_experiment
    >>> config = ExperimentConfig(
    ...     instance=BanditInstance((5., 4., 3., 2., 1.)),
    ...     policy=PolicyConfig(kind='ttei', beta=0.5),
    ...     stop=StopConfig.confidence(0.95), trials=100)
    >>> report = run_experiment(config, verbose=1)

"""

import collections
import concurrent.futures
import dataclasses
import enum
import warnings

import numpy as np
from scipy import stats

from . import banditModel as bm
from .policies import PolicyConfig, PolicyKind, make_policy
from .proportions import solve_proportions, solve_tied
from .stopping import (ConfidenceRule, GlrConfig, GlrState, chernoff_Z,
                       should_stop)
from .tools.utils import perturb_duplicates, trial_generator, trial_seed

LinearFit = collections.namedtuple('LinearFit',
                                   ['slope', 'stderr', 'intercept'])

class StopKind(enum.Enum):
    CONFIDENCE = 'confidence'
    CHERNOFF = 'chernoff'
    HORIZON = 'horizon'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise NotImplementedError(
                "stopping rule %s not implemented, choose among %s"
                % (value, ', '.join(k.value for k in cls)))

@dataclasses.dataclass(frozen=True)
class StopConfig(object):
    """stopping criterion of a trial

    Build it with :py:meth:`confidence`, :py:meth:`chernoff` or
    :py:meth:`horizon`.
    """
    kind: StopKind
    c: float = None
    glr: GlrConfig = None
    n_max: int = None

    def __post_init__(self):
        object.__setattr__(self, 'kind', StopKind.parse(self.kind))
        if self.kind == StopKind.CONFIDENCE:
            if self.c is None or not (0 < self.c < 1):
                raise ValueError("confidence stopping needs c in (0, 1)")
        elif self.kind == StopKind.CHERNOFF:
            if self.glr is None:
                raise ValueError("chernoff stopping needs a GlrConfig")
        elif self.n_max is None or int(self.n_max) < 1:
            raise ValueError("horizon stopping needs a positive n_max")

    @classmethod
    def confidence(cls, c):
        return cls(StopKind.CONFIDENCE, c=float(c))

    @classmethod
    def chernoff(cls, delta, alpha=1.2, c_const=1.):
        return cls(StopKind.CHERNOFF,
                   glr=GlrConfig(delta=float(delta), alpha=float(alpha),
                                 c_const=float(c_const)))

    @classmethod
    def horizon(cls, n_max):
        return cls(StopKind.HORIZON, n_max=int(n_max))

    @property
    def label(self):
        if self.kind == StopKind.CONFIDENCE:
            return 'confidence(c=%g)' % self.c
        if self.kind == StopKind.CHERNOFF:
            return ('chernoff(delta=%g,alpha=%g,C=%g(heuristic))'
                    % (self.glr.delta, self.glr.alpha, self.glr.c_const))
        return 'horizon(n_max=%d)' % self.n_max

    def to_dict(self):
        out = {'kind': self.kind.value}
        if self.kind == StopKind.CONFIDENCE:
            out['c'] = self.c
        elif self.kind == StopKind.CHERNOFF:
            out.update(delta=self.glr.delta, alpha=self.glr.alpha,
                       c_const=self.glr.c_const)
        else:
            out['n_max'] = self.n_max
        return out

# config keys, as dotted paths, and whether they are required
config_keys = {
    'instance.means': True, 'instance.noise_variance': False,
    'instance.name': False,
    'policy.kind': True, 'policy.beta': False,
    'policy.refresh_period': False, 'policy.max_resamples': False,
    'policy.oracle_w': False,
    'stop.kind': True, 'stop.c': False, 'stop.delta': False,
    'stop.alpha': False, 'stop.c_const': False, 'stop.n_max': False,
    'trials': False, 'base_seed': False, 'horizon_cap': False,
    'record_trajectory': False, 'workers': False, 'alpha_every': False,
    }

def _flatten(d, prefix=''):
    out = {}
    for key, value in d.items():
        path = prefix + str(key)
        if isinstance(value, dict):
            out.update(_flatten(value, path + '.'))
        else:
            out[path] = value
    return out

@dataclasses.dataclass(frozen=True)
class ExperimentConfig(object):
    """one fixed-confidence (or fixed-horizon) experiment

    :param instance: :py:class:`pyttei.banditModel.BanditInstance`
    :param policy: :py:class:`pyttei.policies.PolicyConfig`
    :param stop: :py:class:`StopConfig`
    :param integer trials: number of independent trials, >= 1
    :param integer base_seed: experiment seed
    :param integer horizon_cap: pulls after which a trial is censored,
        >= k
    :param bool record_trajectory: keep per-pull records in the results
    :param integer workers: processes used to run the trials
    :param integer alpha_every: with confidence stopping, evaluate the
        posterior probabilities only every ``alpha_every`` pulls after
        the initialization (1: every pull, the exact stopping time)
    """
    instance: bm.BanditInstance
    policy: PolicyConfig
    stop: StopConfig
    trials: int = 1
    base_seed: int = 0
    horizon_cap: int = 10**6
    record_trajectory: bool = False
    workers: int = 1
    alpha_every: int = 1

    def __post_init__(self):
        if int(self.trials) < 1:
            raise ValueError("trials must be >= 1")
        if int(self.horizon_cap) < self.instance.k:
            raise ValueError("horizon_cap must be at least the number of "
                             "arms (%d)" % self.instance.k)
        if int(self.workers) < 1:
            raise ValueError("workers must be >= 1")
        if int(self.alpha_every) < 1:
            raise ValueError("alpha_every must be >= 1")

    @property
    def instance_id(self):
        if self.instance.name:
            return self.instance.name
        return '[%s]' % ','.join('%g' % m for m in self.instance.means)

    def resolved(self):
        """copy with the policy parameters resolved on the instance"""
        return dataclasses.replace(
            self, policy=self.policy.resolved(self.instance))

    @classmethod
    def from_dict(cls, d):
        """builds a config from nested dicts (or dotted keys)

        Unknown keys raise ``ValueError``.
        """
        flat = _flatten(d)
        unknown = sorted(set(flat) - set(config_keys))
        if unknown:
            raise ValueError("unknown configuration keys: %s"
                             % ', '.join(unknown))
        missing = [key for key, required in config_keys.items()
                   if required and key not in flat]
        if missing:
            raise ValueError("missing configuration keys: %s"
                             % ', '.join(missing))
        instance = bm.BanditInstance(
            tuple(flat['instance.means']),
            flat.get('instance.noise_variance', 1.),
            flat.get('instance.name'))
        policy = PolicyConfig(
            kind=flat['policy.kind'],
            beta=flat.get('policy.beta', 0.5),
            refresh_period=int(flat.get('policy.refresh_period', 10)),
            oracle_w=flat.get('policy.oracle_w'),
            max_resamples=int(flat.get('policy.max_resamples', 100)))
        kind = StopKind.parse(flat['stop.kind'])
        if kind == StopKind.CONFIDENCE:
            if 'stop.c' not in flat:
                raise ValueError("confidence stopping needs stop.c")
            stop = StopConfig.confidence(flat['stop.c'])
        elif kind == StopKind.CHERNOFF:
            if 'stop.delta' not in flat:
                raise ValueError("chernoff stopping needs stop.delta")
            stop = StopConfig.chernoff(flat['stop.delta'],
                                       flat.get('stop.alpha', 1.2),
                                       flat.get('stop.c_const', 1.))
        else:
            if 'stop.n_max' not in flat:
                raise ValueError("horizon stopping needs stop.n_max")
            stop = StopConfig.horizon(flat['stop.n_max'])
        return cls(instance=instance, policy=policy, stop=stop,
                   trials=int(flat.get('trials', 1)),
                   base_seed=int(flat.get('base_seed', 0)),
                   horizon_cap=int(flat.get('horizon_cap', 10**6)),
                   record_trajectory=bool(flat.get('record_trajectory',
                                                   False)),
                   workers=int(flat.get('workers', 1)),
                   alpha_every=int(flat.get('alpha_every', 1)))

    def to_dict(self):
        instance = self.instance.to_dict()
        if self.instance.name:
            instance['name'] = self.instance.name
        policy = self.policy.to_dict()
        if policy['oracle_w'] is None:
            del policy['oracle_w']
        return {'instance': instance, 'policy': policy,
                'stop': self.stop.to_dict(), 'trials': self.trials,
                'base_seed': self.base_seed,
                'horizon_cap': self.horizon_cap,
                'record_trajectory': self.record_trajectory,
                'workers': self.workers, 'alpha_every': self.alpha_every}

@dataclasses.dataclass(frozen=True)
class TrialResult(object):
    """outcome of one trial

    :var samples_used: number of pulls, initialization included
    :var recommended: recommended arm (posterior leader for censored
        trials)
    :var correct: whether it is the best arm of the instance
    :var final_counts: pull counts at stopping, summing to samples_used
    :var censored: True if ``horizon_cap`` was reached without stopping
    :var trajectory: list of per-pull dicts, or None
    """
    trial_index: int
    seed: int
    samples_used: int
    recommended: int
    correct: bool
    final_counts: tuple
    censored: bool = False
    trajectory: list = None

@dataclasses.dataclass(frozen=True)
class AggregateReport(object):
    """statistics of an experiment

    ``mean_samples`` and ``stderr_samples`` are computed over the
    uncensored trials, ``error_rate`` over all of them. ``diagnostics``
    is filled by :py:func:`diagnose`.
    """
    instance_id: str
    policy: str
    stop: str
    trials: int
    mean_samples: float
    stderr_samples: float
    error_rate: float
    censored: int
    mean_proportions: tuple
    diagnostics: dict = None

    def to_row(self):
        """row of the CSV report"""
        return {'instance_id': self.instance_id, 'policy': self.policy,
                'stop': self.stop, 'trials': self.trials,
                'mean_samples': self.mean_samples,
                'stderr': self.stderr_samples,
                'error_rate': self.error_rate, 'censored': self.censored}

########## Trials ##########
def _step_record(instance, belief, glr_state, chosen):
    best = instance.best_arm
    if np.any(belief.improper):
        alpha_best = log_tail = None
    else:
        log_alpha = bm.log_prob_best(belief, best)
        alpha_best = float(np.clip(np.exp(log_alpha), 0., 1.))
        log_tail = bm.log_prob_not_best(belief, best)
        if not np.isfinite(log_tail):
            log_tail = None
    z = chernoff_Z(glr_state)[0]
    return {'step': belief.step - 1, 'chosen': int(chosen),
            'alpha_best': alpha_best, 'log_tail': log_tail,
            'z': float(z) if np.isfinite(z) else None,
            'counts': belief.counts.tolist(),
            'means': belief.means.tolist()}

def run_trial(config, trial_index, verbose=0):
    """runs trial ``trial_index`` of ``config``

    The result only depends on ``config`` and ``trial_index``.

    :returns: :py:class:`TrialResult`
    """
    instance = config.instance
    k = instance.k
    noise_variance = instance.noise_variance
    rng = trial_generator(config.base_seed, trial_index)
    policy = make_policy(config.policy, instance)
    stop = config.stop
    confidence = (ConfidenceRule(stop.c)
                  if stop.kind == StopKind.CONFIDENCE else None)
    belief = bm.new_belief(k)
    sums = np.zeros(k)
    trajectory = [] if config.record_trajectory else None

    def pull(arm):
        y = bm.simulate_observation(instance, arm, rng)
        sums[arm] += y
        return bm.update(belief, arm, y, noise_variance)

    def glr_state():
        return GlrState.from_observations(belief.counts, sums,
                                          noise_variance)

    for arm in range(k):
        belief = pull(arm)
        if trajectory is not None:
            trajectory.append(_step_record(instance, belief, glr_state(),
                                           arm))

    recommended = None
    censored = False
    while True:
        t = belief.step - 1
        if stop.kind == StopKind.CONFIDENCE:
            if (t - k) % config.alpha_every == 0:
                recommended = confidence.check(belief)
        elif stop.kind == StopKind.CHERNOFF:
            recommended = should_stop(glr_state(), stop.glr)
        elif t >= stop.n_max:
            recommended = belief.leader
        if recommended is not None:
            break
        if t >= config.horizon_cap:
            censored = True
            recommended = belief.leader
            break
        record = policy.select(belief, rng)
        belief = pull(record.chosen)
        if trajectory is not None:
            trajectory.append(_step_record(instance, belief, glr_state(),
                                           record.chosen))

    samples = belief.step - 1
    if verbose > 1:
        print("    trial %d: %d samples, arm %d recommended%s"
              % (trial_index, samples, recommended,
                 ' (censored)' if censored else ''))
    return TrialResult(trial_index=int(trial_index),
                       seed=trial_seed(config.base_seed, trial_index),
                       samples_used=int(samples),
                       recommended=int(recommended),
                       correct=bool(recommended == instance.best_arm),
                       final_counts=tuple(int(c) for c in belief.counts),
                       censored=censored, trajectory=trajectory)

def run_trials(config, verbose=0, order=None):
    """runs every trial of ``config``, on ``config.workers`` processes

    :param order: optional permutation of ``range(config.trials)`` giving
        the submission order
    :returns: list of :py:class:`TrialResult`, sorted by trial index
    """
    config = config.resolved()
    indices = list(range(config.trials)) if order is None else list(order)
    if sorted(indices) != list(range(config.trials)):
        raise ValueError("order must be a permutation of the trial indices")
    if verbose:
        print("Running %d trials of %s on %s, %s"
              % (config.trials, config.policy.label, config.instance_id,
                 config.stop.label))
    if config.workers > 1:
        with concurrent.futures.ProcessPoolExecutor(
                max_workers=config.workers) as executor:
            futures = [executor.submit(run_trial, config, i, verbose)
                       for i in indices]
            results = [f.result() for f in futures]
    else:
        results = [run_trial(config, i, verbose) for i in indices]
    return sorted(results, key=lambda r: r.trial_index)

def summarize(config, results, verbose=0):
    """aggregates trial results into an :py:class:`AggregateReport`"""
    results = sorted(results, key=lambda r: r.trial_index)
    done = [r for r in results if not r.censored]
    censored = len(results) - len(done)
    if censored:
        warnings.warn("%d of %d trials reached horizon_cap=%d without "
                      "stopping; they are excluded from mean_samples"
                      % (censored, len(results), config.horizon_cap))
    samples = np.array([r.samples_used for r in done], dtype=float)
    if samples.size:
        mean_samples = float(samples.mean())
    else:
        mean_samples = float('nan')
    if samples.size > 1:
        stderr = float(samples.std(ddof=1) / np.sqrt(samples.size))
    else:
        stderr = 0.
    error_rate = float(np.mean([not r.correct for r in results]))
    proportions = np.mean([np.array(r.final_counts) / float(r.samples_used)
                           for r in results], axis=0)
    if config.stop.kind == StopKind.CHERNOFF and verbose:
        warnings.warn("the Chernoff threshold constant C=%g is a "
                      "heuristic value" % config.stop.glr.c_const)
    report = AggregateReport(
        instance_id=config.instance_id, policy=config.policy.label,
        stop=config.stop.label, trials=len(results),
        mean_samples=mean_samples, stderr_samples=stderr,
        error_rate=error_rate, censored=censored,
        mean_proportions=tuple(float(p) for p in proportions))
    if verbose:
        print("    %s on %s: %.2f +- %.2f samples, error rate %.3f"
              % (report.policy, report.instance_id, report.mean_samples,
                 report.stderr_samples, report.error_rate))
    return report

def run_experiment(config, verbose=0, order=None):
    """runs the trials of ``config`` and aggregates them

    The report is a function of ``config`` alone: neither ``order`` nor
    ``config.workers`` changes it.

    :returns: :py:class:`AggregateReport`
    """
    return summarize(config, run_trials(config, verbose, order), verbose)

########## Diagnostics ##########
def _require_fields(trajectory, fields):
    if not trajectory:
        raise ValueError("empty trajectory")
    for field in fields:
        if any(field not in r for r in trajectory):
            raise ValueError("trajectory records lack the field '%s'"
                             % field)

def measure_convergence_time(trajectory, w_target, epsilon, true_means):
    """finite-horizon estimate of :math:`T^\\epsilon_\\beta`

    Smallest recorded step N such that, for every recorded step
    :math:`n \\geq N`, :math:`|\\mu_{n,i} - \\mu_i| \\leq \\epsilon` and
    :math:`|T_{n,i}/n - w_i| \\leq \\epsilon` for all arms. None when the
    conditions fail at the last recorded step.

    This can only underestimate the true time, since the conditions may
    fail again after the end of the trajectory.
    """
    _require_fields(trajectory, ('step', 'counts', 'means'))
    w = np.asarray(w_target, dtype=float)
    mu = np.asarray(true_means, dtype=float)
    first = None
    for record in reversed(trajectory):
        n = float(record['step'])
        ok = (np.all(np.abs(np.asarray(record['means']) - mu) <= epsilon)
              and np.all(np.abs(np.asarray(record['counts']) / n - w)
                         <= epsilon))
        if not ok:
            break
        first = int(record['step'])
    return first

def _tail_exponents(trajectory):
    steps, values = [], []
    for record in trajectory:
        log_tail = record.get('log_tail')
        if log_tail is None:
            alpha = record.get('alpha_best')
            if alpha is None or alpha >= 1:
                continue
            log_tail = np.log1p(-alpha)
        if np.isfinite(log_tail):
            steps.append(record['step'])
            values.append(-log_tail)
    return np.array(steps, dtype=float), np.array(values)

def estimate_exponent(trajectory, window=0.5):
    """least-squares slope of :math:`-\\log(1 - \\alpha_{n,1})` against n
    over the trailing ``window`` fraction of the trajectory

    The ``log_tail`` field is used when present, since
    :math:`1 - \\alpha_{n,1}` underflows on long runs.

    :returns: :py:class:`LinearFit` (slope, stderr, intercept)
    """
    if not (0 < window <= 1):
        raise ValueError("window must lie in (0, 1]")
    _require_fields(trajectory, ('step',))
    n_keep = int(np.ceil(window * len(trajectory)))
    steps, values = _tail_exponents(trajectory[len(trajectory) - n_keep:])
    if steps.size < 10:
        raise ValueError("at least 10 points are needed to fit the "
                         "exponent, got %d" % steps.size)
    if np.all(values == values[0]):
        return LinearFit(0., 0., float(values[0]))
    fit = stats.linregress(steps, values)
    return LinearFit(float(fit.slope), float(fit.stderr),
                     float(fit.intercept))

def sample_complexity_curve(config, deltas, verbose=0):
    """mean stopping time of Chernoff's rule for each delta of ``deltas``

    :returns: list of `(delta, mean_tau, stderr)`
    """
    if config.stop.kind != StopKind.CHERNOFF:
        raise ValueError("sample_complexity_curve needs chernoff stopping")
    curve = []
    for delta in deltas:
        glr = dataclasses.replace(config.stop.glr, delta=float(delta))
        stop = dataclasses.replace(config.stop, glr=glr)
        report = run_experiment(dataclasses.replace(config, stop=stop),
                                verbose)
        curve.append((float(delta), report.mean_samples,
                      report.stderr_samples))
    return curve

def complexity_slope(curve):
    """regression of the mean stopping time on :math:`\\log(1/\\delta)`

    :returns: :py:class:`LinearFit`
    """
    if len(curve) < 2:
        raise ValueError("at least 2 points are needed")
    x = np.log(1. / np.array([c[0] for c in curve]))
    y = np.array([c[1] for c in curve])
    fit = stats.linregress(x, y)
    return LinearFit(float(fit.slope), float(fit.stderr),
                     float(fit.intercept))

def target_proportions(config):
    """proportions the sampling rule of ``config`` should converge to,
    None for EI and KG"""
    policy = config.policy.resolved(config.instance)
    means = config.instance.means
    sigma2 = config.instance.noise_variance
    if policy.kind in (PolicyKind.RSO, PolicyKind.TO):
        return np.array(policy.oracle_w)
    if policy.kind == PolicyKind.ATTEI:
        return np.asarray(solve_tied(means, sigma2).w_star)
    if policy.kind in (PolicyKind.TTEI, PolicyKind.TTTS) and policy.beta < 1:
        w, _ = solve_proportions(perturb_duplicates(means), sigma2,
                                 policy.beta)
        return np.asarray(w)
    return None

def proportion_convergence_check(instance, beta=0.5, horizon=20000,
                                 seeds=20, base_seed=0, workers=1,
                                 verbose=0):
    """average final proportions of TTEI-beta after ``horizon`` pulls,
    compared with :math:`w^\\beta`

    :returns: dict with ``w_target``, ``mean_proportions`` and
        ``max_deviation``
    """
    config = ExperimentConfig(
        instance=instance, policy=PolicyConfig(kind='ttei', beta=beta),
        stop=StopConfig.horizon(horizon), trials=seeds,
        base_seed=base_seed, horizon_cap=horizon, workers=workers)
    report = run_experiment(config, verbose)
    w = np.asarray(solve_proportions(perturb_duplicates(instance.means),
                                     instance.noise_variance, beta)[0])
    p = np.array(report.mean_proportions)
    return {'w_target': w.tolist(), 'mean_proportions': p.tolist(),
            'max_deviation': float(np.max(np.abs(p - w)))}

def diagnose(config, epsilon=0.05, window=0.5, verbose=0):
    """long-horizon diagnostics of every trial of ``config``

    Trajectories are recorded; for each trial the convergence time
    estimate and the fitted exponent of :math:`1 - \\alpha_{n,1}` are
    reported, together with their averages.

    :returns: dict with the per-trial rows (``trials``), the averages
        (``mean_exponent``, ``mean_convergence_time``), ``w_target`` and
        the :py:class:`AggregateReport` of the run (``report``), whose
        ``diagnostics`` field holds the averages
    """
    config = dataclasses.replace(config, record_trajectory=True)
    results = run_trials(config, verbose)
    w = target_proportions(config)
    rows = []
    for r in results:
        row = {'trial': r.trial_index, 'seed': r.seed,
               'samples_used': r.samples_used}
        if w is not None:
            row['convergence_time'] = measure_convergence_time(
                r.trajectory, w, epsilon, config.instance.means)
        else:
            row['convergence_time'] = None
        try:
            fit = estimate_exponent(r.trajectory, window)
            row['exponent'], row['exponent_stderr'] = fit.slope, fit.stderr
        except ValueError as err:
            if verbose:
                warnings.warn("trial %d: %s" % (r.trial_index, err))
            row['exponent'] = row['exponent_stderr'] = None
        rows.append(row)
    exps = [row['exponent'] for row in rows if row['exponent'] is not None]
    times = [row['convergence_time'] for row in rows
             if row['convergence_time'] is not None]
    summary = {'mean_exponent': float(np.mean(exps)) if exps else None,
               'mean_convergence_time': (float(np.mean(times)) if times
                                         else None),
               'w_target': None if w is None else w.tolist()}
    report = dataclasses.replace(summarize(config, results, verbose),
                                 diagnostics=summary)
    return dict(summary, trials=rows, report=report)

########## Built-in suites ##########
table_means = ((5., 4., 1., 1., 1.),
               (5., 4., 3., 2., 1.),
               (2., .8, .6, .4, .2))

def table_instances(noise_variance=1.):
    """the three 5-arm instances of the benchmark tables"""
    return [bm.BanditInstance(m, noise_variance,
                              '[%s]' % ', '.join('%g' % x for x in m))
            for m in table_means]

def table_policies(kind):
    """policy columns of table 1 or 2"""
    if kind == 1:
        return [PolicyConfig(kind='ttei', beta=0.5),
                PolicyConfig(kind='ei', beta=1.)]
    if kind == 2:
        return [PolicyConfig(kind='ttei', beta=0.5),
                PolicyConfig(kind='attei', beta=0.5),
                PolicyConfig(kind='ttei', beta='star'),
                PolicyConfig(kind='ttts', beta='star'),
                PolicyConfig(kind='rso'),
                PolicyConfig(kind='to'),
                PolicyConfig(kind='kg')]
    raise NotImplementedError("table %s is not defined" % str(kind))

table_settings = {1: (0.95, 100), 2: (0.9999, 200)}

def run_table(kind, trials=None, base_seed=0, workers=1,
              horizon_cap=10**6, verbose=0):
    """runs table 1 (c=0.95, 100 trials) or table 2 (c=0.9999, 200
    trials) on :py:func:`table_instances`

    :returns: list of :py:class:`AggregateReport`, instance-major
    """
    c, default_trials = table_settings.get(kind, (None, None))
    policies = table_policies(kind)
    reports = []
    for instance in table_instances():
        for policy in policies:
            config = ExperimentConfig(
                instance=instance, policy=policy,
                stop=StopConfig.confidence(c),
                trials=trials or default_trials, base_seed=base_seed,
                horizon_cap=horizon_cap, workers=workers)
            reports.append(run_experiment(config, verbose))
    return reports
