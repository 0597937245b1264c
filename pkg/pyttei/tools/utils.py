"""
``utils.py``

Helpers shared by the sampling rules and the experiment harness:
lowest-index argmax, seed derivation and the duplicate perturbation used
before calling the proportion solver.

Content
-------
"""

import numpy as np

def argmax_lowest(values):
    """
    index = argmax_lowest(values)

    Index of the largest entry, ties broken to the lowest index.
    ``+inf`` entries rank above everything. NaN entries are ignored;
    an all-NaN input gives 0.
    """
    values = np.asarray(values, dtype=float)
    if np.all(np.isnan(values)):
        return 0
    # np.argmax already returns the first maximizer
    return int(np.nanargmax(values))

def argmax_lowest_excluding(values, excluded):
    """
    index = argmax_lowest_excluding(values, excluded)

    Same as :py:func:`argmax_lowest`, never returning ``excluded``.
    """
    values = np.array(values, dtype=float)
    values[excluded] = -np.inf
    best = argmax_lowest(values)
    if best == excluded:
        # all other entries are -inf or NaN: first other index
        best = 1 if excluded == 0 else 0
    return best

def trial_generator(base_seed, trial_index):
    """Random stream of a trial.

    The stream is a :py:class:`numpy.random.Philox` counter-based
    generator keyed by a :py:class:`numpy.random.SeedSequence` built from
    ``(base_seed, trial_index)``: it only depends on the pair, so trials
    can be run in any order and on any number of workers.

    :param integer base_seed: 64-bit experiment seed
    :param integer trial_index: index of the trial, >= 0
    :returns: :py:class:`numpy.random.Generator`
    """
    if trial_index < 0:
        raise ValueError("trial_index must be nonnegative")
    seq = np.random.SeedSequence(entropy=int(base_seed) % 2**64,
                                 spawn_key=(int(trial_index),))
    return np.random.Generator(np.random.Philox(seq))

def trial_seed(base_seed, trial_index):
    """64-bit integer summary of the trial stream key, stored in results
    """
    seq = np.random.SeedSequence(entropy=int(base_seed) % 2**64,
                                 spawn_key=(int(trial_index),))
    return int(seq.generate_state(1, dtype=np.uint64)[0])

def perturb_duplicates(means, eps=1e-9):
    """
    perturbed = perturb_duplicates(means, eps=1e-9)

    Adds ``j * eps`` to the j-th repetition (j = 1, 2, ...) of every
    repeated value, scanning in arm order. The first occurrence is left
    untouched, so ``[5, 4, 1, 1, 1]`` becomes
    ``[5, 4, 1, 1 + 1e-9, 1 + 2e-9]``.
    """
    means = np.array(means, dtype=float)
    seen = {}
    for i, m in enumerate(means):
        j = seen.get(m, 0)
        if j:
            means[i] = m + j * eps
        seen[m] = j + 1
    return means
