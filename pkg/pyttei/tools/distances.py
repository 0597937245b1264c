"""distances.py

divergence functions between Gaussian models
"""
import numpy as np

def gaussian_kl(x, y, noise_variance):
    """
    value = gaussian_kl(x, y, noise_variance)

    Kullback-Leibler divergence between :math:`N(x, \\sigma^2)` and
    :math:`N(y, \\sigma^2)`:

    .. math::

        d(x, y) = \\frac{(x - y)^2}{2 \\sigma^2}

    Works elementwise on arrays. A zero variance gives 0 for equal means
    and inf otherwise.
    """
    diff2 = (np.asarray(x, dtype=float) - np.asarray(y, dtype=float))**2
    if noise_variance == 0:
        return np.where(diff2 == 0, 0., np.inf)
    return diff2 / (2. * noise_variance)
