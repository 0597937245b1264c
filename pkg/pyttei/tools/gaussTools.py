"""gaussTools.py

Scalar Gaussian utilities: density, distribution function and the
improvement function

.. math::

    f(x) = x \\Phi(x) + \\phi(x)

All functions work elementwise on numpy arrays as well as on floats
(scalar in, scalar out).

The improvement function is evaluated in three regimes:

* :math:`x \\geq -6`: the closed form directly,
* :math:`-10^3 \\leq x < -6`: :math:`\\phi(x)(1 - |x| M(|x|))`, with the
  Mills ratio :math:`M` obtained from the scaled complementary error
  function, which keeps the cancellation under control,
* :math:`x < -10^3`: the asymptotic series
  :math:`1 - t M(t) = t^{-2} - 3 t^{-4} + 15 t^{-6} - 105 t^{-8}`.

The last two regimes are computed in log space, see :py:func:`log_f_ei`.
"""

import numpy as np
from scipy import special

SQRT2 = np.sqrt(2.)
LOG_SQRT_2PI = 0.5 * np.log(2. * np.pi)

direct_limit = -6.
series_limit = -1e3

def _as_flat(x):
    x = np.asarray(x, dtype=float)
    return x, np.atleast_1d(x).ravel()

def _restore(x, out):
    if x.ndim == 0:
        return float(out[0])
    return out.reshape(x.shape)

def std_normal_pdf(x):
    """standard normal density, :math:`\\phi(x)`
    """
    x = np.asarray(x, dtype=float)
    out = np.exp(-0.5 * x**2 - LOG_SQRT_2PI)
    return float(out) if x.ndim == 0 else out

def std_normal_logpdf(x):
    x = np.asarray(x, dtype=float)
    out = -0.5 * x**2 - LOG_SQRT_2PI
    return float(out) if x.ndim == 0 else out

def std_normal_cdf(x):
    """standard normal distribution function, :math:`\\Phi(x)`

    Relies on :py:func:`scipy.special.ndtr`, which switches to ``erfc`` in
    the tails and therefore keeps full relative precision for
    :math:`\\Phi(-x)`, :math:`x \\gg 0`.
    """
    x = np.asarray(x, dtype=float)
    out = special.ndtr(x)
    return float(out) if x.ndim == 0 else out

def std_normal_logcdf(x):
    """:math:`\\log \\Phi(x)`, accurate far in the left tail
    """
    x = np.asarray(x, dtype=float)
    out = special.log_ndtr(x)
    return float(out) if x.ndim == 0 else out

def _log_tail_bracket(t):
    """log of :math:`1 - t M(t)` for t > 6, where M is the Mills ratio
    """
    out = np.empty_like(t)
    far = t > -series_limit
    near = ~far
    if np.any(near):
        tn = t[near]
        # t M(t) = t sqrt(pi/2) erfcx(t / sqrt(2))
        bracket = 1. - tn * np.sqrt(np.pi / 2.) * special.erfcx(tn / SQRT2)
        out[near] = np.log(bracket)
    if np.any(far):
        u = 1. / t[far]**2
        out[far] = np.log(u * (1. - 3. * u * (1. - 5. * u * (1. - 7. * u))))
    return out

def log_f_ei(x):
    """log of the improvement function, finite for every finite x

    For very negative x this behaves like :math:`-x^2/2 - 3 \\log|x|`.
    """
    x, flat = _as_flat(x)
    out = np.empty_like(flat)
    direct = flat >= direct_limit
    if np.any(direct):
        xd = flat[direct]
        out[direct] = np.log(xd * special.ndtr(xd)
                             + np.exp(-0.5 * xd**2 - LOG_SQRT_2PI))
    tail = ~direct
    if np.any(tail):
        t = -flat[tail]
        out[tail] = -0.5 * t**2 - LOG_SQRT_2PI + _log_tail_bracket(t)
    return _restore(x, out)

def f_ei(x):
    """improvement function :math:`f(x) = x\\Phi(x) + \\phi(x)`

    :math:`f` is positive, increasing and :math:`f(x) - x \\to 0` when
    :math:`x \\to \\infty`. Below roughly -38.5 the value is smaller than
    the smallest subnormal double and 0 is returned; use
    :py:func:`log_f_ei` there.
    """
    x, flat = _as_flat(x)
    out = np.empty_like(flat)
    direct = flat >= direct_limit
    if np.any(direct):
        xd = flat[direct]
        out[direct] = xd * special.ndtr(xd) + np.exp(-0.5 * xd**2
                                                     - LOG_SQRT_2PI)
    tail = ~direct
    if np.any(tail):
        out[tail] = np.exp(log_f_ei(flat[tail]))
    return _restore(x, out)

def scaled_improvement(mean_gap, scale):
    """:math:`s f(\\Delta / s)`, with the limits taken for ``s = 0``
    (positive part of the gap) and ``s = inf`` (inf)
    """
    mean_gap = np.asarray(mean_gap, dtype=float)
    scale = np.asarray(scale, dtype=float)
    shape = np.broadcast(mean_gap, scale).shape
    gap = np.broadcast_to(mean_gap, shape).ravel()
    s = np.broadcast_to(scale, shape).ravel()
    out = np.empty(gap.shape)
    zero = s == 0
    infinite = np.isinf(s)
    regular = ~(zero | infinite)
    out[zero] = np.maximum(gap[zero], 0.)
    out[infinite] = np.inf
    if np.any(regular):
        out[regular] = s[regular] * f_ei(gap[regular] / s[regular])
    if len(shape) == 0:
        return float(out[0])
    return out.reshape(shape)

def log_scaled_improvement(mean_gap, scale):
    """log of :py:func:`scaled_improvement`, used to rank candidates
    whose improvements underflow.
    """
    mean_gap = np.asarray(mean_gap, dtype=float)
    scale = np.asarray(scale, dtype=float)
    shape = np.broadcast(mean_gap, scale).shape
    gap = np.broadcast_to(mean_gap, shape).ravel()
    s = np.broadcast_to(scale, shape).ravel()
    out = np.empty(gap.shape)
    zero = s == 0
    infinite = np.isinf(s)
    regular = ~(zero | infinite)
    with np.errstate(divide='ignore'):
        out[zero] = np.log(np.maximum(gap[zero], 0.))
    out[infinite] = np.inf
    if np.any(regular):
        out[regular] = (np.log(s[regular])
                        + log_f_ei(gap[regular] / s[regular]))
    if len(shape) == 0:
        return float(out[0])
    return out.reshape(shape)

def gaussian_tail_bounds(sigma, c):
    """lower and upper bounds on the tail probability
    :math:`P(X - \\mu \\geq c) = 1 - \\Phi(c/\\sigma)` of
    :math:`X \\sim N(\\mu, \\sigma^2)`, for c >= 0

    .. math::

        \\frac{1}{\\sqrt{2\\pi}} e^{-(\\sigma + c)^2 / (2\\sigma^2)}
        \\leq 1 - \\Phi(c/\\sigma)
        \\leq \\frac{1}{2} e^{-c^2 / (2\\sigma^2)}

    The mean does not enter either bound.

    :returns: `(lower, upper)`
    """
    sigma = np.asarray(sigma, dtype=float)
    c = np.asarray(c, dtype=float)
    if np.any(c < 0) or np.any(sigma <= 0):
        raise ValueError("the tail bounds need c >= 0 and sigma > 0")
    lower = np.exp(-(sigma + c)**2 / (2. * sigma**2) - LOG_SQRT_2PI)
    upper = 0.5 * np.exp(-c**2 / (2. * sigma**2))
    if lower.ndim == 0:
        return float(lower), float(upper)
    return lower, upper
