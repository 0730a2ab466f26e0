"""
Special functions used by the wavefunctions: log-gamma and Gamma ratios,
Pochhammer symbols, the terminating Gauss hypergeometric series and the
Jacobi and Gegenbauer polynomials (three-term recurrences).

Arguments named x, t or s may be numpy arrays; the result then has their shape.
"""
import logging
import math
import operator

import numpy as np
from scipy import special

from eckart_nu import exc

logger = logging.getLogger(__name__)


def _degree(n):
    try:
        n = operator.index(n)
    except TypeError:
        raise exc.DomainError("Polynomial degree must be an integer, got {}".format(n))
    if n < 0:
        raise exc.DomainError("Polynomial degree must be non-negative, got {}".format(n))
    return n


def _as_result(value):
    value = np.asarray(value, dtype=float)
    return float(value) if value.ndim == 0 else value


def log_gamma(x):
    """ln Gamma(x) for x > 0."""
    x_arr = np.asarray(x, dtype=float)
    if x_arr.size == 0 or np.any(~(x_arr > 0)):
        raise exc.DomainError("log_gamma needs x > 0, got {}".format(x))
    return _as_result(special.gammaln(x_arr))


def pochhammer(a, k):
    """Rising factorial (a)_k = Gamma(a+k)/Gamma(a)."""
    return _as_result(special.poch(a, k))


def gamma_ratio(numerator, denominator):
    """prod Gamma(numerator) / prod Gamma(denominator), via log-gamma differences.

    All arguments must be positive.
    """
    log_value = math.fsum(log_gamma(x) for x in numerator) - \
        math.fsum(log_gamma(x) for x in denominator)
    return math.exp(log_value)


def _hyp2f1_series(n, b, c, s):
    term = np.ones_like(s)
    total = np.ones_like(s)
    for k in range(n):
        term = term * ((k - n) * (b + k) / ((c + k) * (k + 1.0))) * s
        total = total + term
    return total


def _is_pole(c):
    return c <= 0 and float(c).is_integer()


def hyp2f1_terminating(n, b, c, s):
    """2F1(-n, b; c; s), a polynomial of degree n in s.

    For s > 1/2 the sum runs in 1 - s instead,

        2F1(-n, b; c; s) = (c-b)_n / (c)_n * 2F1(-n, b; b-c-n+1; 1-s)

    unless b-c-n+1 is zero or a negative integer.

    Raises:
        DomainError: c is zero or a negative integer
    """
    n = _degree(n)
    if _is_pole(c):
        raise exc.DomainError("2F1 is undefined for c = {}".format(c))
    s = np.asarray(s, dtype=float)
    total = _hyp2f1_series(n, b, c, s)
    c_reflected = b - c - n + 1.0
    upper = s > 0.5
    if n > 0 and np.any(upper) and not _is_pole(c_reflected):
        reflected = pochhammer(c - b, n) / pochhammer(c, n) * \
            _hyp2f1_series(n, b, c_reflected, 1.0 - s)
        total = np.where(upper, reflected, total)
    return _as_result(total)


def jacobi_p(n, a, b, x):
    """Jacobi polynomial P_n^(a,b)(x)."""
    n = _degree(n)
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return _as_result(p_prev)
    p_curr = (a + 1) + (a + b + 2) * (x - 1) / 2
    for k in range(2, n + 1):
        s = 2 * k + a + b
        lead = 2 * k * (k + a + b) * (s - 2)
        mid = (s - 1) * (s * (s - 2) * x + a * a - b * b)
        tail = 2 * (k + a - 1) * (k + b - 1) * s
        p_prev, p_curr = p_curr, (mid * p_curr - tail * p_prev) / lead
    return _as_result(p_curr)


def gegenbauer_c(n, alpha, t):
    """Gegenbauer polynomial C_n^alpha(t), alpha > -1/2."""
    n = _degree(n)
    if not alpha > -0.5:
        raise exc.DomainError("Gegenbauer parameter must exceed -1/2, got {}".format(alpha))
    t = np.asarray(t, dtype=float)
    c_prev = np.ones_like(t)
    if n == 0:
        return _as_result(c_prev)
    c_curr = 2 * alpha * t
    for k in range(2, n + 1):
        c_prev, c_curr = c_curr, (2 * t * (k + alpha - 1) * c_curr -
                                  (k + 2 * alpha - 2) * c_prev) / k
    return _as_result(c_curr)
