"""
Gauss-Legendre quadrature on an interval, fixed order or with adaptive
panel bisection.
"""
import logging
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss

from eckart_nu import exc

logger = logging.getLogger(__name__)

MAX_PANELS = 20000


@lru_cache(maxsize=32)
def _reference_rule(order):
    nodes, weights = leggauss(order)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


def gauss_legendre(lo, hi, order):
    """Nodes and weights of the order-point Gauss-Legendre rule on [lo, hi]."""
    if order < 1:
        raise exc.DomainError("Quadrature order must be positive, got {}".format(order))
    y, w = _reference_rule(int(order))
    half = 0.5 * (hi - lo)
    return half * (y + 1.0) + lo, half * w


def _panel(func, lo, hi, order):
    x, w = gauss_legendre(lo, hi, order)
    return float(np.dot(w, func(x)))


def adaptive_gauss_legendre(func, lo, hi, tol=1e-10, order=20, max_panels=MAX_PANELS):
    """Integrate a vectorised func over [lo, hi] to absolute tolerance tol.

    A panel is accepted once its estimate agrees with the sum over its two
    halves to within its share (by width) of the tolerance.

    Raises:
        NonConverged: more than max_panels panels were needed
    """
    if not hi > lo:
        raise exc.DomainError("Empty integration interval [{}, {}]".format(lo, hi))
    width = hi - lo
    stack = [(lo, hi, _panel(func, lo, hi, order))]
    pieces = []
    evaluated = 1
    while stack:
        a, b, whole = stack.pop()
        mid = 0.5 * (a + b)
        left = _panel(func, a, mid, order)
        right = _panel(func, mid, b, order)
        evaluated += 2
        if abs(left + right - whole) <= tol * (b - a) / width:
            pieces.append(left + right)
        else:
            stack.append((a, mid, left))
            stack.append((mid, b, right))
        if evaluated > max_panels:
            raise exc.NonConverged("Adaptive quadrature on [{}, {}] exceeded {} panels"
                                   .format(lo, hi, max_panels))
    logger.debug("Integrated [{}, {}] with {} panels".format(lo, hi, evaluated))
    return float(np.sum(sorted(pieces, key=abs)))
