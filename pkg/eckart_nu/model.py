"""
The physical model: Eckart potential parameters, constants and quantum numbers.

Every quantity depending on r goes through s/(1-s) = 1/expm1(r/a), with
s = exp(-r/a). Evaluating it with expm1 keeps full precision when r/a is
small, which is where the wells of interest sit for a = 40.
"""
import logging
import math
import operator
from dataclasses import dataclass, field

import numpy as np

from eckart_nu import exc

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhysicalConstants:
    """Action and reduced mass. Natural units (1, 1) by default."""
    hbar: float = 1.0
    mu: float = 1.0

    def __post_init__(self):
        if not (self.hbar > 0 and self.mu > 0):
            raise exc.DomainError("hbar and mu must be positive, got hbar={}, mu={}"
                                  .format(self.hbar, self.mu))

    @property
    def coupling(self):
        """2*mu/hbar**2, the factor turning energies into inverse squared lengths."""
        return 2.0 * self.mu / self.hbar ** 2


@dataclass(frozen=True)
class EckartModel:
    """Eckart potential -alpha*s/(1-s) + beta*s/(1-s)**2, s = exp(-r/a).

    alpha and beta are energies (natural units), a is the range.
    """
    alpha: float
    beta: float
    a: float
    constants: PhysicalConstants = field(default_factory=PhysicalConstants)

    def __post_init__(self):
        if not (self.alpha > 0 and self.beta > 0 and self.a > 0):
            raise exc.DomainError("alpha, beta and a must be positive, got alpha={}, "
                                  "beta={}, a={}".format(self.alpha, self.beta, self.a))

    @property
    def has_minimum(self):
        return self.alpha > self.beta

    @property
    def reduced_scale(self):
        """2*mu*a**2/hbar**2; multiplies an energy into the dimensionless eigenproblem."""
        return self.constants.coupling * self.a ** 2


@dataclass(frozen=True)
class QuantumNumbers:
    n_r: int
    ell: int
    D: int = 3

    def __post_init__(self):
        try:
            values = [operator.index(v) for v in (self.n_r, self.ell, self.D)]
        except TypeError:
            raise exc.DomainError("Quantum numbers must be integers, got {}".format(self))
        # normalise numpy integers so equality and hashing behave
        for name, value in zip(("n_r", "ell", "D"), values):
            object.__setattr__(self, name, value)
        if self.n_r < 0 or self.ell < 0:
            raise exc.DomainError("n_r and ell must be non-negative, got {}".format(self))
        if self.D < 3:
            raise exc.DomainError("Dimension must be an integer >= 3, got D={}".format(self.D))

    @property
    def L(self):
        return effective_L(self)

    def as_dict(self):
        return {"n_r": self.n_r, "ell": self.ell, "D": self.D}


def _scalar_or_array(value):
    value = np.asarray(value, dtype=float)
    return float(value) if value.ndim == 0 else value


def _check_positive(r, what="r"):
    r = np.asarray(r, dtype=float)
    if r.size == 0 or np.any(~(r > 0)):
        raise exc.DomainError("{} must be positive (got {})".format(what, r))
    return r


def s_ratio(r, a):
    """s/(1-s) with s = exp(-r/a), evaluated as 1/expm1(r/a).

    Accepts a scalar or an array of positive r and returns the same shape.
    """
    r = _check_positive(r)
    with np.errstate(over="ignore"):
        ratio = 1.0 / np.expm1(r / a)
    return _scalar_or_array(ratio)


def eval_potential(model, r):
    """Eckart potential at r > 0 (scalar or array).

    With t = s/(1-s) the potential reads t*(beta*(1+t) - alpha), since
    s/(1-s)**2 = t*(1+t).
    """
    t = np.asarray(s_ratio(r, model.a))
    return _scalar_or_array(t * (model.beta * (1.0 + t) - model.alpha))


def potential_minimum(model):
    """Return (r0, V_min) of the well.

    Raises:
        NoMinimum: when alpha <= beta, the potential is monotone.
    """
    if not model.has_minimum:
        raise exc.NoMinimum("alpha={} <= beta={}: the Eckart potential has no minimum"
                            .format(model.alpha, model.beta))
    alpha, beta = model.alpha, model.beta
    # (alpha+beta)/(alpha-beta) = 1 + 2*beta/(alpha-beta)
    r0 = model.a * math.log1p(2.0 * beta / (alpha - beta))
    v_min = -(alpha - beta) ** 2 / (4.0 * beta)
    return r0, v_min


def effective_L(q):
    """L = ell + (D-3)/2; the radial problem depends on (ell, D) only through L."""
    return q.ell + (q.D - 3) / 2.0


def model_at(a, law, beta, constants=None):
    """The model at range a with alpha taken from the law alpha(a)."""
    constants = constants or PhysicalConstants()
    return EckartModel(alpha=law(a), beta=beta, a=a, constants=constants)
