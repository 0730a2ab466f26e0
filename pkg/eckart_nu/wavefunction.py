"""
Bound-state eigenfunctions: the radial function in s = exp(-r/a)

    R(r) = N * s**sqrtC * (1-s)**L1 * 2F1(-n_r, n_r + 2*sqrtC + 2*L1; 2*sqrtC + 1; s)

the D-dimensional hyperspherical harmonics, and the full eigenfunction
psi = r**((1-D)/2) * R(r) * Y. Normalizations are checked by quadrature.
"""
import logging
import math
import operator
from dataclasses import dataclass

import numpy as np

from eckart_nu import exc
from eckart_nu.config import CONFIG
from eckart_nu.model import _check_positive
from eckart_nu.quadrature import adaptive_gauss_legendre, gauss_legendre
from eckart_nu.special_functions import gegenbauer_c, hyp2f1_terminating, log_gamma
from eckart_nu.spectrum import l1_exponent

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RadialWavefunction:
    state: object
    L1: float
    norm: float
    log_norm: float = None

    def __post_init__(self):
        if self.log_norm is None:
            object.__setattr__(self, "log_norm", math.log(self.norm))


@dataclass(frozen=True)
class AngularState:
    """Hyperspherical harmonic labels (mu_1, ..., mu_{D-1}), mu_1 = ell, mu_{D-1} = m."""
    D: int
    mu_chain: tuple

    def __post_init__(self):
        try:
            chain = tuple(operator.index(mu) for mu in self.mu_chain)
            D = operator.index(self.D)
        except TypeError:
            raise exc.DomainError("Angular labels must be integers, got D={}, {}"
                                  .format(self.D, self.mu_chain))
        if D < 3:
            raise exc.DomainError("Dimension must be >= 3, got {}".format(D))
        if len(chain) != D - 1:
            raise exc.DomainError("D={} needs {} angular labels, got {}"
                                  .format(D, D - 1, chain))
        ordered = list(chain[:-1]) + [abs(chain[-1])]
        if any(later > earlier for earlier, later in zip(ordered, ordered[1:])):
            raise exc.DomainError("Labels must satisfy ell = mu_1 >= ... >= |m|, got {}"
                                  .format(chain))
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "mu_chain", chain)

    @property
    def ell(self):
        return self.mu_chain[0]

    @property
    def m(self):
        return self.mu_chain[-1]

    def alpha(self, j):
        """alpha_j = (D - j - 1)/2 for the polar angle j = 1 .. D-2."""
        return (self.D - j - 1) / 2.0

    def _mu(self, j):
        # mu_j with the azimuthal label replaced by |m|
        return abs(self.mu_chain[j - 1]) if j == self.D - 1 else self.mu_chain[j - 1]


def _state_l1(state, model, scheme):
    if state.L1 is not None:
        return state.L1
    return l1_exponent(model, scheme or state.scheme, state.q)


def radial_log_norm(state, model, scheme=None):
    """ln N of the radial function; with sigma = sqrtC,

        N**2 = 2 sigma (n + sigma + L1) Gamma(n + 2 sigma + 1) Gamma(n + 2 sigma + 2 L1)
               / [a n! (n + L1) Gamma(n + 2 L1) Gamma(2 sigma + 1)**2]
    """
    n = state.q.n_r
    sigma = state.sqrtC
    L1 = _state_l1(state, model, scheme)
    log_n2 = (math.log(2.0 * sigma) + math.log(n + sigma + L1)
              + log_gamma(n + 2.0 * sigma + 1.0) + log_gamma(n + 2.0 * sigma + 2.0 * L1)
              - math.log(model.a) - log_gamma(n + 1.0) - math.log(n + L1)
              - log_gamma(n + 2.0 * L1) - 2.0 * log_gamma(2.0 * sigma + 1.0))
    return 0.5 * log_n2


def radial_norm_constant(state, model, scheme=None):
    """Normalization constant N of the radial function (see radial_log_norm)."""
    return math.exp(radial_log_norm(state, model, scheme))


def radial_wavefunction(state, model):
    L1 = _state_l1(state, model, None)
    log_norm = radial_log_norm(state, model)
    with np.errstate(over="ignore"):
        norm = float(np.exp(log_norm))
    return RadialWavefunction(state=state, L1=L1, norm=norm, log_norm=log_norm)


def radial_value(w, model, r):
    """R(r) for r > 0, scalar or array."""
    r = _check_positive(r)
    x = r / model.a
    n = w.state.q.n_r
    sigma = w.state.sqrtC
    s = np.exp(-x)
    log_envelope = w.log_norm - sigma * x + w.L1 * np.log(-np.expm1(-x))
    poly = hyp2f1_terminating(n, n + 2.0 * sigma + 2.0 * w.L1, 2.0 * sigma + 1.0, s)
    value = np.exp(log_envelope) * poly
    return float(value) if np.ndim(value) == 0 else value


def _radial_extent(model, extent):
    if extent is None:
        extent = CONFIG["RADIAL_QUADRATURE"]["extent"]
    return extent * model.a


def radial_overlap(w1, w2, model, extent=None, tol=None, order=None):
    """Integral of R1*R2 over (0, extent*a]."""
    settings = CONFIG["RADIAL_QUADRATURE"]
    return adaptive_gauss_legendre(
        lambda r: radial_value(w1, model, r) * radial_value(w2, model, r),
        0.0, _radial_extent(model, extent),
        tol=tol or settings["tol"], order=order or settings["order"])


def radial_norm_integral(w, model, extent=None, tol=None, order=None):
    """Integral of R**2 over (0, extent*a]; one for a normalized state."""
    return radial_overlap(w, w, model, extent=extent, tol=tol, order=order)


def node_count(w, model, n_points=10000, extent=None):
    """Interior sign changes of R on a geometric grid over (1e-6 a, extent*a].

    Values below 1e-12 of the largest |R| are ignored.
    """
    r = np.geomspace(1e-6 * model.a, _radial_extent(model, extent), n_points)
    values = radial_value(w, model, r)
    values = values[np.abs(values) > 1e-12 * np.max(np.abs(values))]
    return int(np.count_nonzero(np.signbit(values[1:]) != np.signbit(values[:-1])))


def angular_norm_constant(ang):
    """Normalization constant of the hyperspherical harmonic.

    N**2 = 1/(2 pi) * prod_j (alpha_j + mu_j) (mu_j - mu_{j+1})! Gamma(alpha_j + mu_{j+1})**2
           / [pi 2**(1 - 2 alpha_j - 2 mu_{j+1}) Gamma(2 alpha_j + mu_j + mu_{j+1})]
    """
    log_n2 = -math.log(2.0 * math.pi)
    for j in range(1, ang.D - 1):
        alpha = ang.alpha(j)
        mu, mu_next = ang._mu(j), ang._mu(j + 1)
        log_n2 += (math.log(alpha + mu) + log_gamma(mu - mu_next + 1.0)
                   + 2.0 * log_gamma(alpha + mu_next) - math.log(math.pi)
                   - (1.0 - 2.0 * alpha - 2.0 * mu_next) * math.log(2.0)
                   - log_gamma(2.0 * alpha + mu + mu_next))
    return math.exp(0.5 * log_n2)


def _polar_factor(ang, j, theta):
    mu, mu_next = ang._mu(j), ang._mu(j + 1)
    return gegenbauer_c(mu - mu_next, ang.alpha(j) + mu_next, np.cos(theta)) * \
        np.sin(theta) ** mu_next


def _check_angles(ang, angles):
    if len(angles) != ang.D - 1:
        raise exc.DomainError("D={} needs {} angles, got {}".format(ang.D, ang.D - 1,
                                                                   len(angles)))
    angles = [np.asarray(theta, dtype=float) for theta in angles]
    for j, theta in enumerate(angles[:-1], start=1):
        if np.any(theta < 0) or np.any(theta >= math.pi):
            raise exc.DomainError("theta_{} must lie in [0, pi), got {}".format(j, theta))
    if np.any(angles[-1] < 0) or np.any(angles[-1] >= 2.0 * math.pi):
        raise exc.DomainError("The azimuthal angle must lie in [0, 2 pi), got {}"
                              .format(angles[-1]))
    return angles


def angular_value(ang, angles):
    """Y(theta_1, ..., theta_{D-1}); arrays broadcast against each other."""
    angles = _check_angles(ang, angles)
    value = angular_norm_constant(ang) * np.exp(1j * ang.m * angles[-1])
    for j in range(1, ang.D - 1):
        value = value * _polar_factor(ang, j, angles[j - 1])
    return complex(value) if np.ndim(value) == 0 else value


def angular_inner_product(ang1, ang2, order=None, azimuthal_points=None):
    """<Y1, Y2> over the unit sphere in D dimensions.

    The harmonics are products of one-angle factors and the measure is
    prod_j (sin theta_j)**(D-j-1) dtheta_j dtheta_{D-1}, so the integral is a
    product of one-dimensional quadratures: Gauss-Legendre in each polar
    angle, the trapezoid rule in the azimuth.
    """
    if ang1.D != ang2.D:
        raise exc.DomainError("Harmonics of different dimension ({} and {})"
                              .format(ang1.D, ang2.D))
    settings = CONFIG["ANGULAR_QUADRATURE"]
    order = order or settings["order"]
    azimuthal_points = azimuthal_points or settings["azimuthal_points"]
    D = ang1.D

    phi = 2.0 * math.pi * np.arange(azimuthal_points) / azimuthal_points
    total = complex(np.mean(np.exp(1j * (ang2.m - ang1.m) * phi))) * 2.0 * math.pi
    theta, weights = gauss_legendre(0.0, math.pi, order)
    for j in range(1, D - 1):
        measure = np.sin(theta) ** (D - j - 1)
        total *= float(np.sum(weights * measure * _polar_factor(ang1, j, theta)
                              * _polar_factor(ang2, j, theta)))
    return total * angular_norm_constant(ang1) * angular_norm_constant(ang2)


def angular_norm_integral(ang, order=None, azimuthal_points=None):
    return angular_inner_product(ang, ang, order, azimuthal_points).real


def _check_pairing(state, ang):
    if state.q.D != ang.D or state.q.ell != ang.ell:
        raise exc.DomainError("Radial state {} does not match harmonic {}".format(state.q, ang))


def full_eigenfunction(state, ang, model, r, angles):
    """psi = r**((1-D)/2) * R(r) * Y(angles)."""
    _check_pairing(state, ang)
    w = radial_wavefunction(state, model)
    radial = np.asarray(radial_value(w, model, r)) * np.asarray(r, dtype=float) ** \
        ((1.0 - ang.D) / 2.0)
    value = radial * angular_value(ang, angles)
    return complex(value) if np.ndim(value) == 0 else value


def full_norm_integral(state, ang, model, extent=None, tol=None, order=None):
    """Integral of |psi|**2 r**(D-1) dr dOmega.

    r**(D-1) |psi|**2 = R**2 |Y|**2, so the integral separates into the
    radial and angular norms.
    """
    _check_pairing(state, ang)
    w = radial_wavefunction(state, model)
    radial = radial_norm_integral(w, model, extent=extent, tol=tol, order=order)
    angular = angular_norm_integral(ang)
    logger.debug("{}: radial norm {}, angular norm {}".format(state.q, radial, angular))
    return radial * angular
