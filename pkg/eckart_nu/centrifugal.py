"""
Approximations to the centrifugal term 1/r**2 of the form

    1/r**2 ~ (y1 + y2*s/(1-s) + y3*s**2/(1-s)**2) / a**2,    s = exp(-r/a)

f1 (Greene-Aldrich), f2 (two free parameters), f3 (Greene-Aldrich with the
constant 1/12 shift), f4 (Pekeris expansion about r0) and f5, any linear
combination of the four.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from eckart_nu import exc
from eckart_nu.config import CONFIG
from eckart_nu.model import _check_positive, potential_minimum, s_ratio

logger = logging.getLogger(__name__)

KINDS = ("F1", "F2", "F3", "F4", "F5")
# Terms of the small-u series; u < 1 converges far below double precision by then
SERIES_TERMS = 40


@dataclass(frozen=True)
class ApproximationScheme:
    """Coefficients (y1, y2, y3) and where they came from.

    ``lambdas`` and ``table`` are set for F5 only; ``table`` holds the four
    component triples (f1, f2, f3, f4) the weights were applied to. ``xi``
    is set for F2 and F5, ``r0`` for F4 and F5.
    """
    y1: float
    y2: float
    y3: float
    kind: str = "F5"
    lambdas: tuple = None
    xi: tuple = None
    r0: float = None
    table: tuple = None
    label: str = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise exc.DomainError("Unknown scheme kind {}, expected one of {}"
                                  .format(self.kind, KINDS))
        if not all(math.isfinite(y) for y in self.coefficients):
            raise exc.DomainError("Scheme coefficients must be finite, got {}"
                                  .format(self.coefficients))

    @property
    def coefficients(self):
        return (self.y1, self.y2, self.y3)

    @property
    def weights(self):
        """Weights over (f1, f2, f3, f4); a unit vector for the component schemes."""
        if self.kind == "F5":
            return tuple(self.lambdas) if self.lambdas is not None else None
        return tuple(1.0 if KINDS[j] == self.kind else 0.0 for j in range(4))

    @property
    def name(self):
        return self.label or self.kind.lower()


@dataclass(frozen=True)
class ValidityReport:
    sum_ok: bool
    y1_ok: bool
    l1_ok: bool

    @property
    def admissible(self):
        return self.sum_ok and self.y1_ok and self.l1_ok


def make_f1():
    return ApproximationScheme(0.0, 1.0, 1.0, kind="F1")


def make_f2(xi1=None, xi2=None):
    default1, default2 = CONFIG["DEFAULT_XI"]
    xi1 = default1 if xi1 is None else float(xi1)
    xi2 = default2 if xi2 is None else float(xi2)
    return ApproximationScheme(0.0, xi1, xi2, kind="F2", xi=(xi1, xi2))


def make_f3():
    return ApproximationScheme(1.0 / 12.0, 1.0, 1.0, kind="F3")


def _series_coefficients(u):
    """Pekeris coefficients from their Taylor series in u, for 0 < u < 1.

    x1, x2 and x3 are all 1/u**4 times a combination cancelling to O(u**4);
    summing the series directly avoids that cancellation.
    """
    one_minus_s0 = -math.expm1(-u)
    ratio = one_minus_s0 / u
    fact = [float(math.factorial(k)) for k in range(SERIES_TERMS + 5)]

    x1 = math.fsum(
        ((-2.0) ** (k - 1) * (k - 6) + (-1.0) ** (k - 1) * (2 * k + 6)) / fact[k] * u ** (k - 4)
        for k in range(4, SERIES_TERMS + 4))
    x2 = 2.0 * ratio ** 2 * math.fsum(
        (2 * k - 3) * u ** (k - 2) / fact[k] for k in range(2, SERIES_TERMS + 2))
    tail = math.fsum(
        (-1.0) ** k * (3 - k) * u ** (k - 1) / fact[k] for k in range(2, SERIES_TERMS + 2))
    x3 = ratio ** 3 * math.exp(2.0 * u) * (1.0 - tail)
    return x1, x2, x3


def _closed_coefficients(u):
    s0 = math.exp(-u)
    one_minus_s0 = -math.expm1(-u)
    u4 = u ** 4
    x1 = ((3.0 + u) * s0 ** 2 + (2.0 * u - 6.0) * s0 + 3.0 - 3.0 * u + u ** 2) / u4
    x2 = (2.0 / u4) * one_minus_s0 ** 2 * (3.0 + u + (2.0 * u - 3.0) / s0)
    x3 = -one_minus_s0 ** 3 * ((3.0 + u) * s0 + u - 3.0) / (u4 * s0 ** 2)
    return x1, x2, x3


def pekeris_coefficients(u):
    """(x1, x2, x3) of the Pekeris expansion about u = r0/a.

    Tangent to u**-2 at u (value and first two derivatives in u). The series
    form is used below u = 1 where the closed form loses digits to cancellation.
    """
    if not u > 0:
        raise exc.DomainError("u = r0/a must be positive, got {}".format(u))
    if u < 1.0:
        return _series_coefficients(u)
    return _closed_coefficients(u)


def make_f4(model, r0=None):
    """Pekeris approximation about r0; r0 defaults to the potential minimum.

    Raises:
        DomainError: r0 <= 0
        NoMinimum: r0 not given and the potential has no minimum
    """
    if r0 is None:
        r0, _ = potential_minimum(model)
    r0 = float(r0)
    if not r0 > 0:
        raise exc.DomainError("r0 must be positive, got {}".format(r0))
    x1, x2, x3 = pekeris_coefficients(r0 / model.a)
    logger.debug("f4 about r0={} (u={}): ({}, {}, {})".format(r0, r0 / model.a, x1, x2, x3))
    return ApproximationScheme(x1, x2, x3, kind="F4", r0=r0)


def make_f5(lambdas, xi1=None, xi2=None, model=None, r0=None, label=None):
    """Weighted combination y_i = sum_j lambda_j * x_ij of f1, f2, f3 and f4.

    Arguments:
        lambdas (4 floats): weights of (f1, f2, f3, f4); may be negative but must
            sum to one
        xi1, xi2 (float): parameters of the f2 component, CONFIG defaults if None
        model (EckartModel): needed for the f4 component
        r0 (float): expansion point of the f4 component, the minimum by default
    Raises:
        WeightError: weights do not sum to one
    """
    lambdas = tuple(float(lam) for lam in lambdas)
    if len(lambdas) != 4:
        raise exc.WeightError("Expected four weights, got {}".format(lambdas))
    total = math.fsum(lambdas)
    if abs(total - 1.0) > CONFIG["WEIGHT_TOL"]:
        raise exc.WeightError("Weights {} sum to {}, not 1".format(lambdas, total))
    if model is None:
        raise exc.DomainError("The f4 component needs a model")

    f2 = make_f2(xi1, xi2)
    f4 = make_f4(model, r0)
    table = tuple(scheme.coefficients for scheme in (make_f1(), f2, make_f3(), f4))
    y = [math.fsum(lam * row[i] for lam, row in zip(lambdas, table)) for i in range(3)]
    return ApproximationScheme(*y, kind="F5", lambdas=lambdas, xi=f2.xi, r0=f4.r0,
                               table=table, label=label)


def from_preset(name, model, xi=None, r0=None):
    """Build a scheme from a CONFIG["SCHEME_PRESETS"] entry."""
    try:
        preset = CONFIG["SCHEME_PRESETS"][name]
    except KeyError:
        raise exc.DomainError("No scheme preset named {}, known: {}"
                              .format(name, sorted(CONFIG["SCHEME_PRESETS"])))
    xi = xi or (None, None)
    kind = preset["kind"]
    if kind == "F1":
        return make_f1()
    elif kind == "F2":
        return make_f2(*xi)
    elif kind == "F3":
        return make_f3()
    elif kind == "F4":
        return make_f4(model, r0)
    return make_f5(preset["lambdas"], xi[0], xi[1], model=model, r0=r0, label=name)


def validate(scheme, model, q):
    """Check the admissibility relations of a scheme for a state.

    Returns a ValidityReport; never raises on an inadmissible scheme.
    """
    if scheme.kind == "F5" and scheme.lambdas is not None:
        sum_ok = abs(math.fsum(scheme.lambdas) - 1.0) <= CONFIG["WEIGHT_TOL"]
    else:
        sum_ok = True
    L = q.L
    discriminant = 0.25 + model.reduced_scale * model.beta + L * (L + 1) * scheme.y3
    report = ValidityReport(sum_ok=sum_ok, y1_ok=scheme.y1 >= 0, l1_ok=discriminant >= 0)
    if not report.admissible:
        logger.debug("{} inadmissible for {}: {}".format(scheme.name, q, report))
    return report


def evaluate_inv_r2(scheme, r, a):
    """The approximation to 1/r**2 at r > 0 (scalar or array)."""
    t = np.asarray(s_ratio(r, a))
    value = (scheme.y1 + t * (scheme.y2 + t * scheme.y3)) / a ** 2
    return float(value) if value.ndim == 0 else value


def error_profile(scheme, model, ell, r_grid, D=3):
    """L(L+1)*(1/r**2 - f(r)) on a grid, as an (n, 2) array of (r, error).

    L = ell + (D-3)/2, so the default D = 3 gives the ell(ell+1) prefactor.
    """
    r = np.atleast_1d(np.asarray(r_grid, dtype=float))
    if r.size == 0:
        raise exc.DomainError("error_profile needs a non-empty grid")
    r = _check_positive(r)
    L = ell + (D - 3) / 2.0
    error = L * (L + 1) * (1.0 / r ** 2 - evaluate_inv_r2(scheme, r, model.a))
    return np.column_stack((r, error))
