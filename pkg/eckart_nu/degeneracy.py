"""
Special values of the range a under the Greene-Aldrich approximation f1:
zero-energy states (E = 0) and accidental degeneracies between two levels
(E1 = E2), with alpha a function of a.

Under f1, with K = 2*mu*a**2*alpha(a)/hbar**2 and
N = n_r + 1/2 + sqrt((ell + (D-2)/2)**2 + 2*mu*a**2*beta/hbar**2),
the closed-form energy is -(hbar**2/(2 mu a**2)) * Q**2 with Q = K/(2N) - N/2.
Then E = 0 means K = N**2, and E1 = E2 means Q1 = -Q2 (K = N1*N2, positive
sign) or Q1 = Q2 (negative sign).
"""
import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize

from eckart_nu import exc
from eckart_nu.centrifugal import make_f1
from eckart_nu.model import (PhysicalConstants, QuantumNumbers, model_at,
                             potential_minimum)
from eckart_nu.spectrum import formula_energy

logger = logging.getLogger(__name__)

SIGNS = ("plus", "minus")
XTOL = 1e-14


@dataclass(frozen=True)
class AlphaLaw:
    """alpha as a function of the range a."""
    func: object
    description: str = "alpha(a)"

    @classmethod
    def inverse_range(cls, scale=1.0):
        """alpha(a) = scale / a."""
        scale = float(scale)
        return cls(lambda a: scale / a, "{:g}/a".format(scale))

    @classmethod
    def constant(cls, alpha):
        alpha = float(alpha)
        return cls(lambda a: alpha, "{:g}".format(alpha))

    def __call__(self, a):
        alpha = self.func(a)
        if not alpha > 0:
            raise exc.DomainError("alpha({}) = {} is not positive ({})"
                                  .format(a, alpha, self.description))
        return alpha


@dataclass(frozen=True)
class DegeneracyProblem:
    state1: QuantumNumbers
    state2: QuantumNumbers
    sign: str = "plus"
    law: AlphaLaw = field(default_factory=AlphaLaw.inverse_range)
    beta: float = 1e-4
    constants: PhysicalConstants = field(default_factory=PhysicalConstants)

    def __post_init__(self):
        if self.sign not in SIGNS:
            raise exc.DomainError("sign must be one of {}, got {}".format(SIGNS, self.sign))

    @property
    def same_level(self):
        """Same n_r and L: degenerate for every a."""
        return self.state1.n_r == self.state2.n_r and self.state1.L == self.state2.L


@dataclass(frozen=True)
class ZeroEnergyRoot:
    state: QuantumNumbers
    a: float
    residual: float
    energy: float
    v_min: float = None


@dataclass(frozen=True)
class DegeneracyRoot:
    problem: DegeneracyProblem
    a: float
    residual: float
    energy_gap: float
    both_bound: bool
    always_degenerate: bool = False


def _kappa(a, law, constants):
    return constants.coupling * a ** 2 * law(a)


def _principal(q, a, beta, constants):
    """N = n_r + 1/2 + sqrt((ell + (D-2)/2)**2 + 2 mu a**2 beta / hbar**2)."""
    return q.n_r + 0.5 + math.sqrt((q.ell + (q.D - 2) / 2.0) ** 2 +
                                   constants.coupling * a ** 2 * beta)


def zero_energy_residual(a, q, law, beta, constants=None):
    """K/N**2 - 1; zero where the f1 level q sits exactly at E = 0."""
    constants = constants or PhysicalConstants()
    return _kappa(a, law, constants) / _principal(q, a, beta, constants) ** 2 - 1.0


def zero_energy_residual_squared(a, q, law, beta, constants=None):
    """Zero-energy condition with the square root cleared.

    [A - B - p**2 - q**2]**2 - 4 p**2 (q**2 + B), A = 4K, B = 8 mu a**2 beta / hbar**2,
    p = 2 n_r + 1, q = 2 ell + D - 2, divided by A**2. Also vanishes on the
    unphysical branch A = (p - sqrt(q**2 + B))**2.
    """
    constants = constants or PhysicalConstants()
    big_a = 4.0 * _kappa(a, law, constants)
    big_b = 4.0 * constants.coupling * a ** 2 * beta
    p = 2.0 * q.n_r + 1.0
    qq = 2.0 * q.ell + q.D - 2.0
    return ((big_a - big_b - p * p - qq * qq) ** 2 - 4.0 * p * p * (qq * qq + big_b)) / big_a ** 2


def degeneracy_residual(a, problem):
    """Scaled difference of the two sides of the degeneracy condition.

    plus:  K (1/N1 + 1/N2) = N1 + N2
    minus: K (1/N1 - 1/N2) = N1 - N2
    both divided by N1 + N2.
    """
    c = problem.constants
    kappa = _kappa(a, problem.law, c)
    n1 = _principal(problem.state1, a, problem.beta, c)
    n2 = _principal(problem.state2, a, problem.beta, c)
    if problem.sign == "plus":
        lhs, rhs = kappa * (1.0 / n1 + 1.0 / n2), n1 + n2
    else:
        lhs, rhs = kappa * (1.0 / n1 - 1.0 / n2), n1 - n2
    return (lhs - rhs) / (n1 + n2)


def degeneracy_residual_closed(a, problem):
    """K/(N1 N2) - 1, the positive-sign condition solved for K."""
    c = problem.constants
    kappa = _kappa(a, problem.law, c)
    return kappa / (_principal(problem.state1, a, problem.beta, c) *
                    _principal(problem.state2, a, problem.beta, c)) - 1.0


def _refine(func, lo, hi, what):
    """Root of func in [lo, hi]: bisection, then a secant polish kept if it improves."""
    f_lo, f_hi = func(lo), func(hi)
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        raise exc.NoSignChange("{}: no sign change on [{}, {}] ({}, {})"
                               .format(what, lo, hi, f_lo, f_hi))
    try:
        root = optimize.bisect(func, lo, hi, xtol=XTOL, maxiter=200)
    except RuntimeError as e:
        raise exc.NonConverged("{}: {}".format(what, e))
    try:
        polished = optimize.newton(func, root, x1=root * (1.0 + 1e-9), tol=XTOL, maxiter=20)
        if lo <= polished <= hi and abs(func(polished)) < abs(func(root)):
            root = polished
    except (RuntimeError, ZeroDivisionError, OverflowError):
        pass
    logger.debug("{}: root {} on [{}, {}], residual {}".format(what, root, lo, hi, func(root)))
    return root


def zero_energy_a(n_r, ell, D, law, beta, bracket, constants=None, squared=False):
    """Range a0 at which the f1 level (n_r, ell, D) has zero energy.

    Raises:
        NoSignChange: the residual does not change sign on the bracket
    """
    q = QuantumNumbers(n_r, ell, D)
    residual = zero_energy_residual_squared if squared else zero_energy_residual
    return _refine(lambda a: residual(a, q, law, beta, constants), bracket[0], bracket[1],
                   "zero energy of {}".format(q))


def zero_energy_point(n_r, ell, D, law, beta, bracket, constants=None, squared=False):
    """zero_energy_a with the residual and the closed-form f1 energy at the root."""
    constants = constants or PhysicalConstants()
    q = QuantumNumbers(n_r, ell, D)
    a0 = zero_energy_a(n_r, ell, D, law, beta, bracket, constants, squared)
    model = model_at(a0, law, beta, constants)
    energy, _ = formula_energy(model, make_f1(), q)
    try:
        _, v_min = potential_minimum(model)
    except exc.NoMinimum:
        v_min = None
    return ZeroEnergyRoot(state=q, a=a0, residual=zero_energy_residual(a0, q, law, beta,
                                                                       constants),
                          energy=energy, v_min=v_min)


def _reject_same_level(problem):
    if problem.same_level:
        raise exc.DegenerateInput("{} and {} share n_r and L: degenerate for every a"
                                  .format(problem.state1, problem.state2))


def degeneracy_a(problem, bracket, closed_form=False):
    """Range a12 at which the two f1 levels of the problem coincide.

    Raises:
        DegenerateInput: both states are the same level
        NoSignChange: the residual does not change sign on the bracket
    """
    _reject_same_level(problem)
    if closed_form and problem.sign != "plus":
        raise exc.DomainError("The closed form exists for the positive sign only")
    residual = degeneracy_residual_closed if closed_form else degeneracy_residual
    return _refine(lambda a: residual(a, problem), bracket[0], bracket[1],
                   "degeneracy of {} and {}".format(problem.state1, problem.state2))


def _f1_factory(model):
    return make_f1()


def energy_gap(problem, a, scheme_factory=None):
    """E1 - E2 at range a from the closed-form energies, bound or not.

    scheme_factory maps a model to an ApproximationScheme (f1 by default).
    """
    scheme_factory = scheme_factory or _f1_factory
    model = model_at(a, problem.law, problem.beta, problem.constants)
    scheme = scheme_factory(model)
    e1, _ = formula_energy(model, scheme, problem.state1)
    e2, _ = formula_energy(model, scheme, problem.state2)
    return e1 - e2


def degeneracy_a_numeric(problem, bracket, scheme_factory=None):
    """Range at which two closed-form energies coincide under any scheme.

    The residual is the dimensionless gap 2 mu a**2 (E1 - E2) / hbar**2.
    """
    _reject_same_level(problem)
    coupling = problem.constants.coupling
    return _refine(lambda a: coupling * a ** 2 * energy_gap(problem, a, scheme_factory),
                   bracket[0], bracket[1],
                   "numeric degeneracy of {} and {}".format(problem.state1, problem.state2))


def _both_bound(problem, a):
    model = model_at(a, problem.law, problem.beta, problem.constants)
    for q in (problem.state1, problem.state2):
        energy, Q = formula_energy(model, make_f1(), q)
        if not (Q > 0 and energy < 0):
            return False
    return True


def scan_degeneracies(pairs, law, beta, a_range, n_samples=200, sign="plus",
                      constants=None):
    """Find every degeneracy root of each pair on a sampled range of a.

    Arguments:
        pairs (list): (QuantumNumbers, QuantumNumbers) tuples
        a_range (tuple): (a_min, a_max)
        n_samples (int): sample points used to bracket sign changes
    Returns:
        list of DegeneracyRoot sorted by a; pairs degenerate for every a are
        reported once with a = None, after the roots
    """
    if n_samples < 2:
        raise exc.DomainError("n_samples must be at least 2, got {}".format(n_samples))
    constants = constants or PhysicalConstants()
    grid = np.linspace(a_range[0], a_range[1], n_samples)
    found = []
    for state1, state2 in pairs:
        problem = DegeneracyProblem(state1, state2, sign=sign, law=law, beta=beta,
                                    constants=constants)
        if problem.same_level:
            found.append(DegeneracyRoot(problem=problem, a=None, residual=0.0, energy_gap=0.0,
                                        both_bound=None, always_degenerate=True))
            continue
        values = np.array([degeneracy_residual(a, problem) for a in grid])
        for i in range(n_samples - 1):
            if values[i] == 0 or values[i] * values[i + 1] < 0:
                a12 = _refine(lambda a: degeneracy_residual(a, problem), grid[i], grid[i + 1],
                              "degeneracy of {} and {}".format(state1, state2))
                found.append(DegeneracyRoot(problem=problem, a=a12,
                                            residual=degeneracy_residual(a12, problem),
                                            energy_gap=energy_gap(problem, a12),
                                            both_bound=_both_bound(problem, a12)))
        if values[-1] == 0:
            a12 = float(grid[-1])
            found.append(DegeneracyRoot(problem=problem, a=a12, residual=0.0,
                                        energy_gap=energy_gap(problem, a12),
                                        both_bound=_both_bound(problem, a12)))
    found.sort(key=lambda root: (root.a is None, root.a or 0.0))
    logger.info("{} degeneracies among {} pairs on a in [{}, {}]"
                .format(len(found), len(pairs), a_range[0], a_range[1]))
    return found


def zero_energy_scan(q, law, beta, a_range, n_samples=200, constants=None):
    """Every zero-energy range of the f1 level q on a sampled range of a.

    A level may bind and unbind again as a grows, so more than one root can
    exist; each is returned as a ZeroEnergyRoot, sorted by a.
    """
    if n_samples < 2:
        raise exc.DomainError("n_samples must be at least 2, got {}".format(n_samples))
    constants = constants or PhysicalConstants()
    grid = np.linspace(a_range[0], a_range[1], n_samples)
    values = np.array([zero_energy_residual(a, q, law, beta, constants) for a in grid])
    roots = []
    for i in range(n_samples - 1):
        if values[i] == 0 or values[i] * values[i + 1] < 0:
            roots.append(zero_energy_point(q.n_r, q.ell, q.D, law, beta,
                                           (grid[i], grid[i + 1]), constants))
    return roots
