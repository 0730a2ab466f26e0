"""
Closed-form bound-state energies of the Eckart potential under a centrifugal
approximation scheme, and enumeration of the bound states.

With k = 2*mu*a**2/hbar**2 the energy of (n_r, ell, D) is

    E = (L(L+1)*y1 - Q**2) / k
    Q = (k*alpha/2 - L(L+1)*(y2 - y3)/2) / (n_r + L1) - (n_r + L1)/2

where L = ell + (D-3)/2 and L1 is the exponent of (1-s) in the radial
function. Q is sqrt(C), the exponent of s; a state exists when Q > 0 and
E < 0.
"""
import logging
import math
from dataclasses import dataclass

from eckart_nu import exc
from eckart_nu.centrifugal import ApproximationScheme, validate
from eckart_nu.model import QuantumNumbers

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NUConstants:
    """Constants of the hypergeometric-type equation in s for a given energy."""
    A: float
    B: float
    C: float
    eps0_sq: float
    L1: float


@dataclass(frozen=True)
class BoundState:
    q: QuantumNumbers
    energy: float
    sqrtC: float
    scheme: ApproximationScheme
    L1: float = None

    @property
    def C(self):
        return self.sqrtC ** 2


def l1_exponent(model, scheme, q):
    """L1 = 1/2 + sqrt(1/4 + k*beta + L(L+1)*y3).

    Raises:
        SchemeInvalid: the discriminant is negative
    """
    L = q.L
    discriminant = 0.25 + model.reduced_scale * model.beta + L * (L + 1) * scheme.y3
    if discriminant < 0:
        raise exc.SchemeInvalid("{} gives a negative L1 discriminant ({}) for {}"
                                .format(scheme.name, discriminant, q))
    return 0.5 + math.sqrt(discriminant)


def formula_energy(model, scheme, q):
    """The closed-form energy and Q for any (n_r, ell, D), bound or not.

    Returns:
        (energy, Q): Q <= 0 or energy >= 0 means the level is not bound.
    """
    L = q.L
    LL = L * (L + 1)
    k = model.reduced_scale
    y1, y2, y3 = scheme.coefficients
    m = q.n_r + l1_exponent(model, scheme, q)
    Q = (k * model.alpha / 2.0 - LL * (y2 - y3) / 2.0) / m - m / 2.0
    energy = (LL * y1 - Q * Q) / k
    return energy, Q


def _is_bound(energy, Q):
    return Q > 0 and energy < 0


def solve(model, scheme, q):
    """Solve for the bound state (n_r, ell, D).

    Raises:
        SchemeInvalid: the scheme is not admissible for this state
        StateDoesNotExist: no bound state for these quantum numbers
    """
    report = validate(scheme, model, q)
    if not report.admissible:
        raise exc.SchemeInvalid("Scheme {} is not admissible for {}: {}"
                                .format(scheme.name, q, report))
    energy, Q = formula_energy(model, scheme, q)
    if not _is_bound(energy, Q):
        raise exc.StateDoesNotExist("No bound state {} under {} (Q={}, E={})"
                                    .format(q, scheme.name, Q, energy))
    return BoundState(q=q, energy=energy, sqrtC=Q, scheme=scheme,
                      L1=l1_exponent(model, scheme, q))


def energy(model, scheme, q):
    """Energy of a bound state, see solve() for the errors raised."""
    return solve(model, scheme, q).energy


def exists(model, scheme, q):
    energy, Q = formula_energy(model, scheme, q)
    return _is_bound(energy, Q)


def nu_constants(model, scheme, q, energy=None):
    """A, B, C, eps0**2 and L1 for a state; the energy defaults to the closed form."""
    if energy is None:
        energy, _ = formula_energy(model, scheme, q)
    L = q.L
    LL = L * (L + 1)
    k = model.reduced_scale
    y1, y2, y3 = scheme.coefficients
    eps0_sq = -k * energy
    C = eps0_sq + LL * y1
    A = k * model.alpha - LL * (y2 - y3) + C
    B = k * (model.alpha - model.beta) - LL * y2 + 2.0 * C
    return NUConstants(A=A, B=B, C=C, eps0_sq=eps0_sq, L1=l1_exponent(model, scheme, q))


def n_max(model, scheme, ell, D=3):
    """Largest n_r with a bound state for (ell, D), or -1 if there is none.

    Q decreases monotonically in n_r, so bound states form a run from n_r = 0.
    """
    n_r = 0
    while exists(model, scheme, QuantumNumbers(n_r, ell, D)):
        n_r += 1
    return n_r - 1


def enumerate_bound_states(model, scheme, ell_max, D=3):
    """All bound states with ell <= ell_max, sorted by energy (then n_r, ell)."""
    states = []
    for ell in range(ell_max + 1):
        for n_r in range(n_max(model, scheme, ell, D) + 1):
            states.append(solve(model, scheme, QuantumNumbers(n_r, ell, D)))
    states.sort(key=lambda st: (st.energy, st.q.n_r, st.q.ell))
    logger.debug("{} bound states with ell <= {} under {}".format(len(states), ell_max,
                                                                   scheme.name))
    return states


def _energy_or_none(model, scheme, q):
    try:
        return energy(model, scheme, q)
    except exc.StateDoesNotExist:
        return None


def interdimensional_report(model, scheme, states, reference=None):
    """Compare E(n_r, ell, D) with E(n_r, ell+1, D-2) for states with D >= 5.

    Both share L, so the closed form gives them the same energy. ``reference``
    optionally maps (n_r, ell, D) to printed -E values, reported with their
    deviation from the computed value.

    Returns:
        list of dicts, one per state, in the order given
    """
    reference = reference or {}
    rows = []
    for q in states:
        if q.D < 5:
            raise exc.DomainError("The inter-dimensional identity needs D >= 5, got {}"
                                  .format(q))
        partner = QuantumNumbers(q.n_r, q.ell + 1, q.D - 2)
        e_state = _energy_or_none(model, scheme, q)
        e_partner = _energy_or_none(model, scheme, partner)
        row = {
            "n_r": q.n_r, "ell": q.ell, "D": q.D,
            "energy": e_state,
            "partner_energy": e_partner,
            "identity_holds": e_state == e_partner,
            "reference": None,
            "deviation": None,
        }
        printed = reference.get((q.n_r, q.ell, q.D))
        if printed is not None:
            row["reference"] = printed
            if e_state is not None:
                row["deviation"] = -e_state - printed
        rows.append(row)
    return rows
