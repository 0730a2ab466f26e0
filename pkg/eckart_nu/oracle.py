"""
Numerical radial eigensolver used as the reference for the closed-form
energies.

The radial equation R'' = [k(V - E) + c(r)] R, with k = 2*mu/hbar**2 and c
either the exact L(L+1)/r**2 or L(L+1) times an approximation scheme, is
integrated outward with Numerov's method on the logarithmic grid x = ln r.
With R = r**(1/2) * y(x),

    y'' = g(x) y,    g = 1/4 + r**2 * (k(V - E) + c(r))

Eigenvalues are located by counting the nodes of the outward solution
(oscillation theorem) and bisecting on the node-count transition.
"""
import logging
import math
from dataclasses import dataclass, field
from itertools import groupby

import numpy as np

from eckart_nu import exc, spectrum
from eckart_nu.centrifugal import evaluate_inv_r2
from eckart_nu.config import CONFIG
from eckart_nu.model import eval_potential, potential_minimum

logger = logging.getLogger(__name__)

RESCALE = 1e200


def _oracle_default(key):
    return field(default_factory=lambda: CONFIG["ORACLE"][key])


@dataclass(frozen=True)
class RadialSolverConfig:
    """Grid and convergence settings. r_min and r_max are lengths; None means
    CONFIG["ORACLE"] multiples of the model range a."""
    r_min: float = None
    r_max: float = None
    n_points: int = _oracle_default("n_points")
    energy_tol: float = _oracle_default("energy_tol")
    max_bisections: int = _oracle_default("max_bisections")
    n_scan: int = _oracle_default("n_scan")
    tail_efolds: float = _oracle_default("tail_efolds")

    def __post_init__(self):
        if self.n_points < 1000:
            raise exc.DomainError("n_points must be at least 1000, got {}".format(self.n_points))
        if self.n_scan < 2:
            raise exc.DomainError("n_scan must be at least 2, got {}".format(self.n_scan))
        if not self.energy_tol > 0:
            raise exc.DomainError("energy_tol must be positive, got {}".format(self.energy_tol))

    def extent(self, model):
        """(r_min, r_max) for a model."""
        r_min = CONFIG["ORACLE"]["r_min"] * model.a if self.r_min is None else self.r_min
        r_max = CONFIG["ORACLE"]["r_max"] * model.a if self.r_max is None else self.r_max
        if not 0 < r_min < r_max:
            raise exc.DomainError("Need 0 < r_min < r_max, got r_min={}, r_max={}"
                                  .format(r_min, r_max))
        return r_min, r_max


@dataclass(frozen=True)
class CentrifugalMode:
    """Exact centrifugal term (scheme is None) or an approximation scheme."""
    scheme: object = None

    @classmethod
    def exact(cls):
        return cls()

    @classmethod
    def approx(cls, scheme):
        if scheme is None:
            raise exc.DomainError("Approximate mode needs a scheme")
        return cls(scheme)

    @property
    def is_exact(self):
        return self.scheme is None

    @property
    def name(self):
        return "exact" if self.is_exact else self.scheme.name


class RadialShooter:
    """Outward Numerov integrator for one (model, L, mode).

    The grid and the energy-independent parts of the Numerov weights are
    built once; node_count and eigenvalue can then be called for any energy
    and any n_r sharing this (ell, D).
    """

    def __init__(self, model, q, mode, cfg=None):
        self.model = model
        self.q = q
        self.mode = mode
        self.cfg = cfg or RadialSolverConfig()
        self._scan = None

        r_min, r_max = self.cfg.extent(model)
        x = np.linspace(math.log(r_min), math.log(r_max), self.cfg.n_points)
        self.h = x[1] - x[0]
        self.r = np.exp(x)

        k = model.constants.coupling
        L = q.L
        LL = L * (L + 1)
        if mode.is_exact:
            cent_r2 = np.full_like(self.r, LL)
            c0 = LL
        else:
            cent_r2 = LL * self.r ** 2 * evaluate_inv_r2(mode.scheme, self.r, model.a)
            c0 = LL * mode.scheme.y3
        g_base = 0.25 + self.r ** 2 * k * eval_potential(model, self.r) + cent_r2
        h2 = self.h ** 2 / 12.0
        # f = 1 - h**2 g / 12 = f_base + f_slope * E
        self.f_base = 1.0 - h2 * g_base
        self.f_slope = h2 * k * self.r ** 2

        discriminant = 0.25 + k * model.a ** 2 * model.beta + c0
        if discriminant < 0:
            raise exc.SchemeInvalid("No regular solution at the origin for {} under {}"
                                    .format(q, mode.name))
        self.start_exponent = 0.5 + math.sqrt(discriminant)
        # y = R / r**(1/2) ~ r**(lambda - 1/2)
        self.y_start = (self.r[:2] / self.r[0]) ** (self.start_exponent - 0.5)
        logger.debug("Shooter for {} ({}): {} points, h={:.3e}, start exponent {:.6f}"
                     .format(q, mode.name, self.cfg.n_points, self.h, self.start_exponent))

    def _weights(self, energy):
        return self.f_base + self.f_slope * energy

    def _stop_index(self, f):
        """Last grid index to integrate to, or None without a classically allowed region."""
        allowed = np.nonzero(f > 1.0)[0]
        if allowed.size == 0:
            return None
        last = int(allowed[-1])
        decay = np.cumsum(np.sqrt(np.clip(12.0 * (1.0 - f[last:]), 0.0, None)))
        past = int(np.searchsorted(decay, self.cfg.tail_efolds))
        return min(last + past, f.size - 1)

    def node_count(self, energy):
        """Interior sign changes of the outward solution at this energy."""
        f = self._weights(energy)
        stop = self._stop_index(f)
        if stop is None:
            return 0
        f = f[:stop + 1].tolist()
        y_prev, y_curr = float(self.y_start[0]), float(self.y_start[1])
        nodes = 0
        for i in range(1, stop):
            y_next = ((12.0 - 10.0 * f[i]) * y_curr - f[i - 1] * y_prev) / f[i + 1]
            if y_next * y_curr < 0:
                nodes += 1
            y_prev, y_curr = y_curr, y_next
            if abs(y_curr) > RESCALE:
                y_prev /= RESCALE
                y_curr /= RESCALE
        return nodes

    def node_counts(self, energies):
        """node_count for many energies at once, vectorised over the energies."""
        energies = np.asarray(energies, dtype=float)
        stops = np.empty(energies.size, dtype=int)
        for j, energy in enumerate(energies):
            stop = self._stop_index(self._weights(energy))
            stops[j] = 0 if stop is None else stop
        y_prev = np.full(energies.size, self.y_start[0])
        y_curr = np.full(energies.size, self.y_start[1])
        nodes = np.zeros(energies.size, dtype=int)
        f_prev = self.f_base[0] + self.f_slope[0] * energies
        f_curr = self.f_base[1] + self.f_slope[1] * energies
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            for i in range(1, int(stops.max(initial=0))):
                f_next = self.f_base[i + 1] + self.f_slope[i + 1] * energies
                y_next = ((12.0 - 10.0 * f_curr) * y_curr - f_prev * y_prev) / f_next
                nodes += (y_next * y_curr < 0) & (i < stops)
                y_prev, y_curr = y_curr, y_next
                scale = np.where(np.abs(y_curr) > RESCALE, 1.0 / RESCALE, 1.0)
                y_prev, y_curr = y_prev * scale, y_curr * scale
                f_prev, f_curr = f_curr, f_next
        return nodes

    def _v_min(self):
        try:
            _, v_min = potential_minimum(self.model)
        except exc.NoMinimum:
            raise exc.NoStateFound("alpha <= beta: no bound states for {}".format(self.q))
        return v_min

    def scan(self):
        """(energies, node counts) over (V_min, 0), computed once per shooter."""
        if self._scan is None:
            v_min = self._v_min()
            energies = np.linspace(v_min * (1.0 - 1e-9), -1e-12 * abs(v_min), self.cfg.n_scan)
            self._scan = (energies, self.node_counts(energies))
        return self._scan

    def eigenvalue(self, n_r):
        """Energy of the level with n_r nodes.

        Raises:
            NoStateFound: no level with n_r nodes below zero
            NonConverged: max_bisections reached before energy_tol
        """
        v_min = self._v_min()
        energies, counts = self.scan()
        above = np.nonzero(counts > n_r)[0]
        if above.size == 0 or above[0] == 0:
            raise exc.NoStateFound("No level with {} nodes for {} under {}"
                                   .format(n_r, self.q, self.mode.name))
        lo, hi = float(energies[above[0] - 1]), float(energies[above[0]])
        tol = self.cfg.energy_tol * abs(v_min)
        for iteration in range(self.cfg.max_bisections):
            if hi - lo < tol:
                energy = 0.5 * (lo + hi)
                logger.debug("n_r={} {} ({}): E={} after {} bisections"
                             .format(n_r, self.q, self.mode.name, energy, iteration))
                return energy
            mid = 0.5 * (lo + hi)
            if self.node_count(mid) > n_r:
                hi = mid
            else:
                lo = mid
        raise exc.NonConverged("Bisection for n_r={} {} did not reach {} in {} steps"
                               .format(n_r, self.q, tol, self.cfg.max_bisections))


def solve_state(model, q, mode, cfg=None):
    """Numerical energy of the state q under the given centrifugal mode."""
    return RadialShooter(model, q, mode, cfg).eigenvalue(q.n_r)


def node_count(model, q, mode, cfg, energy):
    return RadialShooter(model, q, mode, cfg).node_count(energy)


@dataclass(frozen=True)
class ComparisonCell:
    """One (state, mode) entry: oracle energy, closed-form energy, error markers."""
    oracle: float = None
    closed_form: float = None
    oracle_error: str = None
    closed_form_error: str = None

    @property
    def difference(self):
        if self.oracle is None or self.closed_form is None:
            return None
        return self.oracle - self.closed_form


@dataclass
class SpectrumTable:
    modes: tuple
    rows: list = field(default_factory=list)

    def cell(self, q, mode_name):
        for state, cells in self.rows:
            if state == q:
                return cells[mode_name]
        raise KeyError(q)


def _marker(error):
    return CONFIG["ERROR_MARKERS"].get(type(error).__name__, "!error")


def _closed_form_cell(model, mode, q):
    if mode.is_exact:
        return {}
    try:
        return {"closed_form": spectrum.energy(model, mode.scheme, q)}
    except exc.EckartException as e:
        logger.debug("No closed form for {} under {}: {}".format(q, mode.name, e))
        return {"closed_form_error": _marker(e)}


def spectrum_table(model, modes, states, cfg=None, oracle=True):
    """Oracle and closed-form energies for every (state, mode).

    Arguments:
        modes (dict): column label -> CentrifugalMode
        states (list): QuantumNumbers, rows keep this order
        oracle (bool): False skips the numerical solve (closed forms only)
    Returns:
        SpectrumTable; failures are recorded as error markers in the cells
    """
    table = SpectrumTable(modes=tuple(modes))
    cells = {q: {} for q in states}
    by_channel = sorted(set(states), key=lambda q: (q.ell, q.D, q.n_r))
    for (ell, D), group in groupby(by_channel, key=lambda q: (q.ell, q.D)):
        group = list(group)
        for label, mode in modes.items():
            shooter = None
            for q in group:
                values = _closed_form_cell(model, mode, q)
                if oracle:
                    try:
                        shooter = shooter or RadialShooter(model, q, mode, cfg)
                        values["oracle"] = shooter.eigenvalue(q.n_r)
                    except exc.EckartException as e:
                        logger.info("Oracle failed for {} under {}: {}".format(q, label, e))
                        values["oracle_error"] = _marker(e)
                cells[q][label] = ComparisonCell(**values)
    table.rows = [(q, cells[q]) for q in states]
    return table
