import copy
import functools
import logging.config
import sys

import click
import numpy as np

from eckart_nu import CONFIG, exc, spectrum, version
from eckart_nu.centrifugal import error_profile as scheme_error_profile
from eckart_nu.centrifugal import from_preset
from eckart_nu.degeneracy import scan_degeneracies, zero_energy_scan
from eckart_nu.model import QuantumNumbers, potential_minimum
from eckart_nu.oracle import CentrifugalMode, spectrum_table
from eckart_nu.runconfig import FORMATS, load_config
from eckart_nu.tables import Flag, write_table
from eckart_nu.wavefunction import (node_count, radial_norm_integral, radial_overlap,
                                    radial_wavefunction)

logger = logging.getLogger(__name__)


@click.group()
@click.version_option(version=version.__version__, message="%(version)s")
def cli():
    """Bound states of the D-dimensional Eckart potential under centrifugal approximations."""
    pass


def run_options(func):
    """--config, --out, --format and logging options shared by every command."""
    @click.option("--config", "config_path", required=True, type=click.Path(),
                  help="Run configuration (INI or JSON)")
    @click.option("--out", "out_path", default=None, type=click.Path(),
                  help="Output file, overrides [output] path")
    @click.option("--format", "fmt", default=None, type=click.Choice(FORMATS),
                  help="Output format, overrides [output] format")
    @click.option("--verbose", "-v", is_flag=True, default=False, show_default=True)
    @click.option("--log-level", default=None,
                  type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]))
    @functools.wraps(func)
    def wrapper(config_path, out_path, fmt, verbose, log_level, **kwargs):
        if verbose:
            set_log_level("DEBUG")
        elif log_level:
            set_log_level(log_level)
        try:
            cfg = load_config(config_path)
            out_path = out_path or cfg.output["path"]
            if not out_path:
                raise exc.ConfigError("No output path: pass --out or set [output] path")
            fmt = fmt or cfg.output["format"]
            columns, rows, rounded = func(cfg, **kwargs)
            write_table(out_path, fmt, columns, rows, rounded=rounded,
                        meta={"command": func.__name__.replace("_", "-"),
                              "version": version.__version__})
        except exc.ConfigError as e:
            click.secho(str(e), fg="red", err=True)
            sys.exit(CONFIG["EXIT_CODES"]["config"])
        except exc.EckartException as e:
            logger.debug("Numeric failure", exc_info=True)
            click.secho(str(e), fg="red", err=True)
            sys.exit(CONFIG["EXIT_CODES"]["numeric"])
        click.echo("Wrote {} rows to {}".format(len(rows), out_path))
    return wrapper


def _label(q):
    return "{},{},{}".format(q.n_r, q.ell, q.D)


def _value_or_flag(value, error):
    if error is None:
        return value
    # nonexistent states are rendered as plain missing values
    return None if error == CONFIG["ERROR_MARKERS"]["StateDoesNotExist"] else Flag(error)


@cli.command()
@run_options
def energies(cfg):
    """Closed-form energies, one column per scheme."""
    schemes = cfg.build_schemes()
    columns = ["n_r", "ell", "D"]
    for name in schemes:
        columns += [name, "{}_full".format(name)]
    rows = []
    for q in cfg.states:
        row = q.as_dict()
        for name, scheme in schemes.items():
            try:
                value = spectrum.energy(cfg.model, scheme, q)
            except exc.StateDoesNotExist:
                value = None
            except exc.EckartException as e:
                value = Flag.from_exception(e)
            row[name] = row["{}_full".format(name)] = value
        rows.append(row)
    return columns, rows, tuple(schemes)


def _profile_scheme(cfg, name):
    if name in cfg.schemes:
        return cfg.schemes[name].build(cfg.model)
    return from_preset(name, cfg.model)


@cli.command("error-profile")
@run_options
def error_profile(cfg):
    """Approximation error L(L+1)(1/r^2 - f(r)) near the origin and near r0."""
    settings = cfg.error_profile
    schemes = {name: _profile_scheme(cfg, name) for name in settings["schemes"]}
    r0, _ = potential_minimum(cfg.model)
    grids = {
        "origin": np.linspace(*settings["origin_grid"]),
        "r0": r0 * np.linspace(*settings["r0_grid"]),
    }
    columns = ["region", "r"] + ["error_{}".format(name) for name in schemes]
    rows = []
    for region, grid in grids.items():
        profiles = {name: scheme_error_profile(scheme, cfg.model, settings["ell"], grid,
                                               D=settings["D"])
                    for name, scheme in schemes.items()}
        for i, r in enumerate(grid):
            row = {"region": region, "r": float(r)}
            for name, profile in profiles.items():
                row["error_{}".format(name)] = float(profile[i, 1])
            rows.append(row)
    return columns, rows, ()


@cli.command("compare-oracle")
@run_options
def compare_oracle(cfg):
    """Closed-form energies against the numerical (exact centrifugal term) solution."""
    schemes = cfg.build_schemes()
    exact = spectrum_table(cfg.model, {"exact": CentrifugalMode.exact()}, cfg.states,
                           cfg.solver)
    approx = spectrum_table(cfg.model,
                            {name: CentrifugalMode.approx(s) for name, s in schemes.items()},
                            cfg.states, cfg.solver, oracle=cfg.approx_oracle)
    columns = ["n_r", "ell", "D", "oracle", "oracle_full"]
    rounded = ["oracle"]
    for name in schemes:
        columns += [name, "{}_full".format(name), "{}_diff".format(name)]
        rounded.append(name)
        if cfg.approx_oracle:
            columns += ["{}_oracle".format(name), "{}_oracle_diff".format(name)]
    rows = []
    for (q, exact_cells), (_, approx_cells) in zip(exact.rows, approx.rows):
        cell = exact_cells["exact"]
        oracle = _value_or_flag(cell.oracle, cell.oracle_error)
        row = dict(q.as_dict(), oracle=oracle, oracle_full=oracle)
        for name in schemes:
            approx_cell = approx_cells[name]
            closed = _value_or_flag(approx_cell.closed_form, approx_cell.closed_form_error)
            row[name] = row["{}_full".format(name)] = closed
            if cell.oracle is not None and approx_cell.closed_form is not None:
                row["{}_diff".format(name)] = approx_cell.closed_form - cell.oracle
            if cfg.approx_oracle:
                row["{}_oracle".format(name)] = _value_or_flag(approx_cell.oracle,
                                                               approx_cell.oracle_error)
                row["{}_oracle_diff".format(name)] = approx_cell.difference
        rows.append(row)
    return columns, rows, tuple(rounded)


@cli.command()
@run_options
def degeneracy(cfg):
    """Degeneracies and zero-energy ranges a under the f1 approximation."""
    settings = cfg.degeneracy
    a_range = (settings["a_min"], settings["a_max"])
    beta, constants = cfg.model.beta, cfg.model.constants
    columns = ["kind", "state1", "state2", "a", "residual", "energy", "both_bound",
               "always_degenerate"]
    rows = []
    for state1, state2 in settings["pairs"]:
        roots = scan_degeneracies([(state1, state2)], cfg.law, beta, a_range,
                                  settings["n_samples"], settings["sign"], constants)
        base = {"kind": "degeneracy", "state1": _label(state1), "state2": _label(state2)}
        if not roots:
            rows.append(dict(base, a=Flag(CONFIG["ERROR_MARKERS"]["NoSignChange"])))
        for root in roots:
            rows.append(dict(base, a=root.a, residual=root.residual, energy=root.energy_gap,
                             both_bound=root.both_bound,
                             always_degenerate=root.always_degenerate))
    for q in settings["zero_energy"]:
        roots = zero_energy_scan(q, cfg.law, beta, a_range, settings["n_samples"], constants)
        base = {"kind": "zero-energy", "state1": _label(q), "state2": ""}
        if not roots:
            rows.append(dict(base, a=Flag(CONFIG["ERROR_MARKERS"]["NoSignChange"])))
        for root in roots:
            rows.append(dict(base, a=root.a, residual=root.residual, energy=root.energy))
    return columns, rows, ()


@cli.command("normalize-check")
@run_options
def normalize_check(cfg):
    """Analytic norm, quadrature norm, node count and <R_0l, R_1l> for each state."""
    columns = ["scheme", "n_r", "ell", "D", "energy", "norm_constant", "norm_integral",
               "node_count", "overlap_01"]
    rows = []
    for name, scheme in cfg.build_schemes().items():
        for q in cfg.states:
            row = dict(q.as_dict(), scheme=name)
            try:
                state = spectrum.solve(cfg.model, scheme, q)
            except exc.StateDoesNotExist:
                rows.append(row)
                continue
            except exc.EckartException as e:
                row["energy"] = Flag.from_exception(e)
                rows.append(row)
                continue
            w = radial_wavefunction(state, cfg.model)
            row.update(energy=state.energy, norm_constant=w.norm,
                       norm_integral=radial_norm_integral(w, cfg.model),
                       node_count=node_count(w, cfg.model))
            if q.n_r == 0:
                try:
                    excited = spectrum.solve(cfg.model, scheme, QuantumNumbers(1, q.ell, q.D))
                    row["overlap_01"] = radial_overlap(
                        w, radial_wavefunction(excited, cfg.model), cfg.model)
                except exc.EckartException as e:
                    logger.debug("No overlap for {}: {}".format(q, e))
            rows.append(row)
    return columns, rows, ("energy",)


@cli.command("identity-report")
@run_options
def identity_report(cfg):
    """E(n_r, ell, D) against E(n_r, ell+1, D-2), with printed reference values."""
    states = [q for q in cfg.states if q.D >= 5]
    skipped = len(cfg.states) - len(states)
    if skipped:
        logger.warning("Skipping {} states with D < 5".format(skipped))
    columns = ["scheme", "n_r", "ell", "D", "energy", "partner_energy", "identity_holds",
               "reference", "deviation"]
    rows = []
    for name, scheme in cfg.build_schemes().items():
        for row in spectrum.interdimensional_report(cfg.model, scheme, states, cfg.reference):
            rows.append(dict(row, scheme=name))
    return columns, rows, ("energy", "partner_energy", "reference")


def set_log_level(level):
    """ Reconfigure logging to a specific log level """
    log_config = copy.deepcopy(CONFIG["LOGGING"])
    log_config["handlers"]["console"]["level"] = level
    log_config["loggers"]["eckart_nu"]["level"] = level
    logging.config.dictConfig(log_config)
