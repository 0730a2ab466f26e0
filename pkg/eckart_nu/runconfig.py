"""
Run configuration: which model, schemes, states and solver settings a CLI
command works on. Read from an INI file (configparser) or a JSON file with
the same sections:

    meta            min_version
    model           alpha (number or "k/a"), beta, a, hbar, mu
    schemes         names (comma separated, presets or scheme.<name> sections)
    scheme.<name>   kind, lambdas, xi1, xi2, r0
    states          n_r, ell, D (grid) or list ("n_r,ell,D; ...")
    solver          r_min, r_max, n_points, energy_tol, max_bisections, n_scan,
                    approx_oracle
    error_profile   ell, D, schemes, origin_grid, r0_grid
    degeneracy      pairs, zero_energy, a_min, a_max, n_samples, sign
    reference       "n_r,ell,D" = printed -E
    output          format, path

See docs/configuration.md for a complete description.
"""
import configparser
import itertools
import json
import logging
import os
import re
from dataclasses import dataclass, field

from packaging.version import parse as parse_version

from eckart_nu import exc
from eckart_nu.centrifugal import (KINDS, from_preset, make_f1, make_f2, make_f3, make_f4,
                                   make_f5, validate)
from eckart_nu.config import CONFIG
from eckart_nu.degeneracy import SIGNS, AlphaLaw
from eckart_nu.model import EckartModel, PhysicalConstants, QuantumNumbers
from eckart_nu.oracle import RadialSolverConfig
from eckart_nu.version import __version__ as VERSION

logger = logging.getLogger(__name__)

SECTIONS = ("meta", "model", "schemes", "states", "solver", "error_profile", "degeneracy",
            "reference", "output")
FORMATS = ("csv", "json")
ALPHA_LAW = re.compile(r"^\s*([0-9.eE+-]*)\s*/\s*a\s*$")


@dataclass(frozen=True)
class SchemeSpec:
    """How to build one named scheme for a model."""
    name: str
    kind: str = None
    lambdas: tuple = None
    xi1: float = None
    xi2: float = None
    r0: float = None

    def build(self, model):
        xi = (self.xi1, self.xi2)
        if self.kind is None:
            return from_preset(self.name, model, xi=xi, r0=self.r0)
        if self.kind == "F1":
            return make_f1()
        elif self.kind == "F2":
            return make_f2(*xi)
        elif self.kind == "F3":
            return make_f3()
        elif self.kind == "F4":
            return make_f4(model, self.r0)
        return make_f5(self.lambdas, self.xi1, self.xi2, model=model, r0=self.r0,
                       label=self.name)


@dataclass
class RunConfig:
    model: EckartModel
    law: AlphaLaw
    schemes: dict
    states: list
    solver: RadialSolverConfig = field(default_factory=RadialSolverConfig)
    approx_oracle: bool = False
    error_profile: dict = field(default_factory=dict)
    degeneracy: dict = field(default_factory=dict)
    reference: dict = field(default_factory=dict)
    output: dict = field(default_factory=dict)
    source: str = None

    def build_schemes(self):
        """name -> ApproximationScheme, in configuration order."""
        return {name: spec.build(self.model) for name, spec in self.schemes.items()}


def _fail(message, *args):
    raise exc.ConfigError(message.format(*args))


def _number(section, key, value, cast=float):
    try:
        return cast(value)
    except (TypeError, ValueError):
        _fail("[{}] {}: expected a {}, got {!r}", section, key, cast.__name__, value)


def _number_list(section, key, value, cast=float):
    if isinstance(value, str):
        value = [item for item in re.split(r"[,\s]+", value.strip()) if item]
    if not isinstance(value, (list, tuple)):
        value = [value]
    return [_number(section, key, item, cast) for item in value]


def _bool(section, key, value):
    if isinstance(value, bool):
        return value
    lowered = str(value).strip().lower()
    if lowered in ("1", "yes", "true", "on"):
        return True
    if lowered in ("0", "no", "false", "off"):
        return False
    _fail("[{}] {}: expected a boolean, got {!r}", section, key, value)


def _read_file(path):
    """Read an INI or JSON file into {section: {key: value}}."""
    if not os.path.exists(path):
        _fail("Config file {} does not exist", path)
    if path.endswith(".json"):
        try:
            with open(path) as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            _fail("Could not parse {}: {}", path, e)
        if not isinstance(data, dict):
            _fail("{}: top level must be an object", path)
        return data
    parser = configparser.ConfigParser()
    parser.optionxform = str
    try:
        parser.read(path)
    except configparser.Error as e:
        _fail("Could not parse {}: {}", path, e)
    return {section: dict(parser[section]) for section in parser.sections()}


def parse_alpha(value):
    """A number (constant alpha) or "k/a" (alpha = k/a); returns an AlphaLaw."""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return AlphaLaw.constant(value)
    match = ALPHA_LAW.match(str(value))
    if match:
        scale = match.group(1)
        return AlphaLaw.inverse_range(_number("model", "alpha", scale) if scale else 1.0)
    return AlphaLaw.constant(_number("model", "alpha", value))


def _parse_state(text):
    values = _number_list("states", "list", text, int)
    if len(values) != 3:
        _fail("[states] expected n_r,ell,D, got {!r}", text)
    return QuantumNumbers(*values)


def parse_states(section):
    """States as a grid (n_r, ell, D), a "list" entry or a list of dicts.

    A grid is expanded with n_r outermost, then ell, then D.
    """
    if section is None:
        return []
    try:
        if isinstance(section, list):
            return [QuantumNumbers(int(st["n_r"]), int(st["ell"]), int(st.get("D", 3)))
                    if isinstance(st, dict) else _parse_state(st) for st in section]
        if "list" in section:
            items = section["list"]
            if isinstance(items, str):
                items = [item for item in re.split(r"[;\n]", items) if item.strip()]
            return [_parse_state(item) for item in items]
        n_values = _number_list("states", "n_r", section.get("n_r", []), int)
        ell_values = _number_list("states", "ell", section.get("ell", []), int)
        d_values = _number_list("states", "D", section.get("D", 3), int)
        return [QuantumNumbers(n_r, ell, D)
                for n_r, ell, D in itertools.product(n_values, ell_values, d_values)]
    except (KeyError, TypeError) as e:
        _fail("[states] could not read {!r}: {}", section, e)
    except exc.DomainError as e:
        _fail("[states] {}", e)


def _scheme_specs(data):
    names = data.get("schemes", {}).get("names", [])
    if isinstance(names, str):
        names = [name.strip() for name in names.split(",") if name.strip()]
    specs = {}
    for name in names:
        section = data.get("scheme.{}".format(name))
        if section is None and isinstance(data.get("scheme"), dict):
            section = data["scheme"].get(name)
        section = section or {}
        if not section and name not in CONFIG["SCHEME_PRESETS"]:
            _fail("Scheme {} is neither a preset nor defined in [scheme.{}]", name, name)
        kind = section.get("kind")
        if kind is not None and kind not in KINDS:
            _fail("[scheme.{}] kind must be one of {}, got {}", name, KINDS, kind)
        lambdas = section.get("lambdas")
        if kind == "F5" and lambdas is None:
            _fail("[scheme.{}] an F5 scheme needs lambdas", name)
        key = "scheme.{}".format(name)
        specs[name] = SchemeSpec(
            name=name, kind=kind,
            lambdas=tuple(_number_list(key, "lambdas", lambdas)) if lambdas is not None else None,
            xi1=_number(key, "xi1", section["xi1"]) if "xi1" in section else None,
            xi2=_number(key, "xi2", section["xi2"]) if "xi2" in section else None,
            r0=_number(key, "r0", section["r0"]) if "r0" in section else None)
    return specs


def _solver(section):
    kwargs = {}
    casts = {"r_min": float, "r_max": float, "n_points": int, "energy_tol": float,
             "max_bisections": int, "n_scan": int}
    for key, cast in casts.items():
        if key in section:
            kwargs[key] = _number("solver", key, section[key], cast)
    try:
        return RadialSolverConfig(**kwargs)
    except exc.DomainError as e:
        _fail("[solver] {}", e)


def _grid(section, key, value):
    values = _number_list(section, key, value)
    if len(values) != 3 or values[2] < 2 or not 0 < values[0] < values[1]:
        _fail("[{}] {}: expected start, stop, count with 0 < start < stop, got {!r}",
              section, key, value)
    return (values[0], values[1], int(values[2]))


def _error_profile(section):
    defaults = CONFIG["ERROR_PROFILE"]
    schemes = section.get("schemes", defaults["schemes"])
    if isinstance(schemes, str):
        schemes = [name.strip() for name in schemes.split(",") if name.strip()]
    return {
        "ell": _number("error_profile", "ell", section.get("ell", defaults["ell"]), int),
        "D": _number("error_profile", "D", section.get("D", defaults["D"]), int),
        "schemes": tuple(schemes),
        "origin_grid": _grid("error_profile", "origin_grid",
                             section.get("origin_grid", defaults["origin_grid"])),
        "r0_grid": _grid("error_profile", "r0_grid",
                         section.get("r0_grid", defaults["r0_grid"])),
    }


def _pairs(value):
    if isinstance(value, str):
        value = [line for line in re.split(r"[\n|]", value) if line.strip()]
    pairs = []
    for item in value:
        if isinstance(item, str):
            item = item.split(";")
        if len(item) != 2:
            _fail("[degeneracy] pairs: expected two states per pair, got {!r}", item)
        pairs.append(tuple(_parse_state(st) if isinstance(st, str) else
                           QuantumNumbers(*[int(v) for v in st]) for st in item))
    return pairs


def _degeneracy(section):
    defaults = CONFIG["DEGENERACY"]
    sign = section.get("sign", defaults["sign"])
    if sign not in SIGNS:
        _fail("[degeneracy] sign must be one of {}, got {}", SIGNS, sign)
    zero = section.get("zero_energy", [])
    if isinstance(zero, str):
        zero = [item for item in re.split(r"[;\n]", zero) if item.strip()]
    parsed = {
        "pairs": _pairs(section.get("pairs", [])),
        "zero_energy": [_parse_state(st) if isinstance(st, str) else
                        QuantumNumbers(*[int(v) for v in st]) for st in zero],
        "a_min": _number("degeneracy", "a_min", section.get("a_min", defaults["a_range"][0])),
        "a_max": _number("degeneracy", "a_max", section.get("a_max", defaults["a_range"][1])),
        "n_samples": _number("degeneracy", "n_samples",
                             section.get("n_samples", defaults["n_samples"]), int),
        "sign": sign,
    }
    if not 0 < parsed["a_min"] < parsed["a_max"]:
        _fail("[degeneracy] need 0 < a_min < a_max")
    if parsed["n_samples"] < 2:
        _fail("[degeneracy] n_samples must be at least 2")
    return parsed


def _reference(section):
    reference = {}
    for key, value in section.items():
        reference[tuple(_number_list("reference", key, key, int))] = \
            _number("reference", key, value)
    return reference


def _output(section):
    fmt = section.get("format", "csv")
    if fmt not in FORMATS:
        _fail("[output] format must be one of {}, got {}", FORMATS, fmt)
    return {"format": fmt, "path": section.get("path")}


def check_version(min_version):
    if min_version and parse_version(str(min_version)) > parse_version(VERSION):
        raise exc.OutdatedVersion("This configuration needs eckart-nu >= {}, this is {}"
                                  .format(min_version, VERSION))


def load_config(path):
    """Read and validate a run configuration.

    Raises:
        ConfigError: unreadable file, bad value or unbuildable scheme
        OutdatedVersion: meta.min_version is newer than this package
    """
    data = _read_file(path)
    unknown = [s for s in data if s not in SECTIONS and not s.startswith("scheme")]
    if unknown:
        _fail("{}: unknown sections {}", path, unknown)
    check_version(data.get("meta", {}).get("min_version"))

    model_section = data.get("model", {})
    for key in ("beta", "a"):
        if key not in model_section:
            _fail("[model] {} is required", key)
    law = parse_alpha(model_section.get("alpha", "1/a"))
    try:
        constants = PhysicalConstants(
            hbar=_number("model", "hbar", model_section.get("hbar", 1.0)),
            mu=_number("model", "mu", model_section.get("mu", 1.0)))
        a = _number("model", "a", model_section["a"])
        model = EckartModel(alpha=law(a), beta=_number("model", "beta", model_section["beta"]),
                            a=a, constants=constants)
    except exc.DomainError as e:
        _fail("[model] {}", e)

    solver_section = data.get("solver", {})
    cfg = RunConfig(
        model=model, law=law,
        schemes=_scheme_specs(data),
        states=parse_states(data.get("states")),
        solver=_solver(solver_section),
        approx_oracle=_bool("solver", "approx_oracle",
                            solver_section.get("approx_oracle", False)),
        error_profile=_error_profile(data.get("error_profile", {})),
        degeneracy=_degeneracy(data.get("degeneracy", {})),
        reference=_reference(data.get("reference", {})),
        output=_output(data.get("output", {})),
        source=path)

    try:
        schemes = cfg.build_schemes()
    except exc.EckartException as e:
        _fail("Could not build the schemes of {}: {}", path, e)
    for name, scheme in schemes.items():
        for q in cfg.states:
            report = validate(scheme, model, q)
            if not report.admissible:
                logger.warning("Scheme {} is not admissible for {}: {}".format(name, q, report))
    logger.debug("Loaded {}: {} schemes, {} states".format(path, len(schemes), len(cfg.states)))
    return cfg
