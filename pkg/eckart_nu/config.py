"""
NOTE! This only lists the static config items for the eckart-nu package.

Run-specific settings (potential parameters, schemes, states, output) are read
from a run configuration file, see eckart_nu.runconfig.

LOGGING: the CLI takes --verbose or --log-level to raise the log level.
Lengths below marked "in units of a" are multiplied by the model range.
"""

CONFIG = {
    "LOGGING": {
        "version": 1,
        "formatters": {
            "basic": {"format": "[%(levelname)s] %(name)s::%(funcName)s() %(message)s"}
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "formatter": "basic",
                "level": "NOTSET"
            }
        },
        "loggers": {
            "eckart_nu": {
                "propagate": False,
                "level": "WARNING",
                "handlers": ["console"],
            },
        },
    },
    # Named approximation schemes. Weights are over (f1, f2, f3, f4).
    "SCHEME_PRESETS": {
        "f1": {"kind": "F1"},
        "f2": {"kind": "F2"},
        "f3": {"kind": "F3"},
        "f4": {"kind": "F4"},
        "f5a": {"kind": "F5", "lambdas": (0.0, 0.0, 0.98, 0.02)},
        "f5b": {"kind": "F5", "lambdas": (0.0, 0.0, 0.02, 0.98)},
        "f5c": {"kind": "F5", "lambdas": (0.5, 0.2, 0.2, 0.1)},
        "f5d": {"kind": "F5", "lambdas": (0.1, 0.0, 0.0, 0.9)},
    },
    "DEFAULT_XI": (1.1, 0.98),
    # Weights must sum to one within this tolerance
    "WEIGHT_TOL": 1e-12,
    # Output formatting
    "ENERGY_DECIMALS": 7,
    "MISSING_MARKER": "…",
    "ERROR_MARKERS": {
        "SchemeInvalid": "!scheme-invalid",
        "StateDoesNotExist": "…",
        "NoStateFound": "!no-state",
        "NonConverged": "!non-converged",
        "DomainError": "!domain",
        "NoMinimum": "!no-minimum",
        "NoSignChange": "!no-sign-change",
        "DegenerateInput": "!always-degenerate",
    },
    "EXIT_CODES": {
        "config": 2,
        "numeric": 3,
    },
    # Numerov oracle defaults (r_min, r_max in units of a)
    "ORACLE": {
        "r_min": 1e-6,
        "r_max": 60.0,
        "n_points": 20000,
        "energy_tol": 1e-12,
        "max_bisections": 200,
        "n_scan": 400,
        # e-folds of decay past the outer turning point before integration stops
        "tail_efolds": 40.0,
    },
    # Radial normalization quadrature (extent in units of a)
    "RADIAL_QUADRATURE": {
        "extent": 60.0,
        "tol": 1e-10,
        "order": 20,
    },
    "ANGULAR_QUADRATURE": {
        "order": 48,
        "azimuthal_points": 32,
    },
    # Figure data grids: near-origin in absolute length, near-r0 in units of r0
    "ERROR_PROFILE": {
        "ell": 2,
        "D": 3,
        "origin_grid": (0.01, 5.0, 500),
        "r0_grid": (0.9, 1.1, 201),
        "schemes": ("f1", "f2", "f3", "f4", "f5a", "f5b"),
    },
    "DEGENERACY": {
        "sign": "plus",
        "n_samples": 200,
        "a_range": (1.0, 40.0),
    },
}
