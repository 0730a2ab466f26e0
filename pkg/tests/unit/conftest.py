import pytest

from eckart_nu import CONFIG, EckartModel, QuantumNumbers
from eckart_nu.oracle import RadialSolverConfig

# Maximum output logging!
CONFIG['LOGGING']['handlers']['console']['class'] = 'logging.StreamHandler'
CONFIG['LOGGING']['handlers']['console']['level'] = 'DEBUG'

A_RANGE = 40.0

# -E for D = 3, a = 40, alpha = 1/a. Columns: f1, f2, f3, f4, f5c, f5d, literature, GPS
ENERGIES_BETA_1E4 = {
    (0, 1): (0.1008879, 0.1015944, 0.1008358, 0.1008358, 0.1010119, 0.1008410, 0.1008358,
             0.1008359),
    (0, 2): (0.0415198, 0.0414791, 0.0413635, 0.0413635, 0.0414643, 0.0413792, 0.0413642,
             0.0413642),
    (0, 3): (0.0193308, 0.0189461, 0.0190183, 0.0190183, 0.0191600, 0.0190495, 0.0190220,
             0.0190220),
    (1, 1): (0.0401768, 0.0403163, 0.0401247, 0.0401247, 0.0401887, 0.0401299, 0.0401250,
             0.0401250),
    (1, 2): (0.0190752, 0.0189774, 0.0189190, 0.0189190, 0.0190087, 0.0189346, 0.0189216,
             0.0189216),
    (1, 3): (0.0091303, 0.0088858, 0.0088178, 0.0088178, 0.0089875, 0.0088491, 0.0088297,
             0.0088297),
    (2, 1): (0.0185142, 0.0185468, 0.0184622, 0.0184622, 0.0185050, 0.0184674, 0.0184632,
             0.0184632),
    (2, 2): (0.0090066, 0.0089303, 0.0088504, 0.0088504, 0.0089444, 0.0088660, 0.0088576,
             0.0088576),
    (2, 3): (0.0040362, 0.0038908, 0.0037237, 0.0037237, 0.0039132, 0.0037550, 0.0037525,
             0.0037525),
}

# Same for beta = 0.0005, without the literature column
ENERGIES_BETA_5E4 = {
    (0, 1): (0.0704527, 0.0706770, 0.0704006, 0.0704006, 0.0704815, 0.0704058, 0.0704007),
    (0, 2): (0.0342158, 0.0340877, 0.0340595, 0.0340596, 0.0341431, 0.0340752, 0.0340604),
    (0, 3): (0.0169482, 0.0165709, 0.0166357, 0.0166359, 0.0167790, 0.0166671, 0.0166401),
    (1, 1): (0.0301503, 0.0301782, 0.0300982, 0.0300982, 0.0301402, 0.0301034, 0.0300987),
    (1, 2): (0.0159649, 0.0158461, 0.0158087, 0.0158088, 0.0158942, 0.0158244, 0.0158120),
    (1, 3): (0.0079688, 0.0077346, 0.0076563, 0.0076564, 0.0078281, 0.0076877, 0.0076699),
    (2, 1): (0.0141676, 0.0141623, 0.0141156, 0.0141156, 0.0141509, 0.0141208, 0.0141170),
    (2, 2): (0.0074840, 0.0074025, 0.0073277, 0.0073278, 0.0074208, 0.0073434, 0.0073363),
    (2, 3): (0.0034413, 0.0033048, 0.0031288, 0.0031290, 0.0033201, 0.0031602, 0.0031612),
}

SCHEME_COLUMNS = ("f1", "f2", "f3", "f4", "f5c", "f5d")

# -E under f5d, beta = 0.0001, for D = 3 and D = 4; (2, 4) at D = 4 is barely bound
ENERGIES_F5D_D3_D4 = {
    (0, 1): (0.1008410, 0.0631369),
    (0, 2): (0.0413792, 0.0278917),
    (0, 3): (0.0190495, 0.0130013),
    (0, 4): (0.0087318, 0.00564956),
    (1, 1): (0.0401299, 0.0274586),
    (1, 2): (0.0189346, 0.0130356),
    (1, 3): (0.0088491, 0.0058207),
    (1, 4): (0.0036034, 0.0019722),
    (2, 1): (0.0184674, 0.0129021),
    (2, 2): (0.0088660, 0.0059195),
    (2, 3): (0.0037550, 0.0021629),
    (2, 4): (0.0009998, 0.0001657),
}


@pytest.fixture
def model():
    return EckartModel(alpha=1.0 / A_RANGE, beta=1e-4, a=A_RANGE)


@pytest.fixture
def model_5e4():
    return EckartModel(alpha=1.0 / A_RANGE, beta=5e-4, a=A_RANGE)


@pytest.fixture
def ground_p():
    return QuantumNumbers(0, 1, 3)


@pytest.fixture
def fast_solver():
    """A coarse grid for tests that only need the oracle to run, not to be precise."""
    return RadialSolverConfig(n_points=2000, n_scan=100, energy_tol=1e-9)
