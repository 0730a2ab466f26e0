import math

import mpmath
import numpy as np
import pytest
from scipy import special

from eckart_nu import exc
from eckart_nu.centrifugal import make_f1
from eckart_nu.special_functions import (gamma_ratio, gegenbauer_c, hyp2f1_terminating,
                                         jacobi_p, log_gamma, pochhammer)
from eckart_nu.spectrum import solve


def test_log_gamma():
    assert log_gamma(5.0) == pytest.approx(math.log(24.0))
    assert log_gamma(np.array([1.0, 2.0])) == pytest.approx([0.0, 0.0], abs=1e-15)


@pytest.mark.parametrize("x", [0.0, -1.5, [1.0, -1.0]])
def test_log_gamma_domain(x):
    with pytest.raises(exc.DomainError):
        log_gamma(x)


def test_log_gamma_large_argument():
    # Gamma(200) overflows a double, its logarithm does not
    assert log_gamma(200.0) == pytest.approx(float(mpmath.loggamma(200)), rel=1e-14)


def test_pochhammer():
    assert pochhammer(3.0, 4) == pytest.approx(3.0 * 4.0 * 5.0 * 6.0)
    assert pochhammer(0.5, 0) == 1.0


def test_gamma_ratio_large_arguments():
    # Gamma(170.5) Gamma(3) / Gamma(171.5) = 2 / 170.5
    assert gamma_ratio([170.5, 3.0], [171.5]) == pytest.approx(2.0 / 170.5, rel=1e-12)


@pytest.mark.parametrize("n, b, c, s", [(0, 2.5, 1.5, 0.3), (1, 4.0, 2.0, 0.7),
                                         (3, 7.3, 3.1, 0.25), (6, 12.5, 5.5, 0.9)])
def test_hyp2f1_terminating_matches_mpmath(n, b, c, s):
    expected = float(mpmath.hyp2f1(-n, b, c, s))
    assert hyp2f1_terminating(n, b, c, s) == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_hyp2f1_terminating_array():
    s = np.linspace(0.0, 1.0, 5)
    values = hyp2f1_terminating(2, 3.0, 2.0, s)
    assert values.shape == (5,)
    assert values[0] == 1.0


@pytest.mark.parametrize("c", [0.0, -2.0])
def test_hyp2f1_undefined(c):
    with pytest.raises(exc.DomainError):
        hyp2f1_terminating(3, 1.0, c, 0.5)


def test_hyp2f1_negative_degree():
    with pytest.raises(exc.DomainError):
        hyp2f1_terminating(-1, 1.0, 2.0, 0.5)


@pytest.mark.parametrize("n, a, b", [(0, 0.5, 1.5), (1, 2.0, 3.5), (4, 3.2, 1.1),
                                      (7, 0.0, 0.0)])
def test_jacobi_matches_scipy(n, a, b):
    x = np.linspace(-1.0, 1.0, 11)
    assert np.allclose(jacobi_p(n, a, b, x), special.eval_jacobi(n, a, b, x),
                       rtol=1e-12, atol=1e-12)


def test_jacobi_hypergeometric_link():
    # P_n^(a,b)(1 - 2s) = (a+1)_n / n! * 2F1(-n, n+a+b+1; a+1; s)
    n, a, b, s = 3, 4.2, 2.7, 0.35
    lhs = jacobi_p(n, a, b, 1.0 - 2.0 * s)
    rhs = pochhammer(a + 1.0, n) / math.factorial(n) * \
        hyp2f1_terminating(n, n + a + b + 1.0, a + 1.0, s)
    assert lhs == pytest.approx(rhs, rel=1e-12)


@pytest.mark.parametrize("n, alpha", [(0, 0.5), (1, 1.0), (3, 0.5), (5, 2.5)])
def test_gegenbauer_matches_scipy(n, alpha):
    t = np.linspace(-1.0, 1.0, 9)
    assert np.allclose(gegenbauer_c(n, alpha, t), special.eval_gegenbauer(n, alpha, t),
                       rtol=1e-12, atol=1e-12)


def test_gegenbauer_half_is_legendre():
    t = np.linspace(-1.0, 1.0, 7)
    assert np.allclose(gegenbauer_c(4, 0.5, t), special.eval_legendre(4, t))


def test_gegenbauer_domain():
    with pytest.raises(exc.DomainError):
        gegenbauer_c(2, -0.5, 0.3)


@pytest.mark.parametrize("n", range(6))
def test_jacobi_and_hypergeometric_forms_agree_for_bound_state(model, ground_p, n):
    # radial polynomial parameters of the f1 ground p state
    state = solve(model, make_f1(), ground_p)
    a, b = 2.0 * state.sqrtC, 2.0 * state.L1 - 1.0
    s = np.linspace(0.1, 0.9, 9)
    jacobi_form = math.factorial(n) * jacobi_p(n, a, b, 1.0 - 2.0 * s)
    hypergeometric_form = pochhammer(a + 1.0, n) * \
        hyp2f1_terminating(n, n + a + b + 1.0, a + 1.0, s)
    assert np.allclose(hypergeometric_form, jacobi_form, rtol=1e-10, atol=0.0)


@pytest.mark.parametrize("s", [0.9, 0.95, 0.99])
def test_hyp2f1_terminating_near_one(s):
    n, b, c = 5, 45.2, 36.9
    expected = float(mpmath.hyp2f1(-n, b, c, s))
    assert hyp2f1_terminating(n, b, c, s) == pytest.approx(expected, rel=1e-11)


def test_hyp2f1_terminating_mixed_array():
    s = np.array([0.2, 0.5, 0.8])
    values = hyp2f1_terminating(4, 9.5, 3.5, s)
    expected = [float(mpmath.hyp2f1(-4, 9.5, 3.5, x)) for x in s]
    assert values == pytest.approx(expected, rel=1e-12)
