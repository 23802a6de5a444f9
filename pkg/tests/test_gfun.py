import math

import numpy as np
import pytest

from cellint.gfun import (
    AlphaTable, a_coeff, a_coeff_xi, f_direct, f_numeric, g_formula, g_numeric, h_function,
    integral_g, tower_integral, xi_closure_check, XiPoly,
)
from cellint.hyperlog import eval_series
from cellint.psipoly import PsiPoly
from cellint.words import Word
from cellint.xi import xi_numeric, xi_symbolic

P = PsiPoly.psi
Z2 = math.pi ** 2 / 6


def test_g2_closed_form():
    for x in (0.2, 0.5, 0.8):
        assert abs(g_numeric(2, x).value + math.log1p(-x) / x) < 1e-10
    assert abs(g_numeric(2, 0.5).value - 2 * math.log(2)) < 1e-10


def test_g3_is_two_hyperlogs():
    v = eval_series([0, 1], 0.5).value + eval_series([1, 1], 0.5).value
    assert abs(g_numeric(3, 0.5).value - v) < 1e-8
    assert abs(g_formula(3, 0.5).value - v) < 1e-12


@pytest.mark.parametrize("l", [2, 3, 4, 5])
@pytest.mark.parametrize("x", [0.2, 0.5, 0.8])
def test_shape_of_g(l, x):
    a, b = g_numeric(l, x), g_formula(l, x)
    assert abs(a.value - b.value) < 1e-4


def test_g4_at_point_three():
    assert abs(g_numeric(4, 0.3).value - g_formula(4, 0.3).value) < 1e-5


def test_g_rejects_bad_x():
    with pytest.raises(ValueError):
        g_numeric(3, 1.0)
    with pytest.raises(ValueError):
        g_formula(3, 0.0)


def test_h_function_weight_one():
    assert abs(h_function(1, 0.4).value + math.log(0.6)) < 1e-14


@pytest.mark.parametrize("L", [2, 3, 4, 5])
def test_integral_of_g(L):
    sym, val = integral_g(L)
    q = tower_integral("G", L)
    assert abs(val.value - q.value) < 1e-4


def test_integral_of_g_symbolic():
    assert integral_g(2)[0] == P(2)
    assert integral_g(3)[0] == P(2)
    assert integral_g(4)[0] == P(4) + P(2) ** 2


def test_a_coefficients():
    x = XiPoly.symbol
    assert a_coeff_xi(4, 2) == a_coeff_xi(3, 1) == x(2)
    assert a_coeff_xi(5, 1) == x(4) - x(2) * x(2)
    assert a_coeff_xi(4, 4) == XiPoly.zero()
    with pytest.raises(ValueError):
        a_coeff_xi(5, 2)


def test_a_coefficient_equals_integral_of_g():
    for l in (2, 4, 6):
        assert a_coeff(l + 1, 1) == integral_g(l)[0]


@pytest.mark.parametrize("l", range(3, 11))
def test_a_coefficients_homogeneous(l):
    for k in range(l % 2 or 2, l - 1, 2):
        assert a_coeff(l, k).grades() == {l - k}
        assert all(j % 2 == 0 for mono in a_coeff_xi(l, k).terms for j in mono)


@pytest.mark.parametrize("l", range(1, 9))
def test_xi_recursion_closes(l):
    assert xi_closure_check(l)


def test_f3_display():
    for x in (0.3, 0.7):
        v = Z2 + eval_series([0, 1], x).value + eval_series([1, 1], x).value
        assert abs(f_direct(3, x).value - v) < 1e-7
        assert abs(f_numeric(3, x).value - v) < 1e-7


@pytest.mark.parametrize("l", [3, 4, 5])
def test_f_decomposition_matches_direct(l):
    for x in (0.25, 0.75):
        assert abs(f_numeric(l, x).value - f_direct(l, x).value) < 1e-6


@pytest.mark.parametrize("l", [2, 3, 4, 5, 6])
def test_f_integral_is_xi(l):
    assert abs(tower_integral("F", l).value - xi_numeric(l).value) < 1e-6


def test_alpha_base_and_first_step():
    t = AlphaTable(3)
    assert t.get(2, "1").terms == {(): 1}
    assert t.get(2, "0").is_zero()
    assert t.get(3, "01").terms == {(): 1}
    assert t.get(3, "11").terms == {(): 1}
    assert t.get(3, "1").is_zero()


def test_alpha_collapse():
    rep = AlphaTable(9).collapse_report()
    assert rep["zero_off_admissible"]
    assert rep["constant_on_weight_classes"]
    assert rep["equals_beta"]
