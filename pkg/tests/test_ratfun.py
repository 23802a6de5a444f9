from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cellint.ratfun import (
    DiffForm, DivisorPartition, MPoly, RatFun, all_partitions, alternating_partition,
    build_alpha, build_f, build_omega, divisor_order, divisor_sweep, exactness_check,
    exterior_derivative, lambda_partition, random_monomial_form, telescoping_check,
)


def x(n, i):
    return MPoly.var(n, i)


def test_poly_arithmetic():
    a, b = x(2, 0), x(2, 1)
    p = (a + b) ** 2
    assert p == a * a + 2 * a * b + b * b
    assert p.diff(0) == 2 * a + 2 * b
    assert p((Fraction(1), Fraction(2))) == 9
    assert (p - p).is_zero()


def test_ratfun_equality_by_cross_multiplication():
    a, b = x(2, 0), x(2, 1)
    assert RatFun(a * b, b * b) == RatFun(a, b)
    r = RatFun(MPoly.const(2), 1 - a * b)
    assert r.diff(0) == RatFun(b, (1 - a * b) ** 2)
    assert (r + r) / r == RatFun.const(2, 2)


poly2 = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(-3, 3), max_size=3) \
    .map(lambda t: MPoly(2, t))


@settings(max_examples=50, deadline=None)
@given(poly2, poly2, poly2)
def test_poly_ring_laws(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q).diff(1) == p.diff(1) * q + p * q.diff(1)


def test_d_of_simple_form():
    phi = DiffForm(2, 1, {(1,): RatFun(x(2, 0))})
    assert exterior_derivative(phi) == DiffForm(2, 2, {(0, 1): RatFun.const(2)})
    psi = DiffForm(2, 1, {(0,): RatFun(x(2, 1))})
    assert exterior_derivative(psi) == DiffForm(2, 2, {(0, 1): RatFun.const(2, -1)})


def test_builders():
    assert len(build_alpha(2).comps) == 2
    assert build_omega(2).comps[(0, 1)] == RatFun(MPoly.const(2), 1 - x(2, 0) * x(2, 1))
    f5 = build_f(5)
    assert f5 == (1 - x(5, 0) * x(5, 1)) * (1 - x(5, 1) * x(5, 2)) * (1 - x(5, 2) * x(5, 3)) * (1 - x(5, 3) * x(5, 4))


@pytest.mark.parametrize("l", [2, 3, 4, 5, 6, 7])
def test_exactness(l):
    assert exactness_check(l)
    d = exterior_derivative(build_alpha(l))
    assert d.is_zero() == (l % 2 == 0)


@pytest.mark.parametrize("l", range(2, 8))
def test_telescoping(l):
    assert telescoping_check(l)


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_dd_is_zero(n, seed):
    phi = random_monomial_form(n, n - 2, seed=seed)
    assert exterior_derivative(exterior_derivative(phi)).is_zero()


def test_partition_validation():
    with pytest.raises(ValueError):
        DivisorPartition({1}, n=5)
    with pytest.raises(ValueError):
        DivisorPartition({1, 2}, {2, 3, 4})
    assert DivisorPartition({3, 4}, n=5) == DivisorPartition({1, 2, 5}, n=5)
    with pytest.raises(ValueError):
        divisor_order(DivisorPartition({1, 2}, n=5), 3)


def test_partition_counts():
    for n in range(5, 9):
        assert len(all_partitions(n)) == 2 ** (n - 1) - 1 - n


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_divisor_sweep(n):
    r = divisor_sweep(n)
    if n % 2:
        assert r["min_order"] == -1
    else:
        assert r["min_order"] == -2 and r["unique_alternating"]


def test_alternating_double_pole():
    for l in (3, 5, 7):
        assert divisor_order(alternating_partition(l), l) == -2


def test_lambda_labels():
    # labels {0, 2, ..., l+1} land on the alternating partition; dropping 0 leaves a simple pole
    for l in (3, 5, 7):
        assert lambda_partition(range(0, l + 2, 2), l) == alternating_partition(l)
        assert divisor_order(lambda_partition(range(2, l + 2, 2), l), l) == -1


def test_even_l_at_most_simple_poles():
    for p in all_partitions(5):
        assert divisor_order(p, 2) >= -1


def test_maximum_order_at_six_points():
    # the pairs (i, i+2) on six points form two triangles, so some pair always shares a part
    assert max(divisor_order(p, 3) for p in all_partitions(6)) == 0
