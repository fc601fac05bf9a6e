"""Arithmetic helpers: palette bound, chain half-period, clique floor."""

import pytest
from hypothesis import given, strategies as st

from holedgraphs.coloring import (ceil_div, chi_bound, half_period,
                                  min_clique_threshold)

ODD_ELL = st.integers(min_value=3, max_value=51).map(lambda n: 2 * n + 1)


def test_ceil_div_basics():
    assert ceil_div(0, 5) == 0
    assert ceil_div(1, 5) == 1
    assert ceil_div(5, 5) == 1
    assert ceil_div(6, 5) == 2


def test_chi_bound_values():
    # ceil(ell*omega/(ell-1)) at hand-checked points.
    assert chi_bound(7, 6) == 7
    assert chi_bound(7, 12) == 14
    assert chi_bound(7, 2) == 3
    assert chi_bound(7, 4) == 5
    assert chi_bound(7, 1) == 2
    assert chi_bound(9, 40) == 45
    assert chi_bound(9, 2) == 3
    assert chi_bound(11, 10) == 11


def test_half_period_values():
    assert half_period(7) == 1
    assert half_period(9) == 2
    assert half_period(11) == 2
    assert half_period(13) == 3
    assert half_period(15) == 3


@given(ODD_ELL, st.integers(min_value=1, max_value=10_000))
def test_chi_bound_properties(ell, omega):
    bound = chi_bound(ell, omega)
    assert omega < bound or omega == 1 and bound >= 1
    assert (bound - 1) * (ell - 1) < ell * omega <= bound * (ell - 1) + omega
    # Exact ceiling identity.
    assert bound == -((-ell * omega) // (ell - 1))


@given(ODD_ELL, st.integers(min_value=1, max_value=10_000))
def test_chi_bound_monotone(ell, omega):
    assert chi_bound(ell, omega + 1) >= chi_bound(ell, omega)
    if ell >= 9:
        assert chi_bound(ell - 2, omega) >= chi_bound(ell, omega)


@given(ODD_ELL, st.integers(min_value=1, max_value=2_000))
def test_min_clique_threshold_within_range(ell, omega):
    t = half_period(ell) * ceil_div(omega, ell - 1)
    expect = t + 1 if 2 * t <= omega else (omega + 3) // 2
    assert min_clique_threshold(ell, omega) == expect
    assert 1 <= min_clique_threshold(ell, omega) <= omega + 1


@pytest.mark.parametrize("ell", [4, 5, 6, 2, 0, -7])
def test_odd_ell_required(ell):
    with pytest.raises(ValueError):
        chi_bound(ell, 3)
