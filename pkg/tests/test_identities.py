"""Pointwise identity sweeps at reduced scale (full scale runs in acceptance)."""

import totsum.identities as idn


def test_sqrt_floor_exceptions_small():
    assert idn.sqrt_floor_exceptions(10**4) == [2, 6]


def test_sqrt2_floor():
    assert idn.sqrt2_floor_violations(10**4) == 0


def test_phi_sigma_band():
    assert idn.phi_sigma_band_violations(10**4) == 0


def test_robin_sigma_bound():
    # k = 12 is the attainment point; the rounded-up sharp constant keeps it strict
    assert idn.robin_sigma_violations(10**4) == 0


def test_totient_ratio_bound():
    assert idn.totient_ratio_violations(10**4) == 0


def test_divisor_ratio_sum_exact():
    assert idn.divisor_ratio_sum_violations(2000) == 0


def test_jordan_divisor_form():
    assert idn.jordan_divisor_form_violations(2000) == 0


def test_multiplicativity():
    assert idn.multiplicativity_violations(2000) == 0


def test_jordan_phi_power():
    assert idn.jordan_phi_power_violations(2000) == 0
