"""Zeta machinery and Euler products against independent oracles."""

import math

import mpmath as mp
import numpy as np
import pytest

import totsum.special as sp

mp.mp.dps = 30


def test_zeta_closed_forms():
    assert sp.zeta(2.0) == pytest.approx(math.pi**2 / 6.0, abs=1e-12)
    assert sp.zeta(4.0) == pytest.approx(math.pi**4 / 90.0, abs=1e-12)


@pytest.mark.parametrize("s", [1.3, 1.5, 1.7, 2.0, 2.5, 3.0, 5.0, 10.0])
def test_zeta_against_mpmath(s):
    assert sp.zeta(s) == pytest.approx(float(mp.zeta(s)), abs=1e-12)


def test_zeta_sqrt2_combinations():
    assert math.sqrt(2.0) * sp.zeta(1.5) == pytest.approx(3.694, abs=1e-3)
    assert math.sqrt(2.0) * sp.zeta(2.5) == pytest.approx(1.897, abs=1e-3)


def test_zeta_monotone_decreasing():
    grid = [1.2, 1.4, 1.8, 2.0, 2.7, 3.5, 6.0, 12.0]
    values = [sp.zeta(s) for s in grid]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_zeta_domain_errors():
    for s in (1.0, 0.5, -2.0, 1.0 + 1e-7):
        with pytest.raises(ValueError):
            sp.zeta(s)


def test_zeta_deriv_order_zero_matches_zeta():
    for s in (1.2, 1.5, 2.0, 3.0, 7.0):
        assert sp.zeta_deriv(0, s) == pytest.approx(sp.zeta(s), abs=1e-12)


def test_zeta_deriv_known_value():
    # reference value of the slope at s = 2 (printed as -0.937548)
    assert sp.zeta_deriv(1, 2.0) == pytest.approx(-0.937548, abs=1e-6)
    assert sp.zeta_deriv(1, 2.0) == pytest.approx(float(mp.zeta(2, derivative=1)), abs=1e-12)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("s", [1.5, 2.0, 3.0])
def test_zeta_deriv_against_mpmath(r, s):
    assert sp.zeta_deriv(r, s) == pytest.approx(float(mp.zeta(s, derivative=r)), abs=1e-9)


@pytest.mark.parametrize("s", [1.7, 2.0, 2.5, 3.0])
def test_zeta_deriv_matches_finite_difference(s):
    h = 1e-5
    fd = (sp.zeta(s + h) - sp.zeta(s - h)) / (2.0 * h)
    assert sp.zeta_deriv(1, s) == pytest.approx(fd, abs=1e-6)


@pytest.mark.parametrize("s", [1.5, 2.0, 3.0])
def test_zeta_deriv_sign_alternates(s):
    for r in range(5):
        assert (-1.0) ** r * sp.zeta_deriv(r, s) > 0.0


def test_zeta_deriv_domain_errors():
    with pytest.raises(ValueError):
        sp.zeta_deriv(9, 2.0)
    with pytest.raises(ValueError):
        sp.zeta_deriv(-1, 2.0)
    with pytest.raises(ValueError):
        sp.zeta_deriv(1, 1.0005)


def test_zeta_prime2_glaisher_routes():
    closed = sp.zeta_prime2_glaisher()
    series = sp.zeta_deriv(1, 2.0)
    assert closed == pytest.approx(-0.937548, abs=1e-6)
    assert abs(closed - series) < 1e-5
    assert closed < 0.0


def test_constants():
    assert 1.0045 < sp.BETA < 1.0046
    assert abs(sp.ETA - 2.8651) < 5e-4
    # eta is derived, not pinned
    assert sp.ETA == pytest.approx(
        sp.ROBIN_D * math.exp(-sp.EULER_GAMMA) / math.log(math.log(3.0)) - sp.BETA, abs=0
    )
    assert f"{sp.GLAISHER:.6f}".startswith("1.282427")
    assert sp.CONSTANTS.eta == sp.ETA
    assert sp.ROBIN_D < sp.ROBIN_D_SHARP < sp.ROBIN_D + 1e-3


def test_d_infinity_values():
    assert sp.d_infinity(-1, 2.0) == pytest.approx(sp.zeta(2.5), abs=1e-14)
    assert sp.d_infinity(-1, 2.0) == pytest.approx(1.3415, abs=1e-4)
    assert sp.d_infinity(-1, 1.0) == pytest.approx(2.6124, abs=1e-4)
    assert sp.d_infinity(-2, 2.0) == pytest.approx(sp.zeta(2.5) * sp.zeta(3.0), abs=1e-12)
    assert sp.d_infinity(-3, 1.0) > 1.0


def test_d_infinity_domain():
    with pytest.raises(ValueError):
        sp.d_infinity(-1, 0.5)
    with pytest.raises(ValueError):
        sp.d_infinity(0, 2.0)


def test_primes_up_to():
    assert list(sp.primes_up_to(30)) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert sp.primes_up_to(1).size == 0


def test_euler_product_g():
    value, tail = sp.euler_product(sp.named_product("g"), 10**6)
    assert value == pytest.approx(1.3398, abs=1e-4)
    assert tail < 1e-5
    # true product within the certified bracket of an independent evaluation
    ref = 1.339784153730  # direct high-precision partial product oracle
    assert value * math.exp(-tail) <= ref <= value * math.exp(tail)


def test_euler_product_identity_factor():
    spec = sp.EulerProductSpec("one", lambda p: np.ones_like(p), decay_alpha=2.0, c=0.0)
    assert sp.euler_product(spec, 10**4) == (1.0, 0.0)


def test_euler_product_monotone_and_tail_decay():
    g = sp.named_product("g")
    v1, t1 = sp.euler_product(g, 10**4)
    v2, t2 = sp.euler_product(g, 2 * 10**4)
    v3, t3 = sp.euler_product(g, 4 * 10**4)
    assert v1 < v2 < v3  # all local factors exceed 1
    # decay alpha = 2 so doubling the cutoff should at least halve the tail
    assert t2 <= t1 * 2.0 ** (1.0 - g.decay_alpha) * 1.01
    assert t3 <= t2 * 2.0 ** (1.0 - g.decay_alpha) * 1.01


def test_euler_product_rejects_bad_factor():
    spec = sp.EulerProductSpec("bad", lambda p: 1.0 - p / (p + 1) * 2, decay_alpha=2.0, c=1.0)
    with pytest.raises(ValueError):
        sp.euler_product(spec, 10**3)
    with pytest.raises(ValueError):
        sp.euler_product(sp.named_product("g"), 100)


def test_named_product_family():
    inv_zeta2, _ = sp.euler_product(sp.named_product("A(-v,v)", v=1), 10**6)
    assert inv_zeta2 == pytest.approx(1.0 / sp.zeta(2.0), abs=1e-6)

    a22, _ = sp.euler_product(sp.named_product("A(-v,v)", v=2), 10**6)
    assert a22 < 1.0 / sp.zeta(3.0)

    a02, _ = sp.euler_product(sp.named_product("A(0,2)"), 10**6)
    assert a02 == pytest.approx(a22, abs=1e-12)  # same local factors
    assert a02 / 3.0 < 1.0 / (3.0 * sp.zeta(3.0))

    c22, _ = sp.euler_product(sp.named_product("C(-v-s,v)", v=2, s=2.0), 10**6)
    assert sp.zeta(2.0) * c22 < sp.zeta(2.0) / sp.zeta(4.0)

    with pytest.raises(ValueError):
        sp.named_product("nonsense")
    with pytest.raises(ValueError):
        sp.named_product("A(-v,v)")
    with pytest.raises(ValueError):
        sp.named_product("C(-v-s,v)", v=2, s=0.5)
