"""Summatory sums against a naive per-k oracle, plus regime machinery."""

import math
from fractions import Fraction

import numpy as np
import pytest

import totsum.special as sp
import totsum.engine as eng
from totsum.engine import ExponentPair, Regime, SummandKind


def naive_phi(k: int) -> int:
    out, m = k, k
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


def naive_summatory(u: Fraction, v: int, n: int) -> float:
    # independent route: trial-division phi and exact fsum accumulation
    terms = []
    for k in range(1, n + 1):
        terms.append(float(k) ** float(u) * float(naive_phi(k)) ** v)
    return math.fsum(terms)


def test_classify_examples():
    assert eng.classify(ExponentPair(Fraction(0), 1)) is Regime.POLYNOMIAL
    assert eng.classify(ExponentPair(Fraction(-2), 1)) is Regime.LOGARITHMIC
    assert eng.classify(ExponentPair(Fraction(-1), -1)) is Regime.CONVERGENT


def test_classify_is_exact_on_the_boundary():
    # u = 1/3 + 2/3 - 3 = -2 exactly, so u + v + 1 = 0; float u would drift
    e = ExponentPair(Fraction(1, 3) + Fraction(2, 3) - 3, 1)
    assert eng.classify(e) is Regime.LOGARITHMIC


def test_parse_exact_decimal():
    e = ExponentPair.parse("-1.5", -1)
    assert e.u == Fraction(-3, 2)
    assert e.u_str() == "-1.5"
    assert ExponentPair(Fraction(0), 1).u_str() == "0"
    assert ExponentPair(Fraction(1, 3), 1).u_str() == "1/3"
    assert ExponentPair(Fraction(-1, 40), 1).u_str() == "-0.025"
    with pytest.raises(TypeError):
        ExponentPair.parse(1.5, 1)


def test_summatory_examples():
    assert eng.summatory(SummandKind.PHI, ExponentPair(Fraction(0), 1), 10) == 32.0
    assert eng.summatory(SummandKind.PHI, ExponentPair(Fraction(0), 0), 7) == 7.0
    assert eng.summatory(SummandKind.JORDAN, ExponentPair(Fraction(0), 1), 10) == 32.0


@pytest.mark.parametrize("u", [Fraction(-3), Fraction(-3, 2), Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)])
@pytest.mark.parametrize("v", [-3, -2, -1, 0, 1, 2, 3])
def test_oracle_equivalence(u, v):
    n = 1000
    got = eng.summatory(SummandKind.PHI, ExponentPair(u, v), n)
    want = naive_summatory(u, v, n)
    eps = np.finfo(np.float64).eps
    assert abs(got - want) <= 10 * eps * abs(want), (u, v)


def test_jordan_order_guard():
    with pytest.raises(ValueError):
        eng.summatory(SummandKind.JORDAN, ExponentPair(Fraction(0), -1), 10)
    with pytest.raises(ValueError):
        eng.summatory(SummandKind.PHI, ExponentPair(Fraction(0), 1), 0)


def test_summatory_overflow_raises():
    with pytest.raises(OverflowError):
        eng.summatory(SummandKind.PHI, ExponentPair(Fraction(200), 0), 10**4)


def test_normalized_constant_family():
    # v = 0 sanity anchors of the three regimes
    assert eng.normalized(SummandKind.PHI, ExponentPair(Fraction(0), 0), 10**5) == pytest.approx(1.0, abs=1e-12)
    got = eng.normalized(SummandKind.PHI, ExponentPair(Fraction(-1), 0), 10**6)
    assert got == pytest.approx(1.0, abs=0.05)  # harmonic sum over ln N
    got = eng.normalized(SummandKind.PHI, ExponentPair(Fraction(-3), 0), 10**6)
    assert got == pytest.approx(sp.zeta(3.0), abs=1e-3)


def test_ladder_validation():
    e = ExponentPair(Fraction(1), -1)
    with pytest.raises(ValueError):
        eng.ladder_estimate(SummandKind.PHI, e, [10, 100, 1000])
    with pytest.raises(ValueError):
        eng.ladder_estimate(SummandKind.PHI, e, [10, 100, 50, 1000])
    with pytest.raises(ValueError):
        eng.default_ladder(20000)


def test_ladder_reciprocal_totient_constant():
    est = eng.ladder_estimate(SummandKind.PHI, ExponentPair(Fraction(1), -1), eng.default_ladder(10**6))
    assert est.regime is Regime.POLYNOMIAL
    assert est.limit_estimate == pytest.approx(1.9436, rel=1e-3)
    assert est.error_gauge < 1e-3


def test_ladder_logarithmic_slope():
    est = eng.ladder_estimate(SummandKind.PHI, ExponentPair(Fraction(0), -1), eng.default_ladder(10**6))
    assert est.regime is Regime.LOGARITHMIC
    ratio = sp.zeta(2.0) * sp.zeta(3.0) / sp.zeta(6.0)
    assert est.limit_estimate == pytest.approx(ratio, abs=5e-3)


def test_ladder_convergent_monotone():
    est = eng.ladder_estimate(SummandKind.PHI, ExponentPair(Fraction(-1), -1), eng.default_ladder(10**6))
    assert est.regime is Regime.CONVERGENT
    values = [p.normalized for p in est.ladder]
    assert all(b >= a for a, b in zip(values, values[1:]))  # positive summands
    assert est.limit_estimate == pytest.approx(2.2039, abs=1e-3)


def brute_dn(v: int, s: float, n: int) -> float:
    """Flat loops over explicit tuples, no recursion, as an oracle."""

    def mu2(k):
        out = 1
        p = 2
        m = k
        while p * p <= m:
            if m % p == 0:
                m //= p
                if m % p == 0:
                    return 0
            p += 1
        return 1

    total = 0.0
    if v == -1:
        for k1 in range(1, n + 1):
            if mu2(k1):
                total += k1**-s / naive_phi(k1)
    elif v == -2:
        for k1 in range(1, n + 1):
            for k2 in range(1, n // k1 + 1):
                if mu2(k1) and mu2(k1 * k2):
                    total += k1**-s / naive_phi(k1) * k2**-s / naive_phi(k1 * k2)
    else:
        for k1 in range(1, n + 1):
            for k2 in range(1, n // k1 + 1):
                for k3 in range(1, n // (k1 * k2) + 1):
                    if mu2(k1) and mu2(k1 * k2) and mu2(k1 * k2 * k3):
                        total += (
                            k1**-s / naive_phi(k1)
                            * k2**-s / naive_phi(k1 * k2)
                            * k3**-s / naive_phi(k1 * k2 * k3)
                        )
    return total


def test_dn_hand_values():
    assert eng.dn_multiple_sum(-1, 2.0, 1) == 1.0
    # 1 + 2^-2 (1/1) + 3^-2 (1/2) = 47/36
    assert eng.dn_multiple_sum(-1, 2.0, 3) == pytest.approx(47.0 / 36.0, abs=1e-15)


@pytest.mark.parametrize("v", [-1, -2, -3])
@pytest.mark.parametrize("s", [1.0, 2.0])
def test_dn_matches_brute_force(v, s):
    assert eng.dn_multiple_sum(v, s, 30) == pytest.approx(brute_dn(v, s, 30), rel=1e-13)


def test_dn_guards():
    with pytest.raises(ValueError):
        eng.dn_multiple_sum(-4, 2.0, 10)
    with pytest.raises(ValueError):
        eng.dn_multiple_sum(-1, 2.0, 2001)


def test_e_m_hand_value():
    # two-term correction at (u, v) = (-1, -1): k = 1 and k = 2
    eta = 2.8651
    c = math.exp(sp.EULER_GAMMA) * sp.zeta(2.0)
    want = (1.0 - c * eta) + (0.5 - c * (eta + math.log(2.0)) / 4.0)
    got = eng.e_m(ExponentPair(Fraction(-1), -1), 3, eta=eta)
    assert got == pytest.approx(want, abs=1e-12)
    assert got == pytest.approx(-9.50, abs=1e-2)


def test_e_m_terms_negative_so_decreasing():
    e = ExponentPair(Fraction(-1), -1)
    previous = eng.e_m(e, 3)
    for m in range(4, 202):
        current = eng.e_m(e, m)
        assert current < previous, m
        previous = current


def test_e_m_eta_sensitivity():
    e = ExponentPair(Fraction(-1), -1)
    assert abs(eng.e_m(e, 3) - eng.e_m(e, 3, eta=2.8651)) < 3e-3


def test_e_m_guards():
    with pytest.raises(ValueError):
        eng.e_m(ExponentPair(Fraction(-1), 1), 3)
    with pytest.raises(ValueError):
        eng.e_m(ExponentPair(Fraction(0), -1), 3)
    with pytest.raises(ValueError):
        eng.e_m(ExponentPair(Fraction(-1), -1), 2)


def test_threads_are_deterministic_and_consistent():
    e = ExponentPair(Fraction(1, 2), -1)
    single = eng.summatory(SummandKind.PHI, e, 10**5)
    quad_a = eng.summatory(SummandKind.PHI, e, 10**5, threads=4)
    quad_b = eng.summatory(SummandKind.PHI, e, 10**5, threads=4)
    assert quad_a == quad_b
    assert quad_a == pytest.approx(single, rel=1e-13)
