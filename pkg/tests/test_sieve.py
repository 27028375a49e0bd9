"""Tables, pointwise evaluation and the exact rational identity."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import totsum.sieve as sv
from totsum.errors import CapacityError


@pytest.fixture(scope="module")
def t1000():
    return sv.build_spf(1000)


def test_build_spf_invariants(t1000):
    for k in range(2, 1001):
        p = int(t1000.spf[k])
        assert k % p == 0
        assert all(k % q for q in range(2, p))  # nothing smaller divides
        assert t1000.is_prime(k) == (p == k)


def test_build_spf_capacity():
    with pytest.raises(CapacityError):
        sv.build_spf(1)
    with pytest.raises(CapacityError):
        sv.build_spf(sv.MAX_SIEVE + 1)


def test_spf_table_immutable(t1000):
    with pytest.raises(ValueError):
        t1000.spf[10] = 3


def test_factorize_examples(t1000):
    assert sv.factorize(1, t1000).pairs == ()
    assert sv.factorize(12, t1000).pairs == ((2, 2), (3, 1))
    assert sv.factorize(97, t1000).pairs == ((97, 1),)
    with pytest.raises(ValueError):
        sv.factorize(0, t1000)
    with pytest.raises(ValueError):
        sv.factorize(1001, t1000)


@given(st.integers(min_value=1, max_value=1000))
@settings(max_examples=200)
def test_factorize_roundtrip(k):
    t = sv._cached_spf(1000)
    fac = sv.factorize(k, t)
    assert fac.value() == k
    primes = [p for p, _ in fac.pairs]
    assert primes == sorted(primes)
    assert len(set(primes)) == len(primes)


def test_evaluate_examples(t1000):
    assert sv.evaluate(sv.EULER_PHI, 10, t1000) == 4
    assert sv.evaluate(sv.jordan_kind(2), 6, t1000) == 24  # 36 (1-1/4)(1-1/9)
    assert sv.evaluate(sv.MOBIUS, 12, t1000) == 0
    assert sv.evaluate(sv.DIVISOR_SIGMA, 6, t1000) == 12
    for kind in (sv.EULER_PHI, sv.jordan_kind(3), sv.MOBIUS, sv.MOBIUS_SQUARED, sv.DIVISOR_SIGMA):
        assert sv.evaluate(kind, 1, t1000) == 1


def test_evaluate_jordan_equals_phi(t1000):
    for k in range(1, 1001):
        assert sv.evaluate(sv.jordan_kind(1), k, t1000) == sv.evaluate(sv.EULER_PHI, k, t1000)


@given(
    st.integers(min_value=1, max_value=120),
    st.integers(min_value=1, max_value=120),
)
@settings(max_examples=200)
def test_multiplicative_on_coprime_pairs(m, n):
    if math.gcd(m, n) != 1:
        return
    t = sv._cached_spf(14400)
    for kind in (sv.EULER_PHI, sv.jordan_kind(2), sv.MOBIUS, sv.DIVISOR_SIGMA):
        assert sv.evaluate(kind, m * n, t) == sv.evaluate(kind, m, t) * sv.evaluate(kind, n, t)


def test_table_examples():
    assert list(sv.table(sv.EULER_PHI, 10)[1:]) == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]
    assert list(sv.table(sv.MOBIUS_SQUARED, 8)[1:]) == [1, 1, 1, 0, 1, 1, 1, 0]
    assert list(sv.table(sv.DIVISOR_SIGMA, 6)[1:]) == [1, 3, 4, 7, 6, 12]
    assert list(sv.table(sv.EULER_PHI, 1)) == [0, 1]


def test_table_matches_pointwise(t1000):
    for kind in (sv.EULER_PHI, sv.jordan_kind(3), sv.MOBIUS, sv.DIVISOR_SIGMA):
        tab = sv.table(kind, 1000)
        for k in (1, 2, 17, 64, 97, 360, 720, 1000):
            assert int(tab[k]) == sv.evaluate(kind, k, t1000)


def test_jordan_table_equals_phi_table():
    n = 10**4
    assert np.array_equal(sv.table(sv.jordan_kind(1), n), sv.table(sv.EULER_PHI, n))


def test_jordan_bigint_path():
    # 600**7 exceeds 64 bits, so this exercises the exact-integer sieve
    assert 600**7 >= 2**63
    tab = sv.table(sv.jordan_kind(7), 600)
    assert tab.dtype == object
    t = sv.build_spf(600)
    for k in (1, 2, 3, 64, 97, 599, 600):
        assert tab[k] == sv.evaluate(sv.jordan_kind(7), k, t)


def test_jordan_capacity_refusal():
    with pytest.raises(CapacityError):
        sv.table(sv.jordan_kind(40), 10**4)  # (1e4)**40 >> 2**127


def test_function_kind_validation():
    with pytest.raises(ValueError):
        sv.FunctionKind("nope")
    with pytest.raises(ValueError):
        sv.jordan_kind(0)
    with pytest.raises(ValueError):
        sv.FunctionKind("phi", 2)


def test_divisor_sum_identity_examples(t1000):
    assert sv.divisor_sum_identity(1, t1000) == (Fraction(1), Fraction(1))
    lhs, rhs = sv.divisor_sum_identity(6, t1000)
    # divisors 1, 2, 3, 6 give 1 + 1 + 1/2 + 1/2 = 3 = 6/phi(6)
    assert lhs == rhs == Fraction(3)
    lhs, rhs = sv.divisor_sum_identity(12, t1000)
    assert lhs == rhs == Fraction(3)


def test_divisor_sum_identity_exhaustive(t1000):
    for k in range(1, 1001):
        lhs, rhs = sv.divisor_sum_identity(k, t1000)
        assert lhs == rhs, k


def test_spf_dump_roundtrip(tmp_path):
    t = sv.build_spf(5000)
    path = tmp_path / "table.spft"
    sv.save_spf(t, str(path))
    loaded = sv.load_spf(str(path))
    assert loaded.limit == 5000
    assert np.array_equal(loaded.spf, t.spf)


def test_spf_dump_rejects_corruption(tmp_path):
    t = sv.build_spf(5000)
    path = tmp_path / "table.spft"
    sv.save_spf(t, str(path))
    blob = bytearray(path.read_bytes())
    blob[16] ^= 0xFF  # corrupt spf[2], which the spot check always samples
    path.write_bytes(bytes(blob))
    with pytest.raises(ValueError):
        sv.load_spf(str(path))


def test_spf_dump_rejects_bad_magic_and_truncation(tmp_path):
    t = sv.build_spf(100)
    path = tmp_path / "table.spft"
    sv.save_spf(t, str(path))
    blob = path.read_bytes()
    bad = tmp_path / "bad.spft"
    bad.write_bytes(b"XXXX" + blob[4:])
    with pytest.raises(ValueError):
        sv.load_spf(str(bad))
    short = tmp_path / "short.spft"
    short.write_bytes(blob[:-8])
    with pytest.raises(ValueError):
        sv.load_spf(str(short))
