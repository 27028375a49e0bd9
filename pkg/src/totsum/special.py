"""Zeta evaluation, Euler products over primes, and named constants.

zeta(s) and its derivatives are computed for real s > 1 by a truncated
direct sum plus Euler-Maclaurin tail corrections; the first omitted
correction is carried as an error gauge and drives adaptive truncation.
Euler products are evaluated by compensated log-summation with a
rigorous (prime-thinning-free) tail bound from the decay exponent of
the local factors.

All long accumulations go through the compensated-summation kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from ._backend import kernels

EULER_GAMMA = 0.5772156649015329
# Glaisher-Kinkelin constant to 15 digits; the consistency check between
# the two zeta'(2) routes needs more digits than the usual 1.282427.
GLAISHER = 1.28242712910062
ROBIN_D = 0.6482
# Sharp constant of the divisor-ratio inequality, attained at k = 12:
# (7/3 - e^gamma ln ln 12) ln ln 12 = 0.6482136494...  The 4-digit
# truncation above (used in the eta definition) fails at k = 12 itself
# by 1.5e-5, so pointwise sweeps must use this value, rounded up.
ROBIN_D_SHARP = 0.64821365
ROSSER_CONST = 2.50637
_LOG_LOG_3 = math.log(math.log(3.0))
BETA = math.log(3.0) - _LOG_LOG_3
# eta is computed from its definition, never hard-coded; the rounded
# 2.8651 is kept only as a comparison value for threshold reproduction.
ETA = ROBIN_D * math.exp(-EULER_GAMMA) / _LOG_LOG_3 - BETA
ETA_ROUNDED = 2.8651
# Analogue of eta for the Rosser-Schoenfeld totient inequality
# k/phi(k) < e^gamma ln ln k + 2.50637/ln ln k, linearized the same way.
ETA_ROSSER = ROSSER_CONST * math.exp(-EULER_GAMMA) / _LOG_LOG_3 - BETA


@dataclass(frozen=True)
class Constants:
    euler_gamma: float = EULER_GAMMA
    glaisher: float = GLAISHER
    robin_D: float = ROBIN_D
    rosser_const: float = ROSSER_CONST
    beta: float = BETA
    eta: float = ETA


CONSTANTS = Constants()

_prime_cache: dict[int, np.ndarray] = {}


def primes_up_to(limit: int) -> np.ndarray:
    """Ascending int64 array of all primes <= limit (cached per limit)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    cached = _prime_cache.get(limit)
    if cached is None:
        mask = np.ones(limit + 1, dtype=bool)
        mask[:2] = False
        for p in range(2, math.isqrt(limit) + 1):
            if mask[p]:
                mask[p * p :: p] = False
        cached = np.flatnonzero(mask).astype(np.int64)
        cached.flags.writeable = False
        _prime_cache[limit] = cached
    return cached


_ZETA_M = 100_000


@lru_cache(maxsize=256)
def zeta(s: float) -> float:
    """Riemann zeta for real s > 1.

    Direct sum over k < M plus the Euler-Maclaurin tail
    M^(1-s)/(s-1) + M^(-s)/2 + s*M^(-s-1)/12; the next-order term
    s(s+1)(s+2) M^(-s-3)/720 is the error gauge and stays far below
    1e-12 for every s this package evaluates.
    """
    s = float(s)
    if not s > 1.0 + 1e-6:
        raise ValueError(f"zeta requires s > 1 + 1e-6, got {s}")
    m = _ZETA_M
    k = np.arange(1, m, dtype=np.float64)
    head = kernels.neumaier_sum(k**-s)
    tail = m ** (1.0 - s) / (s - 1.0) + 0.5 * m**-s + s * m ** (-s - 1.0) / 12.0
    return float(head + tail)


def _shift_poly(coeffs: list[float], a: float) -> list[float]:
    """Given f = x^(-a) Q(ln x), return Q* with f' = x^(-a-1) Q*(ln x)."""
    out = [0.0] * len(coeffs)
    for i, c in enumerate(coeffs):
        out[i] -= a * c
        if i > 0:
            out[i - 1] += i * c
    return out


def _poly_at(coeffs: list[float], x: float) -> float:
    out = 0.0
    for c in reversed(coeffs):
        out = out * x + c
    return out


def _log_power_integral(r: int, s: float, m: float) -> float:
    """Closed form of the tail integral of (ln x)^r x^(-s) from m to infinity.

    I_r = (ln m)^r m^(1-s)/(s-1) + (r/(s-1)) I_{r-1}.
    """
    lm = math.log(m)
    acc = m ** (1.0 - s) / (s - 1.0)
    for i in range(1, r + 1):
        acc = lm**i * m ** (1.0 - s) / (s - 1.0) + (i / (s - 1.0)) * acc
    return acc


MAX_ZETA_DERIV = 8


def zeta_deriv(r: int, s: float) -> float:
    """r-th derivative of zeta at real s > 1: (-1)^r sum (ln k)^r / k^s.

    Direct sum over k < M, closed-form integral tail, half boundary term
    and the first Euler-Maclaurin correction; truncation M doubles until
    the next-order gauge drops below 1e-13, so the r = 0 case agrees
    with zeta() to well under 1e-12.
    """
    if not 0 <= r <= MAX_ZETA_DERIV:
        raise ValueError(f"derivative order must be 0..{MAX_ZETA_DERIV}, got {r}")
    s = float(s)
    if not s > 1.0 + 1e-3:
        raise ValueError(f"zeta_deriv requires s > 1 + 1e-3, got {s}")

    q0 = [0.0] * r + [1.0]  # Q with f = x^(-s) Q(ln x), Q = L^r
    q1 = _shift_poly(q0, s)
    q2 = _shift_poly(q1, s + 1.0)
    q3 = _shift_poly(q2, s + 2.0)

    m = _ZETA_M
    while True:
        lm = math.log(m)
        gauge = abs(_poly_at(q3, lm)) * m ** (-s - 3.0) / 720.0
        if gauge < 1e-13 or m >= 1_600_000:
            break
        m *= 2

    k = np.arange(1, m, dtype=np.float64)
    terms = np.log(k) ** r * k**-s if r else k**-s
    head = kernels.neumaier_sum(terms)
    lm = math.log(m)
    tail = (
        _log_power_integral(r, s, m)
        + 0.5 * lm**r * m**-s
        - _poly_at(q1, lm) * m ** (-s - 1.0) / 12.0
    )
    magnitude = head + tail
    return magnitude if r % 2 == 0 else -magnitude


def zeta_prime2_glaisher() -> float:
    """zeta'(2) through the closed form zeta(2)(gamma + ln 2pi - 12 ln A)."""
    return zeta(2.0) * (
        EULER_GAMMA + math.log(2.0 * math.pi) - 12.0 * math.log(GLAISHER)
    )


def d_infinity(v: int, s: float) -> float:
    """Product of |v| zeta values at s + 1/2, s + 1, ..., s + |v|/2."""
    if abs(v) < 1:
        raise ValueError("d_infinity needs |v| >= 1")
    s = float(s)
    if not s > 0.5 + 1e-6:
        raise ValueError(f"d_infinity requires s > 1/2, got {s}")
    out = 1.0
    for k in range(1, abs(v) + 1):
        out *= zeta(s + 0.5 * k)
    return out


@dataclass(frozen=True)
class EulerProductSpec:
    """A named product over primes of local factors f(p).

    ``local_factor`` must accept a float64 numpy array of primes and
    return the factors elementwise; ``|f(p) - 1| <= c * p**-decay_alpha``
    is the decay contract backing the tail bound.
    """

    name: str
    local_factor: Callable[[np.ndarray], np.ndarray]
    decay_alpha: float
    c: float


def euler_product(spec: EulerProductSpec, prime_limit: int) -> tuple[float, float]:
    """Product of local factors over p <= prime_limit, with a tail bound.

    Returns (value, tail_bound) where the true infinite product lies in
    [value*exp(-tail_bound), value*exp(tail_bound)].  The bound sums
    c*n^-alpha over all integers n > prime_limit (deliberately ignoring
    prime thinning, so it is conservative but hypothesis-free).
    """
    if prime_limit < 1000:
        raise ValueError("prime_limit must be at least 1000")
    p = primes_up_to(prime_limit).astype(np.float64)
    factors = np.asarray(spec.local_factor(p), dtype=np.float64)
    if factors.shape != p.shape:
        raise ValueError("local_factor must return one factor per prime")
    if not np.all(factors > 0.0):
        raise ValueError(f"non-positive local factor in product {spec.name!r}")
    log_sum = kernels.neumaier_sum(np.log(factors))
    value = float(math.exp(log_sum))

    alpha, c = spec.decay_alpha, spec.c
    if c == 0.0:
        return value, 0.0
    head_room = 1.0 - c * prime_limit**-alpha
    if head_room <= 0.0:
        raise ValueError("decay contract too weak at this prime_limit")
    tail = c * prime_limit ** (1.0 - alpha) / ((alpha - 1.0) * head_room)
    return value, float(tail)


def named_product(name: str, v: int | None = None, s: float | None = None) -> EulerProductSpec:
    """Catalog of the products this package needs.

    Scalar prefactors (1/3 for "A(0,2)", zeta(s) for "C(-v-s,v)") are
    applied by the caller, never baked into the local factors.
    """
    if name == "g":
        return EulerProductSpec(
            name="g",
            local_factor=lambda p: 1.0 + 1.0 / (p * p * (p - 1.0)),
            decay_alpha=2.0,
            c=1.0,
        )
    if name == "A(0,2)":
        return EulerProductSpec(
            name="A(0,2)",
            local_factor=lambda p: 1.0 - 2.0 / p**2 + 1.0 / p**3,
            decay_alpha=2.0,
            c=2.0,
        )
    if name == "A(-v,v)":
        if v is None or v < 1:
            raise ValueError('"A(-v,v)" needs an integer v >= 1')
        return EulerProductSpec(
            name=f"A(-{v},{v})",
            local_factor=lambda p: 1.0 - (1.0 - (1.0 - 1.0 / p) ** v) / p,
            decay_alpha=2.0,
            c=float(v),
        )
    if name == "C(-v-s,v)":
        if v is None or v < 1:
            raise ValueError('"C(-v-s,v)" needs an integer v >= 1')
        if s is None or not s > 1.0:
            raise ValueError('"C(-v-s,v)" needs s > 1')
        return EulerProductSpec(
            name=f"C(-{v}-{s},{v})",
            local_factor=lambda p: 1.0 - (1.0 - (1.0 - 1.0 / p) ** v) / p**s,
            decay_alpha=float(s) + 1.0,
            c=float(v),
        )
    raise ValueError(f"unknown product name {name!r}")
