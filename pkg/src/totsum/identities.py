"""Desk-scale verification of the pointwise arithmetic-function identities.

Each checker returns a violation count (or the exact exception set) over
an exhaustive range, vectorized where the check is float-safe and exact
(integer or rational) where the identity is exact.  These back both the
``reproduce`` command and the acceptance suite.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import sieve
from .special import EULER_GAMMA, ROBIN_D_SHARP, ROSSER_CONST, zeta


def sqrt_floor_exceptions(n: int) -> list[int]:
    """All k <= n with phi(k) < sqrt(k), via the exact test phi^2 < k."""
    phi = sieve.table(sieve.EULER_PHI, n)
    k = np.arange(n + 1, dtype=np.int64)
    bad = np.flatnonzero(phi * phi < k)
    return [int(x) for x in bad if x >= 1]


def sqrt2_floor_violations(n: int) -> int:
    """Count of k <= n violating 2 phi(k)^2 >= k."""
    phi = sieve.table(sieve.EULER_PHI, n)
    k = np.arange(n + 1, dtype=np.int64)
    return int(np.count_nonzero((2 * phi * phi < k)[1:]))

def phi_sigma_band_violations(n: int) -> int:
    """Count of k <= n violating k^2/zeta(2) < phi sigma <= k^2
    (the right inequality strict for k >= 2)."""
    phi = sieve.table(sieve.EULER_PHI, n)
    sig = sieve.table(sieve.DIVISOR_SIGMA, n)
    k = np.arange(n + 1, dtype=np.int64)
    prod = phi * sig  # <= k^2 <= 1e16 at desk scale, exact in int64
    ksq = k * k
    upper_bad = np.count_nonzero((prod > ksq)[1:]) + np.count_nonzero(
        (prod == ksq)[2:]
    )
    lower_bad = np.count_nonzero(
        prod[1:].astype(np.float64) * zeta(2.0) <= ksq[1:].astype(np.float64)
    )
    return int(upper_bad + lower_bad)


def robin_sigma_violations(n: int) -> int:
    """Count of 3 <= k <= n violating sigma/k < e^gamma ln ln k + D/ln ln k.

    Uses the sharp constant (attained at k = 12) rounded up in its last
    digit; the popular 4-digit truncation 0.6482 fails at k = 12 itself.
    """
    sig = sieve.table(sieve.DIVISOR_SIGMA, n)[3:].astype(np.float64)
    k = np.arange(3, n + 1, dtype=np.float64)
    loglog = np.log(np.log(k))
    rhs = math.exp(EULER_GAMMA) * loglog + ROBIN_D_SHARP / loglog
    return int(np.count_nonzero(sig / k >= rhs))


def totient_ratio_violations(n: int) -> int:
    """Count of 3 <= k <= n violating k/phi < e^gamma ln ln k + 2.50637/ln ln k."""
    phi = sieve.table(sieve.EULER_PHI, n)[3:].astype(np.float64)
    k = np.arange(3, n + 1, dtype=np.float64)
    loglog = np.log(np.log(k))
    rhs = math.exp(EULER_GAMMA) * loglog + ROSSER_CONST / loglog
    return int(np.count_nonzero(k / phi >= rhs))


def _divisor_lists(n: int) -> list[list[int]]:
    divs: list[list[int]] = [[] for _ in range(n + 1)]
    for d in range(1, n + 1):
        for mult in range(d, n + 1, d):
            divs[mult].append(d)
    return divs


def divisor_ratio_sum_violations(n: int) -> int:
    """Exact-rational check of sum_{d|k} mu^2(d)/phi(d) = k/phi(k), k <= n."""
    phi = sieve.table(sieve.EULER_PHI, n)
    mu2 = sieve.table(sieve.MOBIUS_SQUARED, n)
    bad = 0
    for k, divs in enumerate(_divisor_lists(n)):
        if k == 0:
            continue
        lhs = sum(Fraction(1, int(phi[d])) for d in divs if mu2[d])
        if lhs != Fraction(k, int(phi[k])):
            bad += 1
    return bad


def jordan_divisor_form_violations(n: int, v_max: int = 4) -> int:
    """J_v(k) = sum_{d|k} mu(d) (k/d)^v for k <= n, 1 <= v <= v_max, exact."""
    mu = sieve.table(sieve.MOBIUS, n)
    tables = {v: sieve.table(sieve.jordan_kind(v), n) for v in range(1, v_max + 1)}
    bad = 0
    for k, divs in enumerate(_divisor_lists(n)):
        if k == 0:
            continue
        for v in range(1, v_max + 1):
            rhs = sum(int(mu[d]) * (k // d) ** v for d in divs)
            if rhs != int(tables[v][k]):
                bad += 1
    return bad


def multiplicativity_violations(n: int, jordan_max: int = 4) -> int:
    """f(mn) = f(m) f(n) for coprime m, n with mn <= n_limit, for
    phi, J_v (v <= jordan_max), mu and sigma."""
    kinds = [sieve.EULER_PHI, sieve.MOBIUS, sieve.DIVISOR_SIGMA]
    kinds += [sieve.jordan_kind(v) for v in range(1, jordan_max + 1)]
    tables = {kind: sieve.table(kind, n) for kind in kinds}
    bad = 0
    for m in range(2, math.isqrt(n) + 1):
        for k in range(m, n // m + 1):
            if math.gcd(m, k) != 1:
                continue
            mk = m * k
            for kind, tab in tables.items():
                if int(tab[mk]) != int(tab[m]) * int(tab[k]):
                    bad += 1
    return bad


def jordan_phi_power_violations(n: int, v_max: int = 4) -> int:
    """phi(k)^v <= J_v(k) with equality iff v = 1 or k = 1, for k <= n.

    Counts both outright failures of the inequality and failures of the
    stated strictness pattern.
    """
    phi = sieve.table(sieve.EULER_PHI, n)[1:].astype(object)
    bad = 0
    for v in range(1, v_max + 1):
        jv = sieve.table(sieve.jordan_kind(v), n)[1:]
        phi_v = phi**v
        diff = np.asarray(jv, dtype=object) - phi_v
        if v == 1:
            bad += int(np.count_nonzero(diff != 0))
        else:
            bad += int(np.count_nonzero(diff[1:] <= 0))  # strict for k >= 2
            bad += int(diff[0] != 0)  # equality at k = 1
    return bad
