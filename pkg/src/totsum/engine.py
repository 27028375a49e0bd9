"""Summatory functions sum_{k<=N} k^u f(k)^v and their limit estimates.

The exponent u is an exact rational so the boundary u + v + 1 = 0
between growth regimes is decidable; v is an integer.  Normalization
follows the regime: divide by N^(u+v+1) (polynomial growth), by ln N
(logarithmic growth), or by nothing (convergent series).

Bulk sums run over sieve tables with compensated accumulation; an
optional thread count partitions the range into contiguous chunks that
are reduced in ascending order, so results are reproducible for a fixed
thread count.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import sieve
from ._backend import kernels
from .special import ETA, EULER_GAMMA, zeta


class Regime(enum.Enum):
    POLYNOMIAL = "polynomial"
    LOGARITHMIC = "logarithmic"
    CONVERGENT = "convergent"


class SummandKind(enum.Enum):
    PHI = "phi"
    JORDAN = "jordan"


@dataclass(frozen=True)
class ExponentPair:
    """Exact rational exponent u on k and integer v (power of phi, or Jordan order)."""

    u: Fraction
    v: int

    def __post_init__(self) -> None:
        if not isinstance(self.u, Fraction):
            object.__setattr__(self, "u", Fraction(self.u))

    @classmethod
    def parse(cls, u: str | int | float | Fraction, v: int) -> "ExponentPair":
        """Build from a decimal string such as '-1.5', kept exact."""
        if isinstance(u, float):
            raise TypeError("pass u as a string or Fraction to keep it exact")
        return cls(Fraction(u), int(v))

    def growth(self) -> Fraction:
        return self.u + self.v + 1

    def u_str(self) -> str:
        """Exact decimal form when the denominator is 2^a 5^b, else 'p/q'."""
        den = self.u.denominator
        d = den
        for base in (2, 5):
            while d % base == 0:
                d //= base
        if d == 1:
            digits = 0
            x = self.u
            while x.denominator != 1:
                x *= 10
                digits += 1
            sign = "-" if self.u < 0 else ""
            mag = str(abs(x.numerator)).rjust(digits + 1, "0")
            if digits:
                return f"{sign}{mag[:-digits]}.{mag[-digits:]}"
            return f"{sign}{mag}"
        return f"{self.u.numerator}/{self.u.denominator}"


def classify(e: ExponentPair) -> Regime:
    """Exact regime from the sign of u + v + 1 (rational arithmetic)."""
    g = e.growth()
    if g > 0:
        return Regime.POLYNOMIAL
    if g == 0:
        return Regime.LOGARITHMIC
    return Regime.CONVERGENT


@dataclass(frozen=True)
class LadderPoint:
    n: int
    raw: float
    normalized: float


@dataclass(frozen=True)
class ConvergenceEstimate:
    """Ladder of partial evaluations plus an extrapolated limit.

    ``error_gauge`` is the difference of the last two normalized values
    for the polynomial/convergent regimes and the scaled maximum fit
    residual for the logarithmic regime.
    """

    ladder: tuple[LadderPoint, ...]
    limit_estimate: float
    error_gauge: float
    regime: Regime


DEFAULT_LADDER = (10**4, 3 * 10**4, 10**5, 3 * 10**5, 10**6, 3 * 10**6, 10**7)


def default_ladder(max_n: int) -> tuple[int, ...]:
    """Default geometric ladder rungs capped at max_n."""
    rungs = tuple(n for n in DEFAULT_LADDER if n <= max_n)
    if len(rungs) < 4:
        raise ValueError(f"max_n={max_n} leaves fewer than 4 ladder rungs")
    return rungs


def _weights(kind: SummandKind, v: int, n: int) -> np.ndarray:
    """f(k)^v (phi) or J_v(k) (jordan) for k = 1..n as float64."""
    if kind is SummandKind.PHI:
        phi = sieve.table(sieve.EULER_PHI, n)[1:].astype(np.float64)
        if v == 0:
            return np.ones(n, dtype=np.float64)
        if v == 1:
            return phi
        return phi**v
    if v < 1:
        raise ValueError("jordan summand needs order v >= 1")
    jv = sieve.table(sieve.jordan_kind(v), n)[1:]
    return np.asarray(jv, dtype=np.float64)


def _term_array(kind: SummandKind, e: ExponentPair, n: int) -> np.ndarray:
    # float overflow shows up as inf and is rejected after accumulation
    with np.errstate(over="ignore"):
        w = _weights(kind, e.v, n)
        u = e.u
        if u == 0:
            return w
        k = np.arange(1, n + 1, dtype=np.float64)
        if u.denominator == 1:
            ku = k ** int(u)
        else:
            # k^u as exp(u ln k) for non-integer exponents
            ku = np.power(k, float(u))
        return ku * w


def summatory(kind: SummandKind, e: ExponentPair, n: int, threads: int = 1) -> float:
    """sum_{k=1}^{n} k^u phi(k)^v, or k^u J_v(k) for the jordan kind."""
    if n < 1:
        raise ValueError("n must be positive")
    terms = _term_array(kind, e, n)
    if threads > 1:
        chunk = (n + threads - 1) // threads
        cuts = [(i, min(i + chunk, n)) for i in range(0, n, chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda ab: kernels.neumaier_sum(terms[ab[0] : ab[1]]), cuts))
        total = math.fsum(parts)
    else:
        total = kernels.neumaier_sum(terms)
    if not math.isfinite(total):
        raise OverflowError(f"summatory overflowed the floating range at n={n}")
    return float(total)


def normalized(kind: SummandKind, e: ExponentPair, n: int, threads: int = 1) -> float:
    """Regime-normalized partial sum: F/N^(u+v+1), F/ln N, or F."""
    raw = summatory(kind, e, n, threads=threads)
    return _normalize_raw(e, n, raw)


def _normalize_raw(e: ExponentPair, n: int, raw: float) -> float:
    regime = classify(e)
    if regime is Regime.POLYNOMIAL:
        return raw / float(n) ** float(e.growth())
    if regime is Regime.LOGARITHMIC:
        if n < 2:
            raise ValueError("logarithmic normalization needs n >= 2")
        return raw / math.log(n)
    return raw


def ladder_estimate(
    kind: SummandKind, e: ExponentPair, ladder_ns: tuple[int, ...] | list[int]
) -> ConvergenceEstimate:
    """Evaluate the normalized sum along a ladder and extrapolate the limit.

    Polynomial/convergent regimes report the largest-N value with the
    last-step difference as the gauge.  The logarithmic regime fits
    F(N) = a ln N + b by least squares and reports the slope, because a
    single F/ln N value is contaminated by the additive constant at
    O(1/ln N).
    """
    ns = [int(x) for x in ladder_ns]
    if len(ns) < 4:
        raise ValueError("ladder needs at least 4 rungs")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("ladder rungs must be strictly ascending")
    regime = classify(e)
    terms = _term_array(kind, e, ns[-1])
    raws = kernels.neumaier_partial_sums(terms, np.array(ns, dtype=np.int64))
    points = tuple(
        LadderPoint(n=n, raw=float(r), normalized=_normalize_raw(e, n, float(r)))
        for n, r in zip(ns, raws)
    )
    if regime is Regime.LOGARITHMIC:
        logs = np.log(np.array(ns, dtype=np.float64))
        coeffs, *_ = np.linalg.lstsq(
            np.column_stack([logs, np.ones_like(logs)]), raws, rcond=None
        )
        slope, intercept = float(coeffs[0]), float(coeffs[1])
        residuals = raws - (slope * logs + intercept)
        gauge = float(np.max(np.abs(residuals)) / logs[-1])
        return ConvergenceEstimate(points, slope, gauge, regime)
    limit = points[-1].normalized
    gauge = abs(points[-1].normalized - points[-2].normalized)
    return ConvergenceEstimate(points, limit, gauge, regime)


def dn_multiple_sum(v: int, s: float, n: int) -> float:
    """Nested squarefree-weighted sum with |v| levels.

    Level j contributes k_j^(-s) * mu^2(P_j)/phi(P_j) with P_j the
    running product k_1...k_j, every P_j <= n.  Depth-first recursion;
    non-squarefree running products are pruned immediately since their
    weight vanishes.
    """
    if not -3 <= v <= -1:
        raise ValueError("supported orders are v in {-1, -2, -3}")
    if not 1 <= n <= 2000:
        raise ValueError("n must be in 1..2000")
    depth = -v
    mu2 = sieve.table(sieve.MOBIUS_SQUARED, n)
    phi = sieve.table(sieve.EULER_PHI, n)
    inv_pow = np.arange(1, n + 1, dtype=np.float64) ** -float(s)
    leaves: list[float] = []

    def rec(level: int, prod: int, weight: float) -> None:
        limit = n // prod
        for kj in range(1, limit + 1):
            p = prod * kj
            if not mu2[p]:
                continue
            w = weight * inv_pow[kj - 1] / float(phi[p])
            if level == depth:
                leaves.append(w)
            else:
                rec(level + 1, p, w)

    rec(1, 1, 1.0)
    return math.fsum(leaves)


def e_m(
    e: ExponentPair,
    m: int,
    eta: float = ETA,
    include_zeta2: bool = True,
) -> float:
    """Correction sum over k < m for the divisor-bound route.

    Each term is k^u phi(k)^v minus its majorant
    (e^gamma zeta(2))^|v| (eta + ln k)^|v| k^(u+v); m = 3 sums k = 1, 2.
    ``include_zeta2=False`` drops the zeta(2) factor, which is the shape
    the totient-ratio (Rosser-Schoenfeld) variant needs.
    """
    if e.v >= 0:
        raise ValueError("e_m needs v < 0")
    if e.u + e.v >= -1:
        raise ValueError("e_m needs u + v < -1")
    if m < 3:
        raise ValueError("m must be at least 3")
    av = -e.v
    coef = (math.exp(EULER_GAMMA) * (zeta(2.0) if include_zeta2 else 1.0)) ** av
    t = sieve.build_spf(max(m, 2))
    u = float(e.u)
    terms = []
    for k in range(1, m):
        phi_k = sieve.evaluate(sieve.EULER_PHI, k, t)
        lead = float(k) ** u * float(phi_k) ** e.v
        major = coef * (eta + math.log(k)) ** av * float(k) ** (u + e.v)
        terms.append(lead - major)
    return math.fsum(terms)
