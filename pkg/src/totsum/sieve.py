"""Prime tables and multiplicative arithmetic functions.

A smallest-prime-factor (spf) sieve is the factorization backbone; the
totient phi, the Jordan totients J_v, the Mobius function mu (and mu^2)
and the divisor sum sigma are evaluated either pointwise in exact
integer arithmetic or as whole tables via linear sieve recurrences on
top of the spf table.

Tables are immutable after construction (numpy writeable flag cleared)
and safe to share across threads; construction itself is
single-threaded.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ._backend import kernels
from .errors import CapacityError

MAX_SIEVE = 10**8
# Jordan tables refuse any (v, N) whose values could exceed 128 bits.
JORDAN_VALUE_CAP = 2**127
_INT64_CAP = 2**63


@dataclass(frozen=True)
class SpfTable:
    """Smallest-prime-factor table for 2..limit; spf[k] = least prime of k."""

    limit: int
    spf: np.ndarray

    def is_prime(self, k: int) -> bool:
        if not 2 <= k <= self.limit:
            raise ValueError(f"k={k} outside table range 2..{self.limit}")
        return int(self.spf[k]) == k


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ascending (prime, exponent) pairs."""

    pairs: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    def divisors(self) -> list[int]:
        divs = [1]
        for p, e in self.pairs:
            divs = [d * p**i for d in divs for i in range(e + 1)]
        return sorted(divs)


@dataclass(frozen=True)
class FunctionKind:
    """One of the supported multiplicative functions.

    ``order`` is only meaningful for the Jordan totient, where it must be
    a positive integer (order 1 coincides with the Euler totient).
    """

    name: str
    order: int = 0

    def __post_init__(self) -> None:
        if self.name not in ("phi", "jordan", "mobius", "mobius_squared", "sigma"):
            raise ValueError(f"unknown function kind {self.name!r}")
        if self.name == "jordan" and self.order < 1:
            raise ValueError("jordan order must be a positive integer")
        if self.name != "jordan" and self.order != 0:
            raise ValueError(f"{self.name} takes no order parameter")


EULER_PHI = FunctionKind("phi")
MOBIUS = FunctionKind("mobius")
MOBIUS_SQUARED = FunctionKind("mobius_squared")
DIVISOR_SIGMA = FunctionKind("sigma")


def jordan_kind(v: int) -> FunctionKind:
    return FunctionKind("jordan", v)


def build_spf(n: int) -> SpfTable:
    """Build the spf table for 2..n.  Allows 2 <= n <= 10**8."""
    if not 2 <= n <= MAX_SIEVE:
        raise CapacityError(f"spf sieve limit must be in 2..{MAX_SIEVE}, got {n}")
    spf = kernels.spf_sieve(n)
    spf.flags.writeable = False
    return SpfTable(limit=n, spf=spf)


@lru_cache(maxsize=4)
def _cached_spf(n: int) -> SpfTable:
    return build_spf(n)


def factorize(k: int, t: SpfTable) -> Factorization:
    """Exact factorization by repeated division by the smallest prime factor."""
    if not 1 <= k <= t.limit:
        raise ValueError(f"k={k} outside table range 1..{t.limit}")
    pairs: list[tuple[int, int]] = []
    while k > 1:
        p = int(t.spf[k])
        e = 0
        while k % p == 0:
            k //= p
            e += 1
        pairs.append((p, e))
    return Factorization(tuple(pairs))


def evaluate(kind: FunctionKind, k: int, t: SpfTable) -> int:
    """Pointwise value of a multiplicative function, in exact integers.

    Python integers are arbitrary precision, so no value can silently
    wrap; the 128-bit capacity guard applies to batch tables only.
    """
    fac = factorize(k, t)
    if kind.name == "phi":
        out = 1
        for p, e in fac.pairs:
            out *= p ** (e - 1) * (p - 1)
        return out
    if kind.name == "jordan":
        v = kind.order
        out = 1
        for p, e in fac.pairs:
            out *= p ** (v * (e - 1)) * (p**v - 1)
        return out
    if kind.name == "mobius":
        if any(e > 1 for _, e in fac.pairs):
            return 0
        return -1 if len(fac.pairs) % 2 else 1
    if kind.name == "mobius_squared":
        return 0 if any(e > 1 for _, e in fac.pairs) else 1
    # sigma
    out = 1
    for p, e in fac.pairs:
        out *= (p ** (e + 1) - 1) // (p - 1)
    return out


def _jordan_bigint_table(n: int, v: int) -> np.ndarray:
    """Linear sieve with python integers for J_v values beyond 64 bits."""
    spf = _cached_spf(max(n, 2)).spf
    jv: list[int] = [0] * (n + 1)
    jv[1] = 1
    for k in range(2, n + 1):
        p = int(spf[k])
        m = k // p
        pv = p**v
        jv[k] = jv[m] * pv if m % p == 0 else jv[m] * (pv - 1)
    out = np.array(jv, dtype=object)
    return out


@lru_cache(maxsize=16)
def table(kind: FunctionKind, n: int):
    """Whole table of values for k = 1..n, indexed by k (slot 0 unused).

    Built by sieve recurrences rather than per-k factorization.  Jordan
    tables use int64 while n**v fits 63 bits, switch to exact python
    integers up to the 128-bit cap, and refuse beyond it.
    """
    if not 1 <= n <= MAX_SIEVE:
        raise CapacityError(f"table limit must be in 1..{MAX_SIEVE}, got {n}")
    if n == 1:
        out = np.array([0, 1], dtype=np.int64)
        out.flags.writeable = False
        return out
    if kind.name == "jordan":
        v = kind.order
        if n > 1 and n**v >= JORDAN_VALUE_CAP:
            raise CapacityError(
                f"jordan table (v={v}, n={n}) exceeds the 128-bit value cap"
            )
        if n > 1 and n**v >= _INT64_CAP:
            out = _jordan_bigint_table(n, v)
            out.flags.writeable = False
            return out
    spf = _cached_spf(max(n, 2)).spf
    if kind.name == "phi":
        out = kernels.phi_from_spf(spf)
    elif kind.name == "jordan":
        out = kernels.jordan_from_spf(spf, kind.order)
    elif kind.name == "mobius":
        out = kernels.mobius_from_spf(spf)
    elif kind.name == "mobius_squared":
        out = np.abs(kernels.mobius_from_spf(spf))
    else:
        out = kernels.sigma_from_spf(spf)
    out.flags.writeable = False
    return out


def divisor_sum_identity(k: int, t: SpfTable) -> tuple[Fraction, Fraction]:
    """Both sides of sum_{d|k} mu^2(d)/phi(d) = k/phi(k), as exact rationals."""
    fac = factorize(k, t)
    lhs = Fraction(0)
    for d in fac.divisors():
        mu2 = evaluate(MOBIUS_SQUARED, d, t)
        if mu2:
            lhs += Fraction(1, evaluate(EULER_PHI, d, t))
    rhs = Fraction(k, evaluate(EULER_PHI, k, t))
    return lhs, rhs


# ---------------------------------------------------------------------------
# Binary cache format: magic "SPFT", u32 version, u64 N, then spf[2..N]
# as little-endian u32.  Loads are always revalidated by spot checks.
# ---------------------------------------------------------------------------

_MAGIC = b"SPFT"
_VERSION = 1


def save_spf(t: SpfTable, path: str) -> None:
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<IQ", _VERSION, t.limit))
        fh.write(t.spf[2:].astype("<u4").tobytes())


def _spot_check(t: SpfTable) -> None:
    """Recompute the smallest prime factor of a deterministic sample."""
    n = t.limit
    sample = {2, 3, 4, n, n - 1 if n > 2 else 2}
    step = max(1, n // 64)
    sample.update(range(2, n + 1, step))
    for k in sample:
        p = int(t.spf[k])
        if p < 2 or k % p != 0:
            raise ValueError(f"corrupt spf table: spf[{k}]={p}")
        for q in range(2, min(p, 1000)):
            if k % q == 0:
                raise ValueError(f"corrupt spf table: spf[{k}]={p} but {q} | {k}")


def load_spf(path: str) -> SpfTable:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != _MAGIC:
            raise ValueError("not an spf table dump (bad magic)")
        version, n = struct.unpack("<IQ", fh.read(12))
        if version != _VERSION:
            raise ValueError(f"unsupported spf dump version {version}")
        if not 2 <= n <= MAX_SIEVE:
            raise CapacityError(f"spf dump limit {n} out of range")
        raw = fh.read()
    values = np.frombuffer(raw, dtype="<u4")
    if values.shape[0] != n - 1:
        raise ValueError("truncated spf table dump")
    spf = np.zeros(n + 1, dtype=np.int32)
    spf[1] = 1
    spf[2:] = values.astype(np.int32)
    spf.flags.writeable = False
    t = SpfTable(limit=int(n), spf=spf)
    _spot_check(t)
    return t
