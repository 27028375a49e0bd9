"""Analytic lower/upper bounds for the summatory limits, plus verdicts.

Each bound is a pure function of the exponent pair (and auxiliary
parameters), tagged with its side and a short derivation note.  A full
report gathers every applicable bound, attaches a ladder estimate and
judges whether the empirical value sits strictly inside the sandwich.

Bound families:

* jordan_exact        exact limit constants for the Jordan-weighted sums
* jordan_comparison   upper bounds for v >= 1 (termwise phi^v <= J_v;
                      attained exactly when v = 1)
* power_sum_lower     lower bounds for v <= -1 (every local factor of
                      (k/phi)^|v| exceeds 1)
* multiple_sum_upper  upper bounds for v <= -1 through the nested
                      squarefree sum and the sqrt(2k) totient minorant
* split_refined_upper sharper v = -1 bound splitting off k = 2, 6
* robin_upper         convergent-regime bound from the divisor-sum
                      inequality (or its totient-ratio variant)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from . import sieve
from .special import ETA, ETA_ROSSER, EULER_GAMMA, d_infinity, zeta, zeta_deriv
from .engine import (
    ConvergenceEstimate,
    ExponentPair,
    Regime,
    SummandKind,
    classify,
    e_m,
    ladder_estimate,
)


class Side(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"
    EXACT = "exact"


class Verdict(enum.Enum):
    SANDWICHED = "sandwiched"
    LOWER_VIOLATED = "lower_violated"
    UPPER_VIOLATED = "upper_violated"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class BoundValue:
    name: str
    value: float
    side: Side
    source: str
    params: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "side": self.side.value,
            "value": self.value,
            "source": self.source,
            "params": self.params,
        }


@dataclass(frozen=True)
class BoundReport:
    exponents: ExponentPair
    regime: Regime
    bounds: tuple[BoundValue, ...]
    empirical: Optional[ConvergenceEstimate]
    verdict: Optional[Verdict]

    def to_dict(self) -> dict:
        emp = None
        if self.empirical is not None:
            emp = {
                "ladder": [
                    [p.n, p.raw, p.normalized] for p in self.empirical.ladder
                ],
                "limit": self.empirical.limit_estimate,
                "gauge": self.empirical.error_gauge,
            }
        return {
            "u": self.exponents.u_str(),
            "v": self.exponents.v,
            "regime": self.regime.value,
            "bounds": [b.to_dict() for b in self.bounds],
            "empirical": emp,
            "verdict": self.verdict.value if self.verdict else None,
        }


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def jordan_exact(e: ExponentPair) -> BoundValue:
    """Exact limit constants of the Jordan-weighted sums, per regime."""
    _require(e.v >= 1, "jordan_exact needs v >= 1")
    regime = classify(e)
    if regime is Regime.POLYNOMIAL:
        value = 1.0 / (float(e.growth()) * zeta(e.v + 1.0))
    elif regime is Regime.LOGARITHMIC:
        value = 1.0 / zeta(e.v + 1.0)
    else:
        _require(-e.u > 1, "convergent case needs -u > 1")
        value = zeta(float(-e.u - e.v)) / zeta(float(-e.u))
    return BoundValue(
        name="jordan-exact",
        value=value,
        side=Side.EXACT,
        source="dirichlet series of the jordan totient",
        params={"summand": "jordan", "order": e.v},
    )


def jordan_comparison_upper(e: ExponentPair) -> BoundValue:
    """Upper bound for v >= 1 from phi(k)^v <= J_v(k); equality iff v = 1."""
    _require(e.v >= 1, "jordan comparison needs v >= 1")
    base = jordan_exact(e)
    attained = e.v == 1
    return BoundValue(
        name="jordan-comparison",
        value=base.value,
        side=Side.EXACT if attained else Side.UPPER,
        source="termwise phi^v <= J_v",
        params={"attained": attained},
    )


def power_sum_lower(e: ExponentPair) -> BoundValue:
    """Lower bound for v <= -1: every factor of (k/phi(k))^|v| exceeds 1."""
    _require(e.v <= -1, "power-sum lower bound needs v <= -1")
    regime = classify(e)
    if regime is Regime.POLYNOMIAL:
        value = 1.0 / float(e.growth())
    elif regime is Regime.LOGARITHMIC:
        value = 1.0
    else:
        value = zeta(float(-e.u - e.v))
    return BoundValue(
        name="power-sum-lower",
        value=value,
        side=Side.LOWER,
        source="drop the totient ratio factors, each > 1",
        params=None,
    )


def multiple_sum_upper(e: ExponentPair) -> BoundValue:
    """Upper bound for v <= -1 via 2^(|v|/2) times a product of zetas."""
    _require(e.v <= -1, "multiple-sum upper bound needs v <= -1")
    regime = classify(e)
    av = -e.v
    scale = 2.0 ** (av / 2.0)
    if regime is Regime.POLYNOMIAL:
        value = scale * d_infinity(e.v, 1.0) / float(e.growth())
    elif regime is Regime.LOGARITHMIC:
        value = scale * d_infinity(e.v, 1.0)
    else:
        w = float(-e.u - e.v)
        _require(w > 1, "convergent case needs -u - v > 1")
        value = scale * d_infinity(e.v, w) * zeta(w)
    return BoundValue(
        name="multiple-sum-upper",
        value=value,
        side=Side.UPPER,
        source="sqrt(2k) totient minorant in the nested squarefree sum",
        params=None,
    )


def refined_dn_bound(s: float) -> float:
    """Sharper bound on the depth-1 squarefree sum, splitting off k = 2, 6:
    2^-s (1 - 1/sqrt 2) + 6^-s (1/2 - 1/sqrt 6) + zeta(s + 1/2)."""
    return (
        2.0**-s * (1.0 - 1.0 / math.sqrt(2.0))
        + 6.0**-s * (0.5 - 1.0 / math.sqrt(6.0))
        + zeta(s + 0.5)
    )


def split_refined_upper(e: ExponentPair) -> BoundValue:
    """v = -1 upper bound with the k = 2, 6 split replacing the 2^(1/2) factor."""
    _require(e.v == -1, "the refined split bound applies only to v = -1")
    regime = classify(e)
    if regime is Regime.POLYNOMIAL:
        s = 1.0
        value = refined_dn_bound(s) / float(e.growth())
    elif regime is Regime.LOGARITHMIC:
        s = 1.0
        value = refined_dn_bound(s)
    else:
        s = float(-e.u - e.v)
        _require(s > 1, "convergent case needs -u - v > 1")
        value = refined_dn_bound(s) * zeta(s)
    return BoundValue(
        name="refined-split-upper",
        value=value,
        side=Side.UPPER,
        source="k=2,6 split plus sqrt(k) totient minorant",
        params={"s": s},
    )


VARIANT_PHI_SIGMA = "phi-sigma"
VARIANT_ROSSER_SCHOENFELD = "rosser-schoenfeld"


def _robin_guards(e: ExponentPair) -> float:
    _require(e.v < 0, "robin-style bounds need v < 0")
    _require(e.u + e.v < -1, "robin-style bounds need u + v < -1")
    w = float(-e.u - e.v)
    _require(w > 1, "robin-style bounds need -u - v > 1")
    return w


def robin_closed_form(e: ExponentPair, variant: str = VARIANT_PHI_SIGMA,
                      eta: Optional[float] = None) -> float:
    """The m-independent part of the robin-style bound:
    prefactor * sum_r (-1)^r C(|v|,r) eta^(|v|-r) zeta^(r)(-u-v)."""
    w = _robin_guards(e)
    av = -e.v
    if variant == VARIANT_PHI_SIGMA:
        eta_val = ETA if eta is None else eta
        prefactor = (math.exp(EULER_GAMMA) * zeta(2.0)) ** av
    elif variant == VARIANT_ROSSER_SCHOENFELD:
        eta_val = ETA_ROSSER if eta is None else eta
        prefactor = math.exp(EULER_GAMMA) ** av
    else:
        raise ValueError(f"unknown variant {variant!r}")
    total = 0.0
    for r in range(av + 1):
        total += (-1.0) ** r * math.comb(av, r) * eta_val ** (av - r) * zeta_deriv(r, w)
    return prefactor * total


def robin_upper(e: ExponentPair, m: int, variant: str = VARIANT_PHI_SIGMA,
                eta: Optional[float] = None) -> BoundValue:
    """Convergent-regime upper bound from the divisor-sum inequality.

    The phi-sigma variant majorizes 1/phi(k) by
    e^gamma zeta(2) (eta + ln k)/k for k >= 3; the rosser-schoenfeld
    variant uses the direct totient-ratio inequality, which drops the
    zeta(2) factor but carries a much larger eta.  The first m - 1 terms
    are kept exact, so the bound tightens as m grows.
    """
    _robin_guards(e)
    if variant == VARIANT_PHI_SIGMA:
        eta_val = ETA if eta is None else eta
        include_zeta2 = True
        name, source = "robin-sigma", "phi*sigma band plus divisor-sum bound, linearized at k=3"
    elif variant == VARIANT_ROSSER_SCHOENFELD:
        eta_val = ETA_ROSSER if eta is None else eta
        include_zeta2 = False
        name, source = "robin-rosser-schoenfeld", "totient-ratio bound, linearized at k=3"
    else:
        raise ValueError(f"unknown variant {variant!r}")
    correction = e_m(e, m, eta=eta_val, include_zeta2=include_zeta2)
    closed = robin_closed_form(e, variant=variant, eta=eta_val)
    return BoundValue(
        name=name,
        value=correction + closed,
        side=Side.UPPER,
        source=source,
        params={"m": m, "eta": eta_val, "variant": variant},
    )


def crossover_m(
    e: ExponentPair,
    target: float,
    m_max: int = 10**4,
    eta: Optional[float] = None,
    variant: str = VARIANT_PHI_SIGMA,
) -> Optional[int]:
    """Smallest m >= 3 whose robin-style bound beats ``target``.

    The comparison happens on the scale of the nested-sum constant, so
    the bound is divided by zeta(-u-v) before testing against the
    target; for (u, v) = (-1, -1) this is exactly the division by
    zeta(2) that turns the series bound into a bound on the product
    constant g.  Returns None when no m <= m_max qualifies.
    """
    w = _robin_guards(e)
    _require(target > 0, "target must be positive")
    _require(3 <= m_max <= 10**4, "m_max must be in 3..10000")
    if variant == VARIANT_PHI_SIGMA:
        eta_val = ETA if eta is None else eta
        coef = (math.exp(EULER_GAMMA) * zeta(2.0)) ** (-e.v)
    else:
        eta_val = ETA_ROSSER if eta is None else eta
        coef = math.exp(EULER_GAMMA) ** (-e.v)
    closed = robin_closed_form(e, variant=variant, eta=eta_val)
    scale = zeta(w)
    av = -e.v
    u = float(e.u)
    t = sieve.build_spf(max(m_max, 2))

    def term(k: int) -> float:
        phi_k = sieve.evaluate(sieve.EULER_PHI, k, t)
        lead = float(k) ** u * float(phi_k) ** e.v
        major = coef * (eta_val + math.log(k)) ** av * float(k) ** (u + e.v)
        return lead - major

    correction = term(1)  # the m = 3 correction covers k = 1 and k = 2
    for m in range(3, m_max + 1):
        correction += term(m - 1)
        if (correction + closed) / scale < target:
            return m
    return None


_EXACT_SLACK = {
    Regime.POLYNOMIAL: 1e-2,
    Regime.LOGARITHMIC: 5e-2,
    Regime.CONVERGENT: 1e-3,
}
_VERDICT_TOL = 1e-6


def _verdict(regime: Regime, bounds: tuple[BoundValue, ...],
             est: ConvergenceEstimate) -> Verdict:
    """Judge the estimate against the bounds.

    A bound counts as violated only when the estimate transgresses it by
    more than the error gauge plus a small tolerance, so finite-N noise
    cannot raise false alarms against asymptotic bounds.  Exact bounds
    (attained limits) are checked for closeness at the regime's
    convergence scale instead of strict separation.
    """
    emp, gauge = est.limit_estimate, est.error_gauge
    lower_violated = upper_violated = inconclusive = False
    for b in bounds:
        if b.params and b.params.get("summand") == "jordan":
            continue  # informational entry about the companion jordan sum
        if b.side is Side.LOWER:
            if emp < b.value - gauge - _VERDICT_TOL:
                lower_violated = True
            elif not emp - gauge > b.value:
                inconclusive = True
        elif b.side is Side.UPPER:
            if emp > b.value + gauge + _VERDICT_TOL:
                upper_violated = True
            elif not emp + gauge < b.value:
                inconclusive = True
        else:
            slack = gauge + _EXACT_SLACK[regime] * max(1.0, abs(b.value))
            if emp > b.value + slack:
                upper_violated = True
            elif emp < b.value - slack:
                lower_violated = True
    if lower_violated:
        return Verdict.LOWER_VIOLATED
    if upper_violated:
        return Verdict.UPPER_VIOLATED
    if inconclusive:
        return Verdict.INCONCLUSIVE
    return Verdict.SANDWICHED


def full_report(
    e: ExponentPair,
    ladder_ns: Optional[tuple[int, ...]] = None,
    m: Optional[int] = None,
) -> BoundReport:
    """Collect every applicable bound and judge the empirical estimate.

    Inapplicable bound families are simply absent.  The empirical ladder
    always measures the phi-weighted sum; for v >= 1 the exact constant
    of the companion jordan-weighted sum is attached as an informational
    entry (it never enters the verdict).
    """
    regime = classify(e)
    bounds: list[BoundValue] = []
    if e.v >= 1:
        bounds.append(jordan_comparison_upper(e))
        bounds.append(jordan_exact(e))
    elif e.v <= -1:
        bounds.append(power_sum_lower(e))
        bounds.append(multiple_sum_upper(e))
        if e.v == -1:
            bounds.append(split_refined_upper(e))
        if regime is Regime.CONVERGENT and float(-e.u - e.v) > 1:
            bounds.append(robin_upper(e, m if m is not None else 200))
    empirical = None
    verdict = None
    if ladder_ns is not None:
        empirical = ladder_estimate(SummandKind.PHI, e, ladder_ns)
        verdict = _verdict(regime, tuple(bounds), empirical)
    return BoundReport(
        exponents=e,
        regime=regime,
        bounds=tuple(bounds),
        empirical=empirical,
        verdict=verdict,
    )
