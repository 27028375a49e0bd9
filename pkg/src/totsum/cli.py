"""Command-line surface.

Subcommands: sum, bounds, zeta, product, dn, em, crossover, reproduce.
Global flags on every subcommand: --json, --threads, --prime-limit,
--ladder.  Exit codes: 0 success (all claims pass for reproduce),
1 reproduction failure, 2 usage or domain error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import bounds, reproduce as repro
from .errors import CapacityError
from .special import ETA_ROUNDED, d_infinity, euler_product, named_product, zeta, zeta_deriv
from .engine import (
    ExponentPair,
    SummandKind,
    classify,
    default_ladder,
    dn_multiple_sum,
    e_m,
    ladder_estimate,
    normalized,
    summatory,
)


def _parse_n(text: str) -> int:
    """Integer count; scientific notation such as 1e6 is accepted here."""
    if "e" in text.lower():
        value = float(text)
        if value != int(value):
            raise argparse.ArgumentTypeError(f"{text} is not an integer")
        return int(value)
    return int(text)


def _parse_u(text: str) -> Fraction:
    """Exact decimal fraction, e.g. '-1.5' -> -3/2."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse exponent {text!r}") from exc


def _round_floats(obj, digits: int = 10):
    """Round every float to the stated significant digits, recursively."""
    if isinstance(obj, float):
        return float(f"{obj:.{digits}g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v, digits) for v in obj]
    return obj


def _emit_json(payload: dict) -> None:
    print(json.dumps(_round_floats(payload), indent=2))


def _ladder_rungs(max_n: int) -> tuple[int, ...]:
    return default_ladder(max_n)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--threads", type=int, default=1, help="worker threads for bulk sums")
    common.add_argument("--prime-limit", type=_parse_n, default=10**6,
                        help="prime cutoff for Euler products")
    common.add_argument("--ladder", type=_parse_n, nargs="?", const=10**6, default=None,
                        metavar="MAX_N", help="evaluate a convergence ladder up to MAX_N")

    parser = argparse.ArgumentParser(prog="totsum", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("sum", parents=[common], help="summatory function at one N")
    p.add_argument("--u", type=_parse_u, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--n", type=_parse_n, required=True)
    p.add_argument("--kind", choices=["phi", "jordan"], default="phi")

    p = subs.add_parser("bounds", parents=[common], help="bound report for (u, v)")
    p.add_argument("--u", type=_parse_u, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--m", type=int, default=200, help="terms kept exact in the robin bound")

    p = subs.add_parser("zeta", parents=[common], help="zeta or a derivative at real s")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--deriv", type=int, default=0)

    p = subs.add_parser("product", parents=[common], help="named Euler product")
    p.add_argument("--name", required=True,
                   help='"g", "A(0,2)", "A(-v,v)" or "C(-v-s,v)"')
    p.add_argument("--v", type=int, default=None)
    p.add_argument("--s", type=float, default=None)

    p = subs.add_parser("dn", parents=[common], help="nested squarefree multiple sum")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--n", type=_parse_n, required=True)

    p = subs.add_parser("em", parents=[common], help="correction sum over k < m")
    p.add_argument("--u", type=_parse_u, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--eta", type=float, default=None)

    p = subs.add_parser("crossover", parents=[common],
                        help="smallest m whose robin bound beats a target")
    p.add_argument("--u", type=_parse_u, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--target", type=float, required=True)
    p.add_argument("--m-max", type=int, default=10**4)

    p = subs.add_parser("reproduce", parents=[common],
                        help="re-derive every numeric claim and report pass/fail")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    return parser


def _cmd_sum(args) -> int:
    e = ExponentPair(args.u, args.v)
    kind = SummandKind(args.kind)
    regime = classify(e)
    if args.ladder is not None:
        est = ladder_estimate(kind, e, _ladder_rungs(min(args.ladder, args.n)))
        if args.json:
            _emit_json({
                "u": e.u_str(), "v": e.v, "kind": kind.value,
                "regime": regime.value,
                "ladder": [[pt.n, pt.raw, pt.normalized] for pt in est.ladder],
                "limit_estimate": est.limit_estimate,
                "error_gauge": est.error_gauge,
            })
        else:
            print("N,raw_sum,normalized,regime")
            for pt in est.ladder:
                print(f"{pt.n},{pt.raw:.10g},{pt.normalized:.10g},{regime.value}")
        return 0
    raw = summatory(kind, e, args.n, threads=args.threads)
    norm = normalized(kind, e, args.n, threads=args.threads) if args.n >= 2 else raw
    if args.json:
        _emit_json({
            "u": e.u_str(), "v": e.v, "n": args.n, "kind": kind.value,
            "raw_sum": raw, "normalized": norm, "regime": regime.value,
        })
    else:
        print(f"raw_sum    = {raw:.10g}")
        print(f"normalized = {norm:.10g}")
        print(f"regime     = {regime.value}")
    return 0


def _cmd_bounds(args) -> int:
    e = ExponentPair(args.u, args.v)
    ladder = _ladder_rungs(args.ladder) if args.ladder is not None else None
    report = bounds.full_report(e, ladder_ns=ladder, m=args.m)
    _emit_json(report.to_dict())
    return 0


def _cmd_zeta(args) -> int:
    value = zeta(args.s) if args.deriv == 0 else zeta_deriv(args.deriv, args.s)
    payload = {"s": args.s, "deriv": args.deriv, "value": value}
    if args.json:
        _emit_json(payload)
    else:
        print(f"{value:.10g}")
    return 0


def _cmd_product(args) -> int:
    spec = named_product(args.name, v=args.v, s=args.s)
    value, tail = euler_product(spec, args.prime_limit)
    payload = {
        "name": spec.name,
        "prime_limit": args.prime_limit,
        "value": value,
        "tail_bound": tail,
    }
    if args.json:
        _emit_json(payload)
    else:
        print(f"value      = {value:.10g}")
        print(f"tail_bound = {tail:.10g}")
    return 0


def _cmd_dn(args) -> int:
    value = dn_multiple_sum(args.v, args.s, args.n)
    payload = {"v": args.v, "s": args.s, "n": args.n, "value": value}
    payload["zeta_product_bound"] = 2.0 ** (abs(args.v) / 2.0) * d_infinity(args.v, args.s)
    if args.v == -1:
        payload["refined_bound"] = bounds.refined_dn_bound(args.s)
    if args.json:
        _emit_json(payload)
    else:
        for k, v in payload.items():
            print(f"{k} = {v:.10g}" if isinstance(v, float) else f"{k} = {v}")
    return 0


def _cmd_em(args) -> int:
    e = ExponentPair(args.u, args.v)
    kwargs = {} if args.eta is None else {"eta": args.eta}
    value = e_m(e, args.m, **kwargs)
    payload = {"u": e.u_str(), "v": e.v, "m": args.m, "value": value}
    if args.json:
        _emit_json(payload)
    else:
        print(f"{value:.10g}")
    return 0


def _cmd_crossover(args) -> int:
    e = ExponentPair(args.u, args.v)
    m_exact = bounds.crossover_m(e, args.target, m_max=args.m_max)
    m_rounded = bounds.crossover_m(e, args.target, m_max=args.m_max, eta=ETA_ROUNDED)
    payload = {
        "u": e.u_str(), "v": e.v, "target": args.target,
        "m": m_exact, "m_rounded_eta": m_rounded,
    }
    if args.json:
        _emit_json(payload)
    else:
        print(f"m (eta from definition) = {m_exact}")
        print(f"m (eta rounded 2.8651)  = {m_rounded}")
    return 0


def _cmd_reproduce(args) -> int:
    claims = repro.run_claims(level=args.level, threads=args.threads)
    if args.json:
        _emit_json({
            "level": args.level,
            "claims": [c.to_dict() for c in claims],
            "all_pass": all(c.status == "pass" for c in claims),
        })
    else:
        print(repro.format_table(claims))
    return 0 if all(c.status == "pass" for c in claims) else 1


_HANDLERS = {
    "sum": _cmd_sum,
    "bounds": _cmd_bounds,
    "zeta": _cmd_zeta,
    "product": _cmd_product,
    "dn": _cmd_dn,
    "em": _cmd_em,
    "crossover": _cmd_crossover,
    "reproduce": _cmd_reproduce,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
