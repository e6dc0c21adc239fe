"""Command-line entry point.

Exit codes: 0 success, 1 domain error, 2 verification failure, 3 parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .channel import (
    CONVENTION,
    Ranking,
    cone_dimension,
    enumerate_weak_orders,
    fubini,
    unstable_columns,
    weak_order_matrix,
)
from .errors import ChannelSpaceError, DimensionMismatch, OracleMismatch, ParseError
from .io import parse_prior, parse_ranking_text, read_channel, read_matrix
from .metrics import global_decoding_distance, radial_agreement_probability
from .oracle import monte_carlo_radial, oracle_global_agreement, oracle_radial_probability, oracle_s_pair
from .perms import agreement_probability, decoding_distance, kendall_tau, s_pair
from .verify import SUITES, run_suites

SEED_ENV = "CHANNEL_SPACE_SEED"


@dataclass
class RunConfig:
    eps: float = 0.0
    prior: Optional[list] = None
    oracle_limit_n: int = 20
    seed: int = 0
    workers: int = 1
    output_format: str = "json"

    def __post_init__(self):
        if self.eps < 0:
            raise ParseError("--epsilon must be non-negative")


def _fmt(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return v


def _emit(report: dict, fmt: str, table_lines=None):
    if fmt == "table" and table_lines is not None:
        print("\n".join(table_lines))
    else:
        print(json.dumps(report, indent=2, sort_keys=True, default=_fmt))


def cmd_order(args, cfg: RunConfig) -> int:
    ch = read_channel(args.channel, normalize=True) if args.normalize else read_matrix(args.channel)
    wom = weak_order_matrix(ch, cfg.eps)
    unstable = set(unstable_columns(ch, cfg.eps))
    cols = [
        {"column": j, "ranks": list(w.ranks), "dimension": cone_dimension(w), "stable": j not in unstable}
        for j, w in enumerate(wom.columns, 1)
    ]
    report = {**wom.to_json(), "matrix": wom.rows(), "per_column": cols,
              "stable": not unstable, "convention": CONVENTION}
    lines = [" ".join(f"{r:>3}" for r in row) for row in wom.rows()]
    lines += [f"column {c['column']}: dim {c['dimension']}{'' if c['stable'] else ' UNSTABLE'}" for c in cols]
    _emit(report, cfg.output_format, lines)
    return 0


def cmd_dist_perm(args, cfg: RunConfig) -> int:
    try:
        sigma = Ranking(parse_ranking_text(args.sigma))
        phi = Ranking(parse_ranking_text(args.phi))
    except ValueError as e:
        raise ParseError(str(e)) from None
    if sigma.n != phi.n:
        raise DimensionMismatch(sigma.n, phi.n)
    s = s_pair(sigma, phi).value
    report = {
        "sigma": sigma.to_json(),
        "phi": phi.to_json(),
        "S": s,
        "codes": 2**sigma.n - 1,
        "probability": agreement_probability(sigma, phi),
        "distance": decoding_distance(sigma, phi),
        "kendall_tau": kendall_tau(sigma, phi),
    }
    if args.oracle:
        brute = oracle_s_pair(sigma, phi).value
        report["oracle_S"] = brute
        if brute != s:
            _emit(report, "json")
            raise OracleMismatch(f"formula S={s} but enumeration gives {brute}")
    lines = [f"{k}: {_fmt(v)}" for k, v in report.items() if k not in ("sigma", "phi")]
    lines = [f"sigma perm {sigma} inv {','.join(map(str, sigma.inv))}",
             f"phi   perm {phi} inv {','.join(map(str, phi.inv))}"] + lines
    _emit(report, cfg.output_format, lines)
    return 0


def cmd_dist_channel(args, cfg: RunConfig) -> int:
    p = read_channel(args.p, normalize=args.normalize)
    q = read_channel(args.q, normalize=args.normalize)
    rep = radial_agreement_probability(p, q, cfg.prior, cfg.eps)
    report = rep.to_json()
    if args.oracle:
        brute = oracle_radial_probability(p, q, cfg.prior)
        report["oracle_probability"] = _fmt(brute)
        if brute != rep.probability:
            _emit(report, "json")
            raise OracleMismatch(f"closed form {rep.probability} but enumeration gives {brute}")
    if args.glob:
        report["global_distance"] = _fmt(global_decoding_distance(p, q, cfg.eps))
        if args.oracle:
            report["oracle_global_agreement"] = oracle_global_agreement(p, q).value
    lines = ["column  S  norm"]
    lines += [f"{j:>6} {s:>2}  {_fmt(nm)}" for j, (s, nm) in
              enumerate(zip(rep.per_column_s, rep.column_norms), 1)]
    lines += [f"probability: {report['probability']}", f"distance: {report['distance']}"]
    if args.glob:
        lines.append(f"global distance: {report['global_distance']}")
    _emit(report, cfg.output_format, lines)
    return 0


def cmd_cones(args, cfg: RunConfig) -> int:
    orders = enumerate_weak_orders(args.n, limit=args.limit)
    by_dim = {}
    for w in orders:
        by_dim[cone_dimension(w)] = by_dim.get(cone_dimension(w), 0) + 1
    report = {
        "n": args.n,
        "total": len(orders),
        "fubini": fubini(args.n),
        "by_dimension": {str(k): by_dim[k] for k in sorted(by_dim, reverse=True)},
        "orders": [{"ranks": list(w.ranks), "dimension": cone_dimension(w)} for w in orders],
    }
    lines = [f"{','.join(map(str, w.ranks))}  dim {cone_dimension(w)}  {w}" for w in orders]
    lines += [f"total {len(orders)}"] + [f"dim {k}: {v}" for k, v in report["by_dimension"].items()]
    _emit(report, cfg.output_format, lines)
    return 0


def cmd_verify(args, cfg: RunConfig) -> int:
    suites = args.suite or ["all"]
    report = run_suites(suites, seed=cfg.seed, workers=cfg.workers)
    lines = []
    for c in report["checks"]:
        status = "INFO" if c.get("informational") else ("PASS" if not c["failures"] else "FAIL")
        lines.append(f"[{status}] {c['check']}: {c['instances']} instances, {len(c['failures'])} failures")
        if c["check"] == "example6":
            for row in c["info"]["table"]:
                flag = "" if row["match"] else "  <-- differs from published"
                lines.append(f"    {row['quantity']}: published {row['published']}, "
                             f"enumerated {row['enumerated']}{flag}")
        if c["check"] == "triangle_survey":
            for n, v in c["info"].items():
                lines.append(f"    n={n}: {v['violations']} violations in {v['triples']} triples")
    _emit(report, cfg.output_format, lines)
    return 0 if report["ok"] else 2


def cmd_simulate(args, cfg: RunConfig) -> int:
    p = read_channel(args.p, normalize=args.normalize)
    q = read_channel(args.q, normalize=args.normalize)
    mc = monte_carlo_radial(p, q, args.samples, cfg.seed, cfg.prior, cfg.workers)
    exact = radial_agreement_probability(p, q, cfg.prior, cfg.eps).probability
    report = {**mc.to_json(), "closed_form": _fmt(exact)}
    if mc.stderr:
        report["z"] = abs(mc.estimate - float(exact)) / mc.stderr
    lines = [f"{k}: {v}" for k, v in report.items()]
    _emit(report, cfg.output_format, lines)
    return 0


def _global_options(defaults: bool) -> argparse.ArgumentParser:
    # accepted before or after the subcommand; only the top level sets defaults
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    g = argparse.ArgumentParser(add_help=False)
    g.add_argument("--tie-rule", choices=["exact", "epsilon"], default=d("exact"))
    g.add_argument("--epsilon", type=float, default=d(0.0))
    g.add_argument("--prior", default=d("uniform"), help='"uniform" or comma list like 1/2,1/4,1/4')
    g.add_argument("--seed", type=int, default=d(None), help=f"default: ${SEED_ENV} or 0")
    g.add_argument("--workers", type=int, default=d(1))
    g.add_argument("--format", choices=["json", "table"], default=d("json"))
    g.add_argument("--normalize", action="store_true", default=d(False), help="renormalise channel rows")
    return g


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chanspace", description=__doc__, parents=[_global_options(True)])
    common = [_global_options(False)]
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("order", parents=common, help="weak-order matrix of a channel")
    s.add_argument("channel")
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("dist-perm", parents=common, help="decoding distance between two rankings")
    s.add_argument("sigma", help="perm form, e.g. 3,1,2 (input 3 most likely)")
    s.add_argument("phi")
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(func=cmd_dist_perm)

    s = sub.add_parser("dist-channel", parents=common, help="radial decoding distance to Q centred at P")
    s.add_argument("p")
    s.add_argument("q")
    s.add_argument("--oracle", action="store_true")
    s.add_argument("--global", dest="glob", action="store_true")
    s.set_defaults(func=cmd_dist_channel)

    s = sub.add_parser("cones", parents=common, help="enumerate decoding cones of R^n")
    s.add_argument("n", type=int)
    s.add_argument("--limit", type=int, default=6)
    s.set_defaults(func=cmd_cones)

    s = sub.add_parser("verify", parents=common, help="run verification campaigns")
    s.add_argument("--suite", action="append", choices=sorted(SUITES) + ["all"])
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("simulate", parents=common, help="Monte Carlo estimate of the radial agreement")
    s.add_argument("p")
    s.add_argument("q")
    s.add_argument("--samples", type=int, default=100_000)
    s.set_defaults(func=cmd_simulate)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        seed = args.seed if args.seed is not None else int(os.environ.get(SEED_ENV, "0"))
        eps = args.epsilon if args.tie_rule == "epsilon" else 0.0
        cfg = RunConfig(eps=eps, prior=parse_prior(args.prior), seed=seed,
                        workers=args.workers, output_format=args.format)
        return args.func(args, cfg)
    except ChannelSpaceError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
