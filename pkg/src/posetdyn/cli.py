"""Batch command-line interface.

Every subcommand prints a single JSON document; exact rationals are
rendered as "num/den" strings and big counts as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .birational import (PositiveLabeling, birational_ddeg, birational_orbit,
                         detect_order)
from .cde import edge_density, is_cde, is_mcde, tcde_solve
from .dynamics import pp_orbits, row_orbits
from .families import make, parse_spec
from .harness import check_csp, frac_str, run_campaign, verify_report
from .ppartitions import (count_ppartitions, count_setvalued,
                          ddeg_generating_function)


def _emit(obj):
    json.dump(obj, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def _orbit_rows(orbit_list, with_toggle=False):
    rows = []
    for o in orbit_list:
        row = {"length": o.length, "ddeg_sum": int(o.ddeg_sum),
               "ddeg_multiset": list(o.ddeg_multiset)}
        if with_toggle:
            row["toggle_sums"] = {k: int(v) for k, v in o.stat_sums.items()}
        rows.append(row)
    return rows


def cmd_ppart(args):
    P = make(args.poset)
    out = {}
    if args.mode == "count":
        if args.excess is None:
            out["count"] = str(count_ppartitions(P, args.height))
        else:
            out["count"] = str(count_setvalued(P, args.height, args.excess))
    else:
        gf = ddeg_generating_function(P, args.height)
        out["poly"] = list(gf.coeffs)
        out["count"] = str(gf(1))
    _emit(out)


def cmd_cde(args):
    P = make(args.poset)
    out = {"poset": args.poset, "mode": args.mode}
    if args.mode == "cde":
        out["verdict"] = is_cde(P)
    elif args.mode == "mcde":
        out["verdict"] = is_mcde(P)
    else:
        cert = tcde_solve(P)
        out["verdict"] = cert is not None
        if cert is not None:
            out["delta"] = frac_str(cert.delta)
            out["coefficients"] = {repr(p): frac_str(c)
                                   for p, c in cert.coefficients.items()}
            scale, scaled, sdelta = cert.cleared()
            out["cleared"] = {"scale": scale,
                              "delta": frac_str(sdelta),
                              "coefficients": {repr(p): frac_str(c)
                                               for p, c in scaled.items()}}
    out["edge_density"] = frac_str(edge_density(P))
    _emit(out)


def cmd_row(args):
    P = make(args.poset)
    stats = None
    want_toggle = args.stats and "toggle" in args.stats.split(",")
    if want_toggle:
        from .cde import toggleability
        stats = {}
        for p in P.elements:
            stats[f"T+{p!r}"] = (lambda I, q=p: toggleability(I, q)[0])
            stats[f"T-{p!r}"] = (lambda I, q=p: toggleability(I, q)[1])
    if args.level == "comb":
        obs = row_orbits(P, stats=stats)
    elif args.level.startswith("pp:"):
        obs = pp_orbits(P, int(args.level[3:]), stats=stats)
    else:
        raise SystemExit(f"unknown level {args.level!r}")
    _emit({"poset": args.poset, "level": args.level,
           "orbits": _orbit_rows(obs, with_toggle=want_toggle)})


def cmd_csp(args):
    rec = check_csp(args.poset, args.level)
    _emit({"poset": args.poset, "level": args.level, "ok": rec["pass"],
           "N": rec["values"]["N"], "poly": rec["values"]["poly"],
           "table": [{"k": k, "fixed": fx, "value": v, "ok": fx == v}
                     for k, fx, v in rec["values"]["table"]]})


def cmd_birow(args):
    P = make(args.poset)
    if args.mode == "order":
        rep = detect_order(P, trials=args.trials, seed=args.seed,
                           alpha=Fraction(args.alpha), omega=Fraction(args.omega),
                           cap=args.cap)
        _emit({"poset": args.poset, "period": rep.period, "reason": rep.reason,
               "seed": args.seed, "trials": args.trials,
               "bit_curves": rep.bit_curves})
    else:
        cert = tcde_solve(P)
        if cert is None:
            _emit({"poset": args.poset, "verdict": False,
                   "reason": "no toggle certificate"})
            return
        from .birational import birational_homomesy_check
        rep = birational_homomesy_check(
            P, cert, trials=args.trials, seed=args.seed,
            alpha=Fraction(args.alpha), omega=Fraction(args.omega))
        _emit({"poset": args.poset, "verdict": rep.holds,
               "orbit_lengths": rep.orbit_lengths, "seed": args.seed,
               "details": [{"trial": d["trial"],
                            "orbit_length": d["orbit_length"],
                            "ddeg_product": frac_str(d["ddeg_product"])}
                           for d in rep.details if isinstance(d, dict)]})


def cmd_campaign(args):
    if args.action == "run":
        bounds = {}
        if args.bound_n:
            bounds["max_n"] = args.bound_n
        report = run_campaign(args.suite, seed=args.seed, bounds=bounds,
                              jobs=args.jobs, out=args.out)
        _emit({"suite": args.suite, "steps": len(report.records),
               "pass": report.passed(), "out": args.out,
               "runtime_seconds": round(report.runtime, 3)})
        if not report.passed():
            raise SystemExit(1)
    else:
        problems = verify_report(args.report)
        _emit({"report": args.report, "ok": not problems,
               "problems": [{"line": l, "check": c,
                             "claimed": cl, "recomputed": ac}
                            for l, c, cl, ac in problems]})
        if problems:
            raise SystemExit(1)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="posetdyn",
        description="exact order-ideal dynamics: rowmotion, certificates, "
                    "sieving, birational homomesy")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ppart", help="count or ddeg generating function")
    p.add_argument("mode", choices=["count", "gf"])
    p.add_argument("--poset", required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--excess", type=int)
    p.set_defaults(fn=cmd_ppart)

    p = sub.add_parser("cde", help="down-degree expectation checks")
    p.add_argument("action", choices=["check"])
    p.add_argument("--poset", required=True)
    p.add_argument("--mode", choices=["cde", "mcde", "tcde"], default="tcde")
    p.set_defaults(fn=cmd_cde)

    p = sub.add_parser("row", help="rowmotion orbit tables")
    p.add_argument("action", choices=["orbits"])
    p.add_argument("--poset", required=True)
    p.add_argument("--level", default="comb", help="comb or pp:L")
    p.add_argument("--stats", help="comma list, e.g. ddeg,toggle")
    p.set_defaults(fn=cmd_row)

    p = sub.add_parser("csp", help="cyclic sieving verdicts")
    p.add_argument("--poset", required=True)
    p.add_argument("--level", default="comb", help="comb or pp:L")
    p.add_argument("--poly", default="auto", choices=["auto"])
    p.set_defaults(fn=cmd_csp)

    p = sub.add_parser("birow", help="birational rowmotion experiments")
    p.add_argument("mode", choices=["order", "homomesy"])
    p.add_argument("--poset", required=True)
    p.add_argument("--alpha", default="1")
    p.add_argument("--omega", default="1")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int)
    p.set_defaults(fn=cmd_birow)

    p = sub.add_parser("campaign", help="run or verify a check suite")
    p.add_argument("action", choices=["run", "verify"])
    p.add_argument("report", nargs="?", help="report path (verify)")
    p.add_argument("--suite", default="smoke")
    p.add_argument("--out", help="write line-delimited JSON report here")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--bound-n", type=int)
    p.set_defaults(fn=cmd_campaign)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    args.fn(args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
