"""Command-line front end: predict, verify, witness.

Reports go to standard output (or --out PATH); progress lines for long
runs go to standard error, one per form-space percentile, so output
stays pipeline-safe.  Codeword counts are serialized as decimal strings
in JSON, never floats and never truncated to machine words.

Exit status contract: 0 success (and, for verify, oracle equal to the
prediction), 1 internal error or mismatch, 2 usage error, 3 budget
refusal.
"""

from __future__ import annotations

import argparse
import json
import sys

from .codes import build_code
from .engine import TIER_BUDGETS, BudgetExceeded, brute_work, default_workers, verify
from .fields import make_field, split_prime_power
from .hermitian import (DEFAULT_WITNESS_BOUND, cayley_spectrum, rank1_count,
                        verify_isomorphism)
from .spectra import WeightDistribution, predict


def _distribution_doc(dist: WeightDistribution) -> dict:
    return {
        "q": dist.q,
        "m": dist.m,
        "family": dist.family,
        "n": dist.n,
        "k": dist.k,
        "d": dist.d,
        "distribution": [[w, str(c)] for w, c in dist.pairs()],
    }


def _distribution_csv(dist: WeightDistribution) -> str:
    lines = ["weight,count"] + [f"{w},{c}" for w, c in dist.pairs()]
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _progress_printer(threshold: int = 2**26):
    state = {"pct": -1, "armed": False, "threshold": threshold}

    def cb(done, total):
        pct = int(100 * done / total)
        if pct > state["pct"]:
            state["pct"] = pct
            if state["armed"]:
                print(f"progress: {pct}%", file=sys.stderr, flush=True)

    return state, cb


def _read_config(path: str | None) -> dict:
    config: dict[str, int] = {}
    if not path:
        return config
    allowed = {"workers", "quick_budget", "standard_budget", "extended_budget",
               "witness_budget"}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in allowed:
                raise ValueError(f"unknown config key {key!r}")
            config[key] = int(value.strip())
    return config


def _resolve_q(parser: argparse.ArgumentParser, args) -> tuple[int, int]:
    """(p, e) from --q or --p/--e; usage error if inconsistent."""
    if args.q is not None:
        if args.p is not None or args.e is not None:
            parser.error("give either --q or --p/--e, not both")
        try:
            return split_prime_power(args.q)
        except ValueError as exc:
            parser.error(str(exc))
    if args.p is None:
        parser.error("one of --q or --p is required")
    try:
        p, e = split_prime_power(args.p)
    except ValueError:
        parser.error(f"{args.p} is not prime")
    if e != 1:
        parser.error(f"--p {args.p} is not prime")
    return args.p, args.e if args.e is not None else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="traceweight",
        description="Three families of cyclic codes: predicted weight "
                    "distributions and brute-force verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p_):
        p_.add_argument("--q", type=int, help="field size, a prime power")
        p_.add_argument("--p", type=int, help="characteristic (with --e)")
        p_.add_argument("--e", type=int, help="extension degree of q over p")
        p_.add_argument("--m", type=int, required=True, help="half the extension degree s = 2m")
        p_.add_argument("--out", help="write the report to this file instead of stdout")
        p_.add_argument("--config", help="key=value file for budgets and worker count")

    p_pred = sub.add_parser("predict", help="closed-form weight distribution")
    common(p_pred)
    p_pred.add_argument("--family", choices="CDE", required=True)
    p_pred.add_argument("--format", choices=("json", "csv"), default="json")

    p_ver = sub.add_parser("verify", help="prediction vs. enumeration oracle")
    common(p_ver)
    p_ver.add_argument("--family", choices="CDE", required=True)
    p_ver.add_argument("--tier", choices=tuple(TIER_BUDGETS), default="quick")
    p_ver.add_argument("--format", choices=("json", "csv"), default="json")
    p_ver.add_argument("--workers", type=int, help="worker processes "
                       "(default: machine parallelism)")
    p_ver.add_argument("--modulus-rank", type=int, default=0,
                       help="use the k-th smallest primitive modulus instead")

    p_wit = sub.add_parser("witness", help="Hermitian-matrix graph checks")
    common(p_wit)
    return parser


def cmd_predict(args, p: int, e: int) -> int:
    dist = predict(p**e, args.m, args.family)
    if args.format == "csv":
        _emit(_distribution_csv(dist), args.out)
    else:
        _emit(json.dumps(_distribution_doc(dist), indent=2) + "\n", args.out)
    return 0


def cmd_verify(args, p: int, e: int, config: dict) -> int:
    budgets = dict(TIER_BUDGETS)
    for tier in budgets:
        if f"{tier}_budget" in config:
            budgets[tier] = config[f"{tier}_budget"]
    workers = args.workers or config.get("workers") or default_workers()
    state, cb = _progress_printer()
    ctx = make_field(p, e, 2 * args.m, args.modulus_rank)
    state["armed"] = brute_work(build_code(ctx, args.family)) >= state["threshold"]
    try:
        report = verify(p**e, args.m, args.family, tier=args.tier,
                        workers=workers, modulus_rank=args.modulus_rank,
                        budgets=budgets, progress=cb)
    except BudgetExceeded as exc:
        doc = {
            "q": p**e, "m": args.m, "family": args.family, "tier": args.tier,
            "refused": True, "work_estimate": exc.estimate, "budget": exc.budget,
            "message": str(exc),
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return 3
    if args.format == "csv":
        _emit(_distribution_csv(report.oracle), args.out)
    else:
        doc = {
            "q": report.q, "m": report.m, "family": report.family,
            "tier": report.tier, "oracle_kind": report.oracle_kind,
            "equal": report.equal, "first_diff": report.first_diff,
            "runtime_seconds": round(report.runtime_seconds, 3),
            "work_count": report.work_count, "workers": report.workers,
            "predicted": _distribution_doc(report.predicted),
            "oracle": _distribution_doc(report.oracle),
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0 if report.equal else 1


def cmd_witness(args, p: int, e: int, config: dict) -> int:
    budget = config.get("witness_budget", DEFAULT_WITNESS_BOUND)
    ctx = make_field(p, e, 2 * args.m)
    try:
        spectrum = cayley_spectrum(ctx, budget)
        r1 = rank1_count(ctx, budget)
        iso = verify_isomorphism(ctx, budget)
    except BudgetExceeded as exc:
        doc = {"q": p**e, "m": args.m, "refused": True,
               "work_estimate": exc.estimate, "budget": exc.budget,
               "message": str(exc)}
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return 3
    ordered = sorted(spectrum.items(), key=lambda kv: (-abs(kv[0]), -kv[0]))
    doc = {
        "q": p**e, "m": args.m,
        "hermitian_count": (p**e) ** (args.m**2),
        "rank1_count": r1,
        "spectrum": [[eig, mult] for eig, mult in ordered],
        "isomorphism_ok": iso.ok,
    }
    if iso.notes:
        doc["isomorphism_notes"] = iso.notes
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _read_config(args.config)
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    p, e = _resolve_q(parser, args)
    if args.m < 1:
        parser.error("--m must be >= 1")
    try:
        if args.command == "predict":
            return cmd_predict(args, p, e)
        if args.command == "verify":
            return cmd_verify(args, p, e, config)
        if args.command == "witness":
            return cmd_witness(args, p, e, config)
    except BudgetExceeded as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # noqa: BLE001 - contract: internal errors exit 1
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
