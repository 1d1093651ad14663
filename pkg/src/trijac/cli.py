"""Command line harness: suite selection, polynomial evaluation, reports.

Rationals cross this boundary as "p/q" strings so exactness survives
end-to-end; only the convergence knobs (--limit-tol, --limit-ratio) accept
decimal literals, which are parsed to exact fractions.  JSON reports are
versioned and deterministic given the configuration; the timing metadata
(timestamp, elapsed_ms) is the only run-dependent content.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from .askey_wilson import aw_value
from .jacobi import gegenbauer, jacobi
from .poly import Poly
from .reporting import VerificationReport
from .sampling import RedrawCapError
from .suites import SUITE_NAMES, SuiteConfig, run_suite

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_REDRAW_CAP = 3

CONFIG_KEYS = {
    "suite": str,
    "n_max": int,
    "window": int,
    "base_index": int,
    "samples": int,
    "seed": int,
    "series_order": int,
    "format": str,
    "limit_ratio": Fraction,
    "limit_tol": Fraction,
}


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trijac",
        description="Exact verification of triangular-matrix polynomial identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", choices=SUITE_NAMES, default=None)
    verify.add_argument("--n-max", type=int, default=None)
    verify.add_argument("--window", type=int, default=None)
    verify.add_argument("--base-index", type=int, default=None)
    verify.add_argument("--samples", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--series-order", type=int, default=None)
    verify.add_argument("--format", choices=("json", "text"), default=None)
    verify.add_argument("--limit-tol", type=_rational, default=None)
    verify.add_argument("--limit-ratio", type=_rational, default=None)
    verify.add_argument("--config", type=Path, default=None)

    evaluate = sub.add_parser("eval", help="print one polynomial or value exactly")
    evaluate.add_argument("kind", choices=("jacobi", "gegenbauer", "aw"))
    evaluate.add_argument("--n", type=int, required=True)
    evaluate.add_argument("--alpha", type=_rational)
    evaluate.add_argument("--beta", type=_rational)
    evaluate.add_argument("--lambda", dest="lam", type=_rational)
    evaluate.add_argument("--at", type=_rational, default=None)
    evaluate.add_argument("--a1", type=_rational)
    evaluate.add_argument("--a2", type=_rational)
    evaluate.add_argument("--a3", type=_rational)
    evaluate.add_argument("--a4", type=_rational)
    evaluate.add_argument("--q", type=_rational)
    evaluate.add_argument("--z", type=_rational)
    return parser


def load_config_file(path: Path) -> dict:
    """Flat key=value pairs; '#' starts a comment; flags override these."""
    values: dict = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, text = line.partition("=")
        key = key.strip().replace("-", "_")
        text = text.strip()
        if key not in CONFIG_KEYS:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        caster = CONFIG_KEYS[key]
        values[key] = caster(text)
    return values


def resolve_config(args: argparse.Namespace) -> SuiteConfig:
    cfg = SuiteConfig()
    if args.config is not None:
        cfg = replace(cfg, **load_config_file(args.config))
    overrides = {
        "suite": args.suite,
        "n_max": args.n_max,
        "window": args.window,
        "base_index": args.base_index,
        "samples": args.samples,
        "seed": args.seed,
        "series_order": args.series_order,
        "format": args.format,
        "limit_tol": args.limit_tol,
        "limit_ratio": args.limit_ratio,
    }
    return replace(cfg, **{k: v for k, v in overrides.items() if v is not None})


def report_payload(
    cfg: SuiteConfig, report: VerificationReport, echo: dict, elapsed_ms: int
) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "suite": cfg.suite,
        "config_echo": {
            "suite": cfg.suite,
            "seed": cfg.seed,
            "series_order": cfg.series_order,
            "limit_ratio": str(cfg.limit_ratio),
            "limit_tol": str(cfg.limit_tol),
            "resolved": echo,
        },
        "cases": [case.as_json() for case in report.cases],
        "summary": {
            "pass": report.pass_count,
            "fail": report.fail_count,
            "skipped": report.skip_count,
        },
        "elapsed_ms": elapsed_ms,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


def render_text(payload: dict) -> str:
    lines = [f"suite: {payload['suite']}"]
    for case in payload["cases"]:
        lines.append(f"  [{case['status']}] {case['case_id']}")
        if case["status"] == "FAIL" and "counterexample" in case:
            lines.append(f"      params: {case['params']}")
            lines.append(f"      counterexample: {case['counterexample']}")
    summary = payload["summary"]
    lines.append(
        f"summary: {summary['pass']} passed, {summary['fail']} failed, "
        f"{summary['skipped']} skipped ({payload['elapsed_ms']} ms)"
    )
    return "\n".join(lines) + "\n"


def command_verify(args: argparse.Namespace) -> int:
    try:
        cfg = resolve_config(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.suite not in SUITE_NAMES:
        print(f"error: unknown suite {cfg.suite!r}", file=sys.stderr)
        return EXIT_USAGE
    started = time.monotonic()
    try:
        report, echo = run_suite(cfg)
    except RedrawCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REDRAW_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed_ms = int((time.monotonic() - started) * 1000)
    payload = report_payload(cfg, report, echo, elapsed_ms)
    if cfg.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(render_text(payload), end="")
    return EXIT_OK if report.ok else EXIT_FAILURES


def _format_poly(p: Poly) -> str:
    if p.is_zero:
        return "0"
    return " ".join(str(c) for c in p.coeffs)


def command_eval(args: argparse.Namespace) -> int:
    try:
        if args.kind == "jacobi":
            if args.alpha is None or args.beta is None:
                raise ValueError("jacobi needs --alpha and --beta")
            poly = jacobi(args.n, args.alpha, args.beta)
        elif args.kind == "gegenbauer":
            if args.lam is None:
                raise ValueError("gegenbauer needs --lambda")
            poly = gegenbauer(args.n, args.lam)
        else:
            required = (args.a1, args.a2, args.a3, args.a4, args.q, args.z)
            if any(v is None for v in required):
                raise ValueError("aw needs --a1 --a2 --a3 --a4 --q and --z")
            print(aw_value(args.n, required[:4], args.q, args.z))
            return EXIT_OK
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.at is not None:
        print(poly(args.at))
    else:
        print(_format_poly(poly))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return command_verify(args)
    return command_eval(args)


if __name__ == "__main__":
    sys.exit(main())
