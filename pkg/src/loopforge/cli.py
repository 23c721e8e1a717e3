"""Command line interface: catalog listing, verification runs, the
reproduction suite, and exponential-map cross-checks.

Exit codes: 0 success, 1 check failure/mismatch, 2 usage error.
All output is JSON (sorted keys); pass --no-timestamp for byte-identical
reruns of the same configuration.
"""

from __future__ import annotations

import argparse
import json
import sys

from .reports import (RunConfig, UsageError, run_catalog, run_expcheck,
                      run_suite_report, run_verify)
from .suite import ChecksumError


def _parse_params(text: str | None) -> dict:
    if not text:
        return {}
    params = {}
    for chunk in text.split(","):
        if "=" not in chunk:
            raise UsageError(f"malformed parameter {chunk!r}, expected k=v")
        key, value = chunk.split("=", 1)
        try:
            params[key.strip()] = float(value)
        except ValueError as exc:
            raise UsageError(f"non-numeric parameter value {value!r}") from exc
    return params


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopforge",
        description="verification toolkit for sharply transitive sections "
                    "in non-solvable Lie groups")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, desc in (("catalog", "list the reductive-pair catalog"),
                       ("verify", "run property checks on one entry"),
                       ("suite", "run the reproduction suite"),
                       ("expcheck", "cross-check exponential maps")):
        cmd = sub.add_parser(name, help=desc)
        cmd.add_argument("--entry", default=None)
        cmd.add_argument("--param", default=None, metavar="k=v,...")
        cmd.add_argument("--samples", type=int, default=None)
        cmd.add_argument("--seed", type=int, default=0)
        cmd.add_argument("--tol", type=float, default=None)
        cmd.add_argument("--radius", type=float, default=1.0)
        cmd.add_argument("--out", default=None)
        cmd.add_argument("--only", default=None)
        cmd.add_argument("--no-timestamp", action="store_true")
    return parser


_DEFAULT_SAMPLES = {"catalog": 200, "verify": 200, "suite": 200,
                    "expcheck": 1000}

_RUNNERS = {"catalog": run_catalog, "verify": run_verify,
            "suite": run_suite_report, "expcheck": run_expcheck}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        samples = (args.samples if args.samples is not None
                   else _DEFAULT_SAMPLES[args.command])
        config = RunConfig(seed=args.seed, samples=samples, tol=args.tol,
                           radius=args.radius, entry=args.entry,
                           params=_parse_params(args.param), out=args.out,
                           only=args.only, timestamp=not args.no_timestamp)
        report, ok = _RUNNERS[args.command](config)
    except UsageError as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True),
              file=sys.stderr)
        return 2
    except ChecksumError as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True),
              file=sys.stderr)
        return 1
    text = json.dumps(report, sort_keys=True, indent=2)
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
