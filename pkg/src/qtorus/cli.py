"""Command-line front end: ``qtorus element|series|verify``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence, Tuple

from . import series as series_mod
from .families import ROUTES, ElementBuilder, Family, UsageError
from .suites import SUITES, run_suite
from .torus import ZERO_ELEMENT, render

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_ENV = "QTORUS_MAX"

SERIES_KINDS = {
    "theta-prime": series_mod.build_theta_prime_series,
    "theta": series_mod.build_theta_series,
    "h-prime": None,
    "h": None,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _int_range(text: str) -> Tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qtorus", description="Exact computation in the quantum torus T_q.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("element", help="print one family element")
    e.add_argument("family", help=", ".join(f.value for f in Family))
    e.add_argument("index", help="integer index")
    e.add_argument("--route", default=None, help="construction route (default: closed)")
    e.add_argument("--format", choices=("text", "json"), default="text")

    s = sub.add_parser("series", help="print generating-function coefficients")
    s.add_argument("kind", choices=sorted(SERIES_KINDS))
    s.add_argument("--order", type=_positive, default=series_mod.DEFAULT_ORDER)
    s.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="run identity suites")
    v.add_argument("--suite", action="append", dest="suites", metavar="NAME",
                   help="suite to run (repeatable); default all of: " + ", ".join(SUITES))
    v.add_argument("--max", type=_positive, default=None, help="size parameter for every selected suite")
    v.add_argument("--range", type=_int_range, default=None, dest="r_range", metavar="LO..HI",
                   help="r, s range for prop68 and section15")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--jobs", type=_positive, default=1, help="suites run concurrently")
    return p


def _cmd_element(args) -> int:
    family = Family.parse(args.family)
    try:
        index = int(args.index)
    except ValueError:
        raise UsageError(f"malformed index {args.index!r}")
    route = args.route or ("closed" if "closed" in ROUTES[family] else ROUTES[family][0])
    if route not in ROUTES[family]:
        raise UsageError(f"family {family.value} has routes {', '.join(ROUTES[family])}")
    elem = ElementBuilder().build(family, index, route)
    print(render(elem, args.format))
    return EXIT_PASS


def _cmd_series(args) -> int:
    order = args.order
    build = SERIES_KINDS[args.kind]
    if build is not None:
        ser = build(order)
    else:
        fam = Family.H_PRIME if args.kind == "h-prime" else Family.H
        b = ElementBuilder(series_order=order)
        ser = series_mod.TruncatedSeries.from_coeffs(
            [ZERO_ELEMENT] + [b.build(fam, n, "series") for n in range(1, order + 1)], order
        )
    if args.format == "json":
        print(json.dumps(series_mod.to_json(ser), sort_keys=True))
    else:
        for n, c in enumerate(ser.coeffs):
            print(f"t^{n}: {render(c)}")
    return EXIT_PASS


def _env_max() -> Tuple[Optional[int], str]:
    raw = os.environ.get(MAX_ENV)
    if raw is None:
        return None, "defaults"
    try:
        v = int(raw)
        if v < 1:
            raise ValueError
    except ValueError:
        raise UsageError(f"{MAX_ENV} must be a positive integer, got {raw!r}")
    return v, f"{MAX_ENV}={v}"


def _run_one(job):
    name, max_value, r_range = job
    return run_suite(name, max_value=max_value, r_range=r_range)


def _cmd_verify(args) -> int:
    names = args.suites or list(SUITES)
    for n in names:
        if n not in SUITES:
            raise UsageError(f"unknown suite {n!r}; choose from {', '.join(SUITES)}")
    names = list(dict.fromkeys(names))
    env_max, source = _env_max()
    max_value = args.max if args.max is not None else env_max
    if args.max is not None:
        source = f"--max {args.max}"
    jobs = [(n, max_value, args.r_range) for n in names]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(args.jobs, len(jobs))) as pool:
            reports = list(pool.map(_run_one, jobs))
    else:
        reports = [_run_one(j) for j in jobs]
    reports.sort(key=lambda r: r.suite)
    ok = all(r.passed for r in reports)
    header = {"max": max_value, "max_source": source,
              "range": list(args.r_range) if args.r_range else None}
    if args.format == "json":
        print(json.dumps({"header": header, "reports": [r.to_json() for r in reports]}, sort_keys=True))
    else:
        print(f"# qtorus verify  max: {max_value if max_value is not None else 'suite defaults'} ({source})")
        for r in reports:
            print(r.line())
        print(f"# {'all passed' if ok else 'FAILED'}: {sum(r.passed for r in reports)}/{len(reports)} suites")
    return EXIT_PASS if ok else EXIT_FAIL


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    handler = {"element": _cmd_element, "series": _cmd_series, "verify": _cmd_verify}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"qtorus: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
