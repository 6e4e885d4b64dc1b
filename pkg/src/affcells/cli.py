"""Command-line entry point: verification runs and single-object calculators."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time

from .affine_perm import from_window
from .rmatrix import r_two_row
from .rs import StabilizationFailure, affine_p, affine_q
from .schuetzenberger import affine_omega
from .shapes import Tabloid
from .symfun import GREEN_CACHE, green_polynomial
from . import verify

CSV_COLUMNS = ["n", "lambda", "rsyt_total", "fixed_count", "green_value", "match"]


def _ints(text: str) -> list[int]:
    text = text.strip()
    return [int(x) for x in text.split(",")] if text else []


def _rows(text: str) -> list[list[int]]:
    return [_ints(part) for part in text.split("|")]


def _emit(report: verify.Report, fmt: str, out: str | None) -> int:
    if fmt == "csv":
        buf = io.StringIO()
        rows = report.rows
        columns = CSV_COLUMNS if report.command == "verify-main" else list(rows[0]) if rows else []
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow(
                ",".join(map(str, row[c])) if isinstance(row.get(c), list) else row.get(c, "")
                for c in columns
            )
        text = buf.getvalue()
    else:
        text = json.dumps(report.to_json(), indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.all_match else 1


def _add_report_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument(
        "--timing",
        action="store_true",
        help="record wall time in elapsed_ms (otherwise 0, keeping reports byte-reproducible)",
    )


def _run(args, build) -> int:
    start = time.perf_counter()
    report = build()
    elapsed = int((time.perf_counter() - start) * 1000)
    logging.getLogger(__name__).info("%s finished in %d ms", report.command, elapsed)
    if args.timing:
        report.elapsed_ms = elapsed
    return _emit(report, args.format, args.out)


def cmd_verify_main(args) -> int:
    lambdas = [_ints(x) for x in args.lam.split(";")] if args.lam else None
    return _run(
        args,
        lambda: verify.verify_main_theorem(args.n_max, lambdas=lambdas, jobs=args.jobs, cache_dir=args.cache_dir),
    )


def cmd_verify_prop_str(args) -> int:
    return _run(args, lambda: verify.verify_prop_str(args.n_max))


def cmd_verify_prop_grind(args) -> int:
    GREEN_CACHE.attach(args.cache_dir)
    code = _run(args, lambda: verify.verify_prop_grind(args.n_max))
    GREEN_CACHE.flush()
    return code


def cmd_verify_rs_omega(args) -> int:
    return _run(args, lambda: verify.verify_rs_omega(_ints(args.n_list), args.samples, args.seed))


def cmd_verify_evac_domino(args) -> int:
    return _run(args, lambda: verify.verify_evacuation_domino(args.n_max))


def cmd_green(args) -> int:
    GREEN_CACHE.attach(args.cache_dir)
    poly = green_polynomial(_ints(args.lam), _ints(args.rho))
    GREEN_CACHE.flush()
    print(json.dumps(list(poly.coeffs)))
    return 0


def cmd_omega(args) -> int:
    t = Tabloid.from_rows(_rows(args.tabloid))
    if t.n != args.n:
        raise SystemExit(f"tabloid has {t.n} entries, expected {args.n}")
    image = affine_omega(t)
    print(json.dumps({"omega": image.to_json(), "fixed": image == t}))
    return 0


def cmd_rmatrix(args) -> int:
    rows = _rows(args.rows)
    if len(rows) != 2:
        raise SystemExit("--rows takes exactly two rows, 'top|bottom'")
    top, bottom = r_two_row(rows[0], rows[1])
    print(json.dumps([list(top), list(bottom)]))
    return 0


def cmd_affine_rs(args) -> int:
    w = from_window(args.n, _ints(args.window))
    try:
        q = affine_q(w)
        p = affine_p(w)
    except StabilizationFailure as exc:
        print(json.dumps({"error": str(exc)}))
        return 1
    print(json.dumps({"P": p.to_json(), "Q": q.to_json(), "shape": list(q.shape)}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="affcells", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-main", help="fixed-tabloid counts against Green values at -1")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--lambda", dest="lam", help='restrict to partitions, e.g. "3,1;2,2"')
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache-dir")
    _add_report_args(p)
    p.set_defaults(func=cmd_verify_main)

    p = sub.add_parser("verify-prop-str", help="fixed-count recursion under adding (k,k)")
    p.add_argument("--n-max", type=int, default=8)
    _add_report_args(p)
    p.set_defaults(func=cmd_verify_prop_str)

    p = sub.add_parser("verify-prop-grind", help="power-sum identity and Green recursion")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--cache-dir")
    _add_report_args(p)
    p.set_defaults(func=cmd_verify_prop_grind)

    p = sub.add_parser("verify-rs-omega", help="omega(Q(w)) == Q(omega(w)) on random w")
    p.add_argument("--n-list", default="2,3,4,5")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    _add_report_args(p)
    p.set_defaults(func=cmd_verify_rs_omega)

    p = sub.add_parser("verify-evac-domino", help="self-evacuating SYT vs domino tableaux")
    p.add_argument("--n-max", type=int, default=8)
    _add_report_args(p)
    p.set_defaults(func=cmd_verify_evac_domino)

    p = sub.add_parser("green", help="coefficients of a Green polynomial")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--cache-dir")
    p.set_defaults(func=cmd_green)

    p = sub.add_parser("omega", help="affine Schuetzenberger involution of a tabloid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tabloid", required=True, help='rows as "1,3|2"')
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("rmatrix", help="combinatorial R-matrix on two rows")
    p.add_argument("--rows", required=True, help='"3,4,6,7|1,2,5"')
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("affine-rs", help="generalized RS of a window")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", required=True)
    p.set_defaults(func=cmd_affine_rs)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
