"""Command line entry point: ``stablecohom {betti,ring,verify}``."""
from __future__ import annotations

import argparse
import json
import sys

from . import pipeline as pl
from .groebner import hilbert_series, krull_dimension, quotient_vector_dimension
from .series import expand_to, structural_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stablecohom",
                     description="Betti numbers and cohomology rings of low-degree stable map spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("betti", help="Poincaré polynomial for degree 2 or 3")
    b.add_argument("--degree", type=int, choices=(2, 3), required=True)
    b.add_argument("--n", type=int, required=True, help="target is P^(n-1); n >= 2")
    b.add_argument("--expand", type=int, default=None, metavar="E",
                   help="also list Betti numbers up to t^E (E even)")
    b.add_argument("--format", choices=("text", "json"), default="text")

    r = sub.add_parser("ring", help="cohomology ring presentation")
    r.add_argument("--degree", type=int, choices=(2, 3), required=True)
    which = r.add_mutually_exclusive_group(required=True)
    which.add_argument("--n", type=int)
    which.add_argument("--infinite", action="store_true")
    r.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=pl.SUITES + ("all",), default="all")
    v.add_argument("--n-max", type=int, default=4, help="largest n for Gröbner checks (default 4)")
    v.add_argument("--betti-n-max", type=int, default=8,
                   help="largest n for Betti identities (default 8)")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", default=None, help="also write the JSON report here")
    return parser


def _emit(payload: dict, text: str, fmt: str):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_betti(args) -> int:
    if args.n < 2:
        raise _UsageError("--n must be >= 2")
    if args.expand is not None and (args.expand < 0 or args.expand % 2):
        raise _UsageError("--expand must be a nonnegative even integer")
    fn = pl.degree2_betti if args.degree == 2 else pl.degree3_betti
    try:
        series = fn(args.n)
    except pl.VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    closed = pl.degree2_closed_form(args.n) if args.degree == 2 else pl.degree3_closed_form(args.n)
    payload = {"degree": args.degree, "n": args.n, "series": series.to_json(),
               "closed_form": str(closed), "checks": structural_checks(series)}
    lines = []
    if args.expand is not None:
        coeffs = expand_to(series, args.expand)
        payload["betti"] = coeffs
        lines.append("[" + ",".join(map(str, coeffs)) + "]")
    lines.append(f"P_t = {series}")
    lines.append(f"closed form: {closed}")
    _emit(payload, "\n".join(lines), args.format)
    return EXIT_OK


def cmd_ring(args) -> int:
    if args.degree == 2:
        if args.infinite:
            raise _UsageError("degree 2 supports only finite --n")
        if args.n < 2:
            raise _UsageError("--n must be >= 2")
        pres = pl.degree2_presentation(args.n)
        expected = pl.degree2_betti(args.n)
        picard = pl.picard_group(2, args.n)
    elif args.infinite:
        pres = pl.degree3_infinite_presentation()
        expected = pl.degree3_limit_series()
        picard = None
    else:
        if args.n != 2:
            raise _UsageError("degree-3 rings are available for --n 2 and --infinite only")
        pres = pl.degree3_p1_presentation()
        expected = pl.degree3_betti(2)
        picard = pl.picard_group(3, 2)
    gb = pres.groebner_basis()
    hs = hilbert_series(gb)
    dim = quotient_vector_dimension(gb)
    payload = {**pres.to_json(), "groebner_basis": gb.to_text(), "digest": gb.digest(),
               "hilbert_series": hs.to_json(), "matches_betti": hs == expected,
               "krull_dimension": krull_dimension(gb),
               "vector_dimension": "inf" if dim == float("inf") else dim}
    if picard is not None:
        payload["picard_group"] = picard
    text = [f"{pres.label}: {pres.ring} / <"]
    text += [f"    {rel}," for rel in payload["relations"]]
    text.append(">")
    text.append(f"Groebner basis: {', '.join(payload['groebner_basis'])}")
    text.append(f"Hilbert series: {hs}")
    text.append(f"matches Poincaré series: {payload['matches_betti']}")
    if picard is not None:
        text.append(f"Picard group: {picard['value']} ({picard['status']})")
    _emit(payload, "\n".join(text), args.format)
    return EXIT_OK if payload["matches_betti"] else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.n_max < 2 or args.betti_n_max < 2:
        raise _UsageError("--n-max and --betti-n-max must be >= 2")
    report = pl.run_suite(args.suite, n_max=args.n_max, betti_n_max=args.betti_n_max)
    data = report.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
    _emit(data, report.to_text(), args.format)
    return EXIT_OK if report.passed else EXIT_FAIL


class _UsageError(Exception):
    pass


COMMANDS = {"betti": cmd_betti, "ring": cmd_ring, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage, 0 on --help
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"stablecohom {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
