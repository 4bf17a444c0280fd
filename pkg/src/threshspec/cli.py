"""threshspec command-line interface.

    threshspec <verb> [sequence | --n INT] [--x FLOAT] [--tol FLOAT] [--trace]
               [--samples INT] [--jobs INT] [--format json|csv] [--out PATH]

Output is JSON on stdout unless ``--format csv`` or ``--out`` say otherwise.
Floats are written with 12 significant digits so identical invocations give
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import oracle, spectra, verify
from .diagonalize import ZERO_TOL, diagonalize
from .exceptions import ThreshspecError
from .sequences import adjacency, anti_regular, from_text

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _round(obj):
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return None
        return float(format(obj, ".12g")) + 0.0
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def _num(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def _to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_num(v) for v in row])
    return buf.getvalue()


def _dump(payload) -> str:
    return json.dumps(_round(payload)) + "\n"


def _seq_arg(parser, args):
    if not args.sequence:
        parser.error("a creation sequence is required")
    try:
        return from_text(" ".join(args.sequence))
    except ThreshspecError as exc:
        parser.error(f"sequence: {exc}")


def _connected_arg(parser, args):
    seq = _seq_arg(parser, args)
    if seq.n < 2 or not seq.connected:
        parser.error(f"sequence: {seq.bits} is not connected (needs n >= 2 and a final 1)")
    return seq


def cmd_diag(parser, args):
    seq = _seq_arg(parser, args)
    sigma = 0.0 - args.x
    tr = diagonalize(seq, sigma, trace=args.trace, zero_tol=args.zero_tol)
    if args.trace:
        return EXIT_OK, _dump(tr.to_dict())
    c = tr.counts()
    payload = {
        "seq": seq.bits,
        "x": args.x,
        "sigma": sigma,
        "final_diagonal": list(tr.final_diagonal),
        "signs": tr.sign_pattern,
        "counts": {"greater": c.greater, "equal": c.equal, "less": c.less},
    }
    return EXIT_OK, _dump(payload)


def cmd_spectrum(parser, args):
    seq = _connected_arg(parser, args)
    summary = spectra.spectral_summary(seq, args.tol, args.max_iter)
    return EXIT_OK, _dump({"seq": seq.bits, **summary.to_dict()})


def cmd_inertia(parser, args):
    seq = _connected_arg(parser, args)
    diag = spectra.inertia_by_diagonalization(seq)
    counted = spectra.inertia_by_counting(seq)
    payload = {
        "seq": seq.bits,
        **diag.to_dict(),
        "substring_counts": counted.to_dict(),
        "n_minus_one_first_bit_matched": spectra.minus_one_by_counting(seq),
    }
    return EXIT_OK, _dump(payload)


def cmd_oracle(parser, args):
    seq = _seq_arg(parser, args)
    spec = oracle.eigenvalues(adjacency(seq))
    payload = spec.to_dict()
    if args.x is not None:
        c = oracle.count_relative(spec, args.x)
        payload["counts"] = {"greater": c.greater, "equal": c.equal, "less": c.less}
    return EXIT_OK, _dump(payload)


def cmd_verify(parser, args):
    report = verify.verify_conjecture(args.n, args.tol, jobs=args.jobs)
    code = EXIT_OK if report.verdict else EXIT_FAILED
    if args.format == "csv":
        rows = [(g.seq, g.lambda_plus, g.lambda_minus) for g in report.graphs]
        return code, _to_csv(["seq", "lambda_plus", "lambda_minus"], rows)
    return code, _dump(report.to_dict())


def cmd_critical(parser, args):
    rows = verify.verify_critical_cases(args.n, args.tol)
    code = EXIT_OK if all(r.dominated_by_anti_regular for r in rows) else EXIT_FAILED
    if args.format == "csv":
        return code, _to_csv(
            ["seq", "lambda_plus", "lambda_minus", "margin", "dominated"],
            [(r.seq, r.lambda_plus, r.lambda_minus, r.margin, r.dominated_by_anti_regular) for r in rows],
        )
    payload = {
        "n": args.n,
        "anti_regular": anti_regular(args.n).bits,
        "compared": "lambda_minus" if args.n % 2 == 0 else "lambda_plus",
        "cases": [
            {
                "seq": r.seq,
                "lambda_plus": r.lambda_plus,
                "lambda_minus": r.lambda_minus,
                "margin": r.margin,
                "dominated": r.dominated_by_anti_regular,
            }
            for r in rows
        ],
    }
    return code, _dump(payload)


def cmd_chain(parser, args):
    if args.n % 2 == 0:
        check = verify.even_minus_chain(args.n, args.tol)
    else:
        check = verify.odd_plus_chain(args.n, args.tol)
    code = EXIT_OK if check.holds else EXIT_FAILED
    if args.format == "csv":
        return code, _to_csv(["position", "seq", "value"],
                             [(i + 1, s, v) for i, (s, v) in enumerate(zip(check.sequences, check.values))])
    return code, _dump(check.to_dict())


def cmd_antiregular(parser, args):
    seq = anti_regular(args.n)
    if args.emit == "sequence":
        return EXIT_OK, _dump({"n": args.n, "seq": seq.bits})
    if args.emit == "inertia":
        inertia = spectra.inertia_by_counting(seq)
        return EXIT_OK, _dump({"n_plus": inertia.n_plus, "n_zero": inertia.n_zero, "n_minus": inertia.n_minus})
    if args.emit == "spectrum":
        summary = spectra.spectral_summary(seq, args.tol)
        return EXIT_OK, _dump({"seq": seq.bits, **summary.to_dict()})
    checks = verify.verify_sign_pattern(args.n, args.samples, seed=args.seed, tol=args.tol)
    code = EXIT_OK if all(c.match for c in checks) else EXIT_FAILED
    if args.format == "csv":
        return code, _to_csv(["y", "expected", "observed", "match"],
                             [(c.y, c.expected, c.observed, c.match) for c in checks])
    payload = {
        "n": args.n,
        "expected": verify.expected_sign_pattern(args.n),
        "samples": [{"y": c.y, "observed": c.observed, "match": c.match} for c in checks],
        "mismatches": sum(1 for c in checks if not c.match),
    }
    return code, _dump(payload)


def _positive_float(text):
    v = float(text)
    if not v > 0 or not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be a positive finite number, got {text}")
    return v


def _finite_float(text):
    v = float(text)
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be finite, got {text}")
    return v


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threshspec",
        description="Eigenvalue counting and localization for threshold graphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def common_out(p, csv_ok=False):
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
        if csv_ok:
            p.add_argument("--format", choices=["json", "csv"], default="json", help="output format (default json)")

    def seq_arg(p):
        p.add_argument("sequence", nargs="+",
                       help='creation sequence, raw bits ("0101") or run-length tokens ("0^2 1 0 1")')

    def tol_arg(p):
        p.add_argument("--tol", type=_positive_float, default=spectra.DEFAULT_TOL,
                       help="bisection tolerance (default 1e-9)")

    p = sub.add_parser("diag", help="run the diagonalization at eigenvalue threshold x")
    seq_arg(p)
    p.add_argument("--x", type=_finite_float, required=True, help="eigenvalue threshold; the loop runs at sigma = -x")
    p.add_argument("--trace", action="store_true", help="emit alpha-sequence and subcase log")
    p.add_argument("--zero-tol", type=_positive_float, default=ZERO_TOL, help="|d| below this counts as zero (default 1e-9)")
    common_out(p)
    p.set_defaults(func=cmd_diag)

    p = sub.add_parser("spectrum", help="locate lambda^+ and lambda^- by bisection")
    seq_arg(p)
    tol_arg(p)
    p.add_argument("--max-iter", type=_positive_int, default=spectra.MAX_ITER, help="bisection step cap (default 200)")
    common_out(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("inertia", help="inertia by diagonalization, with substring counts alongside")
    seq_arg(p)
    common_out(p)
    p.set_defaults(func=cmd_inertia)

    p = sub.add_parser("oracle", help="full spectrum from the Jacobi eigensolver")
    seq_arg(p)
    p.add_argument("--x", type=_finite_float, default=None, help="also count eigenvalues relative to x")
    common_out(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="exhaustive check of A_n against all connected graphs of order n")
    p.add_argument("--n", type=int, required=True, help="graph order")
    tol_arg(p)
    p.add_argument("--jobs", type=_positive_int, default=1, help="worker processes (default 1)")
    common_out(p, csv_ok=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("critical", help="compare the n-2 critical graphs against A_n")
    p.add_argument("--n", type=int, required=True, help="graph order (>= 5)")
    tol_arg(p)
    common_out(p, csv_ok=True)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("antiregular", help="properties of the anti-regular graph A_n")
    p.add_argument("--n", type=int, required=True, help="graph order (>= 2)")
    p.add_argument("--emit", choices=["sequence", "inertia", "spectrum", "signs"], default="sequence",
                   help="what to print (default sequence)")
    p.add_argument("--samples", type=_positive_int, default=20, help="probes for --emit signs (default 20)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed for --emit signs (default 0)")
    tol_arg(p)
    common_out(p, csv_ok=True)
    p.set_defaults(func=cmd_antiregular)

    p = sub.add_parser("chain", help="ordered lambda chains over the critical family")
    p.add_argument("--n", type=int, required=True, help="even n >= 8 or odd n >= 5")
    tol_arg(p)
    common_out(p, csv_ok=True)
    p.set_defaults(func=cmd_chain)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "format", "json") == "csv" and args.verb == "antiregular" and args.emit != "signs":
        parser.error("--format csv is only available with --emit signs")
    try:
        code, text = args.func(parser, args)
    except ThreshspecError as exc:
        parser.error(str(exc))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv=None):
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
    sys.exit(code)


if __name__ == "__main__":
    main()
