"""Command-line interface: build, check-hopf, series-check, frobenius-check,
clifford-report, lies-over.

Exit codes: 0 all checks pass, 1 assertion failed, 2 malformed input,
3 standing assumption violated at runtime.  All randomness comes from
--seed, so identical invocations produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import fileio, verifier
from .report import EXIT_MALFORMED_INPUT


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0, help="64-bit seed for all randomized steps")
    parser.add_argument("--out", type=str, default=None, help="write the JSON report here")
    parser.add_argument("--format", choices=("json", "text"), default="text",
                        help="stdout rendering")
    parser.add_argument("--timing", action="store_true",
                        help="include wall-clock timing in the report (breaks byte determinism)")
    parser.add_argument("--jobs", type=int, default=1, help="worker threads for per-module checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfrep", description=__doc__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("build", help="construct an instance from a recipe file")
    p.add_argument("recipe")
    p.add_argument("--field", type=str, default=None, help="override recipe field as p,k")
    _add_common(p)

    p = sub.add_parser("check-hopf", help="verify all Hopf axioms of a file")
    p.add_argument("hopf")
    _add_common(p)

    p = sub.add_parser("series-check", help="certify a lower-solvable chain")
    p.add_argument("hopf")
    p.add_argument("series")
    _add_common(p)

    p = sub.add_parser("frobenius-check", help="certify Frobenius type along a chain")
    p.add_argument("hopf")
    p.add_argument("series")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check dimensions against the exhaustive lattice (dim <= 12)")
    _add_common(p)

    p = sub.add_parser("clifford-report", help="equal dimensions and twist links of induced factors")
    p.add_argument("hopf")
    p.add_argument("--sub", required=True, help="subspace file with the Hopf subalgebra basis")
    _add_common(p)

    p = sub.add_parser("lies-over", help="lying-over and nonzero-bimodule checks")
    p.add_argument("hopf")
    p.add_argument("--sub", required=True, help="subspace file with the Hopf subalgebra basis")
    p.add_argument("--modules", nargs="*", default=[], help="optional simple-module files")
    _add_common(p)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    started = time.monotonic()
    if args.cmd == "build":
        override = None
        if args.field:
            parts = args.field.split(",")
            override = (int(parts[0]), int(parts[1]) if len(parts) > 1 else 1)
        out_file = args.out or "instance.json"
        report, code = verifier.run_build(args.recipe, out_file, field_override=override,
                                          seed=args.seed)
        report_path = None
    elif args.cmd == "check-hopf":
        report, code = verifier.run_check_hopf(args.hopf, seed=args.seed)
        report_path = args.out
    elif args.cmd == "series-check":
        report, code = verifier.run_series_check(args.hopf, args.series, seed=args.seed)
        report_path = args.out
    elif args.cmd == "frobenius-check":
        report, code = verifier.run_frobenius_check(args.hopf, args.series, seed=args.seed,
                                                    use_oracle=args.oracle, jobs=args.jobs)
        report_path = args.out
    elif args.cmd == "clifford-report":
        report, code = verifier.run_clifford_report(args.hopf, args.sub, seed=args.seed,
                                                    jobs=args.jobs)
        report_path = args.out
    elif args.cmd == "lies-over":
        report, code = verifier.run_lies_over(args.hopf, args.sub, args.modules,
                                              seed=args.seed, jobs=args.jobs)
        report_path = args.out
    else:  # pragma: no cover
        return EXIT_MALFORMED_INPUT
    report.timing_s = time.monotonic() - started
    if report_path:
        fileio.write_json(report_path, report.to_dict(include_timing=args.timing))
    if args.format == "json":
        sys.stdout.write(fileio.canonical_dumps(report.to_dict(include_timing=args.timing)))
    else:
        sys.stdout.write(report.render_text())
        if args.timing:
            sys.stderr.write(f"elapsed: {report.timing_s:.3f}s\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
