"""
Command-line front end.

Exit codes: 0 success, 1 invariant failure, 2 usage error.
"""

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

import mpmath
from pydantic import BaseModel, ValidationError

from monofock.core.config import settings
from monofock.exporters import get_exporter
from monofock.fock.basis import IndexSet
from monofock.logging import AppException, logger
from monofock.measures.atomic import FLOAT_BITS, decimal_string
from monofock.measures.binomial import binomial_measure, clt_table, max_atom
from monofock.poly.mgf import mgf_pair
from monofock.poly.sturm import isolate_real_roots, refine_root, to_mpf
from monofock.schemas import AtomicMeasureDump, CltTable, PolynomialPairDump
from monofock.services.plotting import PlotSpec, stem_plot
from monofock.services.verification import SUITES, run_suite, write_report
from monofock.spectral.commutant import counterexample_report
from monofock.spectral.norms import norm_of_gapped_sum

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _emit(payload: BaseModel, args: argparse.Namespace, default_format: str = "json") -> None:
    exporter = get_exporter(args.format or default_format)
    text = exporter.export(payload, settings.output_digits)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {exporter.name} output to {args.out}")
    else:
        sys.stdout.write(text)


def _bits(args: argparse.Namespace) -> int:
    return args.precision_bits or settings.precision_bits


def _full_precision(args: argparse.Namespace) -> bool:
    """An explicit --precision-bits prints values at that precision instead of output_digits."""
    return args.precision_bits is not None


def cmd_distribution(args: argparse.Namespace) -> int:
    record = binomial_measure(args.n, _bits(args))
    dump = record.measure.to_dump(full_precision=_full_precision(args))
    _emit(AtomicMeasureDump(**dump, n=args.n), args)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite)
    write_report(report, args.out or settings.report_path)
    print(f"{report.suite}: {report.passed} passed, {report.failed} failed, {report.flagged} flagged")
    return EXIT_FAILURE if report.failed else EXIT_OK


def cmd_plot(args: argparse.Namespace) -> int:
    out = Path(args.out or f"mu_{args.n}.svg")
    spec = PlotSpec(n=args.n, width=args.width, height=args.height, output=out, arcsine=args.arcsine)
    print(stem_plot(spec))
    return EXIT_OK


def cmd_clt(args: argparse.Namespace) -> int:
    table = CltTable.from_rows(clt_table(args.max_n))
    _emit(table, args, default_format="csv")
    return EXIT_OK


def cmd_norm(args: argparse.Namespace) -> int:
    index_set = IndexSet.parse(args.indices)
    report = norm_of_gapped_sum(index_set)
    if _full_precision(args) and report.equals_contiguous:
        bits = _bits(args)
        report.norm_at_precision = decimal_string(max_atom(len(index_set), bits), bits)
    _emit(report, args)
    return EXIT_OK


def cmd_polys(args: argparse.Namespace) -> int:
    rf = mgf_pair(args.m)
    dump = PolynomialPairDump(**rf.to_dump())
    if not args.exact:
        roots = isolate_real_roots(rf.denominator)
        if _full_precision(args):
            bits = _bits(args)
            with mpmath.workprec(bits + 8):
                dump.p_roots = [decimal_string(to_mpf(refine_root(ri, bits + 8)), bits) for ri in roots]
        else:
            dump.p_roots = [float(refine_root(ri, settings.root_refine_bits)) for ri in roots]
    _emit(dump, args)
    return EXIT_OK


def cmd_counterexample(args: argparse.Namespace) -> int:
    report = counterexample_report()
    if args.out:
        _emit(report, args)
    print(f"orbit dimension: {report.orbit_dimension}")
    print(f"e_2 coordinate: {report.e2_coordinate}")
    return EXIT_OK if report.e2_coordinate == "0" else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    # shared flags, accepted after every subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision-bits", type=int, default=None,
                        help=f"Working binary precision (default: {settings.precision_bits}); "
                             "when given, values are printed at that precision")
    common.add_argument("--out", default=None, help="Output path (default: stdout)")
    common.add_argument("--format", choices=["json", "csv"], default=None, help="Output format")

    parser = argparse.ArgumentParser(
        prog="monofock",
        description="Vacuum distributions, spectra and norms of monotone position operators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distribution", parents=[common], help="Atoms and weights of mu_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_distribution)

    p = sub.add_parser("verify", parents=[common], help="Run an invariant suite and write a JSON report")
    p.add_argument("--suite", choices=["all", *SUITES], default="all")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("plot", parents=[common], help="SVG stem plot of mu_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--width", type=int, default=640)
    p.add_argument("--height", type=int, default=400)
    p.add_argument("--arcsine", action="store_true", help="Rescale by sqrt(n) and overlay the arcsine density")
    p.set_defaults(handler=cmd_plot)

    p = sub.add_parser("clt", parents=[common], help="Largest atom and arcsine distance for n = 1..max_n, in float64")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(handler=cmd_clt)

    p = sub.add_parser("norm", parents=[common], help="Norm of S_I for an index set such as 1,3")
    p.add_argument("--indices", required=True)
    p.set_defaults(handler=cmd_norm)

    p = sub.add_parser("polys", parents=[common], help="Numerator and denominator of the moment generating function of mu_m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="Integer coefficients only, no numeric roots")
    p.set_defaults(handler=cmd_polys)

    p = sub.add_parser("counterexample", parents=[common], help="Commutant orbit of the vacuum for S_{1,3}")
    p.set_defaults(handler=cmd_counterexample)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.precision_bits is not None and args.precision_bits < FLOAT_BITS:
        parser.error("--precision-bits must be at least 53")
    try:
        return args.handler(args)
    except AppException as e:
        logger.error(f"{type(e).__name__}: {e.message}")
        return e.exit_code
    except ValidationError as e:
        logger.error(f"Invalid arguments: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
