"""
Command-line interface for the sl(1|2) verification suites and chain builders.

Runs the verification suites, exports Hamiltonian and Casimir matrices and
compares spectra of L-site Hamiltonians. Exit code 0 means every asserted case
passed, 1 means a suite failed (the report is still written), 2 means a usage
problem or an unexpected error.

Usage:
    python -m cli.sl12_cli verify --suite qybe --suite chareq --out reports/frt.json
    python -m cli.sl12_cli hamiltonian --kind classical --sites 2 --format json
    python -m cli.sl12_cli casimir --family q --index 2 --sites 2 --verify
    python -m cli.sl12_cli spectra --a fermionic --b distinguished --sites 5
    python -m cli.sl12_cli all --out reports/all.json
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from src.algebra.hopf import HopfVariant
from src.casimir.families import CasimirFamily, CasimirSpec
from src.chain.hamiltonians import HamiltonianKind
from src.chain.spectral import CHAIN_NAMES
from src.suites.export import FORMATS, casimir_run, hamiltonian_run
from src.suites.run_all import all_run, spectra_run
from src.suites.verify import SUITES, SuiteOptions, verify_run
from src.utils.config import DEFAULT_POINTS, DEFAULT_PRIMES, DEFAULT_SEED
from src.utils.errors import Sl12Error
from src.utils.logging import logger
from src.utils.reports import Report, write_report

DEFAULT_ALL_REPORT = "reports/all.json"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help="Seed for random points and primes"
    )
    common.add_argument(
        "--jobs", type=int, default=None, help="Worker threads (default: $SL12_JOBS or 1)"
    )
    common.add_argument("--out", type=str, default=None, help="Output file")

    parser = argparse.ArgumentParser(
        prog="sl12", description="Exact checks for classical and quantum sl(1|2)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="Run verification suites")
    verify.add_argument(
        "--suite",
        action="append",
        required=True,
        choices=list(SUITES),
        help="Suite name; repeatable",
    )
    verify.add_argument("--kind", choices=[k.value for k in HamiltonianKind], default=None)
    verify.add_argument("--sites", type=int, default=None, help="Restrict to one chain length")

    ham = sub.add_parser(
        "hamiltonian", parents=[common], help="Export an L-site Hamiltonian"
    )
    ham.add_argument("--kind", choices=[k.value for k in HamiltonianKind], required=True)
    ham.add_argument("--sites", type=int, default=2)
    ham.add_argument("--params", type=str, default=None, help="e.g. q=3/2,s=1")
    ham.add_argument("--format", choices=FORMATS, default="json")

    cas = sub.add_parser("casimir", parents=[common], help="Export a Casimir image")
    cas.add_argument("--family", choices=[f.value for f in CasimirFamily], required=True)
    cas.add_argument("--index", type=int, required=True)
    cas.add_argument("--sites", type=int, default=2)
    cas.add_argument("--hopf", choices=[v.value for v in HopfVariant], default=None)
    cas.add_argument("--verify", action="store_true", help="Also check centrality")

    spectra = sub.add_parser(
        "spectra", parents=[common], help="Compare spectra of two chains"
    )
    spectra.add_argument("--a", dest="kind_a", choices=CHAIN_NAMES, default="fermionic")
    spectra.add_argument("--b", dest="kind_b", choices=CHAIN_NAMES, default="distinguished")
    spectra.add_argument("--sites", type=int, required=True)
    spectra.add_argument("--long", action="store_true", help="Allow the seven-site chain")
    spectra.add_argument("--primes", type=int, default=DEFAULT_PRIMES)
    spectra.add_argument("--points", type=int, default=DEFAULT_POINTS)

    everything = sub.add_parser("all", parents=[common], help="Run every suite")
    everything.add_argument(
        "--long", action="store_true", help="Include the seven-site spectra"
    )
    return parser


def _finish(reports: List[Report], args: argparse.Namespace, out: Optional[str]) -> int:
    for report in reports:
        print(report.summary())
    if out:
        path = write_report(reports, out, seed=args.seed, command=args.command)
        logger.info("Report written to %s", path)
    failed = [report.suite for report in reports if not report.passed]
    if failed:
        logger.error("Failing suites: %s", ", ".join(failed))
        return 1
    return 0


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "verify":
        options = SuiteOptions(
            kind=args.kind, sites=args.sites, seed=args.seed, jobs=args.jobs
        )
        return _finish(verify_run(args.suite, options), args, args.out)

    if args.command == "hamiltonian":
        text = hamiltonian_run(args.kind, args.sites, args.params, args.format)
        if args.out:
            target = Path(args.out)
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(text, encoding="utf-8")
            logger.info("Hamiltonian written to %s", target)
        else:
            print(text, end="")
        return 0

    if args.command == "casimir":
        spec = CasimirSpec(args.family, args.index)
        hopf = args.hopf
        if hopf is None:
            classical = spec.family is CasimirFamily.CLASSICAL
            hopf = (
                HopfVariant.CLASSICAL_PRIMITIVE
                if classical
                else HopfVariant.FERMIONIC_STANDARD
            )
        report = casimir_run(spec, args.sites, hopf, args.out, args.verify)
        if report is None:
            return 0
        return _finish([report], args, None)

    if args.command == "spectra":
        report = spectra_run(
            args.kind_a,
            args.kind_b,
            args.sites,
            long=args.long,
            primes=args.primes,
            points=args.points,
            seed=args.seed,
            jobs=args.jobs,
        )
        return _finish([report], args, args.out)

    reports = all_run(seed=args.seed, jobs=args.jobs, long=args.long)
    return _finish(reports, args, args.out or DEFAULT_ALL_REPORT)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse ``argv`` and execute one subcommand.

    Returns:
        int: 0 on success, 1 when a suite fails, 2 on usage or unexpected errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logger.info("Starting CLI %s", args.command)
    try:
        code = _dispatch(args)
    except Sl12Error as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return 2
    except ValueError as exc:
        logger.error("Invalid arguments: %s", exc)
        return 2
    except Exception:
        logger.exception("Error running %s", args.command)
        return 2
    logger.info("CLI %s finished with exit code %d", args.command, code)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
