"""Command-line interface: analyze, pattern, reconstruct, skeleton, verify, plot, history."""

import argparse
import logging
import sys
from typing import List, Optional

from .config import Config
from .database.models import DatabaseManager
from .errors import GTWidthError, TheoremMismatchError, UnsupportedSpectrumError
from .jsonio import (
    dumps,
    loads,
    matrix_from_json,
    matrix_to_json,
    parse_spectrum,
    pattern_from_json,
    pattern_to_json,
    report_to_json,
    skeleton_to_json,
)
from .services import OrbitService, VerificationService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNSUPPORTED = 2
EXIT_VERIFICATION = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _write(text: str, path: Optional[str]) -> None:
    if not path or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help=f"eigensolver tolerance (default {Config.TOLERANCE})")
    common.add_argument("--trials", type=int, default=None, help=f"random cases per suite (default {Config.DEFAULT_TRIALS})")
    common.add_argument("--seed", type=int, default=None, help=f"RNG seed (default {Config.DEFAULT_SEED})")
    common.add_argument("--verbose", "-v", action="store_true", help="log at DEBUG level")
    common.add_argument("--output", "-o", type=str, default=None, help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="gt_width",
        description="Gelfand-Tsetlin polytopes of coadjoint orbits and Gromov width lower bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="edge data at the good vertex and the width bound")
    p.add_argument("spectrum", help='eigenvalues, e.g. "5,5,4" or "3/2,1,0"')

    p = sub.add_parser("pattern", parents=[common], help="GT pattern of a matrix JSON file")
    p.add_argument("matrix_file", help="matrix JSON, or - for stdin")

    p = sub.add_parser("reconstruct", parents=[common], help="a matrix realizing a pattern JSON file")
    p.add_argument("pattern_file", help="pattern JSON, or - for stdin")

    p = sub.add_parser("skeleton", parents=[common], help="1-skeleton of the moment polytope")
    p.add_argument("spectrum")

    p = sub.add_parser("verify", parents=[common], help="run the property suites")
    p.add_argument("spectrum")
    p.add_argument("--suite", action="append", default=None, help="run only this suite (repeatable)")
    p.add_argument("--record", action="store_true", help="store results in the run log")

    p = sub.add_parser("plot", parents=[common], help="SVG of the moment polytope (n = 3)")
    p.add_argument("spectrum")
    p.add_argument("svg_file", nargs="?", default=None, help="output file (default stdout)")

    p = sub.add_parser("history", parents=[common], help="show the verification run log")
    p.add_argument("--limit", type=int, default=100)
    p.add_argument("--clear", action="store_true", help="delete all stored runs")
    return parser


def _cmd_analyze(args, service: OrbitService) -> int:
    report = service.analyze(parse_spectrum(args.spectrum))
    _write(dumps(report_to_json(report)), args.output)
    return EXIT_OK


def _cmd_pattern(args, service: OrbitService) -> int:
    matrix = matrix_from_json(loads(_read(args.matrix_file)))
    _write(dumps(pattern_to_json(service.pattern(matrix))), args.output)
    return EXIT_OK


def _cmd_reconstruct(args, service: OrbitService) -> int:
    pattern = pattern_from_json(loads(_read(args.pattern_file)))
    _write(dumps(matrix_to_json(service.reconstruct(pattern))), args.output)
    return EXIT_OK


def _cmd_skeleton(args, service: OrbitService) -> int:
    graph = service.skeleton(parse_spectrum(args.spectrum))
    _write(dumps(skeleton_to_json(graph)), args.output)
    return EXIT_OK


def _cmd_plot(args, service: OrbitService) -> int:
    svg = service.plot(parse_spectrum(args.spectrum))
    _write(svg, args.svg_file or args.output)
    return EXIT_OK


def _cmd_verify(args, service: OrbitService) -> int:
    spectrum = parse_spectrum(args.spectrum)
    db = DatabaseManager() if args.record else None
    verifier = VerificationService(tol=args.tol, trials=args.trials, seed=args.seed, db=db)
    results = verifier.run(spectrum, args.suite)

    lines = [
        "=" * 60,
        f"Verification for λ=({spectrum})  trials={verifier.trials}  seed={verifier.seed}",
        "=" * 60,
    ]
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        lines.append(f"  {status}  {result.name:<22} {result.message}")
    failed = [r.name for r in results if not r.passed]
    lines.append("-" * 60)
    lines.append(f"{len(results) - len(failed)}/{len(results)} suites passed")
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_VERIFICATION if failed else EXIT_OK


def _cmd_history(args, service: OrbitService) -> int:
    db = DatabaseManager()
    if args.clear:
        removed = db.clear_run_log()
        _write(f"Removed {removed} runs\n", args.output)
        return EXIT_OK
    rows = db.get_run_log(limit=args.limit)
    if not rows:
        _write("No verification runs recorded.\n", args.output)
        return EXIT_OK
    lines = [f"{'id':>5}  {'run_at':<26} {'spectrum':<16} {'suite':<22} {'result':<6} message"]
    for row in rows:
        status = "PASS" if row["passed"] else "FAIL"
        lines.append(
            f"{row['id']:>5}  {str(row['run_at']):<26} {row['spectrum']:<16} {row['suite']:<22} {status:<6} {row['message']}"
        )
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK


COMMANDS = {
    "analyze": _cmd_analyze,
    "pattern": _cmd_pattern,
    "reconstruct": _cmd_reconstruct,
    "skeleton": _cmd_skeleton,
    "verify": _cmd_verify,
    "plot": _cmd_plot,
    "history": _cmd_history,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        Config.validate()
    except ValueError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_INPUT
    Config.configure_logging(args.verbose)

    if args.tol is not None and not args.tol > 0:
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_INPUT
    if args.trials is not None and args.trials < 1:
        print("error: --trials must be at least 1", file=sys.stderr)
        return EXIT_INPUT

    service = OrbitService(tol=args.tol)
    try:
        return COMMANDS[args.command](args, service)
    except UnsupportedSpectrumError as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except TheoremMismatchError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (GTWidthError, ValueError, OSError) as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
