"""
Command-line entry point
Writes one JSON document per command to stdout (or --out); logs go to stderr
"""

import argparse
import sys
from typing import Any, Dict, List, Optional

from src import __version__
from src.utils import JsonProcessor
from src.utils.exceptions import CubicBridgeError, ParseError
from src.verification import SUITE_NAMES
from verification_pipeline import VerificationPipeline

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2


class _ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as ParseError instead of exiting"""

    def error(self, message):
        raise ParseError(message, path="argv")


def _swap_members(text: str) -> List[int]:
    text = text.strip().strip("{}")
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as e:
        raise ParseError(f"Malformed swap set '{text}'", path="--set") from e


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="cubic-bridge", description="Exact six-point plane and weighted P^1 engine")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config-dir", default=None, help="Directory of YAML settings")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", default=None, help="Write the JSON result to this file")

    for name, text in (("classify", "Stratum of a plane configuration"),
                       ("phi", "Seven weighted points of a plane configuration"),
                       ("fiber", "Plane classes in the phi fiber of a configuration")):
        cmd = sub.add_parser(name, help=text, parents=[output])
        cmd.add_argument("-i", "--input", required=True, help="Configuration JSON file")

    swap = sub.add_parser("swap", help="Generator word realizing a swap set", parents=[output])
    swap.add_argument("--set", required=True, help="Labels among 1..5, e.g. 1,2,3")
    swap.add_argument("-i", "--input", default=None, help="Configuration to apply the word to")

    desc = sub.add_parser("descendants", help="Stable descendants of a weight vector", parents=[output])
    desc.add_argument("--mu", required=True, help='Weights, e.g. "1^12" or "2,2,2,2,2,1,1"')
    desc.add_argument("--points", type=int, required=True, help="Number of points after collisions")

    sub.add_parser("boundary", help="Boundary divisor census and S5 orbits", parents=[output])

    verify = sub.add_parser("verify", help="Run a verification suite", parents=[output])
    verify.add_argument("--suite", required=True, help=", ".join(SUITE_NAMES))
    verify.add_argument("--trials", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--field", default=None, help="rational or prime:<p>")
    verify.add_argument("--workers", type=int, default=None)
    verify.add_argument("--no-progress", action="store_true")
    return parser


def _emit(data: Dict[str, Any], out: Optional[str], indent: int = 2):
    if out:
        JsonProcessor.save_json(data, out, indent=indent)
    else:
        sys.stdout.write(JsonProcessor.dumps(data, indent=indent))


def _dispatch(args: argparse.Namespace):
    pipeline = VerificationPipeline(config_dir=args.config_dir, log_level=args.log_level)
    if args.command == "classify":
        return pipeline.classify(args.input), EXIT_OK, pipeline.indent
    if args.command == "phi":
        return pipeline.phi(args.input), EXIT_OK, pipeline.indent
    if args.command == "fiber":
        return pipeline.fiber(args.input), EXIT_OK, pipeline.indent
    if args.command == "swap":
        return pipeline.swap(_swap_members(args.set), args.input), EXIT_OK, pipeline.indent
    if args.command == "descendants":
        return pipeline.descendants(args.mu, args.points), EXIT_OK, pipeline.indent
    if args.command == "boundary":
        return pipeline.boundary(), EXIT_OK, pipeline.indent

    if args.workers is not None:
        pipeline.workers = args.workers
    if args.no_progress:
        pipeline.progress = False
    report = pipeline.verify(args.suite, trials=args.trials, seed=args.seed, field=args.field)
    return report.to_dict(), (EXIT_OK if report.ok else EXIT_FAILED), pipeline.indent


def cli_main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command

    Returns:
        0 on success, 1 when a verification suite has failures, 2 on bad input
    """
    try:
        args = build_parser().parse_args(argv)
        data, code, indent = _dispatch(args)
        _emit(data, args.out, indent)
        return code
    except (CubicBridgeError, ValueError, KeyError, OSError) as e:
        _emit({"error": type(e).__name__, "message": str(e)}, None)
        return EXIT_INPUT_ERROR


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
