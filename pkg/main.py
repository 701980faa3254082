import argparse
import logging
import sys

from algebra.errors import QflopError, SpecValidationError
from commands.base_command import options_for
from commands.dispatcher import COMMANDS, dispatch
from config import config
from database.models import RingSpec
from database.spec_store import SpecStore, load_spec

logger = logging.getLogger("qflop")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SpecValidationError(message)


def _window(text: str) -> tuple:
    try:
        lo, hi = text.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like lo:hi, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty window {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qflop", description="Q(R) for G_m-actions: presentations, windows, flops")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("spec", nargs="?", help="path to a JSON ring spec or a registry name")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--budget-steps", type=int)
    parser.add_argument("--budget-size", type=int)
    parser.add_argument("--window", type=_window, help="coarse degree window lo:hi")
    parser.add_argument("--tor-bound", type=int)
    parser.add_argument("--homology-bound", type=int)
    parser.add_argument("--twist", type=int)
    parser.add_argument("--monomial-cap", type=int)
    parser.add_argument("--save", action="store_true", help="store the report in the registry file")
    return parser


def _normalize(argv: list) -> list:
    """--window -5:5 -> --window=-5:5, иначе argparse примет значение за флаг"""
    result = []
    args = iter(argv)
    for arg in args:
        if arg == "--window":
            value = next(args, None)
            result.append(arg if value is None else f"{arg}={value}")
        else:
            result.append(arg)
    return result


def run(argv: list) -> int:
    args = build_parser().parse_args(_normalize(argv))
    if args.command == "self-test":
        spec = RingSpec("registry", [("x", (0,))])
    elif not args.spec:
        raise SpecValidationError(f"{args.command} needs a ring spec")
    else:
        spec = load_spec(args.spec)
    options = options_for(spec).override(
        budget_steps=args.budget_steps,
        budget_size=args.budget_size,
        degree_window=args.window,
        tor_bound=args.tor_bound,
        homology_bound=args.homology_bound,
        twist=args.twist,
        monomial_cap=args.monomial_cap,
    )
    report = dispatch(args.command, spec, options)
    print(report.to_json() if args.format == "json" else report.to_text())
    if args.save:
        SpecStore(config.REPORTS_PATH).add_report(args.command, spec.name, report.to_dict())
    return 0


def main(argv: list | None = None) -> int:
    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL.upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    try:
        return run(sys.argv[1:] if argv is None else list(argv))
    except QflopError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"✗ {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
