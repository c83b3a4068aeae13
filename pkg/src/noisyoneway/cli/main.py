import argparse
import logging
import sys

from dataclasses import replace
from typing import List, Optional

from ..exceptions import NoisyOneWayException
from .config import ExperimentConfig
from .presets import PRESETS, preset
from .runner import run
from .verify import run_checks

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog = "noisyoneway",
        description = "Noisy one-way computation: fidelity and correlation sweeps over Gamma t."
    )
    parser.add_argument(
        "-v", "--verbose",
        action = "count",
        default = 0,
        help = "Log INFO (-v) or DEBUG (-vv) messages to stderr."
    )
    commands = parser.add_subparsers(dest = "command", required = True)

    run_parser = commands.add_parser("run", help = "Run a sweep described by a JSON config.")
    run_parser.add_argument("--config", required = True, help = "ExperimentConfig JSON file.")
    run_parser.add_argument("--out", default = None, help = "CSV path; overrides the config's output.")
    run_parser.add_argument("--seed", type = int, default = None, help = "Overrides the config's seed.")

    verify_parser = commands.add_parser("verify", help = "Run the acceptance checks.")
    verify_parser.add_argument("--filter", default = None, help = "Only checks whose name contains this.")
    verify_parser.add_argument(
        "--perturb",
        type = float,
        default = 0.0,
        help = "Add this error to every check; any positive value above the tolerances must fail."
    )

    presets_parser = commands.add_parser("presets", help = "List the presets, or run one.")
    presets_parser.add_argument("name", nargs = "?", default = None, help = "Preset to run.")
    presets_parser.add_argument("--out", default = None, help = "CSV path for the preset's sweep.")
    presets_parser.add_argument("--seed", type = int, default = None, help = "Seed for the preset.")

    return parser.parse_args(argv)


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level = level, format = LOG_FORMAT)


def _run(args: argparse.Namespace) -> int:
    config = ExperimentConfig.from_json(args.config)
    if args.seed is not None:
        config = replace(config, seed = args.seed)
    result = run(config, args.out)
    if not result.paths:
        print(result.frame.to_string(index = False))
    return 0


def _verify(args: argparse.Namespace) -> int:
    table = run_checks(args.filter, args.perturb)
    if table.empty:
        print(f"[error] no check matches {args.filter!r}")
        return 2
    print(table.to_string(index = False))
    failed = int((~table["passed"]).sum())
    if failed:
        print(f"[FAIL] {failed} of {len(table)} checks failed")
        return 1
    print(f"[OK] {len(table)} checks passed")
    return 0


def _presets(args: argparse.Namespace) -> int:
    if args.name is None:
        for name, document in PRESETS.items():
            print(f"{name}\t{document['protocol']}\t{', '.join(document['measures'])}")
        return 0
    result = run(preset(args.name, seed = args.seed), args.out)
    if not result.paths:
        print(result.frame.to_string(index = False))
    return 0


COMMANDS = {"run": _run, "verify": _verify, "presets": _presets}


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except NoisyOneWayException as error:
        logger.debug("%s failed: %s", args.command, error.details())
        print(f"[error] {error}", file = sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
