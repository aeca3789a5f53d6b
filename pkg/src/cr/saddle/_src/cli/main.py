# Copyright 2021 CR-Suite Development Team
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""``saddlecheck`` command line entry point"""

import argparse
from dataclasses import replace
import logging
import sys

from cr.saddle.version import __version__
from cr.saddle._src.errors import ConfigParseError, ConfigValidationError, SaddleError
from .config import parse_config, parse_levels, check_levels
from .runner import run

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVARIANT = 2
EXIT_CONFIG = 3
EXIT_IO = 4

# analyses each subcommand runs; sweep runs the configured ones
COMMANDS = {
    "analyze": ("constants", "reference_infsup"),
    "witness": ("witness",),
    "precond": ("precond",),
    "sweep": None,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="saddlecheck",
        description="Checks fitted norm stability of perturbed saddle point problems")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("config", help="run configuration file")
    parser.add_argument("--out-dir", help="directory for the result tables")
    parser.add_argument("--seed", type=int, help="seed of the random draws")
    parser.add_argument("--levels", help="comma separated mesh levels")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    return parser


def _override(config, args):
    changes = {}
    if args.out_dir:
        changes["out_dir"] = args.out_dir
    if args.seed is not None:
        changes["seed"] = args.seed
    if args.levels:
        changes["levels"] = check_levels(config.example, parse_levels(args.levels))
    selected = COMMANDS[args.command]
    if selected is not None:
        if args.command == "analyze":
            selected = tuple(a for a in selected
                if a == "constants" or a in config.analyses)
        changes["analyses"] = selected
    return replace(config, **changes)


def main(argv=None):
    """Runs the command line interface and returns the exit code"""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # usage errors count as configuration errors
        return EXIT_OK if e.code == 0 else EXIT_CONFIG
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        config = _override(parse_config(args.config), args)
    except (ConfigParseError, ConfigValidationError) as e:
        logger.error("configuration error: %s", e)
        return EXIT_CONFIG
    except OSError as e:
        logger.error("cannot read configuration: %s", e)
        return EXIT_IO
    try:
        outcome = run(config)
    except OSError as e:
        logger.error("cannot write results: %s", e)
        return EXIT_IO
    except SaddleError as e:
        logger.error("run failed: %s", e)
        return EXIT_INVARIANT
    return EXIT_INVARIANT if outcome.status else EXIT_OK


def entry_point():
    sys.exit(main())
