##
# File: AlexlabExec.py
# Date: 14-Feb-2026
#
#  Command line entry point: run a scenario, list the catalog, run the acceptance suite.
#
#  Updates:
#   28-Mar-2026  suite subcommand
#   14-Apr-2026  --binary option
##
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import argparse
import json
import logging
import sys

from alexlab.io.AlexlabExceptions import AlexlabError, AlexlabInputError, AlexlabSyntaxError
from alexlab.io.ScenarioRunner import EXIT_PASS, EXIT_USAGE, ScenarioRunner

logger = logging.getLogger()


def _seed(text):
    seed = int(text)
    if not 0 <= seed < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return seed


def _parser():
    parser = argparse.ArgumentParser(prog="alexlab", description="Numerical checks for moving-plane symmetry and unique continuation")
    subparsers = parser.add_subparsers(dest="op")
    runP = subparsers.add_parser("run", help="Run one scenario file")
    runP.add_argument("scenario", help="Scenario JSON path, .gz path or URL")
    runP.add_argument("--seed", type=_seed, default=None, help="Override the scenario seed")
    runP.add_argument("--out", default=None, help="Output directory (default: scenario output or ./alexlab-out)")
    runP.add_argument("--binary", default=False, action="store_true", help="Also write report.msgpack")
    runP.add_argument("--timing", default=False, action="store_true", help="Log elapsed time of each check")
    subparsers.add_parser("catalog", help="List builtin surfaces and instances")
    suiteP = subparsers.add_parser("suite", help="Run the acceptance scenarios")
    suiteP.add_argument("--seed", type=_seed, default=0, help="Seed for every scenario (default: 0)")
    suiteP.add_argument("--out", default="./alexlab-out", help="Output directory (default: ./alexlab-out)")
    suiteP.add_argument("--binary", default=False, action="store_true", help="Also write report.msgpack")
    return parser


def main(argv=None):
    """Returns the process exit status: 0 pass, 1 violation, 2 usage or parse error."""
    logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASS
    if not args.op:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    #
    try:
        if args.op == "catalog":
            print(json.dumps(ScenarioRunner().listCatalog(), indent=2, sort_keys=True))
            return EXIT_PASS
        if args.op == "suite":
            status, summary = ScenarioRunner(outDirPath=args.out, seed=args.seed, binary=args.binary).runSuite()
            for row in summary["scenarios"]:
                logger.info("%-28s exit %d (expected %d)%s", row["name"], row["exit"], row["expected"], "" if row["ok"] else "  MISMATCH")
            return status
        runner = ScenarioRunner(outDirPath=args.out, seed=args.seed, binary=args.binary, timing=args.timing)
        status, reportD = runner.runScenario(args.scenario)
        if reportD["violations"]:
            logger.info("Violations: %s", ", ".join(reportD["violations"]))
        return status
    except AlexlabSyntaxError as e:
        logger.error("Scenario parse error at line %s column %s: %s", e.line, e.column, str(e))
    except AlexlabInputError as e:
        logger.error("Scenario rejected: %s", str(e))
    except AlexlabError as e:
        logger.error("Scenario failing with %s", str(e))
    except OSError as e:
        logger.error("Scenario access failing with %s", str(e))
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
