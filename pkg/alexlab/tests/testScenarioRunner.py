##
#
# File:    testScenarioRunner.py
# Date:    15-Feb-2026
# Version: 0.001
#
# Updates:
#  28-Mar-2026  command line exit status cases
#  14-Apr-2026  binary report output
##
"""
Test cases for scenario runs, their artifacts and the command line exit status.

"""
import json
import logging
import os
import sys
import time
import unittest

from alexlab.io.AlexlabExec import main
from alexlab.io.AlexlabExceptions import AlexlabInputError, AlexlabSyntaxError
from alexlab.io.BinaryReportReader import BinaryReportReader
from alexlab.io.ScenarioRunner import ACCEPTANCE_SUITE, EXIT_PASS, EXIT_USAGE, EXIT_VIOLATION, ScenarioRunner

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(HERE))

try:
    from alexlab import __version__
except ImportError:
    sys.path.insert(0, TOPDIR)
    from alexlab import __version__

__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()
logger.setLevel(logging.INFO)


class ScenarioRunnerTests(unittest.TestCase):
    def setUp(self):
        self.__pathOutputDir = os.path.join(HERE, "test-output")
        os.makedirs(self.__pathOutputDir, exist_ok=True)
        self.__pathData = os.path.join(HERE, "data")
        self.__startTime = time.time()
        logger.debug("Running tests on version %s", __version__)
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def __outDir(self, name):
        return os.path.join(self.__pathOutputDir, "runner", name)

    def testCatalog(self):
        """Test case -  catalog lists surfaces and instances in stable order"""
        try:
            cD = ScenarioRunner().listCatalog()
            self.assertEqual(cD["surfaces"][0]["name"], "sphere")
            kinds = [row["kind"] for row in cD["instances"]]
            self.assertEqual(kinds, sorted(kinds, key=["hopf", "frequency", "taylor", "appendix"].index))
            self.assertEqual(cD, ScenarioRunner().listCatalog())
            self.assertEqual(len(ACCEPTANCE_SUITE), 20)
            self.assertEqual([sD["name"] for sD, expect in ACCEPTANCE_SUITE if expect == EXIT_VIOLATION], ["dumbbell-symmetry", "flat-tangent-infinite", "pear-main-assumption"])
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testTaylorScenario(self):
        """Test case -  passing taylor scenario with report, series and binary artifacts"""
        try:
            outDir = self.__outDir("taylor")
            status, reportD = ScenarioRunner(outDirPath=outDir, binary=True).runScenario(os.path.join(self.__pathData, "taylor-k2-n2.json"))
            self.assertEqual(status, EXIT_PASS)
            self.assertEqual(reportD["status"], "pass")
            self.assertEqual([vd["check"] for vd in reportD["verdicts"]], ["taylor-recursion", "f-asymptotics"])
            self.assertEqual(reportD["scenario"]["tolerances"], {"tol": 1.0e-5})
            with open(os.path.join(outDir, "report.json"), "r", encoding="utf-8") as ifh:
                rD = json.load(ifh)
            self.assertEqual(rD["alexlab_version"], __version__)
            self.assertEqual(rD["violations"], [])
            self.assertTrue(os.path.exists(os.path.join(outDir, "plots", "taylor_errors.csv")))
            binD, seriesD = BinaryReportReader().deserialize(os.path.join(outDir, "report.msgpack"))
            self.assertEqual(binD, rD)
            self.assertIn("taylor_errors", seriesD)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testViolationScenario(self):
        """Test case -  the pear main assumption violation exits with status 1"""
        try:
            status, reportD = ScenarioRunner(outDirPath=self.__outDir("pear")).runScenario(os.path.join(self.__pathData, "pear-main-assumption.json"))
            self.assertEqual(status, EXIT_VIOLATION)
            self.assertEqual(reportD["violations"], ["main-assumption"])
            vD = reportD["verdicts"][0]
            self.assertEqual(vD["status"], "violation")
            self.assertEqual(vD["result"]["verdict"], "fails")
            self.assertGreater(len(vD["result"]["witnesses"]), 0)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testDeterminism(self):
        """Test case -  repeated runs agree apart from timings, the seed override is recorded"""
        try:
            pathScenario = os.path.join(self.__pathData, "appendix.json")
            _, firstD = ScenarioRunner(outDirPath=self.__outDir("appendix-1")).runScenario(pathScenario)
            _, secondD = ScenarioRunner(outDirPath=self.__outDir("appendix-2")).runScenario(pathScenario)
            self.assertEqual(firstD["status"], "pass")
            firstD.pop("timings")
            secondD.pop("timings")
            self.assertEqual(json.dumps(firstD, sort_keys=True), json.dumps(secondD, sort_keys=True))
            _, seededD = ScenarioRunner(outDirPath=self.__outDir("appendix-3"), seed=5).runScenario(pathScenario)
            self.assertEqual(seededD["scenario"]["seed"], 5)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testRejectedScenarios(self):
        """Test case -  parse and schema errors propagate from the runner"""
        try:
            runner = ScenarioRunner(outDirPath=self.__outDir("rejected"))
            with self.assertRaises(AlexlabSyntaxError):
                runner.runScenario(os.path.join(self.__pathData, "malformed.json"))
            with self.assertRaises(AlexlabInputError):
                runner.runScenario(os.path.join(self.__pathData, "unknown-kind.json"))
            with self.assertRaises(AlexlabInputError):
                runner.runScenario({"version": 1, "kind": "surface-symmetry", "parameters": {"checks": ["Q"]}})
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testCommandLine(self):
        """Test case -  exit status 0 on pass, 1 on violation, 2 on usage and parse errors"""
        try:
            self.assertEqual(main(["run", os.path.join(self.__pathData, "sphere-full-suite.json"), "--out", self.__outDir("cli-sphere")]), EXIT_PASS)
            self.assertEqual(main(["run", os.path.join(self.__pathData, "pear-main-assumption.json"), "--out", self.__outDir("cli-pear"), "--binary"]), EXIT_VIOLATION)
            self.assertTrue(os.path.exists(os.path.join(self.__outDir("cli-pear"), "report.msgpack")))
            self.assertEqual(main(["run", os.path.join(self.__pathData, "malformed.json"), "--out", self.__outDir("cli-bad")]), EXIT_USAGE)
            self.assertEqual(main(["run", os.path.join(self.__pathData, "unknown-kind.json")]), EXIT_USAGE)
            self.assertEqual(main(["run", os.path.join(self.__pathData, "no-such-scenario.json")]), EXIT_USAGE)
            self.assertEqual(main(["run", os.path.join(self.__pathData, "appendix.json"), "--seed", "-1"]), EXIT_USAGE)
            self.assertEqual(main([]), EXIT_USAGE)
            self.assertEqual(main(["catalog"]), EXIT_PASS)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()


def suiteScenarioRunnerTests():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(ScenarioRunnerTests("testCatalog"))
    suiteSelect.addTest(ScenarioRunnerTests("testTaylorScenario"))
    suiteSelect.addTest(ScenarioRunnerTests("testViolationScenario"))
    suiteSelect.addTest(ScenarioRunnerTests("testDeterminism"))
    suiteSelect.addTest(ScenarioRunnerTests("testRejectedScenarios"))
    suiteSelect.addTest(ScenarioRunnerTests("testCommandLine"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = suiteScenarioRunnerTests()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
