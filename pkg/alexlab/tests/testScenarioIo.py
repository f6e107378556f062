##
#
# File:    testScenarioIo.py
# Date:    6-Feb-2026
# Version: 0.001
#
# Updates:
#  18-Mar-2026  report and series writers
#  21-Apr-2026  syntax error positions
##
"""
Test cases for scenario parsing and validation and for the report and series writers.

"""
import gzip
import json
import logging
import os
import shutil
import sys
import time
import unittest

import numpy as np

from alexlab.io.AlexlabExceptions import AlexlabError, AlexlabInputError, AlexlabSyntaxError
from alexlab.io.ScenarioIo import ScenarioIo

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


class ScenarioIoTests(unittest.TestCase):
    def setUp(self):
        self.__pathOutputDir = os.path.join(HERE, "test-output")
        os.makedirs(self.__pathOutputDir, exist_ok=True)
        self.__pathTaylor = os.path.join(HERE, "data", "taylor-k2-n2.json")
        self.__pathMalformed = os.path.join(HERE, "data", "malformed.json")
        self.__pathUnknownKind = os.path.join(HERE, "data", "unknown-kind.json")
        self.__startTime = time.time()
        logger.debug("Running tests on version %s", __version__)
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testReadScenario(self):
        """Test case -  read plain and gzipped scenarios with defaults filled in"""
        try:
            sIo = ScenarioIo(raiseExceptions=True)
            sD = sIo.readScenario(self.__pathTaylor)
            self.assertEqual(sD["kind"], "taylor")
            self.assertEqual(sD["parameters"], {"k": 2, "n": 2})
            self.assertEqual(sD["tolerances"], {"tol": 1.0e-5})
            self.assertIsNone(sD["output"])
            #
            gzPath = os.path.join(self.__pathOutputDir, "taylor-k2-n2.json.gz")
            with open(self.__pathTaylor, "rb") as ifh, gzip.open(gzPath, "wb") as ofh:
                shutil.copyfileobj(ifh, ofh)
            self.assertEqual(sIo.readScenario(gzPath), sD)
            #
            sD = sIo.parseScenario('{"version": 1, "kind": "hopf"}')
            self.assertEqual(sD["name"], "hopf")
            self.assertEqual(sD["seed"], 0)
            self.assertEqual(sD["parameters"], {})
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testSyntaxErrorPosition(self):
        """Test case -  malformed JSON reports line and column"""
        try:
            sIo = ScenarioIo(raiseExceptions=True)
            with self.assertRaises(AlexlabSyntaxError) as cm:
                sIo.readScenario(self.__pathMalformed)
            self.assertEqual(cm.exception.line, 4)
            self.assertEqual(cm.exception.column, 3)
            self.assertIn("line 4 column 3", str(cm.exception))
            self.assertIsNone(ScenarioIo(raiseExceptions=False).readScenario(self.__pathMalformed))
            with self.assertRaises(AlexlabError):
                sIo.readScenario(os.path.join(HERE, "data", "no-such-scenario.json"))
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testValidation(self):
        """Test case -  schema violations are rejected"""
        try:
            sIo = ScenarioIo(raiseExceptions=True)
            with self.assertRaises(AlexlabInputError):
                sIo.readScenario(self.__pathUnknownKind)
            for sD in (
                [],
                {"version": 2, "kind": "hopf"},
                {"kind": "hopf"},
                {"version": 1, "kind": "hopf", "extra": 1},
                {"version": 1, "kind": "hopf", "seed": -1},
                {"version": 1, "kind": "hopf", "seed": 2 ** 64},
                {"version": 1, "kind": "hopf", "seed": True},
                {"version": 1, "kind": "hopf", "parameters": {"degree": 2}},
                {"version": 1, "kind": "hopf", "parameters": []},
                {"version": 1, "kind": "hopf", "tolerances": {"tol": 0.0}},
                {"version": 1, "kind": "hopf", "tolerances": {"tol": "small"}},
                {"version": 1, "kind": "hopf", "tolerances": {"epsilon": 1e-6}},
            ):
                with self.assertRaises(AlexlabInputError, msg=repr(sD)):
                    sIo.validateScenario(sD)
            sD = sIo.validateScenario({"version": 1, "kind": "frequency", "seed": 2 ** 64 - 1, "parameters": {"instance": "mimic"}, "output": "out"})
            self.assertEqual(sD["seed"], 2 ** 64 - 1)
            self.assertEqual(sD["output"], "out")
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testWriteReportAndSeries(self):
        """Test case -  sorted-key report and CSV series"""
        try:
            sIo = ScenarioIo()
            reportD = {"verdicts": [{"status": "pass", "check": "T"}], "alexlab_version": __version__, "fitted": np.array([0.5, np.nan])}
            filePath = os.path.join(self.__pathOutputDir, "report-sorted.json")
            self.assertTrue(sIo.writeReport(filePath, reportD))
            with open(filePath, "r", encoding="utf-8") as ifh:
                text = ifh.read()
            rD = json.loads(text)
            self.assertEqual(rD["fitted"], [0.5, "nan"])
            self.assertEqual(text, json.dumps(rD, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
            self.assertEqual(sIo.readReport(filePath), rD)
            self.assertIsNone(sIo.readReport(os.path.join(self.__pathOutputDir, "no-such-report.json")))
            #
            plotDir = os.path.join(self.__pathOutputDir, "plots")
            seriesPath = sIo.writeSeries(plotDir, "frequency_harmonic", ["r", "log_rho", "label"], [[0.1, np.float64(-2.5), "a"], [0.2, 1, "b"]])
            self.assertEqual(seriesPath, os.path.join(plotDir, "frequency_harmonic.csv"))
            with open(seriesPath, "r", encoding="utf-8") as ifh:
                lines = ifh.read().splitlines()
            self.assertEqual(lines, ["r,log_rho,label", "0.1,-2.5,a", "0.2,1,b"])
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testAdapterOptions(self):
        """Test case -  timing logs and the raise-or-log switch of the shared adapter"""
        try:
            filePath = os.path.join(self.__pathOutputDir, "report-timing.json")
            with self.assertLogs("alexlab.io.IoAdapterBase", level="INFO") as cm:
                self.assertTrue(ScenarioIo(timing=True).writeReport(filePath, {"a": 1}))
            self.assertTrue(any("report-timing.json" in msg for msg in cm.output))
            badPath = os.path.join(self.__pathOutputDir, "no-such-dir", "report.json")
            with self.assertLogs("alexlab.io.IoAdapterBase", level="ERROR"):
                self.assertFalse(ScenarioIo(raiseExceptions=False).writeReport(badPath, {"a": 1}))
            with self.assertRaises(AlexlabError):
                ScenarioIo(raiseExceptions=True).writeReport(badPath, {"a": 1})
            self.assertFalse(os.path.exists(badPath))
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()


def suiteScenarioIoTests():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(ScenarioIoTests("testReadScenario"))
    suiteSelect.addTest(ScenarioIoTests("testSyntaxErrorPosition"))
    suiteSelect.addTest(ScenarioIoTests("testValidation"))
    suiteSelect.addTest(ScenarioIoTests("testWriteReportAndSeries"))
    suiteSelect.addTest(ScenarioIoTests("testAdapterOptions"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = suiteScenarioIoTests()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
