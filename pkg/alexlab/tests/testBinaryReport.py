##
#
# File:    testBinaryReport.py
# Date:    19-Mar-2026
# Version: 0.001
##
"""
Test cases for the msgpack report writer and reader.

"""
import gzip
import logging
import os
import shutil
import sys
import time
import unittest

import msgpack

from alexlab.api.CheckReports import toJsonValue
from alexlab.io.BinaryReportReader import BinaryReportReader
from alexlab.io.BinaryReportWriter import BINARY_REPORT_VERSION, BinaryReportWriter

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


class BinaryReportTests(unittest.TestCase):
    def setUp(self):
        self.__pathOutputDir = os.path.join(HERE, "test-output")
        os.makedirs(self.__pathOutputDir, exist_ok=True)
        self.__pathReport = os.path.join(self.__pathOutputDir, "report-generated.msgpack")
        self.__reportD = {
            "alexlab_version": __version__,
            "status": "violation",
            "violations": ["S"],
            "verdicts": [{"check": "S", "status": "violation", "result": {"verdict": "fails", "witnesses": [{"point": [0.1, 0.5], "margin": 1.0e-3}]}}],
            "timings": {"total": float("inf")},
        }
        self.__seriesD = {
            "frequency_harmonic": (["r", "log_rho"], [[0.1, -4.5], [0.2, -3.1], [0.4, -1.25]]),
            "labels": (["name", "value"], [["a", 1.0], ["b", 2.0]]),
            "empty": (["x"], []),
        }
        self.__startTime = time.time()
        logger.debug("Running tests on version %s", __version__)
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testSerialize(self):
        """Test case -  report and series survive the binary format"""
        try:
            self.assertTrue(BinaryReportWriter().serialize(self.__pathReport, self.__reportD, self.__seriesD))
            reportD, seriesD = BinaryReportReader().deserialize(self.__pathReport)
            self.assertEqual(reportD, toJsonValue(self.__reportD))
            self.assertEqual(reportD["timings"]["total"], "inf")
            self.assertEqual(sorted(seriesD), ["empty", "frequency_harmonic", "labels"])
            for name, (header, rows) in self.__seriesD.items():
                self.assertEqual(seriesD[name], (header, rows))
            #
            with open(self.__pathReport, "rb") as ifh:
                bD = msgpack.unpack(ifh, raw=False)
            self.assertEqual(bD["version"], BINARY_REPORT_VERSION)
            self.assertEqual(bD["encoder"], "alexlab")
            cols = bD["series"]["frequency_harmonic"]["columns"]
            self.assertEqual(cols[0]["data"]["encoding"], "float64-le")
            self.assertEqual(len(cols[0]["data"]["data"]), 3 * 8)
            self.assertEqual(bD["series"]["labels"]["columns"][0]["data"]["encoding"], "list")
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testCompressedAndMissing(self):
        """Test case -  gzipped reports are read, missing ones give an empty result"""
        try:
            self.assertTrue(BinaryReportWriter().serialize(self.__pathReport, self.__reportD))
            gzPath = self.__pathReport + ".gz"
            with open(self.__pathReport, "rb") as ifh, gzip.open(gzPath, "wb") as ofh:
                shutil.copyfileobj(ifh, ofh)
            reportD, seriesD = BinaryReportReader().deserialize(gzPath)
            self.assertEqual(reportD["violations"], ["S"])
            self.assertEqual(seriesD, {})
            reportD, seriesD = BinaryReportReader().deserialize(os.path.join(self.__pathOutputDir, "no-such-report.msgpack"))
            self.assertIsNone(reportD)
            self.assertEqual(seriesD, {})
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()


def suiteBinaryReportTests():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(BinaryReportTests("testSerialize"))
    suiteSelect.addTest(BinaryReportTests("testCompressedAndMissing"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = suiteBinaryReportTests()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
