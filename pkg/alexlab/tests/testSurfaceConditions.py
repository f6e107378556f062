##
#
# File:    testSurfaceConditions.py
# Date:    10-Feb-2026
# Version: 0.001
#
# Updates:
#  16-Mar-2026  general curvature functions in the vertical-pair comparison
##
"""
Test cases for the tangency set, contact orders and the condition checkers on catalog bodies.

"""
import logging
import os
import sys
import time
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from alexlab.api.SurfaceCatalog import SurfaceCatalog
from alexlab.api.SurfaceConditions import (
    INFINITE,
    checkConditionLC,
    checkConditionS,
    checkConditionT,
    checkMainAssumption,
    contactOrder,
    findTangencySet,
)
from alexlab.api.SurfaceCurvature import gM
from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabDegenerateError

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


class SurfaceConditionsTests(unittest.TestCase):
    def setUp(self):
        self.__catalog = SurfaceCatalog()
        self.__startTime = time.time()
        logger.debug("Running tests on version %s", __version__)
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testSphereConditions(self):
        """Test case -  all conditions hold on the unit sphere"""
        try:
            M = self.__catalog.build("sphere")
            tpL = findTangencySet(M)
            self.assertEqual(len(tpL), 1)
            self.assertAlmostEqual(tpL[0].zBar, 0.0, places=12)
            order, diag = contactOrder(tpL[0])
            self.assertEqual(order, 2)
            self.assertAlmostEqual(diag["slope"], 2.0, delta=0.01)
            for rpt in (
                checkConditionS(M, tangency=tpL),
                checkConditionT(M, tangency=tpL),
                checkConditionLC(M, tangency=tpL),
                checkMainAssumption(M),
            ):
                self.assertEqual(rpt.getVerdict(), "holds", rpt.toDict())
            rpt = checkMainAssumption(M)
            self.assertLessEqual(abs(rpt.getDetails()["worst_margin"]), 1.0e-10)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testSpheroidConditions(self):
        """Test case -  all conditions hold on the spheroid (0.6, 0.6, 1.0)"""
        try:
            M = self.__catalog.build("ellipsoid", parameters={"a": 0.6, "c": 1.0})
            tpL = findTangencySet(M)
            for rpt in (checkConditionS(M, tangency=tpL), checkConditionT(M, tangency=tpL), checkConditionLC(M, tangency=tpL), checkMainAssumption(M)):
                self.assertTrue(rpt.holds(), rpt.toDict())
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testFlatTangentOrders(self):
        """Test case -  finite and infinite contact orders at the equator"""
        try:
            M = self.__catalog.build("flat-tangent", parameters={"k": 4})
            rpt = checkConditionT(M)
            self.assertTrue(rpt.holds())
            self.assertEqual(rpt.getDetails()["orders"][0]["order"], 4)
            #
            M = self.__catalog.build("flat-tangent", parameters={"k": "infinite"})
            rpt = checkConditionT(M)
            self.assertTrue(rpt.fails(), rpt.toDict())
            self.assertGreater(len(rpt.getWitnesses()), 0)
            self.assertTrue(rpt.getDetails()["witness_reverified"])
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testContactOrderCallable(self):
        """Test case -  contact order of explicit axis functions"""
        try:
            order, _ = contactOrder(lambda tt: 0.5 * tt ** 3)
            self.assertEqual(order, 3)
            order, _ = contactOrder(lambda tt: np.exp(-1.0 / tt))
            self.assertEqual(order, INFINITE)
            with self.assertRaises(AlexlabDegenerateError):
                contactOrder(lambda tt: 0.0)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    @settings(deadline=None, max_examples=40)
    @given(st.floats(min_value=0.1, max_value=10.0, allow_nan=False))
    def testContactOrderScaleInvariant(self, lam):
        """Test case -  rescaling the axis function by lambda in [0.1, 10] keeps the contact order"""
        for func, expected in (
            (lambda tt: 0.5 * tt ** 3, 3),
            (lambda tt: tt ** 2 * (1.0 + tt), 2),
            (lambda tt: np.exp(-1.0 / tt), INFINITE),
        ):
            order, _ = contactOrder(func)
            self.assertEqual(order, expected)
            order, _ = contactOrder(lambda tt, fn=func: lam * fn(tt))
            self.assertEqual(order, expected)

    def testCappedCylinderBand(self):
        """Test case -  a band of vertical tangency breaks condition T"""
        try:
            M = self.__catalog.build("capped-cylinder")
            tpL = findTangencySet(M)
            self.assertEqual(len(tpL), 1)
            self.assertIsNotNone(tpL[0].band)
            self.assertTrue(checkConditionT(M, tangency=tpL).fails())
            self.assertTrue(checkConditionS(M, tangency=tpL).holds())
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testDumbbellFailsSAndLC(self):
        """Test case -  the waist tangent hyperplane cuts the bulges"""
        try:
            M = self.__catalog.build("dumbbell")
            tpL = findTangencySet(M)
            self.assertGreaterEqual(len(tpL), 3)
            rpt = checkConditionS(M, tangency=tpL)
            self.assertTrue(rpt.fails(), rpt.toDict())
            self.assertTrue(rpt.getDetails()["witness_reverified"])
            self.assertTrue(all(wt.margin > 0.0 for wt in rpt.getWitnesses()))
            fine = checkConditionS(M, samples=(4000, 128), tangency=tpL)
            self.assertTrue(fine.fails())
            rpt = checkConditionLC(M, tangency=tpL)
            self.assertTrue(rpt.fails(), rpt.toDict())
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testConditionSReverifyFactor(self):
        """Test case -  the witness re-check resolution follows reverifyFactor"""
        try:
            M = self.__catalog.build("dumbbell")
            tpL = findTangencySet(M)
            rpt = checkConditionS(M, tangency=tpL)
            self.assertEqual(rpt.getResolution()["reverify_factor"], 10)
            rpt = checkConditionS(M, tangency=tpL, reverifyFactor=3)
            self.assertTrue(rpt.fails(), rpt.toDict())
            self.assertTrue(rpt.getDetails()["witness_reverified"])
            self.assertEqual(rpt.getResolution(), {"z_levels": 400, "azimuths": 64, "reverify_factor": 3})
            with self.assertRaises(AlexlabArgumentError):
                checkConditionS(M, tangency=tpL, reverifyFactor=0)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testPearMainAssumption(self):
        """Test case -  the asymmetric pear has a vertical pair with the larger curvature on top"""
        try:
            M = self.__catalog.build("pear")
            rpt = checkMainAssumption(M)
            self.assertTrue(rpt.fails(), rpt.toDict())
            wt = rpt.getWitnesses()[0]
            rr, za, zb = wt.point
            self.assertLess(za, zb)
            self.assertAlmostEqual(float(M.q(za)), rr * rr, places=9)
            self.assertAlmostEqual(float(M.q(zb)), rr * rr, places=9)
            self.assertGreater(wt.margin, 1.0e-9)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testMainAssumptionCurvatureFunction(self):
        """Test case -  sigma_2 based comparison on the sphere certifies the curvature function"""
        try:
            M = self.__catalog.build("sphere")
            rpt = checkMainAssumption(M, samples=100, curvatureFunction=lambda kV: gM(kV, 2))
            self.assertTrue(rpt.holds())
            self.assertEqual(rpt.getDetails()["g_properties"], "holds")
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()


def suiteSurfaceConditionsTests():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(SurfaceConditionsTests("testSphereConditions"))
    suiteSelect.addTest(SurfaceConditionsTests("testSpheroidConditions"))
    suiteSelect.addTest(SurfaceConditionsTests("testFlatTangentOrders"))
    suiteSelect.addTest(SurfaceConditionsTests("testContactOrderCallable"))
    suiteSelect.addTest(SurfaceConditionsTests("testContactOrderScaleInvariant"))
    suiteSelect.addTest(SurfaceConditionsTests("testCappedCylinderBand"))
    suiteSelect.addTest(SurfaceConditionsTests("testDumbbellFailsSAndLC"))
    suiteSelect.addTest(SurfaceConditionsTests("testConditionSReverifyFactor"))
    suiteSelect.addTest(SurfaceConditionsTests("testPearMainAssumption"))
    suiteSelect.addTest(SurfaceConditionsTests("testMainAssumptionCurvatureFunction"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = suiteSurfaceConditionsTests()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
