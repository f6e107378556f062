##
#
# File:    testSurfaceCatalog.py
# Date:    8-Feb-2026
# Version: 0.001
##
"""
Test cases for the builtin body catalog and the revolution profile representation.

"""
import logging
import os
import sys
import time
import unittest

import numpy as np

from alexlab.api.RevolutionProfile import RevolutionProfile
from alexlab.api.SurfaceCatalog import SurfaceCatalog, pear
from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabGeometryError, AlexlabInputError

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


class SurfaceCatalogTests(unittest.TestCase):
    def setUp(self):
        self.__startTime = time.time()
        logger.debug("Running tests on version %s", __version__)
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testListCatalog(self):
        """Test case -  stable ordering and designed conditions"""
        try:
            sc = SurfaceCatalog()
            rows = sc.listCatalog()
            names = [row["name"] for row in rows]
            self.assertEqual(names[:5], ["sphere", "ellipsoid", "capped-cylinder", "pear", "flat-tangent"])
            self.assertEqual(names, sc.getNames())
            for row in rows:
                self.assertIn("designed", row)
                self.assertTrue(row["description"])
            self.assertEqual(sc.getDesignedConditions("pear")["main-assumption"], "fails")
            self.assertEqual(sc.getDesignedConditions("dumbbell")["S"], "fails")
            self.assertEqual(sc.getDesignedConditions("unknown"), {})
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testBuild(self):
        """Test case -  build with overrides, dimension and offset"""
        try:
            sc = SurfaceCatalog()
            M = sc.build("sphere", parameters={"radius": 2.0}, dim=3, offset=0.5)
            self.assertEqual(M.getDim(), 3)
            self.assertEqual(M.getRange(), (-1.5, 2.5))
            self.assertAlmostEqual(M.getMaxRadius(), 2.0, places=9)
            self.assertAlmostEqual(float(M.rho(0.5)), 2.0, places=12)
            with self.assertRaises(AlexlabInputError):
                sc.build("torus")
            with self.assertRaises(AlexlabInputError):
                sc.build("sphere", parameters={"height": 1.0})
            with self.assertRaises(AlexlabArgumentError):
                sc.build("flat-tangent", parameters={"k": 3})
            with self.assertRaises(AlexlabArgumentError):
                pear(coeffs=[-1.5])
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testProfileGeometry(self):
        """Test case -  points, normals, membership and side graphs of the sphere"""
        try:
            M = SurfaceCatalog().build("sphere")
            pt = M.pointAt(0.6, azimuth=0.5 * np.pi)
            np.testing.assert_allclose(pt, [0.0, 0.8, 0.6], atol=1e-12)
            nu = M.normalAt(0.6)
            np.testing.assert_allclose(nu, [-0.8, 0.0, -0.6], atol=1e-12)
            self.assertTrue(M.contains([0.0, 0.0, 0.0]))
            self.assertFalse(M.contains([0.9, 0.0, 0.6]))
            self.assertAlmostEqual(float(M.nuLast(0.0)), 0.0)
            vv = M.sideGraph(0.0, 0.1)
            val, grad, hess = vv.evaluateArray(np.array([[0.0, 0.0]]))
            self.assertAlmostEqual(float(val[0]), 0.0, places=14)
            np.testing.assert_allclose(grad[0], [0.0, 0.0], atol=1e-14)
            np.testing.assert_allclose(hess[0], np.eye(2), atol=1e-12)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testProfileValidation(self):
        """Test case -  profiles must close up with positive radius inside"""
        try:
            with self.assertRaises(AlexlabGeometryError):
                RevolutionProfile(lambda z: 1.0 - 0.5 * z * z, lambda z: -z, lambda z: -np.ones_like(z), -1.0, 1.0)
            with self.assertRaises(AlexlabGeometryError):
                RevolutionProfile(lambda z: z * z * (1.0 - z * z), lambda z: 2.0 * z - 4.0 * z ** 3, lambda z: 2.0 - 12.0 * z * z, -1.0, 1.0)
            with self.assertRaises(AlexlabArgumentError):
                RevolutionProfile(lambda z: 1.0 - z * z, lambda z: -2.0 * z, lambda z: -2.0 * np.ones_like(z), 1.0, -1.0)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()


def suiteSurfaceCatalogTests():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(SurfaceCatalogTests("testListCatalog"))
    suiteSelect.addTest(SurfaceCatalogTests("testBuild"))
    suiteSelect.addTest(SurfaceCatalogTests("testProfileGeometry"))
    suiteSelect.addTest(SurfaceCatalogTests("testProfileValidation"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = suiteSurfaceCatalogTests()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
