##
#
# File:    testComparisonPrinciple.py
# Date:    24-Feb-2026
# Version: 0.001
##
"""
Test cases for comparison instances, the trichotomy check and the boundary-descent variant.

"""
import logging
import os
import sys
import time
import unittest

import numpy as np

from alexlab.api.ComparisonPrinciple import ComparisonInstance, boundaryDescentCheck, ellipticityMargins, trichotomyCheck
from alexlab.api.ScalarField import quadraticField
from alexlab.io.AlexlabExceptions import AlexlabArgumentError

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

BOX = [(-1.0, 1.0), (-1.0, 1.0)]


def tiltedParabola(curvature, constant=0.0, name="parabola"):
    """t + curvature |y|^2 / 2 + constant."""
    return quadraticField(np.diag([0.0, curvature]), gradient=[1.0, 0.0], constant=constant, box=BOX, name=name)


class ComparisonPrincipleTests(unittest.TestCase):
    def setUp(self):
        self.__startTime = time.time()
        logger.debug("Running tests on version %s", __version__)
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testEllipticity(self):
        """Test case -  dF/dN eigenvalues of the builtin operators"""
        try:
            grad = np.array([[0.0, 0.0], [1.0, 0.0]])
            hess = np.zeros((2, 2, 2))
            val = np.zeros(2)
            np.testing.assert_allclose(ellipticityMargins("laplacian", val, grad, hess), [1.0, 1.0], atol=1e-8)
            margins = ellipticityMargins("mean-curvature", val, grad, hess)
            self.assertAlmostEqual(margins[0], 0.5, places=6)
            self.assertAlmostEqual(margins[1], 0.5 / 2.0 ** 1.5, places=6)
            with self.assertRaises(AlexlabArgumentError):
                ComparisonInstance(tiltedParabola(1.0), tiltedParabola(1.0), operator="biharmonic")
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testIdenticalPair(self):
        """Test case -  coinciding graphs are reported identical for both operators"""
        try:
            for operator in ("laplacian", "mean-curvature"):
                ci = ComparisonInstance(tiltedParabola(1.0), tiltedParabola(1.0), operator=operator, extent=0.5, name="same")
                rpt = trichotomyCheck(ci)
                self.assertEqual(rpt.getConclusion(), "identical", rpt.toDict())
                self.assertEqual(rpt.getFitted("residual"), 0.0)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testStrictlyGreater(self):
        """Test case -  a vertical translate lies strictly above"""
        try:
            ci = ComparisonInstance(tiltedParabola(1.0, constant=0.1), tiltedParabola(1.0), operator="laplacian", extent=0.5)
            rpt = trichotomyCheck(ci)
            self.assertEqual(rpt.getConclusion(), "strictly-greater")
            self.assertAlmostEqual(rpt.getFitted("min_difference"), 0.1, places=12)
            pNodes, tV, margins = ci.pairing()
            self.assertGreater(pNodes.shape[0], 0)
            np.testing.assert_allclose(tV, pNodes[:, 0] - 0.1, atol=1e-12)
            np.testing.assert_allclose(margins, 0.0, atol=1e-12)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testBrokenHypotheses(self):
        """Test case -  pairing and ellipticity failures are named"""
        try:
            ci = ComparisonInstance(tiltedParabola(2.0), tiltedParabola(1.0), operator="laplacian", extent=0.5)
            rpt = trichotomyCheck(ci)
            self.assertEqual(rpt.getConclusion(), "hypothesis-failure")
            self.assertEqual(rpt.brokenHypotheses(), ["pairing"])
            self.assertAlmostEqual(rpt.getHypothesis("pairing")["margin"], -1.0, places=9)
            #
            ci = ComparisonInstance(tiltedParabola(1.0), tiltedParabola(1.0), operator=lambda val, grad, hess: -np.trace(hess, axis1=-2, axis2=-1), extent=0.5)
            self.assertEqual(ci.getOperatorName(), "custom")
            rpt = trichotomyCheck(ci)
            self.assertEqual(rpt.getConclusion(), "hypothesis-failure")
            self.assertIn("elliptic", rpt.brokenHypotheses())
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testBoundaryDescent(self):
        """Test case -  finite t-order with a broken boundary hypothesis, and a flat remainder"""
        try:
            uu = quadraticField(np.diag([2.0, 1.0]), box=BOX, name="t2")
            rpt = boundaryDescentCheck(ComparisonInstance(uu, uu, operator="laplacian", extent=0.5), 0.25)
            self.assertEqual(rpt.getConclusion(), "hypothesis-failure")
            self.assertIn("v_t<0-on-boundary-of-omega", rpt.brokenHypotheses())
            self.assertEqual(rpt.getFitted("t_order"), 2)
            #
            uu = tiltedParabola(1.0)
            rpt = boundaryDescentCheck(ComparisonInstance(uu, uu, operator="laplacian", extent=0.5), 0.25)
            self.assertEqual(rpt.getConclusion(), "t-derivatives-vanish")
            self.assertAlmostEqual(rpt.getFitted("u_t_origin"), 1.0, places=12)
            with self.assertRaises(AlexlabArgumentError):
                boundaryDescentCheck(ComparisonInstance(uu, uu, extent=0.5), 0.5)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()


def suiteComparisonPrincipleTests():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(ComparisonPrincipleTests("testEllipticity"))
    suiteSelect.addTest(ComparisonPrincipleTests("testIdenticalPair"))
    suiteSelect.addTest(ComparisonPrincipleTests("testStrictlyGreater"))
    suiteSelect.addTest(ComparisonPrincipleTests("testBrokenHypotheses"))
    suiteSelect.addTest(ComparisonPrincipleTests("testBoundaryDescent"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = suiteComparisonPrincipleTests()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
