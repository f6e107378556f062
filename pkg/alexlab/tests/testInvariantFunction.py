##
#
# File:    testInvariantFunction.py
# Date:    11-Mar-2026
# Version: 0.001
#
# Updates:
#  21-Mar-2026  square-root gradient bound cases
##
"""
Test cases for the first-row bound of orthogonally invariant matrix functions and the
square-root gradient bound of nonnegative fields.

"""
import logging
import os
import sys
import time
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from alexlab.api.InvariantFunction import firstRowQuantity, invariantGBound, sqrtGradientBoundCheck, traceSquareG
from alexlab.api.ScalarField import quadraticField
from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabInputError, AlexlabPreconditionError

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


class InvariantFunctionTests(unittest.TestCase):
    def setUp(self):
        self.__startTime = time.time()
        logger.debug("Running tests on version %s", __version__)
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    @settings(deadline=None, max_examples=30)
    @given(st.integers(min_value=0, max_value=2 ** 32 - 1), st.integers(min_value=2, max_value=5))
    def testFirstRowTraceSquare(self, seed, order):
        """Test case -  h = 4 |e|^2 for the sum of squared entries"""
        rng = np.random.default_rng(seed)
        nA = rng.uniform(-1.0, 1.0, size=(order, order))
        nA = 0.5 * (nA + nA.T)
        hV = float(firstRowQuantity(traceSquareG, nA))
        expected = 4.0 * float(np.sum(nA[0, 1:] ** 2))
        self.assertLessEqual(abs(hV - expected), 1.0e-6 * max(1.0, expected))

    def testNamedFunctions(self):
        """Test case -  sample-max constants of the builtin invariant functions"""
        try:
            cEst, rpt = invariantGBound("trace-square", order=3, seed=3)
            self.assertEqual(rpt.getConclusion(), "bound-holds", rpt.toDict())
            self.assertAlmostEqual(cEst, 4.0, delta=1.0e-4)
            self.assertEqual(rpt.getFitted("h_at_zero"), 0.0)
            self.assertIn("invariant_G_trace-square", rpt.getSeries())
            #
            cEst, rpt = invariantGBound("sigma2", order=3, seed=3)
            self.assertEqual(rpt.getConclusion(), "bound-holds", rpt.toDict())
            self.assertAlmostEqual(cEst, 2.0, delta=1.0e-4)
            #
            cEst, rpt = invariantGBound("trace", order=4)
            self.assertEqual(rpt.getConclusion(), "bound-holds")
            self.assertEqual(cEst, 0.0)
            self.assertEqual(rpt.getHypothesis("quadratic-vanishing")["note"], "h vanishes identically")
            #
            cEst, rpt = invariantGBound(traceSquareG, order=2)
            self.assertEqual(rpt.getFitted("G"), "traceSquareG")
            self.assertAlmostEqual(cEst, 4.0, delta=1.0e-4)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testInvalidFunctions(self):
        """Test case -  unknown names, small orders and non-invariant functions are rejected"""
        try:
            with self.assertRaises(AlexlabArgumentError):
                invariantGBound("determinant")
            with self.assertRaises(AlexlabArgumentError):
                invariantGBound("trace", order=1)
            with self.assertRaises(AlexlabInputError):
                invariantGBound(lambda nA: nA[..., 0, 0], order=3)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testSqrtGradientBound(self):
        """Test case -  y^2 attains C = sqrt(2 d B) with B = 2"""
        try:
            box = [(-1.0, 1.0)]
            ut = quadraticField([[2.0]], box=box, name="y2")
            rpt = sqrtGradientBoundCheck(ut, count=500)
            self.assertEqual(rpt.getConclusion(), "bound-holds")
            self.assertAlmostEqual(rpt.getFitted("c_bound"), 2.0, places=9)
            self.assertAlmostEqual(rpt.getFitted("max_ratio"), 2.0, places=6)
            self.assertIsNone(rpt.getHypothesis("hessian-bound"))
            #
            rpt = sqrtGradientBoundCheck(ut, B=1.0, count=500)
            self.assertEqual(rpt.getConclusion(), "hypothesis-failure")
            self.assertEqual(rpt.brokenHypotheses(), ["hessian-bound"])
            self.assertIsNotNone(rpt.getFitted("witness"))
            #
            ut = quadraticField(np.diag([0.0, 2.0]), constant=0.5, box=[(-1.0, 1.0), (-1.0, 1.0)], name="shifted")
            rpt = sqrtGradientBoundCheck(ut, B=2.0, yAxes=[1], count=500)
            self.assertEqual(rpt.getConclusion(), "bound-holds")
            self.assertLess(rpt.getFitted("max_ratio"), 2.0)
            #
            with self.assertRaises(AlexlabPreconditionError):
                sqrtGradientBoundCheck(quadraticField([[0.0]], gradient=[1.0], box=box))
            with self.assertRaises(AlexlabArgumentError):
                sqrtGradientBoundCheck(quadraticField([[2.0]]))
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()


def suiteInvariantFunctionTests():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(InvariantFunctionTests("testFirstRowTraceSquare"))
    suiteSelect.addTest(InvariantFunctionTests("testNamedFunctions"))
    suiteSelect.addTest(InvariantFunctionTests("testInvalidFunctions"))
    suiteSelect.addTest(InvariantFunctionTests("testSqrtGradientBound"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = suiteInvariantFunctionTests()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
