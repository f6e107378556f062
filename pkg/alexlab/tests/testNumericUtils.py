##
#
# File:    testNumericUtils.py
# Date:    3-Feb-2026
# Version: 0.001
##
"""
Test cases for grids, the Jacobi eigensolver, finite differences, root finding and slopes.

"""
import logging
import os
import sys
import time
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from alexlab.api.NumericUtils import (
    Grid,
    SymMatrix,
    bisectRoot,
    bisectRootArray,
    eigSym,
    fdGradientHessian,
    fdStencilDerivatives,
    loglogSlope,
    loglogSlopeProfile,
    sphereQuadrature,
)
from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabBracketError, AlexlabConvergenceError, AlexlabDomainError

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


class NumericUtilsTests(unittest.TestCase):
    def setUp(self):
        self.__startTime = time.time()
        logger.debug("Running tests on version %s", __version__)
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testGridNodes(self):
        """Test case -  uniform axes and node array layout"""
        try:
            grid = Grid([(0.0, 1.0, 5), (-1.0, 1.0, 3)])
            self.assertEqual(grid.getShape(), (5, 3))
            self.assertAlmostEqual(grid.getSpacing(0), 0.25)
            nodes = grid.getNodes()
            self.assertEqual(nodes.shape, (5, 3, 2))
            np.testing.assert_allclose(nodes[4, 2], [1.0, 1.0])
            with self.assertRaises(AlexlabArgumentError):
                Grid([(0.0, 1.0, 2)])
            with self.assertRaises(AlexlabArgumentError):
                Grid([(1.0, 1.0, 4)])
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testSymMatrixPacking(self):
        """Test case -  upper triangle packing and entry access"""
        arr = np.array([[1.0, 2.0, 3.0], [2.0, 4.0, 5.0], [3.0, 5.0, 6.0]])
        sm = SymMatrix.fromArray(arr)
        np.testing.assert_array_equal(sm.getUpper(), [1.0, 2.0, 3.0, 4.0, 5.0, 6.0])
        self.assertEqual(sm.getEntry(2, 1), 5.0)
        self.assertEqual(sm.getEntry(1, 1), 4.0)
        np.testing.assert_array_equal(sm.toArray(), arr)
        self.assertAlmostEqual(sm.trace(), 11.0)
        self.assertEqual(sm, SymMatrix([1.0, 2.0, 3.0, 4.0, 5.0, 6.0], 3))
        with self.assertRaises(AlexlabArgumentError):
            SymMatrix([1.0, 2.0], 2)
        with self.assertRaises(AlexlabArgumentError):
            SymMatrix(np.zeros(45), 9)

    def testEigSymKnown(self):
        """Test case -  eigenvalues of a tridiagonal matrix"""
        try:
            arr = np.array([[2.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 2.0]])
            vals, vecs = eigSym(arr)
            np.testing.assert_allclose(vals, [2.0 - np.sqrt(2.0), 2.0, 2.0 + np.sqrt(2.0)], atol=1e-12)
            np.testing.assert_allclose(vecs.T @ vecs, np.eye(3), atol=1e-12)
            np.testing.assert_allclose(arr @ vecs, vecs * vals, atol=1e-12)
            vals, _ = eigSym(np.diag([3.0, 1.0, 2.0]))
            np.testing.assert_array_equal(vals, [1.0, 2.0, 3.0])
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    @settings(deadline=None, max_examples=40)
    @given(st.integers(min_value=0, max_value=2 ** 32 - 1), st.integers(min_value=1, max_value=8))
    def testEigSymRandom(self, seed, order):
        """Test case -  eigenvalues agree with numpy on seeded random matrices"""
        rng = np.random.default_rng(seed)
        aA = rng.normal(size=(order, order))
        aA = aA + aA.T
        vals, vecs = eigSym(aA)
        np.testing.assert_allclose(vals, np.linalg.eigvalsh(aA), atol=1e-10 * max(1.0, np.abs(aA).max()))
        np.testing.assert_allclose(vecs.T @ vecs, np.eye(order), atol=1e-10)

    def testEigSymConvergence(self):
        """Test case -  Jacobi sweeps stop on the off-diagonal norm across orders and scales"""
        try:
            rng = np.random.default_rng(3)
            for scale in (1.0e-3, 1.0, 1.0e3):
                for order in range(1, 9):
                    for _ in range(25):
                        aA = rng.normal(size=(order, order))
                        aA = scale * (aA + aA.T)
                        vals, vecs = eigSym(aA)
                        resid = np.linalg.norm(vecs @ np.diag(vals) @ vecs.T - aA)
                        self.assertLessEqual(resid, 1.0e-12 * max(1.0, np.linalg.norm(aA)))
                        self.assertTrue(np.all(np.diff(vals) >= 0.0))
            aA = np.random.default_rng(3).normal(size=(4, 4))
            vals, _ = eigSym(aA + aA.T)
            np.testing.assert_allclose(vals, np.linalg.eigvalsh(aA + aA.T), atol=1e-12)
            # a single rotation diagonalizes an order-2 matrix
            vals, _ = eigSym(np.array([[1.0, 2.0], [2.0, -1.0]]), maxSweeps=1)
            np.testing.assert_allclose(vals, [-np.sqrt(5.0), np.sqrt(5.0)], atol=1e-12)
            with self.assertRaises(AlexlabConvergenceError):
                eigSym(np.array([[1.0, 2.0], [2.0, -1.0]]), maxSweeps=0)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testFiniteDifferences(self):
        """Test case -  value, gradient and Hessian of a cubic"""
        try:

            def func(pV):
                return pV[0] ** 3 + pV[0] * pV[1] + 2.0 * pV[1] ** 2

            f0, grad, hess = fdGradientHessian(func, [0.5, -0.3])
            self.assertAlmostEqual(f0, 0.125 - 0.15 + 0.18)
            np.testing.assert_allclose(grad, [0.75 - 0.3, 0.5 - 1.2], atol=1e-8)
            np.testing.assert_allclose(hess.toArray(), [[3.0, 1.0], [1.0, 4.0]], atol=1e-5)
            #
            pts = np.array([[0.1, 0.2], [0.3, 0.4]])
            _, gA, hA = fdStencilDerivatives(lambda pA: np.sum(pA * pA, axis=-1), pts)
            np.testing.assert_allclose(gA, 2.0 * pts, atol=1e-8)
            np.testing.assert_allclose(hA, np.broadcast_to(2.0 * np.eye(2), (2, 2, 2)), atol=1e-5)
            with self.assertRaises(AlexlabDomainError):
                fdGradientHessian(lambda pV: np.log(pV[0]), [0.0])
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testBisection(self):
        """Test case -  scalar and elementwise bracketed bisection"""
        try:
            root, count = bisectRoot(lambda x: x * x - 2.0, 0.0, 2.0, returnCount=True)
            self.assertAlmostEqual(root, np.sqrt(2.0), places=11)
            self.assertGreater(count, 30)
            self.assertEqual(bisectRoot(lambda x: x, 0.0, 1.0), 0.0)
            with self.assertRaises(AlexlabBracketError):
                bisectRoot(lambda x: x * x + 1.0, -1.0, 1.0)
            targets = np.array([0.25, 0.5, 0.75])
            roots = bisectRootArray(lambda x: x - targets, np.zeros(3), np.ones(3))
            np.testing.assert_allclose(roots, targets, atol=1e-13)
            roots = bisectRootArray(lambda x: x - np.array([0.5, 2.0]), np.zeros(2), np.ones(2), strict=False)
            self.assertTrue(np.isnan(roots[1]))
            with self.assertRaises(AlexlabBracketError):
                bisectRootArray(lambda x: x - np.array([0.5, 2.0]), np.zeros(2), np.ones(2))
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testLoglogSlope(self):
        """Test case -  slope of power laws and argument checks"""
        try:
            tV = np.geomspace(1e-1, 1e-4, 12)
            slope, r2 = loglogSlope(list(zip(tV, 3.0 * tV ** 2.5)))
            self.assertAlmostEqual(slope, 2.5, places=9)
            self.assertAlmostEqual(r2, 1.0, places=9)
            profile = loglogSlopeProfile(list(zip(tV, tV ** 2)), window=6)
            self.assertEqual(len(profile), 7)
            np.testing.assert_allclose(profile, 2.0, atol=1e-9)
            with self.assertRaises(AlexlabArgumentError):
                loglogSlope(list(zip(tV[::-1], tV[::-1])))
            with self.assertRaises(AlexlabDomainError):
                loglogSlope([(0.4, 1.0), (0.3, 0.0), (0.2, 1.0), (0.1, 1.0)])
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testSphereQuadrature(self):
        """Test case -  sphere areas and second moments"""
        try:
            pts, wts = sphereQuadrature(2)
            self.assertAlmostEqual(float(np.sum(wts)), 2.0 * np.pi, places=12)
            self.assertAlmostEqual(float(np.sum(wts * pts[:, 0] ** 2)), np.pi, places=12)
            pts, wts = sphereQuadrature(3)
            self.assertAlmostEqual(float(np.sum(wts)), 4.0 * np.pi, places=12)
            self.assertAlmostEqual(float(np.sum(wts * pts[:, 2] ** 2)), 4.0 * np.pi / 3.0, places=12)
            np.testing.assert_allclose(np.sum(pts * pts, axis=-1), 1.0, atol=1e-14)
            with self.assertRaises(AlexlabArgumentError):
                sphereQuadrature(4)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()


def suiteNumericUtilsTests():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(NumericUtilsTests("testGridNodes"))
    suiteSelect.addTest(NumericUtilsTests("testSymMatrixPacking"))
    suiteSelect.addTest(NumericUtilsTests("testEigSymKnown"))
    suiteSelect.addTest(NumericUtilsTests("testEigSymRandom"))
    suiteSelect.addTest(NumericUtilsTests("testEigSymConvergence"))
    suiteSelect.addTest(NumericUtilsTests("testFiniteDifferences"))
    suiteSelect.addTest(NumericUtilsTests("testBisection"))
    suiteSelect.addTest(NumericUtilsTests("testLoglogSlope"))
    suiteSelect.addTest(NumericUtilsTests("testSphereQuadrature"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = suiteNumericUtilsTests()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
