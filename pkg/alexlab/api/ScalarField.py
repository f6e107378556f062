##
# File:    ScalarField.py
# Date:    3-Feb-2026
# Version: 0.001 Initial version
#
# Updates:
#  21-Feb-2026  vectorized evaluation over point stacks
#   9-Mar-2026  add reflected() for local pairing frames
##
"""
Twice-differentiable scalar functions on an open box, queryable for value,
gradient and Hessian either in closed form or by finite differences.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging

import numpy as np

from alexlab.api.NumericUtils import SymMatrix, fdStencilDerivatives
from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabDomainError

logger = logging.getLogger(__name__)


class ScalarField(object):
    """Scalar function of n = 1..7 variables on an open box.

    The callables act on stacks of points: an array (..., n) maps to values (...),
    gradients (..., n) and Hessians (..., n, n).  When both analytic derivative
    callables are supplied the field is "analytic", otherwise derivatives are
    sampled with central differences ("fd-sampled").
    """

    def __init__(self, func, dim, box=None, gradient=None, hessian=None, **kwargs):
        """Create a field.

        Args:
            func (callable): vectorized value function
            dim (int): number of variables (1..7)
            box (list, optional): (lo, hi) per variable, None for all of R^n. Defaults to None.
            gradient (callable, optional): vectorized analytic gradient. Defaults to None.
            hessian (callable, optional): vectorized analytic Hessian. Defaults to None.

        Keyword Args:
            step (float): finite-difference step for fd-sampled fields (default: per-coordinate defaults)
            name (str): label used in diagnostics (default: "field")
        """
        if not 1 <= int(dim) <= 7:
            raise AlexlabArgumentError("ScalarField dimension must lie in 1..7 (got %r)" % dim)
        self.__func = func
        self.__dim = int(dim)
        self.__box = [(float(lo), float(hi)) for lo, hi in box] if box is not None else [(-np.inf, np.inf)] * self.__dim
        if len(self.__box) != self.__dim:
            raise AlexlabArgumentError("Box rank %d does not match dimension %d" % (len(self.__box), self.__dim))
        self.__gradient = gradient
        self.__hessian = hessian
        self.__step = kwargs.get("step", None)
        self.__name = kwargs.get("name", "field")

    def getDim(self):
        return self.__dim

    def getBox(self):
        return list(self.__box)

    def getName(self):
        return self.__name

    def getProvenance(self):
        return "analytic" if self.__gradient is not None and self.__hessian is not None else "fd-sampled"

    def getSmoothness(self):
        return "C2"

    def contains(self, points):
        """Strict interior membership for one point or a stack of points."""
        pA = np.asarray(points, dtype=np.float64)
        lo = np.array([b[0] for b in self.__box])
        hi = np.array([b[1] for b in self.__box])
        return np.all((pA > lo) & (pA < hi), axis=-1)

    def __checkPoints(self, points):
        pA = np.asarray(points, dtype=np.float64)
        if pA.shape[-1] != self.__dim:
            raise AlexlabArgumentError("%s expects points of dimension %d (got %r)" % (self.__name, self.__dim, pA.shape))
        inside = self.contains(pA)
        if not np.all(inside):
            bad = pA[~inside] if pA.ndim > 1 else pA
            raise AlexlabDomainError("%s evaluated outside its open domain at %r" % (self.__name, np.atleast_2d(bad)[0].tolist()))
        return pA

    def values(self, points):
        """Values at a stack of points (no domain check)."""
        return np.asarray(self.__func(np.asarray(points, dtype=np.float64)), dtype=np.float64)

    def evaluateArray(self, points):
        """Value, gradient and Hessian at a stack of interior points.

        Returns:
            (numpy.ndarray, numpy.ndarray, numpy.ndarray): shapes (...), (..., n), (..., n, n)
        """
        pA = self.__checkPoints(points)
        if self.getProvenance() == "analytic":
            fV = np.asarray(self.__func(pA), dtype=np.float64)
            gA = np.asarray(self.__gradient(pA), dtype=np.float64)
            hA = np.asarray(self.__hessian(pA), dtype=np.float64)
        else:
            fV, gA, hA = fdStencilDerivatives(self.__func, pA, h=self.__step)
        hA = 0.5 * (hA + np.swapaxes(hA, -1, -2))
        return fV, gA, hA

    def evaluate(self, x):
        """Value, gradient and Hessian at one interior point.

        Returns:
            (float, numpy.ndarray, SymMatrix): value, gradient, Hessian
        """
        xV = np.asarray(x, dtype=np.float64).reshape(self.__dim)
        fV, gA, hA = self.evaluateArray(xV)
        return float(fV), np.array(gA, dtype=np.float64), SymMatrix.fromArray(hA)

    def value(self, x):
        xV = self.__checkPoints(np.asarray(x, dtype=np.float64).reshape(self.__dim))
        return float(self.__func(xV))

    def gradient(self, x):
        return self.evaluate(x)[1]

    def hessian(self, x):
        return self.evaluate(x)[2]

    def reflected(self, axis=0, name=None):
        """Field x -> f(x with coordinate `axis` negated), derivatives transformed accordingly."""
        sV = np.ones(self.__dim)
        sV[axis] = -1.0
        box = list(self.__box)
        box[axis] = (-self.__box[axis][1], -self.__box[axis][0])

        def func(pA):
            return self.values(pA * sV)

        def grad(pA):
            _, gA, _ = self.evaluateArray(pA * sV)
            return gA * sV

        def hess(pA):
            _, _, hA = self.evaluateArray(pA * sV)
            return hA * sV[:, None] * sV[None, :]

        return ScalarField(func, self.__dim, box=box, gradient=grad, hessian=hess, name=name or "%s-reflected" % self.__name)

    def __repr__(self):
        return "ScalarField(%s, dim=%d, %s)" % (self.__name, self.__dim, self.getProvenance())


def quadraticField(hessian, gradient=None, constant=0.0, box=None, name="quadratic"):
    """Analytic field c + g.x + x^T N x / 2."""
    nA = np.asarray(hessian, dtype=np.float64)
    nn = nA.shape[0]
    gV = np.zeros(nn) if gradient is None else np.asarray(gradient, dtype=np.float64)

    def func(pA):
        return constant + pA @ gV + 0.5 * np.einsum("...i,ij,...j->...", pA, nA, pA)

    def grad(pA):
        return gV + pA @ nA.T

    def hess(pA):
        return np.broadcast_to(nA, pA.shape[:-1] + (nn, nn)).copy()

    return ScalarField(func, nn, box=box, gradient=grad, hessian=hess, name=name)


def sphereCapField(dim, radius=1.0, name="sphere-cap"):
    """Lower cap of the sphere of the given radius, u = R - sqrt(R^2 - |x|^2), on the box |x_i| < R/sqrt(dim)."""
    rr = float(radius)
    half = 0.999 * rr / np.sqrt(dim)

    def func(pA):
        return rr - np.sqrt(rr * rr - np.sum(pA * pA, axis=-1))

    def grad(pA):
        sq = np.sqrt(rr * rr - np.sum(pA * pA, axis=-1))
        return pA / sq[..., None]

    def hess(pA):
        sq = np.sqrt(rr * rr - np.sum(pA * pA, axis=-1))
        eye = np.eye(pA.shape[-1])
        return eye / sq[..., None, None] + pA[..., :, None] * pA[..., None, :] / (sq ** 3)[..., None, None]

    return ScalarField(func, dim, box=[(-half, half)] * dim, gradient=grad, hessian=hess, name=name)
