##
# File:    NumericUtils.py
# Date:    2-Feb-2026
# Version: 0.001 Initial version
#
# Updates:
#  19-Feb-2026  vectorized bisection for grid solves
#   4-Mar-2026  product quadrature on the 2-sphere
#  23-Mar-2026  windowed slope profile for order detection
##
"""
Shared numerical substrate - grids, symmetric matrices, a Jacobi eigensolver,
finite-difference derivatives, bracketed root finding, log-log slopes and
sphere quadrature.

All functions here are pure functions of their inputs.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging
import math

import numpy as np
from scipy import stats

from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabBracketError, AlexlabConvergenceError, AlexlabDomainError

logger = logging.getLogger(__name__)


class Grid(object):
    """Tensor product grid with uniformly spaced nodes on each axis."""

    def __init__(self, dims):
        """Create a grid.

        Args:
            dims (list): (min, max, count) tuples, one per axis, count >= 3 and max > min
        """
        self.__dims = []
        for lo, hi, count in dims:
            if int(count) < 3:
                raise AlexlabArgumentError("Grid axis requires at least 3 nodes (got %r)" % count)
            if not float(hi) > float(lo):
                raise AlexlabArgumentError("Grid axis requires max > min (got %r, %r)" % (lo, hi))
            self.__dims.append((float(lo), float(hi), int(count)))

    def getRank(self):
        return len(self.__dims)

    def getShape(self):
        return tuple([dim[2] for dim in self.__dims])

    def getBounds(self, axis):
        return self.__dims[axis][0], self.__dims[axis][1]

    def getSpacing(self, axis):
        lo, hi, count = self.__dims[axis]
        return (hi - lo) / (count - 1)

    def getAxis(self, axis):
        """Node coordinates along one axis computed as min + i * spacing."""
        lo, _, count = self.__dims[axis]
        return lo + np.arange(count, dtype=np.float64) * self.getSpacing(axis)

    def getNodes(self):
        """Return the node coordinates as an array with shape (*shape, rank)."""
        axL = [self.getAxis(ii) for ii in range(self.getRank())]
        return np.stack(np.meshgrid(*axL, indexing="ij"), axis=-1)

    def __repr__(self):
        return "Grid(%s)" % ", ".join(["[%g, %g] x %d" % dim for dim in self.__dims])


class SymMatrix(object):
    """Real symmetric matrix of order 1..8 stored by its upper triangle.

    Index 0 plays the role of the distinguished "t" direction where a caller needs one.
    """

    def __init__(self, upper, order):
        if not 1 <= int(order) <= 8:
            raise AlexlabArgumentError("SymMatrix order must lie in 1..8 (got %r)" % order)
        self.__order = int(order)
        self.__upper = np.array(upper, dtype=np.float64).ravel()
        if self.__upper.size != self.__order * (self.__order + 1) // 2:
            raise AlexlabArgumentError("Upper triangle length %d does not match order %d" % (self.__upper.size, self.__order))
        if not np.all(np.isfinite(self.__upper)):
            raise AlexlabDomainError("SymMatrix entries must be finite")

    @classmethod
    def fromArray(cls, arr):
        """Build from a square array using its upper triangle."""
        aA = np.asarray(arr, dtype=np.float64)
        if aA.ndim != 2 or aA.shape[0] != aA.shape[1]:
            raise AlexlabArgumentError("Expecting a square matrix, got shape %r" % (aA.shape,))
        iU = np.triu_indices(aA.shape[0])
        return cls(aA[iU], aA.shape[0])

    def getOrder(self):
        return self.__order

    def getUpper(self):
        return self.__upper.copy()

    def getEntry(self, ii, jj):
        ii, jj = min(ii, jj), max(ii, jj)
        # row-major offset of (ii, jj) in the packed upper triangle
        return float(self.__upper[ii * self.__order - ii * (ii - 1) // 2 + (jj - ii)])

    def toArray(self):
        aA = np.zeros((self.__order, self.__order), dtype=np.float64)
        aA[np.triu_indices(self.__order)] = self.__upper
        return aA + np.triu(aA, 1).T

    def trace(self):
        return float(np.trace(self.toArray()))

    def frobeniusNorm(self):
        return float(np.linalg.norm(self.toArray()))

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.__order == other.getOrder() and np.array_equal(self.__upper, other.getUpper())

    def __hash__(self):
        return hash((self.__order, self.__upper.tobytes()))

    def __repr__(self):
        return "SymMatrix(order=%d, %r)" % (self.__order, self.toArray().tolist())


def eigSym(mat, maxSweeps=64):
    """Eigen-decomposition of a small symmetric matrix by cyclic Jacobi rotations.

    Args:
        mat (SymMatrix or array): symmetric input of order <= 8
        maxSweeps (int, optional): sweep cap. Defaults to 64.

    Raises:
        AlexlabConvergenceError: sweep cap exceeded

    Returns:
        (numpy.ndarray, numpy.ndarray): ascending eigenvalues, eigenvectors as orthonormal columns
    """
    sm = mat if isinstance(mat, SymMatrix) else SymMatrix.fromArray(mat)
    aA = sm.toArray()
    nn = sm.getOrder()
    vV = np.eye(nn)
    scale = max(1.0, float(np.linalg.norm(aA)))
    offTol = 4.0 * nn * np.finfo(np.float64).eps * scale
    sweeps = 0
    while float(np.linalg.norm(aA - np.diag(np.diag(aA)))) > offTol:
        if sweeps >= maxSweeps:
            raise AlexlabConvergenceError("Jacobi iteration exceeded %d sweeps" % maxSweeps)
        sweeps += 1
        for pp in range(nn - 1):
            for qq in range(pp + 1, nn):
                apq = aA[pp, qq]
                if abs(apq) <= 1.0e-300:
                    continue
                theta = (aA[qq, qq] - aA[pp, pp]) / (2.0 * apq)
                tt = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                tt = tt if theta >= 0.0 else -tt
                cc = 1.0 / math.sqrt(tt * tt + 1.0)
                ss = tt * cc
                jJ = np.eye(nn)
                jJ[pp, pp] = jJ[qq, qq] = cc
                jJ[pp, qq] = ss
                jJ[qq, pp] = -ss
                aA = jJ.T @ aA @ jJ
                aA[pp, qq] = aA[qq, pp] = 0.0
                vV = vV @ jJ
    #
    eigVals = np.diag(aA).copy()
    order = np.argsort(eigVals, kind="stable")
    eigVals = eigVals[order]
    vV = vV[:, order]
    # deterministic sign: largest component of each column is positive
    for jj in range(nn):
        if vV[np.argmax(np.abs(vV[:, jj])), jj] < 0.0:
            vV[:, jj] = -vV[:, jj]
    return eigVals, vV


def defaultSteps(x, order=1):
    """Default finite-difference steps per coordinate: max(1e-5, 1e-5|x|) for first
    derivative stencils and max(2e-4, 2e-4|x|) for second derivative stencils."""
    base = 1.0e-5 if order == 1 else 2.0e-4
    return np.maximum(base, base * np.abs(np.asarray(x, dtype=np.float64)))


def __stencil(nn, h1, h2):
    offL = [np.zeros(nn)]
    for ii in range(nn):
        for sgn in (1.0, -1.0):
            eV = np.zeros(nn)
            eV[ii] = sgn * h1[ii]
            offL.append(eV)
    for ii in range(nn):
        for sgn in (1.0, -1.0):
            eV = np.zeros(nn)
            eV[ii] = sgn * h2[ii]
            offL.append(eV)
    for ii in range(nn):
        for jj in range(ii + 1, nn):
            for si, sj in ((1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)):
                eV = np.zeros(nn)
                eV[ii] = si * h2[ii]
                eV[jj] = sj * h2[jj]
                offL.append(eV)
    return np.array(offL)


def fdStencilDerivatives(func, points, h=None):
    """Vectorized central-difference value, gradient and Hessian.

    Args:
        func (callable): maps an array (..., n) of points to values (...)
        points (array): evaluation points with shape (..., n)
        h (float, optional): common step; defaults to defaultSteps() per coordinate

    Returns:
        (value, gradient, hessian): arrays shaped (...), (..., n), (..., n, n)
    """
    xA = np.asarray(points, dtype=np.float64)
    nn = xA.shape[-1]
    scale = np.max(np.abs(xA.reshape(-1, nn)), axis=0) if xA.ndim > 1 else np.abs(xA)
    h1 = np.full(nn, float(h)) if h is not None else defaultSteps(scale, order=1)
    h2 = np.full(nn, float(h)) if h is not None else defaultSteps(scale, order=2)
    offA = __stencil(nn, h1, h2)
    sP = xA[..., None, :] + offA
    fV = np.asarray(func(sP), dtype=np.float64)
    if not np.all(np.isfinite(fV)):
        bad = np.argwhere(~np.isfinite(fV))[0]
        raise AlexlabDomainError("Non-finite sample at stencil point %r" % (sP[tuple(bad)].tolist(),))
    f0 = fV[..., 0]
    grad = np.empty(xA.shape, dtype=np.float64)
    hess = np.empty(xA.shape + (nn,), dtype=np.float64)
    for ii in range(nn):
        grad[..., ii] = (fV[..., 1 + 2 * ii] - fV[..., 2 + 2 * ii]) / (2.0 * h1[ii])
        hess[..., ii, ii] = (fV[..., 1 + 2 * nn + 2 * ii] - 2.0 * f0 + fV[..., 2 + 2 * nn + 2 * ii]) / (h2[ii] * h2[ii])
    kk = 1 + 4 * nn
    for ii in range(nn):
        for jj in range(ii + 1, nn):
            mixed = (fV[..., kk] - fV[..., kk + 1] - fV[..., kk + 2] + fV[..., kk + 3]) / (4.0 * h2[ii] * h2[jj])
            hess[..., ii, jj] = hess[..., jj, ii] = mixed
            kk += 4
    return f0, grad, hess


def fdGradientHessian(func, x, h=None, vectorized=False):
    """Central second-order finite-difference value, gradient and Hessian at a point.

    Args:
        func (callable): scalar function of a point
        x (array): evaluation point
        h (float, optional): step; defaults to defaultSteps() per coordinate
        vectorized (bool, optional): func accepts a stack of points (m, n). Defaults to False.

    Raises:
        AlexlabDomainError: a stencil sample is not finite

    Returns:
        (float, numpy.ndarray, SymMatrix): value, gradient, symmetrized Hessian
    """
    xV = np.asarray(x, dtype=np.float64).ravel()
    if h is not None and not h > 0.0:
        raise AlexlabArgumentError("Finite-difference step must be positive (got %r)" % h)
    if vectorized:
        wrapped = func
    else:

        def wrapped(pts):
            flat = pts.reshape(-1, pts.shape[-1])
            return np.array([float(func(pt)) for pt in flat]).reshape(pts.shape[:-1])

    f0, grad, hess = fdStencilDerivatives(wrapped, xV, h=h)
    hess = 0.5 * (hess + hess.T)
    return float(f0), grad, SymMatrix.fromArray(hess)


def bisectRoot(func, lo, hi, tol=1.0e-12, returnCount=False):
    """Bracketed bisection.

    Args:
        func (callable): scalar function with func(lo) * func(hi) <= 0
        lo (float): left bracket
        hi (float): right bracket
        tol (float, optional): final bracket width. Defaults to 1e-12.
        returnCount (bool, optional): also return the number of halvings. Defaults to False.

    Raises:
        AlexlabBracketError: endpoint values carry the same sign

    Returns:
        float or (float, int): root estimate (and iteration count)
    """
    lo, hi = float(lo), float(hi)
    flo, fhi = float(func(lo)), float(func(hi))
    count = 0
    if flo == 0.0 or fhi == 0.0:
        root = lo if flo == 0.0 else hi
        return (root, count) if returnCount else root
    if np.sign(flo) == np.sign(fhi):
        raise AlexlabBracketError("Bracket [%r, %r] has same-sign values %r %r" % (lo, hi, flo, fhi))
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = float(func(mid))
        count += 1
        if fm == 0.0:
            lo = hi = mid
            break
        if np.sign(fm) == np.sign(flo):
            lo, flo = mid, fm
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    return (root, count) if returnCount else root


def bisectRootArray(func, lo, hi, tol=1.0e-14, strict=True):
    """Elementwise bisection over arrays of brackets.

    Args:
        func (callable): vectorized function of an array of abscissae (same shape as lo)
        lo (array): left brackets
        hi (array): right brackets
        tol (float, optional): final bracket width. Defaults to 1e-14.
        strict (bool, optional): raise on a same-sign bracket, otherwise return NaN there. Defaults to True.

    Returns:
        numpy.ndarray: roots
    """
    lo = np.array(lo, dtype=np.float64, copy=True)
    hi = np.array(hi, dtype=np.float64, copy=True)
    lo, hi = np.broadcast_arrays(lo, hi)
    lo, hi = lo.copy(), hi.copy()
    flo = np.asarray(func(lo), dtype=np.float64)
    fhi = np.asarray(func(hi), dtype=np.float64)
    bad = np.sign(flo) * np.sign(fhi) > 0.0
    if strict and np.any(bad):
        raise AlexlabBracketError("%d brackets carry same-sign values" % int(np.count_nonzero(bad)))
    width = float(np.max(hi - lo)) if lo.size else 0.0
    nIter = int(math.ceil(math.log2(max(width, tol) / tol))) + 1 if width > 0.0 else 0
    sLo = np.sign(flo)
    for _ in range(min(nIter, 200)):
        mid = 0.5 * (lo + hi)
        fm = np.asarray(func(mid), dtype=np.float64)
        left = np.sign(fm) == sLo
        lo = np.where(left, mid, lo)
        hi = np.where(left, hi, mid)
    root = 0.5 * (lo + hi)
    root = np.where(flo == 0.0, lo, root)
    root = np.where(bad, np.nan, root)
    return root


def loglogSlope(samples, window=6):
    """Least-squares slope of log w against log t over the smallest-t samples.

    Args:
        samples (list): (t, w) pairs with t strictly decreasing toward 0
        window (int, optional): number of smallest-t samples used, None for all. Defaults to 6.

    Raises:
        AlexlabArgumentError: fewer than 4 samples or t not strictly decreasing
        AlexlabDomainError: nonpositive t or w

    Returns:
        (float, float): slope and regression r^2
    """
    sA = np.asarray(samples, dtype=np.float64)
    if sA.ndim != 2 or sA.shape[0] < 4:
        raise AlexlabArgumentError("loglogSlope requires at least 4 samples")
    tV, wV = sA[:, 0], sA[:, 1]
    if np.any(tV <= 0.0) or np.any(wV <= 0.0):
        raise AlexlabDomainError("loglogSlope requires positive samples")
    if np.any(np.diff(tV) >= 0.0):
        raise AlexlabArgumentError("loglogSlope requires t strictly decreasing")
    if window is not None and sA.shape[0] > window:
        tV, wV = tV[-window:], wV[-window:]
    fit = stats.linregress(np.log(tV), np.log(wV))
    return float(fit.slope), float(fit.rvalue ** 2)


def loglogSlopeProfile(samples, window=6):
    """Slopes over successive windows of `window` samples moving toward t = 0."""
    sA = np.asarray(samples, dtype=np.float64)
    slopeL = []
    for ii in range(0, sA.shape[0] - window + 1):
        slope, _ = loglogSlope(sA[ii : ii + window], window=None)
        slopeL.append(slope)
    return slopeL


def sphereQuadrature(n, nodes=None):
    """Quadrature on the unit sphere S^{n-1} for n = 2 or 3.

    n = 2 uses the trapezoid rule on the circle (default 256 nodes).  n = 3 uses a
    Gauss-Legendre rule in the polar cosine times the trapezoid rule in azimuth
    (default 16 x 32), exact for spherical harmonics of degree < 16.

    Returns:
        (numpy.ndarray, numpy.ndarray): unit points (m, n) and weights (m,)
    """
    if n == 2:
        count = nodes if nodes else 256
        theta = 2.0 * np.pi * np.arange(count) / count
        return np.stack([np.cos(theta), np.sin(theta)], axis=-1), np.full(count, 2.0 * np.pi / count)
    if n == 3:
        nPolar = nodes if nodes else 16
        nAz = 2 * nPolar
        xg, wg = np.polynomial.legendre.leggauss(nPolar)
        phi = 2.0 * np.pi * np.arange(nAz) / nAz
        cT, pH = np.meshgrid(xg, phi, indexing="ij")
        sT = np.sqrt(1.0 - cT * cT)
        pts = np.stack([sT * np.cos(pH), sT * np.sin(pH), cT], axis=-1).reshape(-1, 3)
        wts = (wg[:, None] * np.full(nAz, 2.0 * np.pi / nAz)[None, :]).reshape(-1)
        return pts, wts
    raise AlexlabArgumentError("Sphere quadrature is available for n = 2, 3 (got %r)" % n)
