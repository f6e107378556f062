##
# File:    DegenerateExpansion.py
# Date:    2-Mar-2026
# Version: 0.001 Initial version
#
# Updates:
#  11-Mar-2026  Chebyshev collocation for the transverse Laplacians
#  24-Mar-2026  source asymptotics with polynomial extrapolation in lambda
##
"""
Solutions of Laplacian(u) = f(y, u) on {0 < t < 1, |y| < 1} vanishing on t = 0 with

    u(t, y) = t^k a_k(y) + t^(k+1) a_(k+1)(y) + ...,   a_k > 0.

The higher coefficients are recovered from f and a_k by inverting
lambda = (s / a_k)^(1/k) as a power series in t and matching the expansion of
f(y, a_k lambda^k) order by order.  At order lambda^(m-2) the unknown a_m enters
with the factor m(m-1) - (k-1)(k-2) > 0.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging
import time

import numpy as np
from numpy.polynomial import chebyshev as cheb
from numpy.polynomial import polynomial as poly

from alexlab.api.CheckReports import LabReport
from alexlab.api.NumericUtils import bisectRootArray, fdStencilDerivatives, loglogSlope
from alexlab.api.ScalarField import ScalarField
from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabOrderError, AlexlabPreconditionError

logger = logging.getLogger(__name__)

#
# -- truncated power series, coefficient arrays (..., order + 1)
#


def seriesMul(a, b):
    order = a.shape[-1] - 1
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape))
    for ii in range(order + 1):
        out[..., ii:] += a[..., ii : ii + 1] * b[..., : order + 1 - ii]
    return out


def seriesPowUnit(c, alpha):
    """(c)^alpha for a series with c_0 = 1."""
    order = c.shape[-1] - 1
    out = np.zeros(c.shape)
    out[..., 0] = 1.0
    for nn in range(1, order + 1):
        acc = np.zeros(c.shape[:-1])
        for jj in range(1, nn + 1):
            acc += ((alpha + 1.0) * jj - nn) * c[..., jj] * out[..., nn - jj]
        out[..., nn] = acc / nn
    return out


def seriesCompose(d, x):
    """d(x(lam)) for x with x_0 = 0."""
    order = d.shape[-1] - 1
    out = np.zeros(np.broadcast_shapes(d.shape, x.shape))
    out[..., 0] = d[..., order]
    for ii in range(order - 1, -1, -1):
        out = seriesMul(out, x)
        out[..., 0] += d[..., ii]
    return out


def seriesRevert(phi):
    """psi with phi(psi(lam)) = lam for phi_0 = 0, phi_1 = 1."""
    order = phi.shape[-1] - 1
    ident = np.zeros(phi.shape)
    ident[..., 1] = 1.0
    psi = ident.copy()
    for _ in range(order):
        psi = psi - (seriesCompose(phi, psi) - ident)
    return psi


#
# -- Chebyshev collocation on [-half, half]^d
#


def chebyshevNodes(count, half):
    return half * np.cos(np.pi * np.arange(count) / (count - 1))


def chebyshevSecondDerivative(count, half):
    """Matrix of the second derivative of the Chebyshev interpolant at the Lobatto nodes."""
    xs = np.cos(np.pi * np.arange(count) / (count - 1))
    vander = cheb.chebvander(xs, count - 1)
    coef = np.linalg.solve(vander, np.eye(count))
    d2 = cheb.chebder(coef, 2, axis=0)
    return cheb.chebvander(xs, count - 3).dot(d2) / (half * half)


class ChebyshevGrid(object):
    """Tensor Lobatto grid for d = 1, 2 transverse variables."""

    def __init__(self, d, count=17, half=0.9):
        if d not in (1, 2):
            raise AlexlabArgumentError("Transverse collocation supports 1 or 2 variables (got %r)" % d)
        self.__d = d
        self.__count = count
        axis = chebyshevNodes(count, half)
        grids = np.meshgrid(*([axis] * d), indexing="ij")
        self.__nodes = np.stack(grids, axis=-1).reshape(-1, d)
        self.__d2 = chebyshevSecondDerivative(count, half)

    def getNodes(self):
        return self.__nodes

    def laplacian(self, values):
        if self.__d == 1:
            return self.__d2.dot(values)
        aM = values.reshape(self.__count, self.__count)
        return (self.__d2.dot(aM) + aM.dot(self.__d2.T)).reshape(-1)


def radialCoefficient(coeffs, d):
    """a(y) = sum_i c_i |y|^(2i) with its transverse Laplacian in d variables.

    Returns:
        (callable, callable): a and Laplacian(a), vectorized over (..., d)
    """
    cL = [float(vl) for vl in coeffs]

    def func(yA):
        r2 = np.sum(np.asarray(yA, dtype=np.float64) ** 2, axis=-1)
        return poly.polyval(r2, cL)

    lapL = [2.0 * ii * (2.0 * ii + d - 2.0) * cL[ii] for ii in range(1, len(cL))] or [0.0]

    def lap(yA):
        r2 = np.sum(np.asarray(yA, dtype=np.float64) ** 2, axis=-1)
        return poly.polyval(r2, lapL)

    return func, lap


class DegenerateExpansion(object):
    """Expansion u = sum_{j=k}^{M} t^j a_j(y) with its source f(y, s) = Laplacian(u) at u = s."""

    def __init__(self, k, coefficients, n=2, source=None, laplacians=None, **kwargs):
        """
        Args:
            k (int): vanishing order, k >= 1
            coefficients (list): callables a_k, a_(k+1), ..., a_M of y (..., n-1)
            n (int, optional): dimension. Defaults to 2.
            source (callable, optional): f(y, s); defaults to the manufactured source of this expansion
            laplacians (list, optional): callables Laplacian_y(a_j); defaults to difference stencils

        Keyword Args:
            tCap (float): upper end of the t bracket of the manufactured source (default: 0.5)
            step (float): stencil step for transverse derivatives (default: 1e-4)
            name (str): label (default: "expansion")

        Raises:
            AlexlabPreconditionError: a_k <= 0 somewhere on |y| <= 1
        """
        self.__k = int(k)
        if self.__k < 1 or self.__k != k:
            raise AlexlabArgumentError("Vanishing order must be an integer >= 1 (got %r)" % k)
        if n < 2:
            raise AlexlabArgumentError("Expansion dimension must be >= 2")
        self.__n = int(n)
        self.__coeffs = list(coefficients)
        self.__laps = list(laplacians) if laplacians is not None else None
        self.__tCap = kwargs.get("tCap", 0.5)
        self.__step = kwargs.get("step", 1.0e-4)
        self.__name = kwargs.get("name", "expansion")
        self.__source = source if source is not None else self.manufacturedSource
        probe = ChebyshevGrid(self.__n - 1, count=9, half=1.0).getNodes() if self.__n <= 3 else np.zeros((1, self.__n - 1))
        probe = probe[np.sum(probe * probe, axis=-1) <= 1.0 + 1.0e-12]
        aMin = float(np.min(self.__coeffs[0](probe)))
        if not aMin > 0.0:
            raise AlexlabPreconditionError("Leading coefficient a_k must be positive on |y| <= 1 (min %.3e)" % aMin)

    def getOrder(self):
        return self.__k

    def getDim(self):
        return self.__n

    def getTopIndex(self):
        return self.__k + len(self.__coeffs) - 1

    def getName(self):
        return self.__name

    def coefficient(self, j, yA):
        yA = np.asarray(yA, dtype=np.float64)
        if j < self.__k or j > self.getTopIndex():
            return np.zeros(yA.shape[:-1])
        return np.asarray(self.__coeffs[j - self.__k](yA), dtype=np.float64)

    def coefficientDerivatives(self, j, yA):
        """Value, y-gradient and y-Hessian of a_j by central differences."""
        yA = np.asarray(yA, dtype=np.float64)
        if j < self.__k or j > self.getTopIndex():
            dd = yA.shape[-1]
            return np.zeros(yA.shape[:-1]), np.zeros(yA.shape), np.zeros(yA.shape + (dd,))
        return fdStencilDerivatives(self.__coeffs[j - self.__k], yA, h=self.__step)

    def laplacianCoefficient(self, j, yA):
        yA = np.asarray(yA, dtype=np.float64)
        if j < self.__k or j > self.getTopIndex():
            return np.zeros(yA.shape[:-1])
        if self.__laps is not None:
            return np.asarray(self.__laps[j - self.__k](yA), dtype=np.float64)
        _, _, hA = self.coefficientDerivatives(j, yA)
        return np.trace(hA, axis1=-2, axis2=-1)

    def value(self, tA, yA):
        tA = np.asarray(tA, dtype=np.float64)
        out = np.zeros(np.broadcast_shapes(tA.shape, np.shape(yA)[:-1]))
        for jj in range(self.__k, self.getTopIndex() + 1):
            out = out + tA ** jj * self.coefficient(jj, yA)
        return out

    def derivativeT(self, tA, yA):
        tA = np.asarray(tA, dtype=np.float64)
        out = np.zeros(np.broadcast_shapes(tA.shape, np.shape(yA)[:-1]))
        for jj in range(self.__k, self.getTopIndex() + 1):
            out = out + jj * tA ** (jj - 1) * self.coefficient(jj, yA)
        return out

    def laplacianU(self, tA, yA):
        """sum_j j(j-1) t^(j-2) a_j + t^j Laplacian_y(a_j)."""
        tA = np.asarray(tA, dtype=np.float64)
        out = np.zeros(np.broadcast_shapes(tA.shape, np.shape(yA)[:-1]))
        for jj in range(self.__k, self.getTopIndex() + 1):
            if jj >= 2:
                out = out + jj * (jj - 1) * tA ** (jj - 2) * self.coefficient(jj, yA)
            out = out + tA ** jj * self.laplacianCoefficient(jj, yA)
        return out

    def solveT(self, yA, sA):
        """t with u(t, y) = s on the monotone branch near t = 0 (bisection, then Newton polish)."""
        yA = np.asarray(yA, dtype=np.float64)
        sA = np.asarray(sA, dtype=np.float64)
        yB = np.broadcast_to(yA, sA.shape + (yA.shape[-1],))
        tA = bisectRootArray(lambda tt: self.value(tt, yB) - sA, np.zeros(sA.shape), np.full(sA.shape, self.__tCap), tol=1.0e-13, strict=False)
        for _ in range(3):
            tA = tA - (self.value(tA, yB) - sA) / self.derivativeT(tA, yB)
        return tA

    def manufacturedSource(self, yA, sA):
        """f(y, s) = Laplacian(u)(t, y) at the t solving u(t, y) = s."""
        yA = np.asarray(yA, dtype=np.float64)
        sA = np.asarray(sA, dtype=np.float64)
        yB = np.broadcast_to(yA, sA.shape + (yA.shape[-1],))
        return self.laplacianU(self.solveT(yB, sA), yB)

    def source(self, yA, sA):
        return np.asarray(self.__source(yA, sA), dtype=np.float64)

    def consistencyResidual(self, tSamples=None, yA=None):
        """max |Laplacian(u) - f(y, u)| over the samples, with the t^(M-1) scale of the truncation."""
        tV = np.geomspace(0.1, 1.0e-3, 12) if tSamples is None else np.asarray(tSamples, dtype=np.float64)
        yA = np.zeros((1, self.__n - 1)) if yA is None else np.asarray(yA, dtype=np.float64)
        tB = tV[:, None]
        yB = np.broadcast_to(yA[None, :, :], (tV.size,) + yA.shape)
        uV = self.value(tB, yB)
        resid = np.abs(self.laplacianU(tB, yB) - self.source(yB, uV))
        scale = tV ** max(self.getTopIndex() - 1, 0)
        return float(np.max(resid)), float(np.max(np.max(resid, axis=1) / scale))

    def asField(self, extent=1.0):
        """u as a ScalarField of (t, y) on (-extent, extent)^n."""
        nn = self.__n
        kk, top = self.__k, self.getTopIndex()

        def func(pA):
            return self.value(pA[..., 0], pA[..., 1:])

        def grad(pA):
            tA, yA = pA[..., 0], pA[..., 1:]
            gA = np.zeros(pA.shape)
            for jj in range(kk, top + 1):
                aV, aG, _ = self.coefficientDerivatives(jj, yA)
                gA[..., 0] += jj * tA ** (jj - 1) * aV
                gA[..., 1:] += (tA ** jj)[..., None] * aG
            return gA

        def hess(pA):
            tA, yA = pA[..., 0], pA[..., 1:]
            hA = np.zeros(pA.shape + (nn,))
            for jj in range(kk, top + 1):
                aV, aG, aH = self.coefficientDerivatives(jj, yA)
                if jj >= 2:
                    hA[..., 0, 0] += jj * (jj - 1) * tA ** (jj - 2) * aV
                mixed = (jj * tA ** (jj - 1))[..., None] * aG
                hA[..., 0, 1:] += mixed
                hA[..., 1:, 0] += mixed
                hA[..., 1:, 1:] += (tA ** jj)[..., None, None] * aH
            return hA

        box = [(-float(extent), float(extent))] * nn
        return ScalarField(func, nn, box=box, gradient=grad, hessian=hess, name=self.__name)

    def __repr__(self):
        return "DegenerateExpansion(%s, k=%d, top=%d, n=%d)" % (self.__name, self.__k, self.getTopIndex(), self.__n)


def _lambdaSamples(kwargs):
    lo, hi = kwargs.get("lambdaRange", (0.01, 0.08))
    return np.geomspace(hi, lo, kwargs.get("lambdaCount", 16)), hi


def _extrapolateToZero(lam, hi, values, degree):
    """Intercept at lambda = 0 of a least-squares polynomial in lambda/hi, per column."""
    coef, diag = poly.polyfit(lam / hi, values, degree, full=True)
    resid = diag[0]
    return coef[0], float(np.sqrt(np.max(resid) / lam.size)) if np.size(resid) else 0.0


def taylorRecursion(f, aK, k, mMax, n=2, **kwargs):
    """Recover a_(k+1) .. a_mMax on a transverse Chebyshev grid from f and a_k.

    Args:
        f (callable): source f(y, s), vectorized over (..., n-1) and (...)
        aK (callable): leading coefficient a_k(y)
        k (int): vanishing order
        mMax (int): highest coefficient index recovered
        n (int, optional): dimension (2 or 3). Defaults to 2.

    Keyword Args:
        count (int): Lobatto nodes per transverse axis (default: 17 for n=2, 11 for n=3)
        half (float): grid half-width in y (default: 0.9)
        lambdaRange (tuple): lambda window of the source samples (default: (0.01, 0.08))
        lambdaCount (int): source samples per node (default: 16)
        fitDegree (int): extrapolation degree in lambda (default: 6)

    Raises:
        AlexlabPreconditionError: a_k <= 0 on the grid

    Returns:
        dict: nodes (m, n-1), coefficients {j: values} for j = k..mMax, fit_residual {j: float}
    """
    t0 = time.time()
    kk = int(k)
    if kk < 1 or mMax <= kk:
        raise AlexlabArgumentError("taylorRecursion requires k >= 1 and mMax > k")
    grid = ChebyshevGrid(n - 1, count=kwargs.get("count", 17 if n == 2 else 11), half=kwargs.get("half", 0.9))
    yN = grid.getNodes()
    aKv = np.asarray(aK(yN), dtype=np.float64)
    if not np.all(aKv > 0.0):
        raise AlexlabPreconditionError("a_k must be positive on the grid (min %.3e)" % float(np.min(aKv)))
    lam, hi = _lambdaSamples(kwargs)
    degree = kwargs.get("fitDegree", 6)
    sA = aKv[:, None] * lam[None, :] ** kk
    yB = np.broadcast_to(yN[:, None, :], sA.shape + (yN.shape[-1],))
    fV = np.asarray(f(yB, sA), dtype=np.float64)
    order = mMax + 1
    coeffs = {kk: aKv}
    laps = {kk: grid.laplacian(aKv)}
    fitRes = {}
    for mm in range(kk + 1, mMax + 1):
        # lambda = t g(t)^(1/k) with g = 1 + sum_i t^i a_(k+i)/a_k, a_m = 0 on trial
        gS = np.zeros((yN.shape[0], order + 1))
        gS[:, 0] = 1.0
        for jj in range(kk + 1, mm):
            if jj - kk <= order:
                gS[:, jj - kk] = coeffs[jj] / aKv
        phi = np.zeros_like(gS)
        phi[:, 1:] = seriesPowUnit(gS, 1.0 / kk)[:, :-1]
        psi = seriesRevert(phi)
        dS = np.zeros_like(gS)
        for ii in range(order + 1):
            if ii + 2 in coeffs:
                dS[:, ii] += (ii + 2) * (ii + 1) * coeffs[ii + 2]
            if ii in laps:
                dS[:, ii] += laps[ii]
        pS = seriesCompose(dS, psi)
        pV = np.stack([poly.polyval(lam, pS[ii]) for ii in range(pS.shape[0])])
        resid = (fV - pV) / lam[None, :] ** (mm - 2)
        intercept, res = _extrapolateToZero(lam, hi, resid.T, degree)
        factor = mm * (mm - 1) - (kk - 1) * (kk - 2)
        coeffs[mm] = intercept / factor
        laps[mm] = grid.laplacian(coeffs[mm])
        fitRes[mm] = res
        logger.debug("Recovered a_%d (k=%d) with fit residual %.3e", mm, kk, res)
    if kwargs.get("timing", False):
        logger.info("taylorRecursion k=%d to m=%d completed in %.4f seconds", kk, mMax, time.time() - t0)
    return {"nodes": yN, "coefficients": coeffs, "fit_residual": fitRes}


def taylorRoundTrip(expansion, mMax=None, **kwargs):
    """Recover the coefficients of a manufactured expansion from its own source and compare.

    Returns:
        LabReport: max-norm errors per coefficient; conclusion "recovered" when all are <= tol (default 1e-6)
    """
    tol = kwargs.get("tol", 1.0e-6)
    kk = expansion.getOrder()
    top = expansion.getTopIndex() if mMax is None else int(mMax)
    nn = expansion.getDim()
    rec = taylorRecursion(expansion.source, lambda yA: expansion.coefficient(kk, yA), kk, top, n=nn, **kwargs)
    rpt = LabReport("taylor-recursion", anchor="coefficients a_m determined by f and a_k through lambda = (s/a_k)^(1/k)")
    yN = rec["nodes"]
    rpt.setSamples("y_nodes", yN.shape[0])
    worst = 0.0
    rows = []
    for mm in range(kk + 1, top + 1):
        err = float(np.max(np.abs(rec["coefficients"][mm] - expansion.coefficient(mm, yN))))
        worst = max(worst, err)
        rpt.setFitted("error_a%d" % mm, err)
        rpt.addHypothesis("a_%d" % mm, "holds" if err <= tol else "fails", margin=tol - err)
        rows.append([mm, err, rec["fit_residual"][mm]])
    rpt.setFitted("max_error", worst)
    rpt.addSeries("taylor_errors", ["m", "max_error", "fit_residual"], rows)
    rpt.setConclusion("recovered" if worst <= tol else "mismatch")
    return rpt


def _sourceDerivative(f, yB, sA, rel=1.0e-5):
    hh = rel * sA
    return (f(yB, sA + hh) - f(yB, sA - hh)) / (2.0 * hh)


def _limitCheck(rpt, hId, values, lam, hi, target, rtol, degree=3):
    """Extrapolated limit per probe row against target; relative (or absolute near 0) tolerance."""
    limit, _ = _extrapolateToZero(lam, hi, values.T, degree)
    target = np.broadcast_to(np.asarray(target, dtype=np.float64), limit.shape)
    scale = np.maximum(np.abs(target), 1.0)
    err = float(np.max(np.abs(limit - target) / scale))
    rpt.addHypothesis(hId, "holds" if err <= rtol else "fails", margin=rtol - err)
    rpt.setFitted(hId + "_limit", limit.tolist())
    rpt.setFitted(hId + "_target", target.tolist())
    return err


def fAsymptoticsCheck(f, u, k, **kwargs):
    """Asymptotics of the source at s = 0.

    (i) f(y, u)/(u/t^2) -> k(k-1) and, for k >= 2, f(y, s) s^((2-k)/k) -> k(k-1) a_k^(2/k);
    (ii) k = 1: difference quotients of f in s stay bounded as the window shrinks to 0, with f_u(y, 0) = (6 a_3 + Laplacian(a_1))/a_1;
    (iii) k >= 2: s^(2/k) f_u(y, s) bounded, -> a_k^(2/k)(k-1)(k-2) for k >= 3; s^(1/2) f_u -> 3 a_3/sqrt(a_2) for k = 2.

    Args:
        f (callable): source f(y, s)
        u (DegenerateExpansion): solution with its expansion
        k (int): declared order

    Keyword Args:
        rtol (float): tolerance on the limits (default: 0.01)
        probes (array): transverse probe points (default: y = 0 and y_1 = +-0.5)
        lipschitzWindows (int): k = 1 only, number of halving s-windows (default: 10)
        lipschitzSlopeTol (float): k = 1 only, quotient sups growing faster than w^(-tol) fail (default: 0.25)

    Raises:
        AlexlabOrderError: the source normalization is inconsistent with k

    Returns:
        LabReport
    """
    kk = int(k)
    rtol = kwargs.get("rtol", 1.0e-2)
    nn = u.getDim()
    if kk != u.getOrder():
        raise AlexlabOrderError("Declared order %d differs from the expansion order %d" % (kk, u.getOrder()))
    probes = kwargs.get("probes", None)
    if probes is None:
        probes = np.zeros((3, nn - 1))
        probes[1, 0], probes[2, 0] = -0.5, 0.5
    probes = np.asarray(probes, dtype=np.float64)
    lam, hi = _lambdaSamples(kwargs)
    rpt = LabReport("f-asymptotics", anchor="source normalization f ~ k(k-1) a_k^(2/k) s^((k-2)/k) and bounds on f_u")
    aK = u.coefficient(kk, probes)
    yB = np.broadcast_to(probes[:, None, :], (probes.shape[0], lam.size, nn - 1))
    #
    # (i) normalizations, with t = lambda as the sampling variable
    tA = np.broadcast_to(lam[None, :], yB.shape[:-1])
    uV = u.value(tA, yB)
    fU = np.asarray(f(yB, uV), dtype=np.float64)
    _limitCheck(rpt, "ratio-f-over-u-t^-2", fU * tA * tA / uV, lam, hi, float(kk * (kk - 1)), rtol)
    sA = aK[:, None] * lam[None, :] ** kk
    fS = np.asarray(f(yB, sA), dtype=np.float64)
    if kk >= 2:
        target = kk * (kk - 1) * aK ** (2.0 / kk)
        err = _limitCheck(rpt, "normalized-source", fS * sA ** ((2.0 - kk) / kk), lam, hi, target, rtol)
        if err > 5.0 * rtol:
            raise AlexlabOrderError("Source normalization is inconsistent with k=%d (relative error %.3e)" % (kk, err))
    fu = _sourceDerivative(f, yB, sA)
    if kk == 1:
        # (ii) Lipschitz bound in s: difference-quotient sup on windows (0, w] halving toward 0
        nWin = kwargs.get("lipschitzWindows", 10)
        slopeTol = kwargs.get("lipschitzSlopeTol", 0.25)
        wins = 0.1 * float(np.min(aK)) * 0.5 ** np.arange(nWin)
        rel = np.geomspace(1.0 / 32.0, 1.0, 6)
        supV = np.zeros(nWin)
        for ii, ww in enumerate(wins):
            sB = np.broadcast_to((ww * rel)[None, :], (probes.shape[0], rel.size))
            yG = np.broadcast_to(probes[:, None, :], sB.shape + (nn - 1,))
            fG = np.asarray(f(yG, sB), dtype=np.float64)
            ds = np.abs(sB[:, :, None] - sB[:, None, :])
            mask = ds > 0.0
            supV[ii] = float(np.max(np.abs(fG[:, :, None] - fG[:, None, :])[mask] / ds[mask]))
        floor = 1.0e-12 * max(1.0, float(np.max(supV)))
        slope, _ = loglogSlope(list(zip(wins, np.maximum(supV, floor))), window=None)
        growth = float(supV[-1] / max(supV[0], floor))
        lipOk = slope > -slopeTol or growth <= 2.0
        rpt.setFitted("lipschitz_sup", float(np.max(supV)))
        rpt.setFitted("lipschitz_window_slope", slope)
        rpt.setFitted("lipschitz_growth", growth)
        rpt.addSeries("lipschitz_windows", ["window", "quotient_sup"], [[float(ww), float(sv)] for ww, sv in zip(wins, supV)])
        note = None if lipOk else "difference quotients grow like w^%.3g down to w=%.3g (sup %.6g)" % (slope, wins[-1], supV[-1])
        rpt.addHypothesis("lipschitz-in-s", "holds" if lipOk else "fails", margin=slope + slopeTol, note=note)
        target = (6.0 * u.coefficient(3, probes) + u.laplacianCoefficient(1, probes)) / aK
        _limitCheck(rpt, "f_u-limit", fu, lam, hi, target, rtol)
    else:
        # (iii) s^(2/k) f_u bounded; its limit, or that of s^(1/2) f_u for k = 2
        scaled = sA ** (2.0 / kk) * fu
        rpt.setFitted("scaled_f_u_max", float(np.max(np.abs(scaled))))
        if kk == 2:
            target = 3.0 * u.coefficient(3, probes) / np.sqrt(aK)
            _limitCheck(rpt, "sqrt-scaled-f_u-limit", np.sqrt(sA) * fu, lam, hi, target, rtol)
        else:
            target = aK ** (2.0 / kk) * (kk - 1) * (kk - 2)
            _limitCheck(rpt, "scaled-f_u-limit", scaled, lam, hi, target, rtol)
    rpt.setSamples("lambda_samples", lam.size)
    rpt.setSamples("probes", probes.shape[0])
    rpt.setConclusion("asymptotics-hold" if not rpt.brokenHypotheses() else "asymptotics-fail")
    return rpt
