##
# File:    FrequencyFunction.py
# Date:    6-Mar-2026
# Version: 0.001 Initial version
#
# Updates:
#  19-Mar-2026  window shrink when rho vanishes; Richardson check of the rho_ss identity
##
"""
Spherical L^2 mass of a solution of Laplacian(u) = V u in logarithmic radius.

With r = e^s and v = e^(-a s) u, a = -(n-2)/2, the function

    rho(s) = integral over S^(n-1) of v(s, theta)^2

is log-convex in s when (r^2 V)_r >= 0, and rho_ss = 2 integral(v_s^2 + |grad_theta v|^2 + m v^2)
with m = ((n-2)/2)^2 + r^2 V.  Log-convexity gives an exponential lower bound
rho(s) >= C1 exp(C2 s) toward the origin, which is incompatible with vanishing of
infinite order unless u = 0.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging
import time

import numpy as np

from alexlab.api.CheckReports import LabReport
from alexlab.api.NumericUtils import fdStencilDerivatives, sphereQuadrature
from alexlab.io.AlexlabExceptions import AlexlabArgumentError

logger = logging.getLogger(__name__)


class FrequencySeries(object):
    """rho(s) on a uniform grid in s = log r for r in [rMin, rMax]."""

    def __init__(self, u, n, V=None, **kwargs):
        """
        Args:
            u (callable): solution, vectorized over points (..., n)
            n (int): dimension, 2 or 3
            V (callable, optional): potential of points (..., n); None for V = 0

        Keyword Args:
            rMin (float): inner radius (default: 0.05)
            rMax (float): outer radius, < 1 (default: 0.9)
            count (int): s nodes (default: 64)
            nodes (int): sphere quadrature size (default: the sphereQuadrature default)
            gradient (callable): analytic gradient of u; central differences otherwise
            laplacian (callable): analytic Laplacian of u; central differences otherwise
            name (str): label (default: "frequency")
        """
        if n not in (2, 3):
            raise AlexlabArgumentError("FrequencySeries supports n = 2, 3 (got %r)" % n)
        rMin = kwargs.get("rMin", 0.05)
        rMax = kwargs.get("rMax", 0.9)
        count = kwargs.get("count", 64)
        if not 0.0 < rMin < rMax < 1.0 or count < 8:
            raise AlexlabArgumentError("FrequencySeries requires 0 < rMin < rMax < 1 and count >= 8")
        self.__u = u
        self.__n = n
        self.__V = V
        self.__gradient = kwargs.get("gradient", None)
        self.__laplacian = kwargs.get("laplacian", None)
        self.__name = kwargs.get("name", "frequency")
        self.__a = -(n - 2) / 2.0
        self.__s = np.linspace(np.log(rMin), np.log(rMax), count)
        self.__pts, self.__wts = sphereQuadrature(n, kwargs.get("nodes", None))
        self.__x = np.exp(self.__s)[:, None, None] * self.__pts[None, :, :]
        self.__uV = np.asarray(u(self.__x), dtype=np.float64)
        self.__vV = np.exp(-self.__a * self.__s)[:, None] * self.__uV
        self.__rho = (self.__vV * self.__vV).dot(self.__wts)

    def getName(self):
        return self.__name

    def getDim(self):
        return self.__n

    def getExponent(self):
        return self.__a

    def getS(self):
        return self.__s.copy()

    def getR(self):
        return np.exp(self.__s)

    def getStep(self):
        return float(self.__s[1] - self.__s[0])

    def getRho(self):
        return self.__rho.copy()

    def getQuadrature(self):
        return self.__pts, self.__wts

    def samplePoints(self):
        return self.__x

    def valuesU(self):
        return self.__uV

    def valuesV(self):
        return self.__vV

    def potential(self, xA=None):
        xA = self.__x if xA is None else np.asarray(xA, dtype=np.float64)
        if self.__V is None:
            return np.zeros(xA.shape[:-1])
        return np.asarray(self.__V(xA), dtype=np.float64)

    def derivativesU(self):
        """Gradient and Laplacian of u at the sample points."""
        if self.__gradient is not None and self.__laplacian is not None:
            return np.asarray(self.__gradient(self.__x), dtype=np.float64), np.asarray(self.__laplacian(self.__x), dtype=np.float64)
        _, grad, hess = fdStencilDerivatives(self.__u, self.__x)
        if self.__gradient is not None:
            grad = np.asarray(self.__gradient(self.__x), dtype=np.float64)
        lap = np.asarray(self.__laplacian(self.__x), dtype=np.float64) if self.__laplacian is not None else np.trace(hess, axis1=-2, axis2=-1)
        return grad, lap

    def identityIntegrand(self):
        """2 (v_s^2 + |grad_theta v|^2 + m v^2) integrated over the sphere, per s node."""
        grad, _ = self.derivativesU()
        rV = np.exp(self.__s)
        radial = np.sum(grad * self.__pts[None, :, :], axis=-1)
        tang = grad - radial[..., None] * self.__pts[None, :, :]
        scale = np.exp(-self.__a * self.__s)[:, None]
        vS = scale * (rV[:, None] * radial) - self.__a * self.__vV
        gradTheta2 = (scale * rV[:, None]) ** 2 * np.sum(tang * tang, axis=-1)
        mV = self.__a ** 2 + (rV * rV)[:, None] * self.potential()
        return 2.0 * (vS * vS + gradTheta2 + mV * self.__vV * self.__vV).dot(self.__wts)

    def __repr__(self):
        return "FrequencySeries(%s, n=%d, nodes=%d)" % (self.__name, self.__n, self.__s.size)


def _positiveWindow(rho, floor):
    """Indices of the largest-s contiguous run with rho > floor."""
    pos = rho > floor
    if not pos[-1]:
        return np.arange(0)
    idx = np.nonzero(~pos)[0]
    start = int(idx[-1]) + 1 if idx.size else 0
    return np.arange(start, rho.size)


def frequencyConvexity(fs, **kwargs):
    """Discrete log-convexity of rho with the hypotheses of the convexity argument.

    Args:
        fs (FrequencySeries): sampled series

    Keyword Args:
        residualTol (float): bound on |Laplacian(u) - V u| / max(1, |u|) (default: 1e-6)
        monotoneTol (float): slack on (r^2 V)_r >= 0 (default: 1e-10)
        convexTol (float): base slack on the second difference (default: 1e-6)
        identityTol (float): relative slack on the rho_ss identity (default: 1e-3)
        timing (bool): log elapsed time

    Returns:
        LabReport: conclusions convex, convexity-violation, hypothesis-failure or zero-solution
    """
    t0 = time.time()
    residualTol = kwargs.get("residualTol", 1.0e-6)
    monotoneTol = kwargs.get("monotoneTol", 1.0e-10)
    convexTol = kwargs.get("convexTol", 1.0e-6)
    identityTol = kwargs.get("identityTol", 1.0e-3)
    rpt = LabReport("frequency-convexity", anchor="log rho convex in s = log r when (r^2 V)_r >= 0")
    sV, rho, hh = fs.getS(), fs.getRho(), fs.getStep()
    rpt.setSamples("s_nodes", sV.size)
    rpt.setSamples("sphere_nodes", fs.getQuadrature()[1].size)
    if not np.any(rho > 0.0):
        rpt.addHypothesis("rho>0", "not-applicable", note="rho vanishes identically")
        rpt.setConclusion("zero-solution")
        return rpt
    #
    xA = fs.samplePoints()
    _, lap = fs.derivativesU()
    uV = fs.valuesU()
    resid = float(np.max(np.abs(lap - fs.potential() * uV) / np.maximum(1.0, np.abs(uV))))
    rpt.setFitted("laplace_residual", resid)
    rpt.addHypothesis("laplace-equation", "holds" if resid <= residualTol else "fails", margin=residualTol - resid)
    rr = np.linalg.norm(xA, axis=-1)
    dr = 1.0e-5
    unit = xA / rr[..., None]
    r2V = lambda rad: rad * rad * fs.potential(rad[..., None] * unit)
    dR2V = (r2V(rr + dr) - r2V(rr - dr)) / (2.0 * dr)
    worst = float(np.min(dR2V))
    rpt.setFitted("min_r2V_r", worst)
    rpt.addHypothesis("r2V-nondecreasing", "holds" if worst >= -monotoneTol else "fails", margin=worst + monotoneTol)
    #
    keep = _positiveWindow(rho, 1.0e-300)
    if keep.size < 5:
        rpt.addHypothesis("rho>0", "fails", note="rho vanishes on the window")
        rpt.setConclusion("hypothesis-failure")
        return rpt
    if keep.size < rho.size:
        logger.info("Window shrunk to %d of %d nodes where rho > 0", keep.size, rho.size)
        rpt.setFitted("window_shrunk", True)
    rpt.addHypothesis("rho>0", "holds", margin=float(np.min(rho[keep])))
    sK, rK = sV[keep], rho[keep]
    logRho = np.log(rK)
    d2 = (logRho[2:] - 2.0 * logRho[1:-1] + logRho[:-2]) / (hh * hh)
    # Richardson estimate of the discretization error of the second difference
    d2h = (logRho[4:] - 2.0 * logRho[2:-2] + logRho[:-4]) / (4.0 * hh * hh)
    disc = np.zeros(d2.shape)
    disc[1:-1] = np.abs(d2h - d2[1:-1]) / 3.0
    disc[0], disc[-1] = disc[1], disc[-2]
    convexMargin = d2 + convexTol + disc
    rpt.setFitted("min_second_difference", float(np.min(d2)))
    rpt.setFitted("window", [float(sK[0]), float(sK[-1])])
    convexOk = bool(np.all(convexMargin >= 0.0))
    if not convexOk:
        iB = int(np.argmin(convexMargin))
        logger.info("log rho second difference %.3e at s=%.4f", d2[iB], sK[iB + 1])
    rpt.addHypothesis("log-convexity", "holds" if convexOk else "fails", margin=float(np.min(convexMargin)))
    #
    integ = fs.identityIntegrand()[keep]
    rhoSS = (rK[2:] - 2.0 * rK[1:-1] + rK[:-2]) / (hh * hh)
    rhoSSh = (rK[4:] - 2.0 * rK[2:-2] + rK[:-4]) / (4.0 * hh * hh)
    rich = (4.0 * rhoSS[1:-1] - rhoSSh) / 3.0
    idErr = float(np.max(np.abs(rich - integ[2:-2]) / np.maximum(np.abs(integ[2:-2]), 1.0e-300)))
    rpt.setFitted("identity_relative_error", idErr)
    rpt.addHypothesis("rho_ss-identity", "holds" if idErr <= identityTol else "fails", margin=identityTol - idErr)
    rows = [[float(sK[ii]), float(rK[ii]), float(logRho[ii]), float(d2[ii - 1])] for ii in range(1, sK.size - 1)]
    rpt.addSeries("frequency_%s" % fs.getName(), ["s", "rho", "log_rho", "d2_log_rho"], rows)
    #
    hypFails = [hId for hId in rpt.brokenHypotheses() if hId in ("laplace-equation", "r2V-nondecreasing")]
    if hypFails:
        rpt.setConclusion("hypothesis-failure")
    elif not convexOk:
        rpt.setConclusion("convexity-violation")
    else:
        rpt.setConclusion("convex")
    if kwargs.get("timing", False):
        logger.info("frequencyConvexity %s completed in %.4f seconds", fs.getName(), time.time() - t0)
    return rpt


def _vanishingFits(fs, window):
    """Exponential lower bound from the outermost slope against the decay toward the origin."""
    sV, rho = fs.getS(), fs.getRho()
    keep = _positiveWindow(rho, 1.0e-300)
    if keep.size < 2 * window:
        return None
    sK, logRho = sV[keep], np.log(rho[keep])
    outer = np.polyfit(sK[-window:], logRho[-window:], 1)
    inner = np.polyfit(sK[:window], logRho[:window], 1)
    c2 = float(outer[0])
    bound = logRho[-1] + c2 * (sK - sK[-1])
    gap = float(np.min(logRho - bound))
    return {
        "c1": float(np.exp(logRho[-1] - c2 * sK[-1])),
        "c2": c2,
        "decay_slope": float(inner[0]),
        "bound_gap": gap,
        "order_estimate": float(inner[0] / 2.0 + fs.getExponent()),
        "s_min": float(sK[0]),
    }


def vanishOrderUniqueness(fsA, fsB=None, **kwargs):
    """Compare the convexity lower bound rho >= C1 exp(C2 s) with the decay of rho toward s = -inf.

    Args:
        fsA (FrequencySeries): primary instance
        fsB (FrequencySeries, optional): second instance reported alongside

    Keyword Args:
        window (int): nodes used in each exponential fit (default: 6)
        gapTol (float): slack on log rho below the lower bound (default: 1e-6)

    Returns:
        LabReport: conclusions contradiction, consistent or zero-solution
    """
    window = kwargs.get("window", 6)
    gapTol = kwargs.get("gapTol", 1.0e-6)
    rpt = LabReport("vanish-order-uniqueness", anchor="infinite-order vanishing at the origin forces u = 0")
    conclusions = []
    for label, fs in (("a", fsA), ("b", fsB)):
        if fs is None:
            continue
        conv = frequencyConvexity(fs, **kwargs)
        rpt.setFitted("%s_convexity" % label, conv.getConclusion())
        fits = _vanishingFits(fs, window)
        if fits is None:
            rpt.addHypothesis("%s-rho>0" % label, "not-applicable", note="rho vanishes; nothing to contradict")
            conclusions.append("zero-solution")
            continue
        for ky, vl in fits.items():
            rpt.setFitted("%s_%s" % (label, ky), vl)
        below = fits["bound_gap"] < -gapTol
        rpt.addHypothesis("%s-lower-bound" % label, "fails" if below else "holds", margin=fits["bound_gap"] + gapTol)
        if below:
            logger.info("Instance %s decays below exp bound: slope %.3f vs %.3f", fs.getName(), fits["decay_slope"], fits["c2"])
        conclusions.append("contradiction" if below else "consistent")
    if "contradiction" in conclusions:
        rpt.setConclusion("contradiction")
    elif "consistent" in conclusions:
        rpt.setConclusion("consistent")
    else:
        rpt.setConclusion("zero-solution")
    return rpt
