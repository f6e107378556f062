##
# File:    HopfLemma.py
# Date:    26-Feb-2026
# Version: 0.001 Initial version
#
# Updates:
#   6-Mar-2026  narrowed comparison region for exponents with k(k-1) > C0
#  21-Mar-2026  C2 probe along the inner normal in the C0 < 2 corollary
##
"""
Quantitative Hopf lemma for positive functions with

    Laplacian(w) <= C0 w / dist(x, boundary)^2

in a ball B_R centered at the origin touching the boundary at P = (-R, 0, ..., 0).
The comparison function h = (R - r)^k with k(k - n) = C0 bounds w from below
along the inner normal at P.  The corollary with C0 < 2 and the infinite-order
barrier are checked as consistency statements: an instance either satisfies the
conclusion or measurably breaks a hypothesis, which the report names.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging
import math

import numpy as np

from alexlab.api.CheckReports import LabReport
from alexlab.api.NumericUtils import loglogSlope
from alexlab.api.ScalarField import ScalarField
from alexlab.api.SurfaceConditions import INFINITE, contactOrder
from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabDegenerateError, AlexlabDomainError, AlexlabOrderError

logger = logging.getLogger(__name__)


def hopfExponent(C0, n):
    """Root k > n of k(k - n) = C0."""
    if C0 < 0.0 or n < 1:
        raise AlexlabArgumentError("Hopf exponent requires C0 >= 0 and n >= 1")
    return 0.5 * (n + math.sqrt(n * n + 4.0 * C0))


def narrowTheta(k, C0, n):
    """Width theta = (k(k-1) - C0)/((n-1) k) of the narrowed region K_theta."""
    if not k * (k - 1.0) > C0:
        raise AlexlabArgumentError("Exponent %r violates k(k-1) > C0 = %r" % (k, C0))
    return (k * (k - 1.0) - C0) / ((n - 1) * k) if n > 1 else np.inf


def comparisonFunction(k, n, radius=1.0):
    """h = (R - r)^k on B_R (zero outside), with analytic derivatives away from the center."""
    kk = float(k)
    rr = float(radius)

    def parts(pA):
        rV = np.sqrt(np.sum(pA * pA, axis=-1))
        dd = np.maximum(rr - rV, 0.0)
        return rV, dd

    def func(pA):
        _, dd = parts(pA)
        return dd ** kk

    def grad(pA):
        rV, dd = parts(pA)
        h1 = -kk * dd ** (kk - 1.0)
        return (h1 / np.maximum(rV, 1.0e-300))[..., None] * pA

    def hess(pA):
        rV, dd = parts(pA)
        with np.errstate(divide="ignore", invalid="ignore"):
            h1 = -kk * dd ** (kk - 1.0)
            h2 = kk * (kk - 1.0) * dd ** (kk - 2.0)
        rS = np.maximum(rV, 1.0e-300)
        xh = pA / rS[..., None]
        outer = xh[..., :, None] * xh[..., None, :]
        eye = np.eye(pA.shape[-1])
        return h2[..., None, None] * outer + (h1 / rS)[..., None, None] * (eye - outer)

    box = [(-1.5 * rr, 1.5 * rr)] * n
    return ScalarField(func, n, box=box, gradient=grad, hessian=hess, name="hopf-h-k%.6g" % kk)


def _planeGrid(radius, count, x1Max, n):
    """count x count grid on the (x_1, x_2) plane of B_R restricted to x_1 < x1Max."""
    x1 = np.linspace(-radius, x1Max, count + 2)[1:-1]
    x2 = np.linspace(-radius, radius, count + 2)[1:-1]
    g1, g2 = np.meshgrid(x1, x2, indexing="ij")
    pts = np.zeros(g1.shape + (n,))
    pts[..., 0] = g1
    if n > 1:
        pts[..., 1] = g2
    pts = pts.reshape(-1, n)
    rV = np.sqrt(np.sum(pts * pts, axis=-1))
    return pts[rV < radius * (1.0 - 1.0e-9)]


def _laplacianBoundMargins(w, pts, C0, radius):
    """C0 w - Laplacian(w) (R - r)^2 at the sample points."""
    val, _, hess = w.evaluateArray(pts)
    dist = radius - np.sqrt(np.sum(pts * pts, axis=-1))
    lap = np.trace(hess, axis1=-2, axis2=-1)
    return C0 * val - lap * dist * dist, val


def _normalProbe(radius, n, depths):
    pts = np.zeros((len(depths), n))
    pts[:, 0] = -radius + np.asarray(depths)
    return pts


def hopfGrowthCheck(C0, n, w, P=None, **kwargs):
    """Growth of w along the inner normal at P against h = (R - r)^k.

    Args:
        C0 (float): constant of the Laplacian bound
        n (int): dimension
        w (ScalarField): positive function on B_R vanishing at P
        P (array, optional): boundary point; only (-R, 0, ..., 0) is supported. Defaults to None.

    Keyword Args:
        radius (float): R (default: 1.0)
        kExponent (float): exponent with k(k-1) > C0 checked on the narrowed region (default: the root of k(k-n) = C0)
        gridCount (int): plane grid nodes per axis on K (default: 200)
        wGridCount (int): plane grid nodes per axis for the hypotheses on w (default: 64)
        depths (array): inner-normal probe depths, decreasing (default: 24 geometric samples from R/4 to R/1000)
        tol (float): slack on sampled inequalities (default: 1e-10)

    Returns:
        LabReport: conclusion in {"growth-bound-holds", "hypothesis-failure", "counterexample-witness"}
    """
    radius = float(kwargs.get("radius", 1.0))
    tol = kwargs.get("tol", 1.0e-10)
    gridCount = kwargs.get("gridCount", 200)
    wGridCount = kwargs.get("wGridCount", 64)
    depths = np.asarray(kwargs.get("depths", np.geomspace(0.25 * radius, 1.0e-3 * radius, 24)), dtype=np.float64)
    pV = np.zeros(n)
    pV[0] = -radius
    if P is not None and not np.allclose(np.asarray(P, dtype=np.float64), pV):
        raise AlexlabArgumentError("Boundary point must be (-R, 0, ..., 0) for the ball centered at the origin")
    kRoot = hopfExponent(C0, n)
    kExp = kwargs.get("kExponent", None)
    rpt = LabReport("hopf-growth", anchor="comparison function (R - r)^k with k(k - n) = C0")
    rpt.setFitted("k", kRoot)
    rpt.setFitted("k_residual", abs(kRoot * (kRoot - n) - C0))
    if kExp is None:
        kk, theta = kRoot, 1.0
    else:
        kk = float(kExp)
        theta = min(1.0, narrowTheta(kk, C0, n))
        rpt.setFitted("k_exponent", kk)
        rpt.setFitted("theta", theta)
    #
    # barrier inequality on K (theta = 1) or the narrowed region K_theta
    kPts = _planeGrid(radius, gridCount, -0.5 * radius, n)
    rK = np.sqrt(np.sum(kPts * kPts, axis=-1))
    kPts = kPts[(radius - rK) / rK <= theta]
    rpt.setSamples("barrier_nodes", kPts.shape[0])
    hh = comparisonFunction(kk, n, radius=radius)
    bMargins, _ = _laplacianBoundMargins(hh, kPts, C0, radius)
    dist = radius - np.sqrt(np.sum(kPts * kPts, axis=-1))
    # Laplacian(h) - C0 h/(R - r)^2, and the same divided by (R - r)^(k-2)
    excess = -bMargins / (dist * dist)
    bMin = float(np.min(excess))
    rpt.setFitted("barrier_margin_min", bMin)
    rpt.setFitted("barrier_bracket_min", float(np.min(excess / dist ** (kk - 2.0))))
    rpt.addHypothesis("barrier-inequality", "holds" if bMin >= -tol else "fails", margin=bMin)
    #
    # hypotheses on w over K
    wPts = _planeGrid(radius, wGridCount, -0.5 * radius, n)
    try:
        wMargins, wVal = _laplacianBoundMargins(w, wPts, C0, radius)
        kk97 = int(np.argmin(wMargins))
        rpt.addHypothesis("laplacian-bound", "holds" if wMargins[kk97] >= -tol else "fails", margin=float(wMargins[kk97]), note="min at %r" % wPts[kk97].tolist())
        rpt.addHypothesis("w>0", "holds" if np.min(wVal) > 0.0 else "fails", margin=float(np.min(wVal)))
    except AlexlabDomainError as e:
        rpt.addHypothesis("laplacian-bound", "inconclusive", note=str(e))
    wP = float(w.values(pV))
    rpt.addHypothesis("w(P)=0", "holds" if abs(wP) <= tol else "fails", margin=abs(wP))
    #
    # growth along the inner normal
    probe = _normalProbe(radius, n, depths)
    wN = w.values(probe)
    rows = []
    aFit = None
    if np.all(wN > 0.0):
        ratio = wN / depths ** kk
        aFit = float(np.min(ratio))
        slope, r2 = loglogSlope(list(zip(depths.tolist(), wN.tolist())), window=None)
        rpt.setFitted("growth_exponent", slope)
        rpt.setFitted("growth_r2", r2)
        rows = [[float(dd), float(wv), aFit * float(dd) ** kk] for dd, wv in zip(depths, wN)]
    rpt.setFitted("a", aFit)
    rpt.setSamples("normal_probes", depths.size)
    rpt.addSeries("hopf_growth", ["t", "w", "bound"], rows)
    if rpt.brokenHypotheses():
        rpt.setConclusion("hypothesis-failure")
    elif aFit is not None and aFit > 0.0:
        rpt.setConclusion("growth-bound-holds")
    else:
        rpt.setConclusion("counterexample-witness")
    logger.debug("Hopf growth (C0=%r, n=%d, k=%.6g): %s", C0, n, kk, rpt.getConclusion())
    return rpt


def hopfC0Lt2CorollaryCheck(w, C0, n=2, **kwargs):
    """With C0 < 2, w >= 0, the Laplacian bound near the boundary and w = dw/dnu = 0 at P,
    w vanishes identically; otherwise name the broken hypothesis.

    Keyword Args:
        radius (float): R (default: 1.0)
        layer (float): boundary layer width for the Laplacian bound (default: R/10)
        gridCount (int): plane grid nodes per axis (default: 64)
        zeroTol (float): max |w| accepted as zero (default: 1e-8)
        c2Depths (array): inner-normal depths of the C2 probe (default: geometric from 1e-1 R to 1e-5 R)

    Returns:
        LabReport: conclusion in {"w-vanishes", "hypothesis-failure", "counterexample-witness"}
    """
    if not C0 < 2.0:
        raise AlexlabArgumentError("The corollary requires C0 < 2 (got %r)" % C0)
    radius = float(kwargs.get("radius", 1.0))
    layer = float(kwargs.get("layer", 0.1 * radius))
    gridCount = kwargs.get("gridCount", 64)
    zeroTol = kwargs.get("zeroTol", 1.0e-8)
    tol = kwargs.get("tol", 1.0e-10)
    c2Depths = np.asarray(kwargs.get("c2Depths", np.geomspace(1.0e-1 * radius, 1.0e-5 * radius, 17)), dtype=np.float64)
    rpt = LabReport("hopf-c0-lt-2", anchor="w >= 0 with vanishing normal derivative and C0 < 2 vanishes")
    pts = _planeGrid(radius, gridCount, radius, n)
    wVal = w.values(pts)
    rpt.setSamples("nodes", pts.shape[0])
    wMax = float(np.max(np.abs(wVal)))
    rpt.setFitted("w_max", wMax)
    rpt.addHypothesis("w>=0", "holds" if np.min(wVal) >= -tol else "fails", margin=float(np.min(wVal)))
    rV = np.sqrt(np.sum(pts * pts, axis=-1))
    near = pts[radius - rV < layer]
    margins, _ = _laplacianBoundMargins(w, near, C0, radius)
    kk = int(np.argmin(margins))
    rpt.addHypothesis("laplacian-bound-near-boundary", "holds" if margins[kk] >= -tol else "fails", margin=float(margins[kk]), note="min at %r" % near[kk].tolist())
    pV = np.zeros(n)
    pV[0] = -radius
    wP = float(w.values(pV))
    hh = 1.0e-6 * radius
    dNu = (float(w.values(pV + hh * np.eye(n)[0])) - wP) / hh
    rpt.addHypothesis("w(P)=0", "holds" if abs(wP) <= tol else "fails", margin=abs(wP))
    rpt.addHypothesis("normal-derivative(P)=0", "holds" if abs(dNu) <= 1.0e-4 else "fails", margin=abs(dNu))
    #
    # C2 up to the boundary: second derivative along the inner normal stays bounded
    probe = _normalProbe(radius, n, c2Depths)
    _, _, hA = w.evaluateArray(probe)
    wNN = np.abs(hA[:, 0, 0])
    c2Slope = None
    if np.all(wNN > 0.0):
        c2Slope, _ = loglogSlope(list(zip(c2Depths.tolist(), wNN.tolist())), window=None)
    unbounded = c2Slope is not None and c2Slope < -0.1 and float(wNN[-1]) > 10.0 * float(wNN[0])
    rpt.setFitted("normal_second_derivative_slope", c2Slope)
    rpt.addHypothesis("C2-up-to-boundary", "fails" if unbounded else "holds", margin=float(np.max(wNN)))
    if wMax <= zeroTol:
        rpt.setConclusion("w-vanishes")
    elif rpt.brokenHypotheses():
        rpt.setConclusion("hypothesis-failure")
    else:
        rpt.setConclusion("counterexample-witness")
    logger.debug("C0 < 2 corollary (C0=%r): %s broken=%r", C0, rpt.getConclusion(), rpt.brokenHypotheses())
    return rpt


def infiniteOrderBarrierCheck(w, C0, **kwargs):
    """w >= 0 vanishing to infinite order at t = 0 with Laplacian(w) <= C0 w / t^2 vanishes.

    w is a field of (t, y) on Omega = {0 < t < 1, |y| < 1}.

    Keyword Args:
        tRange (tuple): t window of the sampled bound (default: (0.02, 0.5))
        count (int): grid nodes per axis (default: 48)
        zeroTol (float): max |w| accepted as zero (default: 1e-12)

    Raises:
        AlexlabOrderError: w has finite vanishing order at t = 0

    Returns:
        LabReport: conclusion in {"w-vanishes", "hypothesis-failure", "counterexample-witness"}
    """
    tLo, tHi = kwargs.get("tRange", (0.02, 0.5))
    count = kwargs.get("count", 48)
    zeroTol = kwargs.get("zeroTol", 1.0e-12)
    nn = w.getDim()
    rpt = LabReport("infinite-order-barrier", anchor="infinite-order vanishing with Laplacian(w) <= C0 w / t^2 forces w = 0")
    yZero = np.zeros(nn - 1)
    try:
        order, diag = contactOrder(lambda tt: float(w.values(np.concatenate([[tt], yZero]))))
    except AlexlabDegenerateError:
        order, diag = INFINITE, {"slope": np.inf}
    if order != INFINITE:
        raise AlexlabOrderError("w vanishes to finite order %r at t = 0" % order)
    rpt.setFitted("t_order_slope", diag.get("slope"))
    tAx = np.geomspace(tLo, tHi, count)
    yAx = np.linspace(-0.5, 0.5, count if nn == 2 else max(8, count // 4))
    grids = np.meshgrid(tAx, *([yAx] * (nn - 1)), indexing="ij")
    pts = np.stack(grids, axis=-1).reshape(-1, nn)
    val, _, hess = w.evaluateArray(pts)
    rpt.setSamples("nodes", pts.shape[0])
    wMax = float(np.max(np.abs(val)))
    rpt.setFitted("w_max", wMax)
    rpt.addHypothesis("w>=0", "holds" if np.min(val) >= 0.0 else "fails", margin=float(np.min(val)))
    if wMax <= zeroTol:
        rpt.addHypothesis("laplacian-bound", "holds", margin=0.0)
        rpt.setConclusion("w-vanishes")
        return rpt
    lap = np.trace(hess, axis1=-2, axis2=-1)
    pos = val > 0.0
    ratio = lap[pos] * pts[pos, 0] ** 2 / val[pos]
    kk = int(np.argmax(ratio))
    ratioMax = float(ratio[kk])
    rpt.setFitted("ratio_max", ratioMax)
    rpt.setFitted("ratio_max_at", pts[pos][kk].tolist())
    rpt.addHypothesis("laplacian-bound", "holds" if ratioMax <= C0 else "fails", margin=C0 - ratioMax, note="sup of Laplacian(w) t^2 / w")
    yMid = yAx[int(np.argmin(np.abs(yAx)))]
    tRows = np.all(pts[:, 1:] == yMid, axis=-1)
    rows = [[float(pt[0]), float(vl), float(C0) * float(vl) / float(pt[0]) ** 2] for pt, vl in zip(pts[tRows], val[tRows])]
    rpt.addSeries("infinite_order_barrier", ["t", "w", "bound"], rows)
    rpt.setConclusion("hypothesis-failure" if rpt.brokenHypotheses() else "counterexample-witness")
    logger.debug("Infinite-order barrier (C0=%r): %s", C0, rpt.getConclusion())
    return rpt
