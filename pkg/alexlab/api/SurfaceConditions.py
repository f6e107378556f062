##
# File:    SurfaceConditions.py
# Date:    9-Feb-2026
# Version: 0.001 Initial version
#
# Updates:
#  22-Feb-2026  contact order from accurate radius increments (no cancellation)
#   5-Mar-2026  witness re-verification at ten times the sampling resolution
#  16-Mar-2026  general curvature functions in the vertical-pair comparison
##
"""
Decide the hypotheses on a closed body of revolution: the vertical tangency set,
the contact order at tangency (Condition T), one-sidedness with respect to vertical
tangent hyperplanes (Condition S), vertical convexity near tangency (Condition LC)
and the vertical-pair curvature comparison (Main Assumption).

Every failing verdict carries a witness which is re-checked at ten times the
sampling resolution; a witness that does not survive downgrades the verdict to
inconclusive.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging
import time

import numpy as np

from alexlab.api.CheckReports import ConditionReport
from alexlab.api.NumericUtils import bisectRoot, loglogSlope, loglogSlopeProfile
from alexlab.api.SurfaceCurvature import verifyGProperties
from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabConsistencyError, AlexlabDegenerateError, AlexlabDomainError, AlexlabError, AlexlabOrderError

logger = logging.getLogger(__name__)

INFINITE = "infinite"


class TangencyPoint(object):
    """Representative meridian point of a circle of vertical tangency, with its local frame.

    The frame rows are (y_1 .. y_{n-1}, t, y_{n+1}) in ambient coordinates: y spans the
    horizontal tangent directions, t = zBar - X_{n+1} points down and y_{n+1} is the
    inner normal -e_1.
    """

    def __init__(self, profile, zBar, band=None, delta=None):
        self.__prof = profile
        self.zBar = float(zBar)
        self.band = tuple(band) if band else None
        nn = profile.getDim()
        zMin, zMax = profile.getRange()
        self.rhoBar = float(profile.rho(self.zBar))
        self.point = profile.pointAt(self.zBar)
        self.nuLast = float(profile.nuLast(self.zBar))
        self.delta = float(delta) if delta else min(0.1, 0.5 * (self.zBar - zMin), 0.5 * (zMax - self.zBar), 0.5 * self.rhoBar)
        frame = np.zeros((nn + 1, nn + 1))
        for ii in range(nn - 1):
            frame[ii, ii + 1] = 1.0
        frame[nn - 1, nn] = -1.0
        frame[nn, 0] = -1.0
        self.frame = frame
        self.order = None
        self.__graph = None

    def getProfile(self):
        return self.__prof

    def getLocalGraph(self):
        """Local graph v(t, y) of M over the vertical tangent plane."""
        if self.__graph is None:
            self.__graph = self.__prof.sideGraph(self.zBar, self.delta)
        return self.__graph

    def axisValues(self, tV):
        """v(t, 0) = (q(zBar) - q(zBar - t))/(rho(zBar) + rho(zBar - t)), the increment of q
        integrated from q' by Gauss-Legendre quadrature."""
        tA = np.atleast_1d(np.asarray(tV, dtype=np.float64))
        xg, wg = np.polynomial.legendre.leggauss(32)
        lo = self.zBar - tA
        mid = 0.5 * (lo + self.zBar)
        half = 0.5 * (self.zBar - lo)
        nodes = mid[:, None] + half[:, None] * xg[None, :]
        incr = half * np.sum(wg[None, :] * self.__prof.dq(nodes), axis=-1)
        return incr / (self.rhoBar + self.__prof.rho(lo))

    def toDict(self):
        dD = {"z": self.zBar, "point": self.point.tolist(), "nu_last": self.nuLast, "order": self.order}
        if self.band:
            dD["band"] = list(self.band)
        return dD

    def __repr__(self):
        return "TangencyPoint(z=%.12g, order=%r)" % (self.zBar, self.order)


def findTangencySet(M, tol=1.0e-8, samples=4001):
    """Locate the vertical tangency set T = {nu_{n+1} = 0} along the meridian.

    Sign changes of q' are refined by bisection; runs of exact zeros (bands) are
    represented by their midpoint.

    Raises:
        AlexlabConsistencyError: no tangency found, or refinement misses the tolerance

    Returns:
        list: TangencyPoint objects ordered by height
    """
    zMin, zMax = M.getRange()
    zV = np.linspace(zMin, zMax, samples)[1:-1]
    sV = np.sign(M.dq(zV))
    tpL = []
    ii = 0
    nz = zV.size
    while ii < nz:
        if sV[ii] == 0.0:
            jj = ii
            while jj + 1 < nz and sV[jj + 1] == 0.0:
                jj += 1
            band = (float(zV[ii]), float(zV[jj])) if jj > ii else None
            tpL.append(TangencyPoint(M, 0.5 * (zV[ii] + zV[jj]), band=band))
            ii = jj + 1
            continue
        if ii + 1 < nz and sV[ii + 1] != 0.0 and sV[ii] != sV[ii + 1]:
            zBar = bisectRoot(lambda zz: float(M.nuLast(zz)), zV[ii], zV[ii + 1], tol=1.0e-15)
            tpL.append(TangencyPoint(M, zBar))
        ii += 1
    if not tpL:
        raise AlexlabConsistencyError("No vertical tangency found on closed surface %s" % M.getName())
    for tp in tpL:
        if abs(tp.nuLast) > tol:
            raise AlexlabConsistencyError("Tangency refinement at z=%r left |nu_last|=%.3e" % (tp.zBar, abs(tp.nuLast)))
    logger.debug("Tangency set of %s: %r", M.getName(), tpL)
    return tpL


def defaultContactSamples(tMax=0.2, tMin=1.0e-3, count=24):
    return np.geomspace(tMax, tMin, count)


def contactOrder(tp, tSamples=None, **kwargs):
    """Contact order of a local graph with its tangent plane along the t axis.

    Args:
        tp (TangencyPoint or callable): tangency point, or a function t -> v(t, 0)
        tSamples (array, optional): strictly decreasing positive t values. Defaults to 24 geometric samples.

    Keyword Args:
        window (int): samples per slope window (default: 6)
        snap (float): integer snapping window (default: 0.05)
        minR2 (float): minimum regression quality (default: 0.999)
        infiniteSlope (float): slope beyond which the order is reported infinite (default: 20)

    Raises:
        AlexlabDegenerateError: v(t, 0) vanishes identically on the samples
        AlexlabOrderError: the slope neither snaps to an integer nor diverges

    Returns:
        (int or str, dict): the order k >= 2 or "infinite", and fit diagnostics
    """
    window = kwargs.get("window", 6)
    snap = kwargs.get("snap", 0.05)
    minR2 = kwargs.get("minR2", 0.999)
    infiniteSlope = kwargs.get("infiniteSlope", 20.0)
    if isinstance(tp, TangencyPoint):
        zMin = tp.getProfile().getRange()[0]
        tMax = min(0.2, 0.5 * (tp.zBar - zMin))
        tV = np.asarray(tSamples, dtype=np.float64) if tSamples is not None else defaultContactSamples(tMax=tMax)
        wV = np.abs(tp.axisValues(tV))
    else:
        tV = np.asarray(tSamples, dtype=np.float64) if tSamples is not None else defaultContactSamples()
        wV = np.abs(np.array([float(tp(tt)) for tt in tV]))
    if not np.any(wV > 0.0):
        raise AlexlabDegenerateError("v(t,0) vanishes identically on %d samples down to t=%.3e" % (tV.size, float(tV[-1])))
    diag = {"samples": int(tV.size), "t_min": float(tV[-1])}
    zeroIdx = np.nonzero(wV == 0.0)[0]
    if zeroIdx.size:
        first = int(zeroIdx[0])
        if first == 0 or np.any(wV[first:] > 0.0) or wV[first - 1] > 1.0e-200:
            raise AlexlabDegenerateError("v(t,0) vanishes identically for t <= %.3e" % float(tV[first]))
        tV, wV = tV[:first], wV[:first]
        diag["underflow_t"] = float(tV[-1])
        if tV.size < 4:
            diag["slope"] = np.inf
            return INFINITE, diag
    win = min(window, tV.size)
    samples = list(zip(tV.tolist(), wV.tolist()))
    slope, r2 = loglogSlope(samples, window=win)
    profile = loglogSlopeProfile(samples, window=win)
    diag.update({"slope": slope, "r2": r2, "slope_profile": profile})
    growing = len(profile) > 2 and bool(np.all(np.diff(profile) > 0.0)) and profile[-1] - profile[0] > 2.0
    if slope > infiniteSlope or (growing and slope > 4.0):
        return INFINITE, diag
    kk = int(round(slope))
    if kk >= 2 and abs(slope - kk) <= snap and r2 >= minR2:
        return kk, diag
    raise AlexlabOrderError("Contact order not resolved: slope %.4f r2 %.6f" % (slope, r2))


def _reportTiming(name, t0, timing):
    if timing:
        logger.info("%s completed in %.4f seconds", name, time.time() - t0)


def _reverifyInfinite(tp, **kwargs):
    zMin = tp.getProfile().getRange()[0]
    tV = defaultContactSamples(tMax=min(0.2, 0.5 * (tp.zBar - zMin)), count=240)
    try:
        return contactOrder(tp, tSamples=tV, window=60, **{ky: vl for ky, vl in kwargs.items() if ky != "window"})[0] == INFINITE
    except AlexlabDegenerateError:
        return True
    except AlexlabOrderError:
        return False


def checkConditionT(M, tangency=None, **kwargs):
    """Condition T: every vertical tangency has finite contact order.

    Returns:
        ConditionReport: holds iff all orders are finite; infinite or identically vanishing
        contacts fail with a witness; unresolved orders give inconclusive
    """
    t0 = time.time()
    tpL = tangency if tangency is not None else findTangencySet(M)
    rpt = ConditionReport("T")
    orders = []
    unresolved = False
    for tp in tpL:
        try:
            order, diag = contactOrder(tp, **kwargs)
            tp.order = order
            orders.append({"z": tp.zBar, "order": order, "slope": diag.get("slope")})
            if order == INFINITE:
                reproduced = _reverifyInfinite(tp, **kwargs)
                rpt.addWitness(tp.point, float(diag.get("slope", np.inf)), note="infinite-order contact" + ("" if reproduced else " (not reproduced)"))
        except AlexlabDegenerateError as e:
            tp.order = INFINITE
            orders.append({"z": tp.zBar, "order": "degenerate"})
            rpt.addWitness(tp.point, 0.0, note="degenerate direction: %s" % str(e))
        except AlexlabOrderError as e:
            unresolved = True
            orders.append({"z": tp.zBar, "order": None})
            logger.info("Contact order unresolved at z=%r: %s", tp.zBar, str(e))
    rpt.setResolution(tangency_points=len(tpL), t_samples=24)
    rpt.setDetail("orders", orders)
    stable = all("not reproduced" not in (wt.note or "") for wt in rpt.getWitnesses())
    if rpt.getWitnesses():
        rpt.setDetail("witness_reverified", stable)
        rpt.setVerdict("fails" if stable else "inconclusive")
    else:
        rpt.setVerdict("inconclusive" if unresolved else "holds")
    _reportTiming("checkConditionT", t0, kwargs.get("timing", False))
    logger.debug("Condition T on %s: %s", M.getName(), rpt.getVerdict())
    return rpt


def _surfaceSideExcess(M, tp, zLo, zHi, nz, nAz):
    zV = np.linspace(zLo, zHi, nz)
    phi = np.linspace(-np.pi, np.pi, nAz, endpoint=False) if nAz > 1 else np.zeros(1)
    rV = M.rho(zV)
    dA = rV[:, None] * np.cos(phi)[None, :] - tp.rhoBar
    ii, jj = np.unravel_index(int(np.argmax(dA)), dA.shape)
    return float(dA[ii, jj]), float(zV[ii]), float(phi[jj])


def checkConditionS(M, samples=None, tangency=None, **kwargs):
    """Condition S: M lies on one side of every vertical tangent hyperplane.

    For the tangency point (rho_bar e_1, zBar) the hyperplane is x_1 = rho_bar and the
    signed distance of a sample (rho(z) cos phi, rho(z) sin phi, .., z) is rho(z) cos phi - rho_bar.

    Args:
        samples (tuple, optional): (z levels, azimuths). Defaults to (400, 64).

    Keyword Args:
        slack (float): allowed positive excursion (default: 1e-9)
        reverifyFactor (int): resolution multiplier of the witness re-check around each cut (default: 10)
    """
    t0 = time.time()
    nz, nAz = samples if samples else (400, 64)
    slack = kwargs.get("slack", 1.0e-9)
    reverifyFactor = int(kwargs.get("reverifyFactor", 10))
    if reverifyFactor < 1:
        raise AlexlabArgumentError("reverifyFactor must be >= 1 (got %r)" % reverifyFactor)
    # the re-check window spans 4 coarse z spacings
    fineLevels = 4 * reverifyFactor + 1
    tpL = tangency if tangency is not None else findTangencySet(M)
    zMin, zMax = M.getRange()
    rpt = ConditionReport("S")
    stable = True
    for tp in tpL:
        excess, zW, phiW = _surfaceSideExcess(M, tp, zMin, zMax, nz, nAz)
        if excess > slack:
            dz = 2.0 * (zMax - zMin) / (nz - 1)
            fineExcess, zF, phiF = _surfaceSideExcess(M, tp, max(zMin, zW - dz), min(zMax, zW + dz), fineLevels, reverifyFactor * nAz)
            ok = fineExcess > slack
            stable = stable and ok
            pt = np.zeros(M.getDim() + 1)
            pt[0] = float(M.rho(zF)) * np.cos(phiF)
            if M.getDim() > 1:
                pt[1] = float(M.rho(zF)) * np.sin(phiF)
            pt[-1] = zF
            rpt.addWitness(pt, max(excess, fineExcess), note="cuts tangent hyperplane at z=%.6g" % tp.zBar)
    rpt.setResolution(z_levels=nz, azimuths=nAz, reverify_factor=reverifyFactor)
    if rpt.getWitnesses():
        rpt.setDetail("witness_reverified", stable)
        rpt.setVerdict("fails" if stable else "inconclusive")
    else:
        rpt.setVerdict("holds")
    _reportTiming("checkConditionS", t0, kwargs.get("timing", False))
    logger.debug("Condition S on %s: %s", M.getName(), rpt.getVerdict())
    return rpt


def _lcGrid(tp, radius, count, center=None, halfWidth=None):
    nn = tp.getProfile().getDim()
    cV = np.zeros(nn) if center is None else np.asarray(center, dtype=np.float64)
    hw = radius if halfWidth is None else halfWidth
    axL = [np.linspace(cV[ii] - hw, cV[ii] + hw, count) for ii in range(nn)]
    return np.stack(np.meshgrid(*axL, indexing="ij"), axis=-1).reshape(-1, nn)


def _lcValid(tp, pts):
    prof = tp.getProfile()
    zMin, zMax = prof.getRange()
    zA = tp.zBar - pts[:, 0]
    if np.any(zA <= zMin) or np.any(zA >= zMax):
        return False
    return bool(np.all(prof.q(zA) - np.sum(pts[:, 1:] ** 2, axis=-1) > 1.0e-12))


def checkConditionLC(M, tangency=None, **kwargs):
    """Condition LC: v_tt >= 0 on a neighborhood of each tangency frame origin.

    Keyword Args:
        radius (float): neighborhood half-width in frame units (default: 0.1)
        count (int): grid nodes per axis (default: 21)
        slack (float): allowed negative v_tt (default: 1e-9)
        retries (int): halvings of the radius before reporting inconclusive (default: 4)
    """
    t0 = time.time()
    radius0 = kwargs.get("radius", 0.1)
    count = kwargs.get("count", 21)
    slack = kwargs.get("slack", 1.0e-9)
    retries = kwargs.get("retries", 4)
    tpL = tangency if tangency is not None else findTangencySet(M)
    rpt = ConditionReport("LC")
    inconclusive = False
    stable = True
    radii = []
    for tp in tpL:
        radius = radius0
        pts = _lcGrid(tp, radius, count)
        attempt = 0
        while not _lcValid(tp, pts) and attempt < retries:
            radius *= 0.5
            attempt += 1
            pts = _lcGrid(tp, radius, count)
        if not _lcValid(tp, pts):
            inconclusive = True
            logger.info("LC neighborhood at z=%r exceeds patch validity", tp.zBar)
            continue
        radii.append(radius)
        vv = tp.getProfile().sideGraph(tp.zBar, 1.01 * radius)
        _, _, hA = vv.evaluateArray(pts)
        vtt = hA[:, 0, 0]
        kk = int(np.argmin(vtt))
        if vtt[kk] < -slack:
            cell = 2.0 * radius / (count - 1)
            fine = np.clip(_lcGrid(tp, radius, count, center=pts[kk], halfWidth=cell), -radius, radius)
            _, _, hF = vv.evaluateArray(fine)
            ok = bool(np.min(hF[:, 0, 0]) < -slack)
            stable = stable and ok
            rpt.addWitness(np.concatenate([[tp.zBar], pts[kk]]), float(vtt[kk]), note="v_tt < 0 in frame at z=%.6g" % tp.zBar)
    rpt.setResolution(radius=radius0, nodes_per_axis=count)
    rpt.setDetail("radii", radii)
    if rpt.getWitnesses():
        rpt.setDetail("witness_reverified", stable)
        rpt.setVerdict("fails" if stable else "inconclusive")
    else:
        rpt.setVerdict("inconclusive" if inconclusive else "holds")
    _reportTiming("checkConditionLC", t0, kwargs.get("timing", False))
    logger.debug("Condition LC on %s: %s", M.getName(), rpt.getVerdict())
    return rpt


def _levelRoots(M, rr, scan):
    zMin, zMax = M.getRange()
    zV = np.linspace(zMin, zMax, scan)
    fV = M.q(zV) - rr * rr
    sV = np.sign(fV)
    rootL = [float(zV[ii]) for ii in np.nonzero(sV == 0.0)[0]]
    for ii in np.nonzero(sV[:-1] * sV[1:] < 0.0)[0]:
        rootL.append(bisectRoot(lambda zz: float(M.q(zz)) - rr * rr, zV[ii], zV[ii + 1], tol=1.0e-14))
    return sorted(rootL)


def _pairMargins(M, rr, scan, interior, gFunc):
    """Comparable vertical pairs at radius rr: (z_lower, z_upper, g_upper - g_lower, interior-ok)."""
    roots = _levelRoots(M, rr, scan)
    pairL = []
    for za, zb in zip(roots[:-1], roots[1:]):
        if zb - za <= 1.0e-12:
            continue
        zS = np.linspace(za, zb, interior + 2)[1:-1]
        inside = M.q(zS) - rr * rr >= -1.0e-12
        if not np.any(inside):
            continue
        kA = M.principalCurvaturesArray(np.array([za, zb]))
        margin = float(gFunc(kA[1])) - float(gFunc(kA[0]))
        pairL.append((za, zb, margin, bool(np.all(inside))))
    return pairL


def meanCurvatureFunction(k):
    return float(np.mean(k))


def checkMainAssumption(M, samples=None, curvatureFunction=None, **kwargs):
    """Main Assumption: along each vertical segment in G-bar joining two points of M,
    the curvature function at the upper point does not exceed that at the lower point.

    Args:
        M (RevolutionProfile): closed body
        samples (int, optional): meridian levels generating the radii tested. Defaults to 400.
        curvatureFunction (callable, optional): g of ascending principal curvatures. Defaults to the mean curvature.

    Keyword Args:
        tol (float): comparison tolerance (default: 1e-9)
        interior (int): interior membership points per segment (default: 32)
        scan (int): root-scan resolution along the meridian (default: 4001)

    Returns:
        ConditionReport: worst margin in details; failing pairs as witnesses (r, z_lower, z_upper)
    """
    t0 = time.time()
    levels = samples if samples else 400
    tol = kwargs.get("tol", 1.0e-9)
    interior = kwargs.get("interior", 32)
    scan = kwargs.get("scan", 4001)
    gFunc = curvatureFunction if curvatureFunction is not None else meanCurvatureFunction
    rpt = ConditionReport("main-assumption")
    zMin, zMax = M.getRange()
    rMax = M.getMaxRadius()
    rV = np.unique(M.rho(np.linspace(zMin, zMax, levels + 2)[1:-1]))
    rV = rV[(rV > 0.0) & (rV < rMax * (1.0 - 1.0e-9))]
    worst = -np.inf
    nPairs = 0
    mixed = 0
    failures = []
    try:
        for rr in rV:
            for za, zb, margin, allInside in _pairMargins(M, float(rr), scan, interior, gFunc):
                if not allInside:
                    mixed += 1
                    continue
                nPairs += 1
                worst = max(worst, margin)
                if margin > tol:
                    failures.append((margin, float(rr), za, zb))
    except (AlexlabError, ArithmeticError) as e:
        logger.exception("Main assumption sampling failed on %s", M.getName())
        rpt.setDetail("error", str(e))
        rpt.setResolution(levels=levels, interior=interior, scan=scan)
        rpt.setVerdict("inconclusive")
        return rpt
    failures.sort(reverse=True)
    stable = True
    for margin, rr, za, zb in failures[:8]:
        fine = [pm for pm in _pairMargins(M, rr, 10 * scan, 10 * interior, gFunc) if pm[3] and pm[2] > tol]
        stable = stable and bool(fine)
        rpt.addWitness([rr, za, zb], margin, note="upper curvature exceeds lower")
    if curvatureFunction is not None:
        kSamples = M.principalCurvaturesArray(np.linspace(zMin, zMax, 34)[1:-1])
        try:
            rpt.setDetail("g_properties", verifyGProperties(curvatureFunction, list(kSamples)).getVerdict())
        except AlexlabDomainError as e:
            rpt.setDetail("g_properties", "inconclusive: %s" % str(e))
    rpt.setResolution(levels=levels, interior=interior, scan=scan)
    rpt.setDetail("pairs", nPairs)
    rpt.setDetail("worst_margin", worst if nPairs else None)
    rpt.setDetail("violations", len(failures))
    if mixed:
        rpt.setDetail("membership_inconsistent_pairs", mixed)
    if rpt.getWitnesses():
        rpt.setDetail("witness_reverified", stable)
        rpt.setVerdict("fails" if stable else "inconclusive")
    elif mixed:
        rpt.setVerdict("inconclusive")
    else:
        rpt.setVerdict("holds")
    _reportTiming("checkMainAssumption", t0, kwargs.get("timing", False))
    logger.debug("Main assumption on %s: %s (worst margin %r over %d pairs)", M.getName(), rpt.getVerdict(), worst, nPairs)
    return rpt
