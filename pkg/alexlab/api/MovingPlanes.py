##
# File:    MovingPlanes.py
# Date:    13-Feb-2026
# Version: 0.001 Initial version
#
# Updates:
#  25-Feb-2026  first-order distance gap, finite through the poles
#   9-Mar-2026  d6 contacts processed with local pairing fields
#  20-Mar-2026  vertical partner uniqueness diagnostics
##
"""
Moving planes in the X_{n+1} direction for closed bodies of revolution.

A horizontal plane {X_{n+1} = lambda} descends from the top; the cap of M above
it is reflected and compared with M.  The descent stops at lambda0 where the
reflected cap touches M in the interior (case d5), becomes tangential at the
plane (case d6), or matches the remaining surface (symmetric).

Heights, lambda0 included, are reported in the body's own coordinates.  The
same height measured from the top of M, where the top sits at 0, is reported
as lambda0_top = lambda0 - max X_{n+1}; the unit sphere centered at 0 has
lambda0 = 0 and lambda0_top = -1.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging
import time

import numpy as np

from alexlab.api.CheckReports import toJsonValue
from alexlab.api.NumericUtils import bisectRoot
from alexlab.api.SurfaceConditions import INFINITE, TangencyPoint, checkConditionLC, checkMainAssumption, contactOrder, findTangencySet
from alexlab.api.TauField import TauField, checkProp1Dichotomy
from alexlab.io.AlexlabExceptions import AlexlabDegenerateError, AlexlabError, AlexlabGeometryError, AlexlabOrderError, AlexlabPreconditionError

logger = logging.getLogger(__name__)


class ReflectionState(object):
    """Cap S_lambda above the plane, its mirror image S'_lambda and the (d2)/(d3) flags."""

    def __init__(self, lam, capZ, capR, gaps, boundaryNu):
        self.lam = float(lam)
        self.capZ = np.asarray(capZ)
        self.capR = np.asarray(capR)
        self.mirrorZ = 2.0 * self.lam - self.capZ
        self.gaps = np.asarray(gaps)
        self.boundaryNu = float(boundaryNu)
        self.insideG = bool(np.all(self.gaps > 0.0))
        self.boundaryNormalNegative = self.boundaryNu < 0.0

    def mirrorPoints(self):
        """Reflected cap points (r, 2 lambda - z) on the representative meridian."""
        return np.stack([self.capR, self.mirrorZ], axis=-1)

    def __repr__(self):
        return "ReflectionState(lambda=%.12g, inside=%r, d3=%r)" % (self.lam, self.insideG, self.boundaryNormalNegative)


class SymmetryVerdict(object):
    """Outcome of a moving-plane run."""

    def __init__(self, outcome, lambda0=None, deviation=None, case=None, failureCase=None):
        self.outcome = outcome
        self.lambda0 = lambda0
        self.lambda0Top = None
        self.deviation = deviation
        self.case = case
        self.failureCase = failureCase
        self.witnesses = []
        self.prop1 = {}
        self.diagnostics = {}

    def isSymmetric(self):
        return self.outcome == "symmetric"

    def toDict(self):
        return toJsonValue(
            {
                "outcome": self.outcome,
                "lambda0": self.lambda0,
                "lambda0_top": self.lambda0Top,
                "deviation": self.deviation,
                "case": self.case,
                "failure_case": self.failureCase,
                "witnesses": self.witnesses,
                "prop1": self.prop1,
                "diagnostics": self.diagnostics,
            }
        )

    def __repr__(self):
        return "SymmetryVerdict(%s, lambda0=%r, case=%r, failure=%r)" % (self.outcome, self.lambda0, self.case, self.failureCase)


class MovingPlanes(object):
    """Moving-plane procedure on one RevolutionProfile."""

    def __init__(self, M, **kwargs):
        """
        Args:
            M (RevolutionProfile): closed body

        Keyword Args:
            steps (int): lambda scan steps (default: 2000)
            capSamples (int): cap samples per lambda (default: 400)
            lambdaTol (float): bisection width for lambda0 (default: 1e-10)
            symmetryTol (float): reflection deviation accepted as symmetric (default: 1e-7)
            tangencyTol (float): |nu_last| at a d6 contact (default: 1e-6)
            uniquenessTol (float): separation of distinct vertical partners (default: 1e-7)
            timing (bool): log elapsed times (default: False)
        """
        self.__M = M
        self.__steps = kwargs.get("steps", 2000)
        self.__capSamples = kwargs.get("capSamples", 400)
        self.__lambdaTol = kwargs.get("lambdaTol", 1.0e-10)
        self.__symmetryTol = kwargs.get("symmetryTol", 1.0e-7)
        self.__tangencyTol = kwargs.get("tangencyTol", 1.0e-6)
        self.__uniquenessTol = kwargs.get("uniquenessTol", 1.0e-7)
        self.__timing = kwargs.get("timing", False)
        self.__kwargs = kwargs
        self.__diag = {}

    def getDiagnostics(self):
        return dict(self.__diag)

    def firstOrderGap(self, lam, zA):
        """Signed first-order distance from the reflected points (rho(z), 2 lambda - z) to M,
        (q(2 lambda - z) - q(z))/sqrt(4 q(z) + q'(2 lambda - z)^2); positive inside G."""
        M = self.__M
        zMin, zMax = M.getRange()
        zA = np.asarray(zA, dtype=np.float64)
        zR = 2.0 * lam - zA
        qz = np.maximum(M.q(zA), 0.0)
        num = M.q(zR) - qz
        den = np.sqrt(4.0 * qz + M.dq(zR) ** 2)
        gap = num / np.maximum(den, 1.0e-300)
        outside = np.minimum(zR - zMin, zMax - zR)
        return np.where(outside < 0.0, np.minimum(gap, outside), gap)

    def __capNodes(self, lam):
        zMax = self.__M.getTop()
        return lam + (zMax - lam) * np.arange(1, self.__capSamples + 1) / self.__capSamples

    def reflectionState(self, lam):
        M = self.__M
        capZ = self.__capNodes(lam)
        return ReflectionState(lam, capZ, M.rho(capZ), self.firstOrderGap(lam, capZ), float(M.nuLast(lam)))

    def normalizedGap(self, lam):
        """min over the cap of gap/(z - lambda), including the plane limit -2 nu_last(lambda).

        Returns:
            (float, float, float): value, plane limit, argmin height of the interior term
        """
        capZ = self.__capNodes(lam)
        ratio = self.firstOrderGap(lam, capZ) / (capZ - lam)
        kk = int(np.argmin(ratio))
        boundary = -2.0 * float(self.__M.nuLast(lam))
        return min(float(ratio[kk]), boundary), boundary, float(capZ[kk])

    def reflectAndCompare(self, lam, touchTol=1.0e-9):
        """Minimum normalized gap between S'_lambda and M, and the cap points where it vanishes.

        Returns:
            (float, list): min gap (> 0 iff (d2) strictly holds) and touching points (r, z) on M
        """
        st = self.reflectionState(lam)
        ratio = st.gaps / (st.capZ - lam)
        minGap = float(np.min(ratio))
        touchL = [[float(rr), float(zz)] for rr, zz, gp in zip(st.capR, st.capZ, st.gaps) if abs(gp) <= touchTol]
        return minGap, touchL

    def reflectionDeviation(self, lam, samples=2000):
        """max first-order distance between the reflection of M across lambda and M."""
        zMin, zMax = self.__M.getRange()
        zA = np.linspace(zMin, zMax, samples)
        lo = max(zMin, 2.0 * lam - zMax)
        hi = min(zMax, 2.0 * lam - zMin)
        zA = zA[(zA >= lo) & (zA <= hi)]
        dev = float(np.max(np.abs(self.firstOrderGap(lam, zA)))) if zA.size else np.inf
        return max(dev, abs(2.0 * lam - zMax - zMin))

    def findLambda0(self):
        """Descend the plane from the top and locate lambda0.

        Raises:
            AlexlabGeometryError: (d2)/(d3) fail just below the top

        Returns:
            (float, str): lambda0 in the body's own coordinates (lambda0 - max X_{n+1} is
            kept in the diagnostics as lambda0_top), case in {"none", "d5", "d6"}
        """
        t0 = time.time()
        M = self.__M
        zMin, zMax = M.getRange()
        height = zMax - zMin
        lamL = zMax - height * np.arange(1, self.__steps + 1) / self.__steps
        prev = zMax
        bracket = None
        for ii, lam in enumerate(lamL):
            val, _, _ = self.normalizedGap(lam)
            if val <= 0.0:
                if ii == 0:
                    raise AlexlabGeometryError("Reflection conditions fail immediately below the top of %s" % M.getName())
                bracket = (float(lam), float(prev))
                break
            prev = lam
        if bracket is None:
            bracket = (zMin, float(lamL[-2]))
        lam0 = bisectRoot(lambda ll: self.normalizedGap(ll)[0], bracket[0], bracket[1], tol=self.__lambdaTol)
        val, boundary, zArg = self.normalizedGap(lam0)
        deviation = self.reflectionDeviation(lam0)
        if deviation <= self.__symmetryTol:
            case = "none"
        elif abs(float(M.nuLast(lam0))) <= self.__tangencyTol or boundary <= val + self.__tangencyTol:
            case = "d6"
        else:
            case = "d5"
        self.__diag = {
            "lambda0": lam0,
            "lambda0_top": lam0 - zMax,
            "case": case,
            "deviation": deviation,
            "plane_limit": boundary,
            "touch_z": zArg,
            "nu_last_at_plane": float(M.nuLast(lam0)),
            "scan_steps": self.__steps,
        }
        if self.__timing:
            logger.info("lambda0 search on %s completed in %.4f seconds", M.getName(), time.time() - t0)
        logger.debug("lambda0=%.12g case=%s deviation=%.3e", lam0, case, deviation)
        return lam0, case

    def localFramesAtContact(self, lam0, zBar, delta=None):
        """Local graphs at a d6 contact: v of M and u(t, y) = v(-t, y) of the reflected surface.

        Raises:
            AlexlabPreconditionError: the point is not a vertical tangency on the plane

        Returns:
            (ScalarField, ScalarField): u, v
        """
        M = self.__M
        nu = float(M.nuLast(zBar))
        if abs(nu) > self.__tangencyTol or abs(float(zBar) - float(lam0)) > 1.0e-6:
            raise AlexlabPreconditionError("No vertical tangency on the plane at z=%r (nu_last=%.3e, lambda0=%r)" % (zBar, nu, lam0))
        tp = TangencyPoint(M, zBar, delta=delta)
        vv = tp.getLocalGraph()
        uu = vv.reflected(axis=0, name="%s-reflected" % vv.getName())
        return uu, vv

    def partnerUniqueness(self, lam0, levels=64):
        """Smallest separation between distinct reflected-cap crossings of a vertical line."""
        M = self.__M
        zMax = M.getTop()
        capZ = np.linspace(lam0, zMax, levels + 2)[1:-1]
        sepMin = np.inf
        for rr in np.unique(M.rho(capZ)):
            zV = np.linspace(lam0, zMax, 2001)
            fV = M.q(zV) - rr * rr
            crossings = zV[:-1][np.sign(fV[:-1]) * np.sign(fV[1:]) < 0.0]
            if crossings.size > 1:
                sepMin = min(sepMin, float(np.min(np.diff(np.sort(crossings)))))
        return sepMin

    def __contactFields(self, lam0, tp, rpt):
        """Shrink the frame until tau_s < 1 and LC hold, then build the pairing field."""
        delta = 0.05 * self.__M.getDiameter()
        delta = min(delta, tp.delta)
        for _ in range(5):
            try:
                uu, vv = self.localFramesAtContact(lam0, tp.zBar, delta=1.02 * delta)
                tf = TauField(uu, vv, delta, timing=self.__timing, sCount=self.__kwargs.get("sCount", 128), yCount=self.__kwargs.get("yCount", 64))
                if tf.getMemberCount() == 0:
                    return tf
                if np.max(tf.getTauGradient()[:, 0]) < 1.0 and np.min(tf.getUtt()) >= -1.0e-9:
                    return tf
            except AlexlabError as e:
                logger.debug("Pairing field at delta=%.3e failed: %s", delta, str(e))
            delta *= 0.5
        rpt["delta_exhausted"] = delta
        return None

    def runMovingPlanes(self, curvatureFunction=None):
        """Full procedure with verdict.

        Returns:
            SymmetryVerdict: symmetric(lambda0, deviation), asymmetric(failure case, witness) or inconclusive;
            lambda0Top carries lambda0 measured from the top of M
        """
        verdict = self.__runProcedure(curvatureFunction)
        if verdict.lambda0 is not None:
            verdict.lambda0Top = float(verdict.lambda0) - self.__M.getRange()[1]
        return verdict

    def __runProcedure(self, curvatureFunction):
        M = self.__M
        lam0, case = self.findLambda0()
        diag = self.getDiagnostics()
        if case == "none":
            deviation = self.reflectionDeviation(lam0, samples=4000)
            outcome = "symmetric" if deviation <= self.__symmetryTol else "inconclusive"
            verdict = SymmetryVerdict(outcome, lambda0=lam0, deviation=deviation, case=case)
            verdict.diagnostics = diag
            return verdict
        mRpt = checkMainAssumption(M, curvatureFunction=curvatureFunction)
        diag["main_assumption"] = mRpt.getVerdict()
        if mRpt.fails():
            verdict = SymmetryVerdict("asymmetric", lambda0=lam0, deviation=diag["deviation"], case=case, failureCase="main-assumption-fails")
            verdict.witnesses = [wt.toDict() for wt in mRpt.getWitnesses()]
            verdict.diagnostics = diag
            return verdict
        if case == "d5":
            verdict = SymmetryVerdict("asymmetric", lambda0=lam0, deviation=diag["deviation"], case=case, failureCase="d5-mismatch")
            verdict.witnesses = [{"point": [float(M.rho(diag["touch_z"])), diag["touch_z"]], "margin": diag["plane_limit"], "note": "interior touching"}]
            verdict.diagnostics = diag
            return verdict
        # d6 contacts on the plane
        sep = self.partnerUniqueness(lam0)
        diag["partner_separation"] = sep
        if sep < self.__uniquenessTol:
            verdict = SymmetryVerdict("inconclusive", lambda0=lam0, deviation=diag["deviation"], case=case)
            verdict.diagnostics = dict(diag, reason="vertical partner not unique")
            return verdict
        contacts = [tp for tp in findTangencySet(M, tol=self.__tangencyTol) if abs(tp.zBar - lam0) <= 1.0e-6 or (tp.band and tp.band[0] - 1.0e-6 <= lam0 <= tp.band[1] + 1.0e-6)]
        if not contacts:
            contacts = [TangencyPoint(M, lam0)]
        prop1L = []
        reasons = []
        violated = None
        for tp in contacts:
            try:
                order, _ = contactOrder(tp)
            except (AlexlabDegenerateError, AlexlabOrderError) as e:
                reasons.append("contact order at z=%.6g: %s" % (tp.zBar, str(e)))
                continue
            if order == INFINITE:
                reasons.append("infinite-order contact at z=%.6g" % tp.zBar)
                continue
            lc = checkConditionLC(M, tangency=[tp])
            if not lc.holds():
                reasons.append("condition LC %s at z=%.6g" % (lc.getVerdict(), tp.zBar))
                continue
            info = {}
            tf = self.__contactFields(lam0, tp, info)
            if tf is None:
                reasons.append("no admissible frame size at z=%.6g" % tp.zBar)
                continue
            try:
                p1 = checkProp1Dichotomy(tf)
            except AlexlabPreconditionError as e:
                reasons.append(str(e))
                continue
            pD = p1.toDict()
            pD["z"] = tp.zBar
            prop1L.append(pD)
            if p1.getConclusion() == "empty":
                reasons.append("pairing region empty at z=%.6g" % tp.zBar)
            elif p1.getConclusion() == "prop1-violation" and violated is None:
                violated = (tp, p1)
        if violated is not None and not reasons:
            tp, p1 = violated
            verdict = SymmetryVerdict("asymmetric", lambda0=lam0, deviation=diag["deviation"], case=case, failureCase="d6-prop1-violation")
            verdict.witnesses = [{"point": tp.point.tolist(), "margin": p1.getFitted("ratio_min"), "note": "tau/tau_bar below c"}]
        else:
            verdict = SymmetryVerdict("inconclusive", lambda0=lam0, deviation=diag["deviation"], case=case)
            diag["reasons"] = reasons
        if prop1L:
            first = prop1L[0]["fitted_constants"]
            verdict.prop1 = {"tau_s_max": first.get("tau_s_max"), "L_tauhat_min": first.get("L_tauhat_min"), "ratio_min": first.get("ratio_min"), "contacts": prop1L}
        verdict.diagnostics = diag
        return verdict


def reflectAndCompare(M, lam, **kwargs):
    return MovingPlanes(M, **kwargs).reflectAndCompare(lam)


def findLambda0(M, **kwargs):
    return MovingPlanes(M, **kwargs).findLambda0()


def localFramesAtContact(M, lam0, zBar, **kwargs):
    return MovingPlanes(M, **kwargs).localFramesAtContact(lam0, zBar)


def runMovingPlanes(M, curvatureFunction=None, **kwargs):
    return MovingPlanes(M, **kwargs).runMovingPlanes(curvatureFunction=curvatureFunction)
