##
# File:    TauField.py
# Date:    12-Feb-2026
# Version: 0.001 Initial version
#
# Updates:
#  24-Feb-2026  implicit-function derivatives of t(s, y) replace grid differences
#   8-Mar-2026  mean-value gradient term by Gauss-Legendre quadrature
#  19-Mar-2026  manufactured contact pairs of even order
##
"""
The pairing region near a vertical-tangency contact.

For local graphs u (reflected surface) and v (surface) over a common frame the
pairing map t(s, y) solves u(t, y) = v(s, y) with 0 < t < s, and
tau(s, y) = s - t(s, y).  The linear operator

    L phi = a_ij(grad v) phi_ij + B_i phi_i

is assembled so that L tau = (H(u)(t, y) - H(v)(s, y)) / u_t holds identically;
the pairing inequality H(u)(t, y) <= H(v)(s, y) then reads L tau <= 0.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging
import math
import time

import numpy as np

from alexlab.api.CheckReports import LabReport
from alexlab.api.NumericUtils import bisectRoot, bisectRootArray
from alexlab.api.ScalarField import ScalarField
from alexlab.api.SurfaceCurvature import meanCurvatureCoefficients, meanCurvatureFromDerivatives, meanCurvatureGradient
from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabFrameError, AlexlabMembershipError, AlexlabPreconditionError

logger = logging.getLogger(__name__)


def _stack(first, rest):
    fA = np.asarray(first, dtype=np.float64)
    rA = np.asarray(rest, dtype=np.float64)
    return np.concatenate([fA[..., None], rA], axis=-1)


def implicitT(u, v, s, y, tol=1.0e-14):
    """Solve u(t, y) = v(s, y) for t in (0, s].

    Args:
        u (ScalarField): reflected local graph, u_t > 0
        v (ScalarField): local graph
        s (float): pairing abscissa
        y (array): transverse coordinates (may be empty)

    Raises:
        AlexlabMembershipError: (s, y) outside the pairing region

    Returns:
        float: t(s, y); equals s exactly when u(s, y) = v(s, y)
    """
    yV = np.atleast_1d(np.asarray(y, dtype=np.float64)) if np.size(y) else np.zeros(0)
    target = float(v.values(np.concatenate([[s], yV])))

    def gFunc(tt):
        return float(u.values(np.concatenate([[tt], yV]))) - target

    gs = gFunc(float(s))
    if gs == 0.0:
        return float(s)
    g0 = gFunc(0.0)
    if not (g0 < 0.0 < gs):
        raise AlexlabMembershipError("(s=%r, y=%r) lies outside the pairing region (g(0)=%.3e, g(s)=%.3e)" % (s, yV.tolist(), g0, gs))
    return bisectRoot(gFunc, 0.0, float(s), tol=tol)


def implicitTArray(u, v, sA, yA):
    """Vectorized pairing map over node stacks.

    Returns:
        (numpy.ndarray, numpy.ndarray): t values (NaN outside) and the membership mask
    """
    sA = np.asarray(sA, dtype=np.float64)
    yA = np.asarray(yA, dtype=np.float64)
    target = v.values(_stack(sA, yA))
    gS = u.values(_stack(sA, yA)) - target
    g0 = u.values(_stack(np.zeros_like(sA), yA)) - target
    member = (g0 < 0.0) & (gS > 0.0)
    equal = gS == 0.0
    tA = bisectRootArray(lambda tt: u.values(_stack(tt, yA)) - target, np.zeros_like(sA), sA, tol=1.0e-15, strict=False)
    tA = np.where(member, tA, np.nan)
    tA = np.where(equal, sA, tA)
    return tA, member | equal


def _mvtGradient(pV, PV, nA, nodes=8):
    """Integral over theta in [0, 1] of dH/dp(theta P + (1 - theta) p, N)."""
    xg, wg = np.polynomial.legendre.leggauss(nodes)
    acc = np.zeros_like(pV)
    for xx, ww in zip(xg, wg):
        th = 0.5 * (xx + 1.0)
        acc += 0.5 * ww * meanCurvatureGradient(th * PV + (1.0 - th) * pV, nA)
    return acc


def tDerivatives(uGrad, uHess, vGrad, vHess):
    """Gradient and Hessian of t(s, y) from u(t(s, y), y) = v(s, y).

    With J the Jacobian of (s, y) -> (t, y): grad t = (v_s, v_y - u_y)/u_t and
    hess t = (hess v - J^T hess u J)/u_t.
    """
    ut = uGrad[..., 0]
    nn = uGrad.shape[-1]
    tGrad = np.empty_like(vGrad)
    tGrad[..., 0] = vGrad[..., 0] / ut
    tGrad[..., 1:] = (vGrad[..., 1:] - uGrad[..., 1:]) / ut[..., None]
    jac = np.broadcast_to(np.eye(nn), uGrad.shape[:-1] + (nn, nn)).copy()
    jac[..., 0, :] = tGrad
    jtnj = np.einsum("...ki,...kl,...lj->...ij", jac, uHess, jac)
    tHess = (vHess - jtnj) / ut[..., None, None]
    return tGrad, 0.5 * (tHess + np.swapaxes(tHess, -1, -2))


def assembleLArray(uGrad, uHess, vGrad, vHess, tauGrad):
    """Coefficients of L at node stacks.

    Returns:
        dict: second_order a (..., n, n), first_order B (..., n), mvt c (..., n)
    """
    ut = uGrad[..., 0]
    if np.any(ut <= 0.0):
        raise AlexlabFrameError("Frame violates u_t > 0 at %d nodes" % int(np.count_nonzero(ut <= 0.0)))
    aA = meanCurvatureCoefficients(vGrad)
    cA = _mvtGradient(uGrad, vGrad, uHess)
    utt = uHess[..., 0, 0]
    utY = uHess[..., 0, 1:]
    tauS = tauGrad[..., 0]
    tauY = tauGrad[..., 1:]
    bA = np.empty_like(cA)
    bA[..., 0] = cA[..., 0] + (aA[..., 0, 0] * utt * (2.0 - tauS) + 2.0 * np.sum(aA[..., 0, 1:] * utY, axis=-1)) / ut
    aYY = aA[..., 1:, 1:]
    bA[..., 1:] = cA[..., 1:] + (
        2.0 * aA[..., 0, 1:] * (utt * (1.0 - tauS))[..., None]
        + 2.0 * np.einsum("...ab,...b->...a", aYY, utY)
        - utt[..., None] * np.einsum("...ab,...b->...a", aYY, tauY)
    ) / ut[..., None]
    return {"second_order": aA, "first_order": bA, "mvt": cA}


def applyL(coeffs, phiGrad, phiHess):
    return np.einsum("...ij,...ij->...", coeffs["second_order"], phiHess) + np.sum(coeffs["first_order"] * phiGrad, axis=-1)


def assembleL(u, v, s, y):
    """Coefficient record of L at one pairing node (s, y).

    Returns:
        dict: t, tau, tau gradient/Hessian, second_order (H_00, H_0a, H_ab block), first_order drift,
        L_tau and the right-hand side (H(u)(t, y) - H(v)(s, y))/u_t
    """
    yV = np.atleast_1d(np.asarray(y, dtype=np.float64)) if np.size(y) else np.zeros(0)
    tt = implicitT(u, v, s, yV)
    _, uG, uH = u.evaluateArray(np.concatenate([[tt], yV]))
    _, vG, vH = v.evaluateArray(np.concatenate([[s], yV]))
    if uG[0] <= 0.0:
        raise AlexlabFrameError("Frame violates u_t > 0 at (t=%r, y=%r)" % (tt, yV.tolist()))
    tG, tH = tDerivatives(uG, uH, vG, vH)
    tauG = -tG
    tauG[0] += 1.0
    tauH = -tH
    coeffs = assembleLArray(uG, uH, vG, vH, tauG)
    rhs = (float(meanCurvatureFromDerivatives(uG, uH)) - float(meanCurvatureFromDerivatives(vG, vH))) / uG[0]
    return {
        "t": tt,
        "tau": float(s) - tt,
        "tau_grad": tauG,
        "tau_hess": tauH,
        "second_order": coeffs["second_order"],
        "first_order": coeffs["first_order"],
        "mvt": coeffs["mvt"],
        "L_tau": float(applyL(coeffs, tauG, tauH)),
        "rhs": rhs,
    }


class TauField(object):
    """Sampled pairing map over {0 < s <= delta, |y_a| < yHalf} with the coefficients of L."""

    def __init__(self, u, v, delta, **kwargs):
        """Sample t, tau and L on the pairing grid.

        Args:
            u (ScalarField): reflected local graph
            v (ScalarField): local graph
            delta (float): s extent

        Keyword Args:
            sCount (int): s nodes (default: 128)
            yCount (int): nodes per transverse axis (default: 128 for n=2, 24 otherwise)
            yHalf (float): transverse half-width (default: delta)
            timing (bool): log elapsed time (default: False)
        """
        if u.getDim() != v.getDim():
            raise AlexlabArgumentError("Pair dimensions differ: %d vs %d" % (u.getDim(), v.getDim()))
        self.__u = u
        self.__v = v
        self.__dim = u.getDim()
        self.__delta = float(delta)
        self.__sCount = kwargs.get("sCount", 128)
        self.__yCount = kwargs.get("yCount", 128 if self.__dim == 2 else 24)
        self.__yHalf = float(kwargs.get("yHalf", self.__delta))
        self.__timing = kwargs.get("timing", False)
        self.__build()

    def __build(self):
        t0 = time.time()
        nn = self.__dim
        sAx = self.__delta * np.arange(1, self.__sCount + 1) / self.__sCount
        self.__sAxis = sAx
        yAxL = [np.linspace(-self.__yHalf, self.__yHalf, self.__yCount) * 0.98 for _ in range(nn - 1)]
        grids = np.meshgrid(sAx, *yAxL, indexing="ij")
        nodes = np.stack(grids, axis=-1)
        self.__nodes = nodes
        sA = nodes[..., 0]
        yA = nodes[..., 1:]
        tA, member = implicitTArray(self.__u, self.__v, sA, yA)
        self.__member = member
        self.__t = tA
        self.__tau = np.where(member, sA - tA, np.nan)
        self.__tauBar = sA
        #
        idx = np.nonzero(member)
        self.__memberIdx = idx
        mNodes = nodes[idx]
        mT = tA[idx]
        if mNodes.shape[0]:
            _, uG, uH = self.__u.evaluateArray(_stack(mT, mNodes[:, 1:]))
            _, vG, vH = self.__v.evaluateArray(mNodes)
            tG, tH = tDerivatives(uG, uH, vG, vH)
            tauG = -tG
            tauG[:, 0] += 1.0
            tauH = -tH
            self.__uG, self.__uH, self.__vG, self.__vH = uG, uH, vG, vH
            self.__tauG, self.__tauH = tauG, tauH
            self.__coeffs = assembleLArray(uG, uH, vG, vH, tauG)
            self.__lTau = applyL(self.__coeffs, tauG, tauH)
            self.__rhs = (meanCurvatureFromDerivatives(uG, uH) - meanCurvatureFromDerivatives(vG, vH)) / uG[:, 0]
        else:
            self.__coeffs = None
            self.__lTau = self.__rhs = np.zeros(0)
            self.__tauG = self.__tauH = self.__uH = np.zeros((0, nn))
        if self.__timing:
            logger.info("TauField with %d of %d pairing nodes built in %.4f seconds", mNodes.shape[0], member.size, time.time() - t0)

    def getDim(self):
        return self.__dim

    def getDelta(self):
        return self.__delta

    def getPair(self):
        return self.__u, self.__v

    def getMemberCount(self):
        return int(np.count_nonzero(self.__member))

    def getNodes(self):
        """Member nodes (m, n) as (s, y)."""
        return self.__nodes[self.__memberIdx]

    def getT(self):
        return self.__t[self.__memberIdx]

    def getTau(self):
        return self.__tau[self.__memberIdx]

    def getTauBar(self):
        return self.__tauBar[self.__memberIdx]

    def getTauGradient(self):
        return self.__tauG

    def getCoefficients(self):
        return self.__coeffs

    def getLTau(self):
        return self.__lTau

    def getIdentityResidual(self):
        """max |L tau - (H(u)(t, y) - H(v)(s, y))/u_t| over member nodes."""
        return float(np.max(np.abs(self.__lTau - self.__rhs))) if self.__lTau.size else 0.0

    def getUtt(self):
        return self.__uH[:, 0, 0] if self.__lTau.size else np.zeros(0)

    def applyBarrier(self, exponent=1.5):
        """L applied to s + s^exponent at member nodes."""
        if not self.__lTau.size:
            return np.zeros(0)
        sA = self.getNodes()[:, 0]
        gA = np.zeros_like(self.__tauG)
        hA = np.zeros_like(self.__tauH)
        gA[:, 0] = 1.0 + exponent * sA ** (exponent - 1.0)
        hA[:, 0, 0] = exponent * (exponent - 1.0) * sA ** (exponent - 2.0)
        return applyL(self.__coeffs, gA, hA)

    def fdTauResidual(self):
        """max |grid central difference of tau in s - implicit tau_s| over interior member nodes."""
        if self.__sCount < 3 or not self.__lTau.size:
            return 0.0
        ds = self.__sAxis[1] - self.__sAxis[0]
        tau = self.__tau
        fd = (tau[2:] - tau[:-2]) / (2.0 * ds)
        implicit = np.full(tau.shape, np.nan)
        implicit[self.__memberIdx] = self.__tauG[:, 0]
        diff = np.abs(fd - implicit[1:-1])
        return float(np.nanmax(diff)) if np.any(np.isfinite(diff)) else 0.0

    def ratioAt(self, s, y=None):
        """t(s, y)/s by a direct solve."""
        yV = np.zeros(self.__dim - 1) if y is None else y
        return implicitT(self.__u, self.__v, s, yV) / float(s)

    def toRows(self):
        """CSV rows (s, y.., tau, tau_bar, t) over member nodes."""
        nodes = self.getNodes()
        return [list(nd) + [float(ta), float(tb), float(tt)] for nd, ta, tb, tt in zip(nodes.tolist(), self.getTau(), self.getTauBar(), self.getT())]

    def csvHeader(self):
        return ["s"] + ["y%d" % (ii + 1) for ii in range(self.__dim - 1)] + ["tau", "tau_bar", "t"]


def checkProp1Dichotomy(tf, c=1.0e-3, eps=None, **kwargs):
    """Sub-checks of the boundary dichotomy on a pairing field.

    (i) tau_s < 1 on the pairing region; (ii) L(s + s^{3/2}) > 0 at nodes with s <= delta;
    (iii) tau/tau_bar >= c on O_eps = {s <= eps, |y| <= delta/2}, or a violation witness.
    L tau <= lTauTol is recorded as the pairing inequality.

    Args:
        tf (TauField): sampled pair
        c (float, optional): ratio constant. Defaults to 1e-3.
        eps (float, optional): O_eps extent. Defaults to delta/2.

    Keyword Args:
        lTauTol (float): tolerance on L tau (default: 1e-6)
        lcSlack (float): allowed negative u_tt (default: 1e-9)

    Raises:
        AlexlabPreconditionError: u_tt < 0 somewhere (Condition LC missing)

    Returns:
        LabReport: conclusion in {"identical", "empty", "prop1-violation", "prop1-consistent"}
    """
    lTauTol = kwargs.get("lTauTol", 1.0e-6)
    lcSlack = kwargs.get("lcSlack", 1.0e-9)
    delta = tf.getDelta()
    eps = 0.5 * delta if eps is None else float(eps)
    rpt = LabReport("prop1-dichotomy")
    rpt.setSamples("omega_plus_nodes", tf.getMemberCount())
    if tf.getMemberCount() == 0:
        rpt.setConclusion("empty")
        rpt.addHypothesis("omega-plus-nonempty", "fails", margin=0.0, note="pairing region is empty")
        return rpt
    utt = tf.getUtt()
    if np.min(utt) < -lcSlack:
        raise AlexlabPreconditionError("Condition LC missing: u_tt = %.3e < 0 on the pairing region" % float(np.min(utt)))
    tau = tf.getTau()
    nodes = tf.getNodes()
    if np.max(np.abs(tau)) <= 1.0e-12:
        rpt.setConclusion("identical")
        for hId in ("lemma1-tau_s<1", "barrier-L>0", "ratio>=c"):
            rpt.addHypothesis(hId, "holds", margin=0.0, note="identical pair")
        rpt.setFitted("c", 1.0)
        return rpt
    tauS = tf.getTauGradient()[:, 0]
    tauSMax = float(np.max(tauS))
    rpt.addHypothesis("lemma1-tau_s<1", "holds" if tauSMax < 1.0 else "fails", margin=1.0 - tauSMax)
    lBar = tf.applyBarrier(1.5)
    near = nodes[:, 0] <= delta
    lBarMin = float(np.min(lBar[near]))
    rpt.addHypothesis("barrier-L>0", "holds" if lBarMin > 0.0 else "fails", margin=lBarMin)
    lTau = tf.getLTau()
    lTauMax = float(np.max(lTau))
    rpt.addHypothesis("pairing-L_tau<=0", "holds" if lTauMax <= lTauTol else "fails", margin=lTauTol - lTauMax)
    oEps = (nodes[:, 0] <= eps) & (np.sqrt(np.sum(nodes[:, 1:] ** 2, axis=-1)) <= 0.5 * delta)
    rpt.setSamples("o_eps_nodes", int(np.count_nonzero(oEps)))
    if not np.any(oEps):
        rpt.addHypothesis("ratio>=c", "not-applicable", note="O_eps is empty")
        ratioMin = None
    else:
        ratio = tau[oEps] / tf.getTauBar()[oEps]
        kk = int(np.argmin(ratio))
        ratioMin = float(ratio[kk])
        rpt.addHypothesis("ratio>=c", "holds" if ratioMin >= c else "fails", margin=ratioMin - c, note="witness at %r" % nodes[oEps][kk].tolist())
    sMin = float(np.min(nodes[:, 0]))
    try:
        limitRatio = tf.ratioAt(sMin)
    except AlexlabMembershipError:
        limitRatio = None
    rpt.setFitted("tau_s_max", tauSMax)
    rpt.setFitted("L_tauhat_min", lBarMin)
    rpt.setFitted("L_tau_max", lTauMax)
    rpt.setFitted("ratio_min", ratioMin)
    rpt.setFitted("t_over_s_at_smin", limitRatio)
    rpt.setFitted("s_min", sMin)
    rpt.setFitted("identity_residual", tf.getIdentityResidual())
    rpt.setFitted("tau_fd_residual", tf.fdTauResidual())
    rpt.setFitted("c", c)
    rpt.setFitted("eps", eps)
    rpt.setConclusion("prop1-violation" if ratioMin is not None and ratioMin < c else "prop1-consistent")
    logger.debug("Prop-1 dichotomy: %s (tau_s max %.3e, L barrier min %.3e, ratio min %r)", rpt.getConclusion(), tauSMax, lBarMin, ratioMin)
    return rpt


def manufacturedContact(k=2, beta=1.0e-8, n=2, delta=0.128):
    """Local pair v(t, y) = t^k/k! + |y|^2/2 - beta t^{k+1}, u(t, y) = v(-t, y) for even k.

    The pair has contact order k, u >= v for t > 0 and the pairing inequality is
    violated only at order beta.

    Returns:
        (ScalarField, ScalarField): u, v on the box (-1.01 delta, 1.01 delta)^n
    """
    kk = int(k)
    if kk < 2 or kk % 2:
        raise AlexlabArgumentError("Manufactured contact order must be even and >= 2 (got %r)" % k)
    bb = float(beta)
    fk = float(math.factorial(kk))
    fk1 = float(math.factorial(kk - 1))
    fk2 = float(math.factorial(kk - 2))
    half = 1.01 * float(delta)

    def func(pA):
        tA = pA[..., 0]
        return tA ** kk / fk + 0.5 * np.sum(pA[..., 1:] ** 2, axis=-1) - bb * tA ** (kk + 1)

    def grad(pA):
        gA = np.array(pA, dtype=np.float64, copy=True)
        tA = pA[..., 0]
        gA[..., 0] = tA ** (kk - 1) / fk1 - (kk + 1) * bb * tA ** kk
        return gA

    def hess(pA):
        hA = np.broadcast_to(np.eye(n), pA.shape[:-1] + (n, n)).copy()
        tA = pA[..., 0]
        hA[..., 0, 0] = tA ** (kk - 2) / fk2 - (kk + 1) * kk * bb * tA ** (kk - 1)
        return hA

    vv = ScalarField(func, n, box=[(-half, half)] * n, gradient=grad, hessian=hess, name="manufactured-v")
    uu = vv.reflected(axis=0, name="manufactured-u")
    return uu, vv
