##
# File:    ComparisonPrinciple.py
# Date:    23-Feb-2026
# Version: 0.001 Initial version
#
# Updates:
#   4-Mar-2026  custom operators with a sampled ellipticity test
#  18-Mar-2026  boundary-descent variant for convex-in-t instances
##
"""
Comparison instances u >= v on Omega = {0 < t < d, |y| < d} related by the
pairing condition

    u(t, y) = v(s, y)  implies  F(u)(t, y) <= F(v)(s, y),

and the checks of the resulting strong-maximum-principle variant: either u > v
throughout Omega or u and v coincide.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging
import time

import numpy as np

from alexlab.api.CheckReports import LabReport
from alexlab.api.NumericUtils import bisectRootArray
from alexlab.api.SurfaceConditions import INFINITE, contactOrder
from alexlab.api.SurfaceCurvature import meanCurvatureFromDerivatives
from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabDegenerateError, AlexlabError, AlexlabInstanceError, AlexlabOrderError

logger = logging.getLogger(__name__)

OPERATORS = ("mean-curvature", "laplacian")


def operatorValues(operator, val, grad, hess):
    """F(u, grad u, hess u) over stacks of states."""
    if operator == "mean-curvature":
        return meanCurvatureFromDerivatives(grad, hess)
    if operator == "laplacian":
        return np.trace(hess, axis1=-2, axis2=-1)
    return np.asarray(operator(val, grad, hess), dtype=np.float64)


def ellipticityMargins(operator, val, grad, hess, step=1.0e-6):
    """Smallest eigenvalue of dF/dN at each sampled state (central differences in N)."""
    nn = grad.shape[-1]
    dF = np.zeros(hess.shape)
    for ii in range(nn):
        for jj in range(ii, nn):
            eE = np.zeros((nn, nn))
            eE[ii, jj] = eE[jj, ii] = 1.0
            fp = operatorValues(operator, val, grad, hess + step * eE)
            fm = operatorValues(operator, val, grad, hess - step * eE)
            der = (fp - fm) / (2.0 * step)
            if ii == jj:
                dF[..., ii, ii] = der
            else:
                dF[..., ii, jj] = dF[..., jj, ii] = 0.5 * der
    return np.linalg.eigvalsh(dF)[..., 0]


class ComparisonInstance(object):
    """Pair of local graphs on Omega with an elliptic operator tag."""

    def __init__(self, u, v, operator="mean-curvature", **kwargs):
        """
        Args:
            u (ScalarField): upper function
            v (ScalarField): lower function
            operator (str or callable): "mean-curvature", "laplacian" or F(val, grad, hess). Defaults to "mean-curvature".

        Keyword Args:
            extent (float): half-width d of Omega (default: 1.0)
            tCount (int): t nodes (default: 48 for n=2, 20 otherwise)
            yCount (int): nodes per y axis (default: tCount)
            name (str): label (default: "instance")
        """
        if u.getDim() != v.getDim():
            raise AlexlabArgumentError("Instance dimensions differ: %d vs %d" % (u.getDim(), v.getDim()))
        if not (callable(operator) or operator in OPERATORS):
            raise AlexlabArgumentError("Unknown operator %r" % (operator,))
        self.__u = u
        self.__v = v
        self.__operator = operator
        self.__dim = u.getDim()
        self.__extent = float(kwargs.get("extent", 1.0))
        self.__tCount = kwargs.get("tCount", 48 if self.__dim == 2 else 20)
        self.__yCount = kwargs.get("yCount", self.__tCount)
        self.__name = kwargs.get("name", "instance")
        self.__nodes = None

    def getPair(self):
        return self.__u, self.__v

    def getDim(self):
        return self.__dim

    def getExtent(self):
        return self.__extent

    def getOperator(self):
        return self.__operator

    def getOperatorName(self):
        return self.__operator if isinstance(self.__operator, str) else "custom"

    def getName(self):
        return self.__name

    def getNodes(self):
        """Interior sample nodes (m, n) of Omega as (t, y)."""
        if self.__nodes is None:
            dd = self.__extent
            tAx = dd * np.arange(1, self.__tCount + 1) / (self.__tCount + 1)
            yAx = np.linspace(-dd, dd, self.__yCount + 2)[1:-1]
            grids = np.meshgrid(tAx, *([yAx] * (self.__dim - 1)), indexing="ij")
            nodes = np.stack(grids, axis=-1).reshape(-1, self.__dim)
            keep = np.sum(nodes[:, 1:] ** 2, axis=-1) < dd * dd
            self.__nodes = nodes[keep]
        return self.__nodes

    def operatorAt(self, field, points):
        val, grad, hess = field.evaluateArray(points)
        return operatorValues(self.__operator, val, grad, hess)

    def pairing(self, tol=1.0e-8):
        """Solve u(t, y) = v(s, y) over the sample nodes (s, y) with t in [0, s].

        Raises:
            AlexlabInstanceError: a solved t does not reproduce the level v(s, y)

        Returns:
            (numpy.ndarray, numpy.ndarray, numpy.ndarray): paired nodes (s, y), t values and
            the pairing margins F(v)(s, y) - F(u)(t, y)
        """
        nodes = self.getNodes()
        sA = nodes[:, 0]
        yA = nodes[:, 1:]
        target = self.__v.values(nodes)

        def gFunc(tt):
            return self.__u.values(np.concatenate([tt[:, None], yA], axis=-1)) - target

        tA = bisectRootArray(gFunc, np.zeros_like(sA), sA, tol=1.0e-15, strict=False)
        ok = np.isfinite(tA) & (tA > 0.0)
        if not np.any(ok):
            return np.zeros((0, self.__dim)), np.zeros(0), np.zeros(0)
        pNodes = nodes[ok]
        tV = tA[ok]
        uPts = np.concatenate([tV[:, None], pNodes[:, 1:]], axis=-1)
        resid = np.abs(self.__u.values(uPts) - target[ok])
        if np.max(resid) > tol:
            kk = int(np.argmax(resid))
            raise AlexlabInstanceError("Pairing solve at (s, y)=%r misses the level by %.3e" % (pNodes[kk].tolist(), float(resid[kk])))
        margins = self.operatorAt(self.__v, pNodes) - self.operatorAt(self.__u, uPts)
        return pNodes, tV, margins

    def __repr__(self):
        return "ComparisonInstance(%s, n=%d, %s)" % (self.__name, self.__dim, self.getOperatorName())


def _instanceHypotheses(ci, rpt, tol):
    """Sampled u >= v, max(u_t, v_t) > 0, ellipticity and the pairing inequality."""
    uu, vv = ci.getPair()
    nodes = ci.getNodes()
    uVal, uG, uH = uu.evaluateArray(nodes)
    vVal, vG, vH = vv.evaluateArray(nodes)
    diff = uVal - vVal
    kk = int(np.argmin(diff))
    rpt.addHypothesis("u>=v", "holds" if diff[kk] >= -tol else "fails", margin=float(diff[kk]), note="min at %r" % nodes[kk].tolist())
    slope = np.maximum(uG[:, 0], vG[:, 0])
    kk = int(np.argmin(slope))
    rpt.addHypothesis("max(u_t,v_t)>0", "holds" if slope[kk] > 0.0 else "fails", margin=float(slope[kk]), note="min at %r" % nodes[kk].tolist())
    ell = min(float(np.min(ellipticityMargins(ci.getOperator(), uVal, uG, uH))), float(np.min(ellipticityMargins(ci.getOperator(), vVal, vG, vH))))
    rpt.addHypothesis("elliptic", "holds" if ell > 0.0 else "fails", margin=ell)
    pNodes, _, margins = ci.pairing()
    rpt.setSamples("paired_nodes", pNodes.shape[0])
    if margins.size:
        kk = int(np.argmin(margins))
        rpt.addHypothesis("pairing", "holds" if margins[kk] >= -tol else "fails", margin=float(margins[kk]), note="min at %r" % pNodes[kk].tolist())
    else:
        rpt.addHypothesis("pairing", "not-applicable", note="no node is paired")
    return diff


def trichotomyCheck(ci, **kwargs):
    """Either u > v on Omega or u = v on Omega.

    Keyword Args:
        touchTol (float): u - v below which a node is a touching point (default: 1e-12)
        identityTol (float): max |u - v| accepted as identical (default: 1e-8)
        hypothesisTol (float): slack on sampled hypotheses (default: 1e-10)
        ballRadius (float): neighborhood checked around a touching point (default: extent/4)

    Raises:
        AlexlabInstanceError: the pairing solve is inconsistent

    Returns:
        LabReport: conclusion in {"strictly-greater", "identical", "counterexample-witness", "hypothesis-failure"}
    """
    t0 = time.time()
    touchTol = kwargs.get("touchTol", 1.0e-12)
    identityTol = kwargs.get("identityTol", 1.0e-8)
    hypTol = kwargs.get("hypothesisTol", 1.0e-10)
    radius = kwargs.get("ballRadius", 0.25 * ci.getExtent())
    rpt = LabReport("trichotomy", anchor="strong maximum principle variant: u > v or u = v")
    nodes = ci.getNodes()
    rpt.setSamples("nodes", nodes.shape[0])
    diff = _instanceHypotheses(ci, rpt, hypTol)
    rpt.setFitted("min_difference", float(np.min(diff)))
    rpt.setFitted("max_difference", float(np.max(np.abs(diff))))
    if rpt.brokenHypotheses():
        rpt.setConclusion("hypothesis-failure")
        return rpt
    touching = np.nonzero(diff <= touchTol)[0]
    if touching.size == 0:
        rpt.setConclusion("strictly-greater")
    else:
        pp = nodes[touching[0]]
        ball = np.sqrt(np.sum((nodes - pp) ** 2, axis=-1)) <= radius
        ballResid = float(np.max(np.abs(diff[ball])))
        fullResid = float(np.max(np.abs(diff)))
        rpt.setFitted("touch_point", pp.tolist())
        rpt.setFitted("ball_residual", ballResid)
        rpt.setFitted("residual", fullResid)
        if ballResid <= identityTol and fullResid <= identityTol:
            rpt.setConclusion("identical")
        else:
            kk = int(np.argmax(np.abs(diff)))
            rpt.setConclusion("counterexample-witness")
            rpt.setFitted("witness", {"touch": pp.tolist(), "separated": nodes[kk].tolist(), "difference": float(diff[kk])})
            logger.info("Trichotomy witness on %s: touching at %r, u - v = %.3e at %r", ci.getName(), pp.tolist(), float(diff[kk]), nodes[kk].tolist())
    if kwargs.get("timing", False):
        logger.info("trichotomyCheck on %s completed in %.4f seconds", ci.getName(), time.time() - t0)
    logger.debug("Trichotomy on %s: %s", ci.getName(), rpt.getConclusion())
    return rpt


def boundaryDescentCheck(ci, omegaRadius, **kwargs):
    """Instances with u_tt >= 0 and v_t(0, y) < 0 on |y| = omegaRadius must have every
    t-derivative of order >= 2 of u vanish at the origin.

    Keyword Args:
        tSamples (array): decreasing t samples for the order fit (default: 24 geometric samples below extent/4)
        circleCount (int): samples on |y| = omegaRadius for n = 3 (default: 64)
        hypothesisTol (float): slack on sampled hypotheses (default: 1e-10)

    Returns:
        LabReport: conclusion in {"t-derivatives-vanish", "hypothesis-failure", "counterexample-witness"}
    """
    hypTol = kwargs.get("hypothesisTol", 1.0e-10)
    nn = ci.getDim()
    rr = float(omegaRadius)
    if not 0.0 < rr < ci.getExtent():
        raise AlexlabArgumentError("omega radius must lie in (0, extent)")
    uu, vv = ci.getPair()
    rpt = LabReport("boundary-descent", anchor="convex-in-t instances descending on the boundary of omega vanish to infinite order")
    nodes = ci.getNodes()
    _, _, uH = uu.evaluateArray(nodes)
    utt = uH[:, 0, 0]
    kk = int(np.argmin(utt))
    rpt.addHypothesis("u_tt>=0", "holds" if utt[kk] >= -hypTol else "fails", margin=float(utt[kk]), note="min at %r" % nodes[kk].tolist())
    if nn == 2:
        yPts = np.array([[-rr], [rr]])
    else:
        count = kwargs.get("circleCount", 64)
        ang = 2.0 * np.pi * np.arange(count) / count
        yPts = rr * np.stack([np.cos(ang), np.sin(ang)] + [np.zeros(count)] * (nn - 3), axis=-1)
    try:
        _, vG, _ = vv.evaluateArray(np.concatenate([np.zeros((yPts.shape[0], 1)), yPts], axis=-1))
        vt = vG[:, 0]
        kk = int(np.argmax(vt))
        rpt.addHypothesis("v_t<0-on-boundary-of-omega", "holds" if vt[kk] < 0.0 else "fails", margin=float(-vt[kk]), note="max at y=%r" % yPts[kk].tolist())
    except AlexlabError as e:
        rpt.addHypothesis("v_t<0-on-boundary-of-omega", "inconclusive", note=str(e))
    diff = uu.values(nodes) - vv.values(nodes)
    rpt.addHypothesis("u>=v", "holds" if np.min(diff) >= -hypTol else "fails", margin=float(np.min(diff)))
    _, _, margins = ci.pairing()
    if margins.size:
        rpt.addHypothesis("pairing", "holds" if np.min(margins) >= -hypTol else "fails", margin=float(np.min(margins)))
    else:
        rpt.addHypothesis("pairing", "not-applicable", note="no node is paired")
    #
    origin = np.zeros(nn)
    u0 = float(uu.values(origin))
    _, g0, _ = uu.evaluateArray(origin)
    ut0 = float(g0[0])
    yZero = np.zeros(nn - 1)

    def remainder(tt):
        return float(uu.values(np.concatenate([[tt], yZero]))) - u0 - ut0 * tt

    tV = kwargs.get("tSamples", np.geomspace(0.25 * ci.getExtent(), 1.0e-3 * ci.getExtent(), 24))
    try:
        order, diag = contactOrder(remainder, tSamples=tV)
    except AlexlabDegenerateError:
        order, diag = INFINITE, {"slope": np.inf}
    except AlexlabOrderError as e:
        order, diag = None, {"error": str(e)}
    rpt.setFitted("u_t_origin", ut0)
    rpt.setFitted("t_order", order)
    rpt.setFitted("slope", diag.get("slope"))
    if order == INFINITE:
        rpt.setConclusion("t-derivatives-vanish")
    elif rpt.brokenHypotheses():
        rpt.setConclusion("hypothesis-failure")
    elif order is None:
        rpt.setConclusion("inconclusive")
    else:
        rpt.setConclusion("counterexample-witness")
        logger.info("Boundary-descent witness on %s: finite t-order %r with all hypotheses sampled", ci.getName(), order)
    logger.debug("Boundary descent on %s: %s (order %r)", ci.getName(), rpt.getConclusion(), order)
    return rpt
