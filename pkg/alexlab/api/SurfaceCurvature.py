##
# File:    SurfaceCurvature.py
# Date:    4-Feb-2026
# Version: 0.001 Initial version
#
# Updates:
#  17-Feb-2026  closed-form second fundamental form of a graph
#  28-Feb-2026  elementary symmetric functions and cone membership
#  15-Mar-2026  g-property verification over curvature samples
##
"""
Curvature algebra for graphs and bodies of revolution: mean curvature, second
fundamental form, principal curvatures, elementary symmetric functions sigma_m,
g_m = sigma_m^(1/m) and the cones Gamma_m.

Graph curvatures are taken with respect to the upward normal (-grad u, 1)/w,
w = sqrt(1 + |grad u|^2).  Callers orient patches so that upward is the inner
normal; the unit sphere then has all curvatures +1.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging

import numpy as np

from alexlab.api.CheckReports import ConditionReport
from alexlab.api.NumericUtils import SymMatrix, eigSym, fdGradientHessian
from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabConeError, AlexlabDomainError, AlexlabError, AlexlabPoleError

logger = logging.getLogger(__name__)


class CurvatureData(object):
    """Curvature record at a surface point: inner unit normal, ascending principal
    curvatures, mean curvature and the second fundamental form."""

    def __init__(self, point, normal, curvatures, secondForm):
        self.point = np.asarray(point, dtype=np.float64)
        self.normal = np.asarray(normal, dtype=np.float64)
        self.curvatures = np.sort(np.asarray(curvatures, dtype=np.float64))
        self.secondForm = secondForm if isinstance(secondForm, SymMatrix) else SymMatrix.fromArray(secondForm)
        self.meanCurvature = float(np.mean(self.curvatures))

    def getDim(self):
        return self.curvatures.size

    def toDict(self):
        return {
            "point": self.point.tolist(),
            "normal": self.normal.tolist(),
            "curvatures": self.curvatures.tolist(),
            "mean_curvature": self.meanCurvature,
        }

    def __repr__(self):
        return "CurvatureData(H=%.12g, k=%r)" % (self.meanCurvature, self.curvatures.tolist())


def meanCurvatureFromDerivatives(p, N):
    """H(p, N) = (1/n)[tr N / w - p^T N p / w^3] for stacks p (..., n), N (..., n, n)."""
    pA = np.asarray(p, dtype=np.float64)
    nA = np.asarray(N, dtype=np.float64)
    nn = pA.shape[-1]
    w2 = 1.0 + np.sum(pA * pA, axis=-1)
    ww = np.sqrt(w2)
    trN = np.trace(nA, axis1=-2, axis2=-1)
    pNp = np.einsum("...i,...ij,...j->...", pA, nA, pA)
    return (trN / ww - pNp / (ww * w2)) / nn


def meanCurvatureCoefficients(p):
    """Coefficients a_ij(p) = (1/n)(delta_ij/w - p_i p_j/w^3) of the linear map N -> H(p, N)."""
    pA = np.asarray(p, dtype=np.float64)
    nn = pA.shape[-1]
    w2 = 1.0 + np.sum(pA * pA, axis=-1)
    ww = np.sqrt(w2)
    eye = np.eye(nn)
    return (eye / ww[..., None, None] - pA[..., :, None] * pA[..., None, :] / (ww * w2)[..., None, None]) / nn


def meanCurvatureGradient(p, N):
    """Partial derivatives dH/dp_k = (1/n)[-tr N p_k/w^3 - 2 (N p)_k/w^3 + 3 p^T N p p_k/w^5]."""
    pA = np.asarray(p, dtype=np.float64)
    nA = np.asarray(N, dtype=np.float64)
    nn = pA.shape[-1]
    w2 = 1.0 + np.sum(pA * pA, axis=-1)
    w3 = w2 * np.sqrt(w2)
    w5 = w3 * w2
    trN = np.trace(nA, axis1=-2, axis2=-1)
    nP = np.einsum("...ij,...j->...i", nA, pA)
    pNp = np.einsum("...i,...i->...", pA, nP)
    return (-(trN / w3)[..., None] * pA - 2.0 * nP / w3[..., None] + (3.0 * pNp / w5)[..., None] * pA) / nn


def secondFundamentalFormFromDerivatives(p, N):
    """A_il = (1/w){N_il - p_i (Np)_l c - (Np)_i p_l c + p^T N p p_i p_l c^2}, c = 1/(w(1+w))."""
    pA = np.asarray(p, dtype=np.float64)
    nA = np.asarray(N, dtype=np.float64)
    ww = np.sqrt(1.0 + np.sum(pA * pA, axis=-1))
    cc = 1.0 / (ww * (1.0 + ww))
    nP = np.einsum("...ij,...j->...i", nA, pA)
    pNp = np.einsum("...i,...i->...", pA, nP)
    outer = pA[..., :, None] * nP[..., None, :]
    aA = nA - cc[..., None, None] * (outer + np.swapaxes(outer, -1, -2)) + (cc * cc * pNp)[..., None, None] * pA[..., :, None] * pA[..., None, :]
    aA = aA / ww[..., None, None]
    return 0.5 * (aA + np.swapaxes(aA, -1, -2))


def meanCurvatureGraph(u, x):
    """Mean curvature of the graph of u at an interior point x.

    Args:
        u (ScalarField): graph function
        x (array): interior point

    Raises:
        AlexlabDomainError: x not interior to the domain of u

    Returns:
        float: H with respect to the upward normal
    """
    _, gV, hM = u.evaluate(x)
    return float(meanCurvatureFromDerivatives(gV, hM.toArray()))


def secondFundamentalForm(u, x):
    """Second fundamental form of the graph of u at x as a SymMatrix."""
    _, gV, hM = u.evaluate(x)
    return SymMatrix.fromArray(secondFundamentalFormFromDerivatives(gV, hM.toArray()))


def principalCurvaturesGraph(u, x):
    """Ascending principal curvatures of the graph of u at x."""
    eigVals, _ = eigSym(secondFundamentalForm(u, x))
    return eigVals


def graphCurvatureData(u, x, normalSign=1.0):
    """CurvatureData for the graph point (x, u(x)) in graph coordinates."""
    fV, gV, hM = u.evaluate(x)
    aM = SymMatrix.fromArray(secondFundamentalFormFromDerivatives(gV, hM.toArray()))
    eigVals, _ = eigSym(aM)
    ww = np.sqrt(1.0 + float(gV @ gV))
    normal = np.concatenate([-gV / ww, [1.0 / ww]]) * normalSign
    return CurvatureData(np.concatenate([np.asarray(x, dtype=np.float64), [fV]]), normal, eigVals, aM)


def revolutionPrincipalCurvatures(q, dq, d2q):
    """Meridian and parallel curvatures of a body of revolution |x'|^2 = q(z).

    With D = 4q + q'^2 these are 2(q'^2 - 2 q q'')/D^(3/2) and 2/sqrt(D), equal to
    -rho''/(1+rho'^2)^(3/2) and 1/(rho sqrt(1+rho'^2)) away from the poles.
    """
    qA, dqA, d2qA = (np.asarray(vl, dtype=np.float64) for vl in (q, dq, d2q))
    dD = 4.0 * qA + dqA * dqA
    kMer = 2.0 * (dqA * dqA - 2.0 * qA * d2qA) / dD ** 1.5
    kPar = 2.0 / np.sqrt(dD)
    return kMer, kPar


def revolutionCurvatures(p, z):
    """CurvatureData on the representative meridian of a RevolutionProfile at height z.

    Args:
        p (RevolutionProfile): body of revolution
        z (float): height, interior and outside the pole windows

    Raises:
        AlexlabPoleError: z inside a pole window (use p.curvatureAt for pole patches)
        AlexlabDomainError: z outside the profile range

    Returns:
        CurvatureData: meridian curvature once, parallel curvature with multiplicity n - 1
    """
    zMin, zMax = p.getRange()
    zz = float(z)
    if not zMin < zz < zMax:
        raise AlexlabDomainError("Height %r outside profile range (%r, %r)" % (zz, zMin, zMax))
    if zz - zMin < p.getPoleWindow() or zMax - zz < p.getPoleWindow() or p.rho(zz) <= p.getPoleWindow():
        raise AlexlabPoleError("Height %r lies in a pole window of %s" % (zz, p.getName()))
    nn = p.getDim()
    qV, dqV, d2qV = p.qDerivatives(zz)
    kMer, kPar = revolutionPrincipalCurvatures(qV, dqV, d2qV)
    kV = np.array([float(kMer)] + [float(kPar)] * (nn - 1))
    return CurvatureData(p.pointAt(zz), p.normalAt(zz), kV, SymMatrix.fromArray(np.diag(kV)))


def sigmaM(k, m):
    """Elementary symmetric function sigma_m of the entries of k.

    Computed from the coefficients of prod_i (1 + k_i x) by the O(n m) recurrence.

    Raises:
        AlexlabArgumentError: m outside 1..n
    """
    kV = np.asarray(k, dtype=np.float64).ravel()
    if not 1 <= int(m) <= kV.size:
        raise AlexlabArgumentError("sigma_m requires 1 <= m <= %d (got %r)" % (kV.size, m))
    eV = np.zeros(int(m) + 1)
    eV[0] = 1.0
    for kv in kV:
        eV[1:] = eV[1:] + kv * eV[:-1]
    return float(eV[int(m)])


def sigmaAll(k):
    """All sigma_0..sigma_n of k."""
    kV = np.asarray(k, dtype=np.float64).ravel()
    eV = np.zeros(kV.size + 1)
    eV[0] = 1.0
    for kv in kV:
        eV[1:] = eV[1:] + kv * eV[:-1]
    return eV


def gammaMMember(k, m):
    """True iff sigma_j(k) > 0 for every j <= m (the open cone Gamma_m)."""
    kV = np.asarray(k, dtype=np.float64).ravel()
    if not 1 <= int(m) <= kV.size:
        raise AlexlabArgumentError("Gamma_m requires 1 <= m <= %d (got %r)" % (kV.size, m))
    return bool(np.all(sigmaAll(kV)[1 : int(m) + 1] > 0.0))


def gM(k, m):
    """g_m(k) = sigma_m(k)^(1/m) on Gamma_m.

    Raises:
        AlexlabConeError: k outside Gamma_m
    """
    if not gammaMMember(k, m):
        raise AlexlabConeError("Curvature vector %r lies outside Gamma_%d" % (np.asarray(k).tolist(), m))
    return float(sigmaM(k, m) ** (1.0 / int(m)))


def verifyGProperties(g, samples, **kwargs):
    """Check monotonicity and concavity of a curvature function on sample vectors.

    Args:
        g (callable): symmetric function of a curvature vector
        samples (list): curvature vectors inside the domain of g

    Keyword Args:
        hessianTol (float): allowed largest Hessian eigenvalue (default: 1e-6)
        step (float): finite-difference step (default: 2e-4)
        name (str): label for the report (default: "g-properties")

    Raises:
        AlexlabDomainError: g not evaluable on the stencil around a sample

    Returns:
        ConditionReport: holds when every sample passes, otherwise fails with one witness per violation
    """
    hessianTol = kwargs.get("hessianTol", 1.0e-6)
    step = kwargs.get("step", 2.0e-4)
    rpt = ConditionReport(kwargs.get("name", "g-properties"))
    maxEig = -np.inf
    minGrad = np.inf
    for kV in samples:
        kV = np.asarray(kV, dtype=np.float64)
        try:
            _, gV, hM = fdGradientHessian(g, kV, h=step)
        except (AlexlabError, ValueError, ArithmeticError) as e:
            raise AlexlabDomainError("Curvature function not evaluable near sample %r: %s" % (kV.tolist(), str(e)))
        eigVals, _ = eigSym(hM)
        maxEig = max(maxEig, float(eigVals[-1]))
        minGrad = min(minGrad, float(np.min(gV)))
        if np.min(gV) <= 0.0:
            rpt.addWitness(kV, float(np.min(gV)), note="non-positive partial derivative")
        if eigVals[-1] > hessianTol:
            rpt.addWitness(kV, float(eigVals[-1]), note="positive Hessian direction")
    rpt.setResolution(samples=len(samples), step=step, hessian_tol=hessianTol)
    rpt.setDetail("min_partial", minGrad)
    rpt.setDetail("max_hessian_eigenvalue", maxEig)
    rpt.setVerdict("fails" if rpt.getWitnesses() else "holds")
    logger.debug("g-property check over %d samples: %s", len(samples), rpt.getVerdict())
    return rpt
