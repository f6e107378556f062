##
# File:    InvariantFunction.py
# Date:    9-Mar-2026
# Version: 0.001 Initial version
#
# Updates:
#  20-Mar-2026  square-root gradient bound for nonnegative fields
##
"""
Checks on orthogonally invariant functions of symmetric matrices and on nonnegative fields.

For G(O^T N O) = G(N), the first-row quantity h(e) = 2 sum_a G_0a(N) N_0a, with
e = (N_01, ..., N_0(n-1)) and the other entries held fixed, is even in e and
vanishes at e = 0, hence |h(e)| <= C |e|^2.  Here G_0a is half the derivative of G
along the symmetric perturbation E_0a + E_a0, so that G = trace(N^2) gives h = 4|e|^2.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging

import numpy as np
from scipy.stats import special_ortho_group

from alexlab.api.CheckReports import LabReport
from alexlab.api.NumericUtils import loglogSlope
from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabInputError, AlexlabPreconditionError

logger = logging.getLogger(__name__)


def traceG(nA):
    return np.trace(nA, axis1=-2, axis2=-1)


def traceSquareG(nA):
    return np.sum(nA * nA, axis=(-2, -1))


def sigma2G(nA):
    lam = np.linalg.eigvalsh(nA)
    s1 = np.sum(lam, axis=-1)
    return 0.5 * (s1 * s1 - np.sum(lam * lam, axis=-1))


INVARIANT_FUNCTIONS = {"trace": traceG, "trace-square": traceSquareG, "sigma2": sigma2G}


def _randomSymmetric(rng, count, order, norm):
    aA = rng.uniform(-1.0, 1.0, size=(count, order, order))
    aA = 0.5 * (aA + np.swapaxes(aA, -1, -2))
    fro = np.linalg.norm(aA, axis=(-2, -1))
    return aA * (norm / np.maximum(fro, 1.0e-300))[:, None, None]


def checkInvariance(G, order, rng, rotations=8, tol=1.0e-9):
    """Spot check G(O^T N O) = G(N) on random rotations.

    Raises:
        AlexlabInputError: the discrepancy exceeds tol relative to max(1, |G|)

    Returns:
        float: worst relative discrepancy
    """
    nA = _randomSymmetric(rng, 6, order, 0.9)
    oA = special_ortho_group.rvs(dim=order, size=rotations, random_state=rng)
    oA = np.asarray(oA).reshape(rotations, order, order)
    base = np.asarray(G(nA), dtype=np.float64)
    rot = np.einsum("rji,sjk,rkl->rsil", oA, nA, oA)
    disc = np.abs(np.asarray(G(rot), dtype=np.float64) - base[None, :]) / np.maximum(1.0, np.abs(base))[None, :]
    worst = float(np.max(disc))
    if worst > tol:
        raise AlexlabInputError("G is not orthogonally invariant (discrepancy %.3e)" % worst)
    return worst


def firstRowQuantity(G, nA, step=1.0e-6):
    """h = 2 sum_a G_0a(N) N_0a for a stack of symmetric matrices (..., n, n)."""
    nA = np.asarray(nA, dtype=np.float64)
    order = nA.shape[-1]
    hV = np.zeros(nA.shape[:-2])
    for aa in range(1, order):
        eA = np.zeros((order, order))
        eA[0, aa] = eA[aa, 0] = 1.0
        g0a = 0.25 * (np.asarray(G(nA + step * eA), dtype=np.float64) - np.asarray(G(nA - step * eA), dtype=np.float64)) / step
        hV = hV + 2.0 * g0a * nA[..., 0, aa]
    return hV


def invariantGBound(G, order=3, **kwargs):
    """Evenness and quadratic vanishing of h(e) for an orthogonally invariant G.

    Args:
        G (callable or str): matrix function vectorized over (..., n, n), or a name in INVARIANT_FUNCTIONS
        order (int, optional): matrix order n. Defaults to 3.

    Keyword Args:
        seed (int): sampling seed (default: 0)
        bases (int): random matrices with zero first-row off-diagonal (default: 12)
        magnitudes (array): |e| samples, decreasing (default: 16 values from 1e-1 to 1e-4)
        evenTol (float): evenness tolerance (default: 1e-9)
        slopeMin (float): loglog slope floor (default: 1.95)

    Raises:
        AlexlabInputError: G fails the invariance spot check

    Returns:
        (float, LabReport): sample-max constant C_est and the report
    """
    if isinstance(G, str):
        if G not in INVARIANT_FUNCTIONS:
            raise AlexlabArgumentError("Unknown invariant function %r" % G)
        label, G = G, INVARIANT_FUNCTIONS[G]
    else:
        label = getattr(G, "__name__", "G")
    if order < 2:
        raise AlexlabArgumentError("invariantGBound requires matrices of order >= 2")
    rng = np.random.default_rng(kwargs.get("seed", 0))
    bases = kwargs.get("bases", 12)
    mags = np.asarray(kwargs.get("magnitudes", np.geomspace(1.0e-1, 1.0e-4, 16)), dtype=np.float64)
    evenTol = kwargs.get("evenTol", 1.0e-9)
    slopeMin = kwargs.get("slopeMin", 1.95)
    rpt = LabReport("invariant-G-bound", anchor="|sum G_0a N_0a| <= C sum |N_0b|^2 for orthogonally invariant G")
    rpt.setFitted("G", label)
    worst = checkInvariance(G, order, rng)
    rpt.addHypothesis("orthogonal-invariance", "holds", margin=1.0e-9 - worst)
    #
    bA = _randomSymmetric(rng, bases, order, 0.5)
    bA[:, 0, 1:] = 0.0
    bA[:, 1:, 0] = 0.0
    dirs = rng.normal(size=(bases, order - 1))
    dirs /= np.linalg.norm(dirs, axis=-1)[:, None]
    nA = np.broadcast_to(bA[:, None, :, :], (bases, mags.size, order, order)).copy()
    eV = mags[None, :, None] * dirs[:, None, :]
    nA[..., 0, 1:] = eV
    nA[..., 1:, 0] = eV
    hPlus = firstRowQuantity(G, nA)
    nA[..., 0, 1:] = -eV
    nA[..., 1:, 0] = -eV
    hMinus = firstRowQuantity(G, nA)
    h0 = firstRowQuantity(G, bA)
    hZero = float(np.max(np.abs(h0)))
    rpt.setFitted("h_at_zero", hZero)
    rpt.addHypothesis("h(0)=0", "holds" if hZero == 0.0 else "fails", margin=-hZero)
    even = float(np.max(np.abs(hPlus - hMinus)))
    rpt.setFitted("evenness_residual", even)
    rpt.addHypothesis("evenness", "holds" if even <= evenTol else "fails", margin=evenTol - even)
    #
    e2 = (mags * mags)[None, :]
    ratio = np.abs(hPlus) / e2
    cEst = float(np.max(ratio))
    absH = np.abs(hPlus).reshape(-1)
    e2F = np.broadcast_to(e2, hPlus.shape).reshape(-1)
    cLs = float(absH.dot(e2F) / e2F.dot(e2F))
    rpt.setFitted("c_sample_max", cEst)
    rpt.setFitted("c_least_squares", cLs)
    if float(np.max(absH)) <= 1.0e-13:
        rpt.addHypothesis("quadratic-vanishing", "holds", margin=0.0, note="h vanishes identically")
        rpt.setFitted("min_loglog_slope", None)
        cEst = 0.0
    else:
        slopes = []
        for ib in range(bases):
            if np.all(np.abs(hPlus[ib]) > 0.0):
                slopes.append(loglogSlope(np.stack([mags, np.abs(hPlus[ib])], axis=-1), window=None)[0])
        sMin = float(min(slopes)) if slopes else float("nan")
        rpt.setFitted("min_loglog_slope", sMin)
        ok = bool(slopes) and sMin >= slopeMin
        rpt.addHypothesis("quadratic-vanishing", "holds" if ok else "fails", margin=sMin - slopeMin if slopes else None)
    rpt.setSamples("bases", bases)
    rpt.setSamples("magnitudes", mags.size)
    rpt.addSeries("invariant_G_%s" % label, ["e_norm", "h_max", "h_over_e2_max"], [[float(mags[ii]), float(np.max(np.abs(hPlus[:, ii]))), float(np.max(ratio[:, ii]))] for ii in range(mags.size)])
    rpt.setConclusion("bound-holds" if not rpt.brokenHypotheses() else "bound-fails")
    logger.debug("invariantGBound %s C_est %.6g (least squares %.6g)", label, cEst, cLs)
    return cEst, rpt


def sqrtGradientBoundCheck(ut, B=None, **kwargs):
    """sum_j |d_yj u_t| <= C sqrt(u_t) with C = sqrt(2 d B) for nonnegative u_t and |D^2_y u_t| <= B.

    Samples are drawn from the inner half of the field box; the bound on the Hessian and
    the sign of u_t are checked on the whole box, which plays the doubled domain.

    Args:
        ut (ScalarField): nonnegative field on a finite box
        B (float, optional): declared Hessian bound; estimated from samples when None

    Keyword Args:
        yAxes (list): indices of the y variables (default: all)
        seed (int): sampling seed (default: 0)
        count (int): samples (default: 2000)
        floor (float): minimum u_t entering the ratio (default: 1e-14)

    Raises:
        AlexlabPreconditionError: negative u_t sample

    Returns:
        LabReport
    """
    dim = ut.getDim()
    yAxes = list(kwargs.get("yAxes", range(dim)))
    count = kwargs.get("count", 2000)
    floor = kwargs.get("floor", 1.0e-14)
    box = np.array(ut.getBox(), dtype=np.float64)
    if not np.all(np.isfinite(box)):
        raise AlexlabArgumentError("sqrtGradientBoundCheck requires a finite box")
    rng = np.random.default_rng(kwargs.get("seed", 0))
    center, half = 0.5 * (box[:, 0] + box[:, 1]), 0.5 * (box[:, 1] - box[:, 0])
    outer = center + 0.999 * half * rng.uniform(-1.0, 1.0, size=(count, dim))
    inner = center + 0.5 * half * rng.uniform(-1.0, 1.0, size=(count, dim))
    vO, _, hO = ut.evaluateArray(outer)
    vI, gI, _ = ut.evaluateArray(inner)
    neg = float(min(np.min(vO), np.min(vI)))
    if neg < -floor:
        raise AlexlabPreconditionError("u_t takes the negative value %.3e" % neg)
    rpt = LabReport("sqrt-gradient-bound", anchor="sum |u_t,y_j| <= C sqrt(u_t) for nonnegative u_t")
    hY = hO[..., yAxes, :][..., :, yAxes]
    bEst = float(np.max(np.abs(np.linalg.eigvalsh(hY))))
    rpt.setFitted("b_estimate", bEst)
    if B is None:
        B = bEst
    else:
        rpt.addHypothesis("hessian-bound", "holds" if bEst <= B * (1.0 + 1.0e-6) + 1.0e-12 else "fails", margin=float(B - bEst))
    rpt.addHypothesis("u_t>=0", "holds", margin=neg)
    cBound = float(np.sqrt(2.0 * len(yAxes) * B))
    mask = vI > floor
    rpt.setFitted("c_bound", cBound)
    rpt.setSamples("samples", count)
    rpt.setSamples("ratio_samples", int(np.count_nonzero(mask)))
    if not np.any(mask):
        rpt.setFitted("max_ratio", 0.0)
        rpt.setConclusion("bound-holds")
        return rpt
    ratio = np.sum(np.abs(gI[mask][:, yAxes]), axis=-1) / np.sqrt(vI[mask])
    maxRatio = float(np.max(ratio))
    rpt.setFitted("max_ratio", maxRatio)
    slack = 1.0e-6 * cBound + 1.0e-9
    if maxRatio <= cBound + slack:
        rpt.setConclusion("bound-holds")
    else:
        iB = int(np.argmax(ratio))
        logger.info("sqrt gradient ratio %.6g exceeds %.6g at %r", maxRatio, cBound, inner[mask][iB].tolist())
        rpt.setFitted("witness", inner[mask][iB].tolist())
        rpt.setConclusion("hypothesis-failure" if rpt.brokenHypotheses() else "bound-fails")
    return rpt
