##
# File:    ScenarioRunner.py
# Date:    12-Feb-2026
# Version: 0.001 Initial version
#
# Updates:
#  23-Mar-2026  taylor scenarios with the two-dimensional Laplacian rigidity check
#  28-Mar-2026  acceptance suite with expected exit status per scenario
#  14-Apr-2026  optional msgpack report
##
"""
Build catalog surfaces and PDE instances for a scenario, run the checkers and
write report.json plus plots/*.csv into the scenario output directory.

Each check contributes one verdict entry {check, anchor, status, result}. The status
is "pass", "inconclusive", "violation" or "error"; a scenario with any violation or
error exits with status 1.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import copy
import logging
import os
import time

import numpy as np
from scipy import special

from alexlab import __version__
from alexlab.api.CheckReports import LabReport
from alexlab.api.ComparisonPrinciple import ComparisonInstance, trichotomyCheck
from alexlab.api.DegenerateExpansion import DegenerateExpansion, fAsymptoticsCheck, radialCoefficient, taylorRecursion, taylorRoundTrip
from alexlab.api.FrequencyFunction import FrequencySeries, frequencyConvexity, vanishOrderUniqueness
from alexlab.api.HopfLemma import comparisonFunction, hopfC0Lt2CorollaryCheck, hopfExponent, hopfGrowthCheck, infiniteOrderBarrierCheck
from alexlab.api.InvariantFunction import invariantGBound, sqrtGradientBoundCheck
from alexlab.api.MovingPlanes import MovingPlanes
from alexlab.api.ScalarField import ScalarField
from alexlab.api.SurfaceCatalog import SurfaceCatalog
from alexlab.api.SurfaceConditions import checkConditionLC, checkConditionS, checkConditionT, checkMainAssumption, findTangencySet
from alexlab.api.SurfaceCurvature import gM
from alexlab.io.AlexlabExceptions import AlexlabError, AlexlabInputError
from alexlab.io.BinaryReportWriter import BinaryReportWriter
from alexlab.io.ScenarioIo import ScenarioIo

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

VIOLATION_CONCLUSIONS = ("counterexample-witness", "convexity-violation", "bound-fails", "mismatch", "asymptotics-fail")
INCONCLUSIVE_CONCLUSIONS = ("inconclusive",)

CONDITION_ANCHORS = {
    "main-assumption": "curvature non-increasing upward along vertical segments in G",
    "S": "M on one side of every vertical tangent hyperplane",
    "T": "finite contact order at vertical tangency",
    "LC": "local convexity in the vertical direction at vertical tangency",
    "moving-planes": "Alexandrov reflection: symmetry about a horizontal hyperplane",
}

SURFACE_CHECKS = ("main-assumption", "S", "T", "LC", "moving-planes")

DEFAULT_TAYLOR_COEFFICIENTS = [[1.0, 0.2], [0.3, -0.1], [0.0, 0.2], [0.1]]

BUILTIN_INSTANCES = [
    {"kind": "hopf", "name": "comparison", "description": "h = (R - r)^k with k(k - n) = C0"},
    {"kind": "hopf", "name": "zero", "description": "w = 0 (corollary and infinite-order checks)"},
    {"kind": "hopf", "name": "power", "description": "w = (R - r)^p, p < 2 breaks C2 up to the boundary"},
    {"kind": "hopf", "name": "exp-inverse", "description": "w = exp(-1/t), infinite order with unbounded Laplacian(w) t^2 / w"},
    {"kind": "frequency", "name": "harmonic", "description": "Re((x1 + i x2)^m)"},
    {"kind": "frequency", "name": "harmonic-sum", "description": "weighted sum of homogeneous harmonics"},
    {"kind": "frequency", "name": "radial-potential", "description": "radial solution of Laplacian(u) = c u"},
    {"kind": "frequency", "name": "mimic", "description": "exp(-1/|x|^2), infinite-order vanishing with its own potential"},
    {"kind": "frequency", "name": "zero", "description": "u = 0"},
    {"kind": "taylor", "name": "radial-coefficients", "description": "u = sum t^j a_j(y), a_j polynomial in |y|^2"},
    {"kind": "appendix", "name": "trace", "description": "G(N) = trace(N)"},
    {"kind": "appendix", "name": "trace-square", "description": "G(N) = trace(N^2)"},
    {"kind": "appendix", "name": "sigma2", "description": "G(N) = sigma_2 of the eigenvalues"},
    {"kind": "appendix", "name": "square", "description": "u_t = y1^2, equality in the square-root bound"},
    {"kind": "appendix", "name": "constant", "description": "u_t = 1"},
    {"kind": "appendix", "name": "bump", "description": "u_t = (sum a_j sin(w_j . y + p_j))^2 with seeded coefficients"},
]


def _suiteScenario(name, kind, parameters=None, expect=EXIT_PASS):
    return ({"version": 1, "name": name, "kind": kind, "seed": 0, "parameters": parameters or {}}, expect)


ACCEPTANCE_SUITE = [
    _suiteScenario("sphere-suite", "full-suite", {"surface": "sphere"}),
    _suiteScenario("spheroid-symmetry", "surface-symmetry", {"surface": "ellipsoid", "surfaceParameters": {"a": 0.6, "c": 1.0}}),
    _suiteScenario("dumbbell-symmetry", "surface-symmetry", {"surface": "dumbbell", "checks": ["S", "LC"]}, EXIT_VIOLATION),
    _suiteScenario("flat-tangent-infinite", "surface-symmetry", {"surface": "flat-tangent", "surfaceParameters": {"k": "infinite"}, "checks": ["T"]}, EXIT_VIOLATION),
    _suiteScenario("pear-main-assumption", "surface-symmetry", {"surface": "pear", "checks": ["main-assumption"]}, EXIT_VIOLATION),
    _suiteScenario("hopf-n2-c1", "hopf", {"C0": 1.0, "n": 2, "checks": ["growth", "corollary", "infinite-order"]}),
    _suiteScenario("hopf-n2-c3", "hopf", {"C0": 3.0, "n": 2}),
    _suiteScenario("hopf-n3-c1", "hopf", {"C0": 1.0, "n": 3, "gridCount": 120}),
    _suiteScenario("hopf-n3-c3", "hopf", {"C0": 3.0, "n": 3, "gridCount": 120}),
    _suiteScenario("frequency-harmonic-n2", "frequency", {"n": 2, "instance": "harmonic", "degree": 3}),
    _suiteScenario("frequency-harmonic-n3", "frequency", {"n": 3, "instance": "harmonic", "degree": 2}),
    _suiteScenario("frequency-harmonic-sum", "frequency", {"n": 2, "instance": "harmonic-sum", "degrees": [1, 3]}),
    _suiteScenario("frequency-radial-potential", "frequency", {"n": 2, "instance": "radial-potential", "potential": 2.0}),
    _suiteScenario("frequency-mimic", "frequency", {"n": 2, "instance": "mimic", "rMin": 0.2, "uniqueness": True}),
    _suiteScenario("taylor-k1-n2", "taylor", {"k": 1, "n": 2}),
    _suiteScenario("taylor-k2-n2", "taylor", {"k": 2, "n": 2}),
    _suiteScenario("taylor-k3-n2", "taylor", {"k": 3, "n": 2}),
    _suiteScenario("taylor-k2-n3", "taylor", {"k": 2, "n": 3}),
    _suiteScenario("taylor-laplacian-rigidity", "taylor", {"k": 2, "n": 2, "operator": "laplacian", "asymptotics": False}),
    _suiteScenario("appendix", "appendix", {"order": 3}),
]


def _zeroField(n, half, name="zero"):
    return ScalarField(
        lambda pA: np.zeros(pA.shape[:-1]),
        n,
        box=[(-half, half)] * n,
        gradient=lambda pA: np.zeros(pA.shape),
        hessian=lambda pA: np.zeros(pA.shape + (pA.shape[-1],)),
        name=name,
    )


def _expInverseField(n):
    """w = exp(-1/t) on (0, 1) x (-1, 1)^(n-1)."""

    def parts(pA):
        tA = pA[..., 0]
        pos = tA > 0.0
        tS = np.where(pos, tA, 1.0)
        return pos, tS, np.where(pos, np.exp(-1.0 / tS), 0.0)

    def func(pA):
        return parts(pA)[2]

    def grad(pA):
        _, tS, wV = parts(pA)
        gA = np.zeros(pA.shape)
        gA[..., 0] = wV / tS ** 2
        return gA

    def hess(pA):
        _, tS, wV = parts(pA)
        hA = np.zeros(pA.shape + (n,))
        hA[..., 0, 0] = wV * (1.0 / tS ** 4 - 2.0 / tS ** 3)
        return hA

    return ScalarField(func, n, box=[(0.0, 1.0)] + [(-1.0, 1.0)] * (n - 1), gradient=grad, hessian=hess, name="exp-inverse")


def _harmonic(degree):
    return lambda xA: np.real((xA[..., 0] + 1j * xA[..., 1]) ** int(degree))


def _frequencyInstance(params):
    """(u, V, FrequencySeries keyword arguments) for a named instance."""
    n = params.get("n", 2)
    name = params.get("instance", "harmonic")
    kw = {"name": name}
    for ky in ("rMin", "rMax", "count"):
        if ky in params:
            kw[ky] = params[ky]
    if name == "harmonic":
        return _harmonic(params.get("degree", 2)), None, kw
    if name == "harmonic-sum":
        degrees = params.get("degrees", [1, 3])
        weights = params.get("weights", [1.0] * len(degrees))
        parts = [(float(wt), _harmonic(dg)) for wt, dg in zip(weights, degrees)]
        return (lambda xA: sum(wt * hf(xA) for wt, hf in parts)), None, kw
    if name == "radial-potential":
        cc = float(params.get("potential", 1.0))
        root = np.sqrt(cc)
        if n == 2:
            func = lambda xA: special.i0(root * np.linalg.norm(xA, axis=-1))
        else:
            func = lambda xA: np.sinh(root * np.linalg.norm(xA, axis=-1)) / (root * np.linalg.norm(xA, axis=-1))
        return func, (lambda xA: np.full(xA.shape[:-1], cc)), kw
    if name == "mimic":
        kw.setdefault("rMin", 0.2)

        def pot(xA):
            rr = np.linalg.norm(xA, axis=-1)
            return 4.0 / rr ** 6 + (2.0 * n - 8.0) / rr ** 4

        return (lambda xA: np.exp(-1.0 / np.sum(xA * xA, axis=-1))), pot, kw
    if name == "zero":
        return (lambda xA: np.zeros(xA.shape[:-1])), None, kw
    raise AlexlabInputError("Unknown frequency instance %r" % name)


def _appendixField(name, dim, rng):
    box = [(-1.0, 1.0)] * dim
    if name == "square":
        return ScalarField(
            lambda pA: pA[..., 0] ** 2,
            dim,
            box=box,
            gradient=lambda pA: np.concatenate([2.0 * pA[..., :1], np.zeros(pA.shape[:-1] + (dim - 1,))], axis=-1),
            hessian=lambda pA: np.broadcast_to(np.diag([2.0] + [0.0] * (dim - 1)), pA.shape + (dim,)).copy(),
            name=name,
        )
    if name == "constant":
        return ScalarField(
            lambda pA: np.ones(pA.shape[:-1]),
            dim,
            box=box,
            gradient=lambda pA: np.zeros(pA.shape),
            hessian=lambda pA: np.zeros(pA.shape + (dim,)),
            name=name,
        )
    if name == "bump":
        amp = rng.uniform(0.2, 1.0, size=3)
        freq = rng.uniform(0.5, 2.0, size=(3, dim))
        phase = rng.uniform(0.0, 2.0 * np.pi, size=3)
        return ScalarField(lambda pA: np.sum(amp * np.sin(pA @ freq.T + phase), axis=-1) ** 2, dim, box=box, name=name)
    raise AlexlabInputError("Unknown appendix field %r" % name)


class ScenarioRunner(object):
    """Run validated scenarios and write their artifacts."""

    def __init__(self, outDirPath=None, seed=None, binary=False, **kwargs):
        """
        Args:
            outDirPath (str, optional): output directory; scenario "output" or ./alexlab-out otherwise
            seed (int, optional): overrides the scenario seed when given
            binary (bool, optional): also write report.msgpack. Defaults to False.

        Keyword Args:
            timing (bool): log elapsed time of each check (default: False)
        """
        self.__outDirPath = outDirPath
        self.__seed = seed
        self.__binary = binary
        self.__timing = kwargs.get("timing", False)
        self.__io = ScenarioIo(raiseExceptions=True, timing=self.__timing)
        self.__series = {}
        self.__timings = {}

    def listCatalog(self):
        """Builtin surfaces and instances in stable order."""
        return {"surfaces": SurfaceCatalog().listCatalog(), "instances": copy.deepcopy(BUILTIN_INSTANCES)}

    def runScenario(self, scenario):
        """Run one scenario given as a locator or a parsed dict.

        Raises:
            AlexlabSyntaxError: the scenario file does not parse
            AlexlabInputError: the scenario is invalid

        Returns:
            (int, dict): exit status and the report content
        """
        sD = self.__io.readScenario(scenario) if isinstance(scenario, str) else self.__io.validateScenario(scenario)
        seed = self.__seed if self.__seed is not None else sD["seed"]
        outDir = self.__outDirPath or sD.get("output") or os.path.join(".", "alexlab-out")
        self.__series = {}
        self.__timings = {}
        t0 = time.time()
        logger.info("Running scenario %s (%s) seed %d", sD["name"], sD["kind"], seed)
        method = getattr(self, "_run" + "".join(part.capitalize() for part in sD["kind"].split("-")))
        verdicts = method(sD["parameters"], sD["tolerances"], seed)
        violations = [vd["check"] for vd in verdicts if vd["status"] in ("violation", "error")]
        status = EXIT_VIOLATION if violations else EXIT_PASS
        self.__timings["total"] = time.time() - t0
        reportD = {
            "alexlab_version": __version__,
            "scenario": {
                "name": sD["name"],
                "kind": sD["kind"],
                "version": sD["version"],
                "seed": seed,
                "parameters": sD["parameters"],
                "tolerances": sD["tolerances"],
            },
            "verdicts": verdicts,
            "status": "violation" if violations else "pass",
            "violations": violations,
            "timings": dict(self.__timings),
        }
        self.__writeArtifacts(outDir, reportD)
        if violations:
            logger.info("Scenario %s: violations in %s", sD["name"], ", ".join(violations))
        else:
            logger.info("Scenario %s passed (%d checks)", sD["name"], len(verdicts))
        return status, reportD

    def runSuite(self):
        """Run the acceptance set; each scenario writes into its own subdirectory.

        Returns:
            (int, dict): 0 when every scenario exits as expected, and the summary
        """
        baseDir = self.__outDirPath or os.path.join(".", "alexlab-out")
        rows = []
        for sD, expect in ACCEPTANCE_SUITE:
            runner = ScenarioRunner(outDirPath=os.path.join(baseDir, sD["name"]), seed=self.__seed, binary=self.__binary, timing=self.__timing)
            status, _ = runner.runScenario(copy.deepcopy(sD))
            rows.append({"name": sD["name"], "kind": sD["kind"], "exit": status, "expected": expect, "ok": status == expect})
        failed = [row["name"] for row in rows if not row["ok"]]
        summary = {"alexlab_version": __version__, "seed": self.__seed if self.__seed is not None else 0, "scenarios": rows, "failed": failed}
        os.makedirs(baseDir, exist_ok=True)
        self.__io.writeReport(os.path.join(baseDir, "report.json"), summary)
        return (EXIT_VIOLATION if failed else EXIT_PASS), summary

    def __writeArtifacts(self, outDir, reportD):
        os.makedirs(outDir, exist_ok=True)
        plotDir = os.path.join(outDir, "plots")
        for name, (header, rows) in sorted(self.__series.items()):
            self.__io.writeSeries(plotDir, name, header, rows)
        self.__io.writeReport(os.path.join(outDir, "report.json"), reportD)
        if self.__binary:
            BinaryReportWriter(raiseExceptions=False).serialize(os.path.join(outDir, "report.msgpack"), reportD, self.__series)

    def __check(self, checkId, anchor, func):
        """Run one checker; map its result to a verdict entry."""
        t0 = time.time()
        try:
            result = func()
            if hasattr(result, "getVerdict"):
                status = {"holds": "pass", "fails": "violation"}.get(result.getVerdict(), "inconclusive")
            elif hasattr(result, "outcome"):
                status = {"symmetric": "pass", "asymmetric": "violation"}.get(result.outcome, "inconclusive")
            else:
                conclusion = result.getConclusion()
                status = "violation" if conclusion in VIOLATION_CONCLUSIONS else "inconclusive" if conclusion in INCONCLUSIVE_CONCLUSIONS else "pass"
                for name, series in result.getSeries().items():
                    self.__series[name] = series
            entry = {"check": checkId, "anchor": anchor, "status": status, "result": result.toDict()}
        except AlexlabError as e:
            logger.exception("Check %s failing with %s", checkId, str(e))
            entry = {"check": checkId, "anchor": anchor, "status": "error", "error": "%s: %s" % (type(e).__name__, str(e))}
        self.__timings[checkId] = time.time() - t0
        if self.__timing:
            logger.info("Check %s completed in %.4f seconds", checkId, self.__timings[checkId])
        return entry

    #
    # -- scenario kinds
    #

    def _runSurfaceSymmetry(self, params, tols, seed):
        _ = seed
        surface = params.get("surface", "sphere")
        M = SurfaceCatalog().build(surface, parameters=params.get("surfaceParameters"), dim=params.get("dim"), offset=params.get("offset", 0.0))
        checks = params.get("checks", list(SURFACE_CHECKS))
        unknown = [ck for ck in checks if ck not in SURFACE_CHECKS]
        if unknown:
            raise AlexlabInputError("Unknown surface checks: %s" % ", ".join(unknown))
        order = params.get("curvatureOrder")
        gFunc = (lambda kV: gM(kV, order)) if order else None
        slack = {"slack": tols["slack"]} if "slack" in tols else {}
        verdicts = []
        tangency = findTangencySet(M) if any(ck in checks for ck in ("S", "T", "LC")) else None
        if "main-assumption" in checks:
            mKw = {"tol": tols["mainAssumptionTol"]} if "mainAssumptionTol" in tols else {}
            verdicts.append(self.__check("main-assumption", CONDITION_ANCHORS["main-assumption"], lambda: checkMainAssumption(M, curvatureFunction=gFunc, **mKw)))
        if "S" in checks:
            entry = self.__check("S", CONDITION_ANCHORS["S"], lambda: checkConditionS(M, tangency=tangency, **slack))
            if entry["status"] == "violation":
                factor = int(params.get("stabilityFactor", 10))
                fine = checkConditionS(M, samples=(400 * factor, 128), tangency=tangency, **slack)
                entry["result"]["details"] = dict(entry["result"].get("details", {}), stable_at_finer_resolution=fine.fails(), stability_factor=factor)
            verdicts.append(entry)
        if "T" in checks:
            verdicts.append(self.__check("T", CONDITION_ANCHORS["T"], lambda: checkConditionT(M, tangency=tangency)))
        if "LC" in checks:
            verdicts.append(self.__check("LC", CONDITION_ANCHORS["LC"], lambda: checkConditionLC(M, tangency=tangency, **slack)))
        if "moving-planes" in checks:
            mpKw = {ky: tols[ky] for ky in ("lambdaTol", "symmetryTol", "tangencyTol", "uniquenessTol") if ky in tols}
            for ky in ("steps", "capSamples"):
                if ky in params:
                    mpKw[ky] = params[ky]
            mp = MovingPlanes(M, timing=self.__timing, **mpKw)
            verdicts.append(self.__check("moving-planes", CONDITION_ANCHORS["moving-planes"], lambda: mp.runMovingPlanes(curvatureFunction=gFunc)))
        return verdicts

    def _runHopf(self, params, tols, seed):
        _ = seed
        C0 = float(params.get("C0", 1.0))
        n = int(params.get("n", 2))
        radius = float(params.get("radius", 1.0))
        checks = params.get("checks", ["growth"])
        tolKw = {"tol": tols["tol"]} if "tol" in tols else {}
        verdicts = []
        if "growth" in checks:
            kk = params.get("kExponent") or hopfExponent(C0, n)
            w = comparisonFunction(kk, n, radius=radius)
            gKw = dict(tolKw, radius=radius, gridCount=params.get("gridCount", 200))
            if params.get("kExponent"):
                gKw["kExponent"] = float(params["kExponent"])
            verdicts.append(self.__check("hopf-growth", "w >= a |x - P|^k near P with k(k - n) = C0", lambda: hopfGrowthCheck(C0, n, w, **gKw)))
        if "corollary" in checks:
            if C0 < 2.0:
                inst = params.get("corollaryInstance", "zero")
                w = _zeroField(n, 1.5 * radius) if inst == "zero" else comparisonFunction(float(params.get("corollaryExponent", 1.5)), n, radius=radius)
                zKw = {"zeroTol": tols["zeroTol"]} if "zeroTol" in tols else {}
                verdicts.append(self.__check("hopf-c0-lt-2", "C0 < 2 with vanishing normal derivative forces w = 0", lambda: hopfC0Lt2CorollaryCheck(w, C0, n=n, radius=radius, **zKw)))
            else:
                logger.info("Skipping the C0 < 2 corollary for C0 = %r", C0)
        if "infinite-order" in checks:
            inst = params.get("infiniteInstance", "exp-inverse")
            w = _zeroField(n, 1.0) if inst == "zero" else _expInverseField(n)
            verdicts.append(self.__check("infinite-order-barrier", "infinite-order vanishing with Laplacian(w) <= C0 w / t^2 forces w = 0", lambda: infiniteOrderBarrierCheck(w, C0)))
        return verdicts

    def _runFrequency(self, params, tols, seed):
        _ = seed
        n = int(params.get("n", 2))
        u, V, kw = _frequencyInstance(dict(params, n=n))
        fs = FrequencySeries(u, n, V=V, **kw)
        cKw = {ky: tols[ky] for ky in ("residualTol", "convexTol", "identityTol") if ky in tols}
        verdicts = [self.__check("frequency-convexity", "log rho convex in s = log r when (r^2 V)_r >= 0", lambda: frequencyConvexity(fs, **cKw))]
        if params.get("uniqueness", False):
            verdicts.append(self.__check("vanish-order-uniqueness", "infinite-order vanishing at the origin forces u = 0", lambda: vanishOrderUniqueness(fs, **cKw)))
        return verdicts

    def __expansion(self, k, n, coeffs, name):
        d = n - 1
        pairs = [radialCoefficient(cL, d) for cL in coeffs]
        return DegenerateExpansion(k, [pr[0] for pr in pairs], n=n, laplacians=[pr[1] for pr in pairs], name=name)

    def _runTaylor(self, params, tols, seed):
        _ = seed
        k = int(params.get("k", 2))
        n = int(params.get("n", 2))
        coeffs = params.get("coefficients", DEFAULT_TAYLOR_COEFFICIENTS)
        U = self.__expansion(k, n, coeffs, "u")
        mMax = int(params.get("mMax", U.getTopIndex()))
        verdicts = []
        rKw = {"tol": tols["tol"]} if "tol" in tols else {}
        verdicts.append(self.__check("taylor-recursion", "coefficients a_m determined by f and a_k", lambda: taylorRoundTrip(U, mMax=mMax, **rKw)))
        if params.get("asymptotics", True):
            aKw = {"rtol": tols["rtol"]} if "rtol" in tols else {}
            verdicts.append(self.__check("f-asymptotics", "source normalization and bounds on f_u at s = 0", lambda: fAsymptoticsCheck(U.source, U, k, **aKw)))
        if params.get("operator") == "laplacian":
            if n != 2:
                raise AlexlabInputError("The Laplacian rigidity check is two-dimensional (got n=%d)" % n)
            V = self.__expansion(k, n, params.get("lowerCoefficients", coeffs), "v")
            extent = float(params.get("extent", 0.3))
            verdicts.append(self.__check("laplacian-rigidity", "equal expansions and u >= v force u = v", lambda: self.__rigidity(U, V, k, mMax, extent, tols)))
        return verdicts

    def __rigidity(self, U, V, k, mMax, extent, tols):
        """Recover both expansions from the common source, then run the trichotomy on u, v."""
        tol = tols.get("tol", 1.0e-6)
        rpt = LabReport("laplacian-rigidity", anchor="equal expansions and u >= v force u = v")
        recU = taylorRecursion(U.source, lambda yA: U.coefficient(k, yA), k, mMax, n=2)
        recV = taylorRecursion(U.source, lambda yA: V.coefficient(k, yA), k, mMax, n=2)
        yN = recU["nodes"]
        gap = max(float(np.max(np.abs(recU["coefficients"][mm] - recV["coefficients"][mm]))) for mm in range(k, mMax + 1))
        vGap = max(float(np.max(np.abs(recV["coefficients"][mm] - V.coefficient(mm, yN)))) for mm in range(k, mMax + 1))
        rpt.setFitted("recovered_gap", gap)
        rpt.setFitted("v_consistency_gap", vGap)
        rpt.addHypothesis("v-solves-same-equation", "holds" if vGap <= tol else "fails", margin=tol - vGap)
        ci = ComparisonInstance(U.asField(extent=1.01 * extent), V.asField(extent=1.01 * extent), operator="laplacian", extent=extent, name="rigidity")
        tri = trichotomyCheck(ci)
        rpt.setFitted("trichotomy", tri.getConclusion())
        for hD in tri.getHypotheses():
            rpt.addHypothesis(hD["id"], hD["status"], margin=hD["margin"])
        equal = gap <= tol
        rpt.addHypothesis("equal-expansions", "holds" if equal else "fails", margin=tol - gap)
        if rpt.brokenHypotheses():
            rpt.setConclusion("hypothesis-failure")
        elif tri.getConclusion() == "identical":
            rpt.setConclusion("identical")
        else:
            rpt.setConclusion("counterexample-witness")
        return rpt

    def _runAppendix(self, params, tols, seed):
        rng = np.random.default_rng(seed)
        order = int(params.get("order", 3))
        dim = int(params.get("dim", 2))
        eKw = {"evenTol": tols["evenTol"]} if "evenTol" in tols else {}
        verdicts = []
        for name in params.get("functions", ["trace", "trace-square", "sigma2"]):
            bKw = dict(eKw, seed=seed, bases=params.get("bases", 12))
            verdicts.append(self.__check("invariant-G:%s" % name, "|sum G_0a N_0a| <= C sum |N_0b|^2", lambda nm=name, kw=bKw: invariantGBound(nm, order=order, **kw)[1]))
        for name in params.get("fields", ["square", "constant", "bump"]):
            field = _appendixField(name, dim, rng)
            sKw = {"seed": seed, "count": params.get("count", 2000)}
            verdicts.append(self.__check("sqrt-gradient:%s" % name, "sum |u_t,y_j| <= C sqrt(u_t)", lambda fd=field, kw=sKw: sqrtGradientBoundCheck(fd, **kw)))
        return verdicts

    def _runFullSuite(self, params, tols, seed):
        surfaceP = {ky: params[ky] for ky in ("surface", "surfaceParameters", "dim") if ky in params}
        verdicts = self._runSurfaceSymmetry(surfaceP, tols, seed)
        hopfP = {"C0": params.get("C0", 1.0), "n": params.get("n", 2), "checks": ["growth", "corollary", "infinite-order"]}
        verdicts.extend(self._runHopf(hopfP, tols, seed))
        verdicts.extend(self._runFrequency({"n": params.get("n", 2), "instance": "harmonic", "degree": 2}, tols, seed))
        verdicts.extend(self._runTaylor({"k": params.get("k", 2), "n": 2}, tols, seed))
        verdicts.extend(self._runAppendix({}, tols, seed))
        return verdicts
