##
# File:    ScenarioIo.py
# Date:    5-Feb-2026
# Version: 0.001 Initial version
#
# Updates:
#  17-Mar-2026  sorted-key atomic report writer and CSV plot series
#  21-Apr-2026  scenario syntax errors report line and column
##
"""
Read and validate scenario files; write report.json and plot series.

A scenario is a JSON object:

    {
      "version": 1,
      "name": "sphere-suite",
      "kind": "full-suite",
      "seed": 0,
      "parameters": {"surface": "sphere"},
      "tolerances": {"symmetryTol": 1e-8}
    }

Locators may be local paths, gzip-compressed paths (".gz") or http(s) URLs.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import csv
import gzip
import io
import json
import logging
import os
from contextlib import closing

import requests

from alexlab.api.CheckReports import toJsonValue
from alexlab.io.AlexlabExceptions import AlexlabInputError, AlexlabSyntaxError
from alexlab.io.IoAdapterBase import IoAdapterBase

logger = logging.getLogger(__name__)

SCENARIO_VERSIONS = (1,)
SCENARIO_KEYS = ("version", "name", "kind", "seed", "parameters", "tolerances", "output")
SCENARIO_KINDS = ("surface-symmetry", "hopf", "frequency", "taylor", "appendix", "full-suite")

PARAMETER_KEYS = {
    "surface-symmetry": ("surface", "surfaceParameters", "dim", "offset", "curvatureOrder", "steps", "capSamples", "checks", "stabilityFactor"),
    "hopf": ("C0", "n", "radius", "kExponent", "gridCount", "checks", "corollaryInstance", "corollaryExponent", "infiniteInstance"),
    "frequency": ("n", "instance", "degree", "degrees", "weights", "potential", "rMin", "rMax", "count", "uniqueness"),
    "taylor": ("k", "n", "coefficients", "lowerCoefficients", "mMax", "asymptotics", "operator", "extent"),
    "appendix": ("order", "functions", "bases", "fields", "dim", "count"),
    "full-suite": ("surface", "surfaceParameters", "dim", "C0", "n", "k"),
}

TOLERANCE_KEYS = (
    "lambdaTol",
    "symmetryTol",
    "tangencyTol",
    "uniquenessTol",
    "mainAssumptionTol",
    "slack",
    "tol",
    "zeroTol",
    "residualTol",
    "convexTol",
    "identityTol",
    "rtol",
    "evenTol",
)


class ScenarioIo(IoAdapterBase):
    """Scenario reader and report writer."""

    def readScenario(self, locator):
        """Read and validate a scenario.

        Args:
            locator (str): local path, .gz path or http(s) URL

        Raises:
            AlexlabSyntaxError: malformed JSON (with line and column), when raiseExceptions is set
            AlexlabInputError: schema violations, when raiseExceptions is set

        Returns:
            dict: validated scenario with defaults filled in, or None on failure
        """
        try:
            text = self.__readText(str(locator))
            if text is None:
                return None
            return self.parseScenario(text)
        except (AlexlabSyntaxError, AlexlabInputError) as e:
            if self._raiseExceptions:
                raise
            logger.error("Scenario %s rejected: %s", locator, str(e))
        return None

    def parseScenario(self, text):
        try:
            sD = json.loads(text)
        except json.JSONDecodeError as e:
            raise AlexlabSyntaxError("%s (line %d column %d)" % (e.msg, e.lineno, e.colno), line=e.lineno, column=e.colno) from None
        return self.validateScenario(sD)

    def validateScenario(self, sD):
        """Check keys, kind, version, seed and tolerances; fill defaults.

        Raises:
            AlexlabInputError: unknown keys, unsupported version or kind, or nonpositive tolerances
        """
        if not isinstance(sD, dict):
            raise AlexlabInputError("Scenario must be a JSON object")
        unknown = sorted(set(sD) - set(SCENARIO_KEYS))
        if unknown:
            raise AlexlabInputError("Unknown scenario keys: %s" % ", ".join(unknown))
        if "version" not in sD or sD["version"] not in SCENARIO_VERSIONS:
            raise AlexlabInputError("Unsupported scenario version %r" % sD.get("version"))
        kind = sD.get("kind")
        if kind not in SCENARIO_KINDS:
            raise AlexlabInputError("Unknown scenario kind %r (known: %s)" % (kind, ", ".join(SCENARIO_KINDS)))
        seed = sD.get("seed", 0)
        if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed < 2 ** 64:
            raise AlexlabInputError("Seed must be an unsigned 64-bit integer (got %r)" % (seed,))
        params = sD.get("parameters", {})
        if not isinstance(params, dict):
            raise AlexlabInputError("parameters must be an object")
        badP = sorted(set(params) - set(PARAMETER_KEYS[kind]))
        if badP:
            raise AlexlabInputError("Unknown %s parameters: %s" % (kind, ", ".join(badP)))
        tols = sD.get("tolerances", {})
        if not isinstance(tols, dict):
            raise AlexlabInputError("tolerances must be an object")
        for ky, vl in tols.items():
            if ky not in TOLERANCE_KEYS:
                raise AlexlabInputError("Unknown tolerance %r" % ky)
            if isinstance(vl, bool) or not isinstance(vl, (int, float)) or not vl > 0:
                raise AlexlabInputError("Tolerance %s must be a positive number (got %r)" % (ky, vl))
        return {
            "version": sD["version"],
            "name": str(sD.get("name", kind)),
            "kind": kind,
            "seed": seed,
            "parameters": dict(params),
            "tolerances": dict(tols),
            "output": sD.get("output"),
        }

    def __readText(self, locator):
        if self._isLocal(locator):
            if not self._fileExists(locator):
                return None
            with gzip.open(locator, mode="rt", encoding="utf-8") if locator.endswith(".gz") else open(locator, "r", encoding="utf-8") as ifh:
                return ifh.read()
        if locator.endswith(".gz"):
            customHeader = {"Accept-Encoding": "gzip"}
            with closing(requests.get(locator, headers=customHeader, timeout=60)) as ifh:
                if self._raiseExceptions:
                    ifh.raise_for_status()
                return gzip.GzipFile(fileobj=io.BytesIO(ifh.content)).read().decode("utf-8")
        with closing(requests.get(locator, timeout=60)) as ifh:
            if self._raiseExceptions:
                ifh.raise_for_status()
            return ifh.content.decode("utf-8")

    def writeReport(self, filePath, reportD):
        """Write report.json: UTF-8, sorted keys, atomic replace.

        Returns:
            bool: completion status
        """
        payload = json.dumps(toJsonValue(reportD), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
        return self._atomicWrite(filePath, lambda ofh: ofh.write(payload))

    def readReport(self, filePath):
        try:
            with open(filePath, "r", encoding="utf-8") as ifh:
                return json.load(ifh)
        except Exception as e:
            self._logError("Failing read for %s with %s" % (filePath, str(e)))
        return None

    def writeSeries(self, dirPath, name, header, rows):
        """Write plots/<name>.csv with a header row.

        Returns:
            str: path written, or None on failure
        """
        os.makedirs(dirPath, exist_ok=True)
        filePath = os.path.join(dirPath, "%s.csv" % name)

        def writer(ofh):
            wr = csv.writer(ofh, lineterminator="\n")
            wr.writerow(header)
            for row in rows:
                wr.writerow([repr(float(vl)) if isinstance(vl, float) else vl for vl in toJsonValue(row)])

        return filePath if self._atomicWrite(filePath, writer) else None
