##
# File:    CheckReports.py
# Date:    6-Feb-2026
# Version: 0.001 Initial version
#
# Updates:
#  14-Mar-2026  add LabReport for the boundary-lemma and frequency checks
#   2-Apr-2026  deterministic witness ordering in serialized reports
##
"""
Report containers shared by the condition checkers and the instance
checks.  Each container serializes to plain JSON-ready dictionaries.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging
import math

import numpy as np

from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabConsistencyError

logger = logging.getLogger(__name__)

VERDICTS = ("holds", "fails", "inconclusive")
STATUSES = ("holds", "fails", "inconclusive", "not-applicable")


def toJsonValue(obj):
    """Convert numpy scalars/arrays and nested containers to plain JSON types."""
    if isinstance(obj, dict):
        return {str(ky): toJsonValue(vl) for ky, vl in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [toJsonValue(vl) for vl in obj]
    if isinstance(obj, np.ndarray):
        return toJsonValue(obj.tolist())
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        val = float(obj)
        if math.isnan(val):
            return "nan"
        if math.isinf(val):
            return "inf" if val > 0 else "-inf"
        return val
    return obj


class Witness(object):
    """A sample point with its quantitative margin."""

    def __init__(self, point, margin, note=None):
        self.point = [float(vl) for vl in np.atleast_1d(np.asarray(point, dtype=np.float64))]
        self.margin = float(margin)
        self.note = note

    def toDict(self):
        dD = {"point": self.point, "margin": self.margin}
        if self.note:
            dD["note"] = self.note
        return toJsonValue(dD)

    def __repr__(self):
        return "Witness(%r, margin=%.3e%s)" % (self.point, self.margin, ", %s" % self.note if self.note else "")


class ConditionReport(object):
    """Verdict of one condition check with witnesses and the sampling resolution used."""

    def __init__(self, condition, verdict=None, witnesses=None, resolution=None, details=None):
        self.__condition = condition
        self.__verdict = None
        self.__witnesses = list(witnesses) if witnesses else []
        self.__resolution = dict(resolution) if resolution else {}
        self.__details = dict(details) if details else {}
        if verdict is not None:
            self.setVerdict(verdict)

    def getCondition(self):
        return self.__condition

    def getVerdict(self):
        return self.__verdict

    def setVerdict(self, verdict):
        if verdict not in VERDICTS:
            raise AlexlabArgumentError("Unknown verdict %r" % verdict)
        if verdict == "fails" and not self.__witnesses:
            raise AlexlabConsistencyError("A failing %s report requires a witness" % self.__condition)
        self.__verdict = verdict

    def addWitness(self, point, margin, note=None):
        self.__witnesses.append(Witness(point, margin, note=note))

    def getWitnesses(self):
        return list(self.__witnesses)

    def getResolution(self):
        return dict(self.__resolution)

    def setResolution(self, **kwargs):
        self.__resolution.update(kwargs)

    def getDetails(self):
        return dict(self.__details)

    def setDetail(self, ky, vl):
        self.__details[ky] = vl

    def holds(self):
        return self.__verdict == "holds"

    def fails(self):
        return self.__verdict == "fails"

    def toDict(self):
        wL = sorted([wt.toDict() for wt in self.__witnesses], key=lambda wd: (wd["point"], wd["margin"]))
        dD = {"condition": self.__condition, "verdict": self.__verdict, "witnesses": wL, "resolution": self.__resolution}
        if self.__details:
            dD["details"] = self.__details
        return toJsonValue(dD)

    def __repr__(self):
        return "ConditionReport(%s: %s, %d witnesses)" % (self.__condition, self.__verdict, len(self.__witnesses))


class LabReport(object):
    """Instance-check report: named hypotheses with status and margin, a conclusion,
    fitted constants, sample counts and optional plot series."""

    def __init__(self, name, anchor=None):
        self.__name = name
        self.__anchor = anchor
        self.__hypotheses = []
        self.__conclusion = None
        self.__fitted = {}
        self.__samples = {}
        self.__series = {}

    def getName(self):
        return self.__name

    def addHypothesis(self, hId, status, margin=None, note=None):
        if status not in STATUSES:
            raise AlexlabArgumentError("Unknown hypothesis status %r" % status)
        hD = {"id": hId, "status": status, "margin": margin}
        if note:
            hD["note"] = note
        self.__hypotheses.append(hD)

    def getHypothesis(self, hId):
        for hD in self.__hypotheses:
            if hD["id"] == hId:
                return dict(hD)
        return None

    def getHypotheses(self):
        return [dict(hD) for hD in self.__hypotheses]

    def brokenHypotheses(self):
        return [hD["id"] for hD in self.__hypotheses if hD["status"] == "fails"]

    def setConclusion(self, conclusion):
        self.__conclusion = conclusion

    def getConclusion(self):
        return self.__conclusion

    def setFitted(self, ky, vl):
        self.__fitted[ky] = vl

    def getFitted(self, ky, default=None):
        return self.__fitted.get(ky, default)

    def setSamples(self, ky, count):
        self.__samples[ky] = int(count)

    def addSeries(self, name, header, rows):
        self.__series[name] = (list(header), [list(row) for row in rows])

    def getSeries(self):
        return dict(self.__series)

    def toDict(self):
        dD = {
            "name": self.__name,
            "hypotheses": self.__hypotheses,
            "conclusion": self.__conclusion,
            "fitted_constants": self.__fitted,
            "samples": self.__samples,
        }
        if self.__anchor:
            dD["anchor"] = self.__anchor
        return toJsonValue(dD)

    def __repr__(self):
        return "LabReport(%s: %s)" % (self.__name, self.__conclusion)
