##
# File:    SurfaceCatalog.py
# Date:    7-Feb-2026
# Version: 0.001 Initial version
#
# Updates:
#  20-Feb-2026  pear profiles with arbitrary polynomial factors
#   1-Mar-2026  flat-tangent bodies of finite and infinite contact order
#  12-Mar-2026  dumbbell body with a waist
##
"""
Builtin bodies of revolution used by the scenarios and the test suite.

Entries are append-only: names are never removed or repurposed.  Each entry
records the conditions it is designed to satisfy or violate.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging

import numpy as np
from numpy.polynomial import Polynomial

from alexlab.api.RevolutionProfile import RevolutionProfile
from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabInputError

logger = logging.getLogger(__name__)


def _polynomialProfile(qPoly, zMin, zMax, dim, name, **kwargs):
    dqPoly = qPoly.deriv(1)
    d2qPoly = qPoly.deriv(2)
    return RevolutionProfile(qPoly, dqPoly, d2qPoly, zMin, zMax, dim=dim, name=name, **kwargs)


def sphere(radius=1.0, center=0.0, dim=2, **kwargs):
    """q = R^2 - (z - c)^2."""
    rr, cc = float(radius), float(center)
    if not rr > 0.0:
        raise AlexlabArgumentError("Sphere radius must be positive")
    qPoly = Polynomial([rr * rr - cc * cc, 2.0 * cc, -1.0])
    return _polynomialProfile(qPoly, cc - rr, cc + rr, dim, "sphere", **kwargs)


def ellipsoid(a=0.6, c=1.0, dim=2, **kwargs):
    """Spheroid with equatorial semi-axis a and polar semi-axis c, q = a^2 (1 - z^2/c^2)."""
    aa, cc = float(a), float(c)
    if not (aa > 0.0 and cc > 0.0):
        raise AlexlabArgumentError("Ellipsoid semi-axes must be positive")
    qPoly = Polynomial([aa * aa, 0.0, -aa * aa / (cc * cc)])
    return _polynomialProfile(qPoly, -cc, cc, dim, "ellipsoid", **kwargs)


def cappedCylinder(r=0.5, length=1.0, dim=2, **kwargs):
    """Cylinder of radius r and length L closed by hemispherical caps (C^{1,1} profile)."""
    rr, half = float(r), 0.5 * float(length)
    if not (rr > 0.0 and half > 0.0):
        raise AlexlabArgumentError("Capped cylinder requires positive radius and length")

    def excess(z):
        return np.maximum(np.abs(z) - half, 0.0)

    def q(z):
        return rr * rr - excess(z) ** 2

    def dq(z):
        return -2.0 * np.sign(z) * excess(z)

    def d2q(z):
        return np.where(np.abs(z) > half, -2.0, 0.0)

    return RevolutionProfile(q, dq, d2q, -half - rr, half + rr, dim=dim, name="capped-cylinder", **kwargs)


def pear(coeffs=None, dim=2, **kwargs):
    """Asymmetric body q = (1 - z^2) P(z)^2 with P(z) = 1 + sum_j b_j z^j (default b = [0.3])."""
    bL = [0.3] if coeffs is None else [float(vl) for vl in coeffs]
    pPoly = Polynomial([1.0] + bL)
    zV = np.linspace(-1.0, 1.0, 2001)
    if not np.all(pPoly(zV) > 0.0):
        raise AlexlabArgumentError("Pear factor 1 + sum b_j z^j must stay positive on [-1, 1]")
    qPoly = Polynomial([1.0, 0.0, -1.0]) * pPoly * pPoly
    return _polynomialProfile(qPoly, -1.0, 1.0, dim, "pear", **kwargs)


def flatTangent(k=4, dim=2, **kwargs):
    """Body with vertical tangency of contact order k at the equator.

    q = 1 - z^k for even k >= 2, or q = 1 - exp(1 - 1/z^2) when k is "infinite".
    """
    if isinstance(k, str):
        if k != "infinite":
            raise AlexlabArgumentError("flat-tangent order must be an even integer or 'infinite' (got %r)" % k)

        def flat(z):
            zA = np.asarray(z, dtype=np.float64)
            with np.errstate(divide="ignore", over="ignore", under="ignore", invalid="ignore"):
                zz = np.where(zA == 0.0, 1.0, zA)
                ee = np.where(zA == 0.0, 0.0, np.exp(1.0 - 1.0 / (zz * zz)))
            return zA, zz, ee

        def q(z):
            _, _, ee = flat(z)
            return 1.0 - ee

        def dq(z):
            _, zz, ee = flat(z)
            return -ee * 2.0 / zz ** 3

        def d2q(z):
            _, zz, ee = flat(z)
            return -ee * (4.0 / zz ** 6 - 6.0 / zz ** 4)

        return RevolutionProfile(q, dq, d2q, -1.0, 1.0, dim=dim, name="flat-tangent", **kwargs)
    kk = int(k)
    if kk < 2 or kk % 2 or kk != k:
        raise AlexlabArgumentError("flat-tangent order must be an even integer >= 2 (got %r)" % k)
    qPoly = Polynomial([1.0] + [0.0] * (kk - 1) + [-1.0])
    return _polynomialProfile(qPoly, -1.0, 1.0, dim, "flat-tangent", **kwargs)


def dumbbell(base=0.5, amplitude=0.3, dim=2, **kwargs):
    """Waisted body q = (1 - z^2)(base + amplitude cos(2 pi z))^2 on [-1, 1]."""
    bb, aa = float(base), float(amplitude)
    if not bb - abs(aa) > 0.0:
        raise AlexlabArgumentError("Dumbbell requires base > |amplitude|")
    tp = 2.0 * np.pi

    def parts(z):
        zA = np.asarray(z, dtype=np.float64)
        ff = bb + aa * np.cos(tp * zA)
        f1 = -aa * tp * np.sin(tp * zA)
        f2 = -aa * tp * tp * np.cos(tp * zA)
        return zA, ff, f1, f2

    def q(z):
        zA, ff, _, _ = parts(z)
        return (1.0 - zA * zA) * ff * ff

    def dq(z):
        zA, ff, f1, _ = parts(z)
        return -2.0 * zA * ff * ff + 2.0 * (1.0 - zA * zA) * ff * f1

    def d2q(z):
        zA, ff, f1, f2 = parts(z)
        return -2.0 * ff * ff - 8.0 * zA * ff * f1 + 2.0 * (1.0 - zA * zA) * (f1 * f1 + ff * f2)

    return RevolutionProfile(q, dq, d2q, -1.0, 1.0, dim=dim, name="dumbbell", **kwargs)


# Append-only table: (name, builder, parameter defaults, designed conditions, description)
_CATALOG = [
    (
        "sphere",
        sphere,
        {"radius": 1.0, "center": 0.0},
        {"main-assumption": "holds", "S": "holds", "T": "holds", "LC": "holds", "moving-planes": "symmetric"},
        "round sphere",
    ),
    (
        "ellipsoid",
        ellipsoid,
        {"a": 0.6, "c": 1.0},
        {"main-assumption": "holds", "S": "holds", "T": "holds", "LC": "holds", "moving-planes": "symmetric"},
        "spheroid with polar axis along X_{n+1}",
    ),
    (
        "capped-cylinder",
        cappedCylinder,
        {"r": 0.5, "length": 1.0},
        {"main-assumption": "holds", "S": "holds", "T": "fails", "LC": "holds", "moving-planes": "inconclusive"},
        "cylinder with hemispherical caps; flat band of vertical tangency",
    ),
    (
        "pear",
        pear,
        {"coeffs": [0.3]},
        {"main-assumption": "fails", "S": "holds", "T": "holds", "LC": "holds", "moving-planes": "asymmetric"},
        "asymmetric convex body of revolution",
    ),
    (
        "flat-tangent",
        flatTangent,
        {"k": 4},
        {"main-assumption": "holds", "S": "holds", "T": "holds", "LC": "holds", "moving-planes": "symmetric"},
        "equatorial contact of order k; k='infinite' violates condition T",
    ),
    (
        "dumbbell",
        dumbbell,
        {"base": 0.5, "amplitude": 0.3},
        {"S": "fails", "LC": "fails"},
        "waisted body; the waist tangent plane cuts both bulges",
    ),
]


class SurfaceCatalog(object):
    """Lookup of builtin bodies by name."""

    def __init__(self, **kwargs):
        self.__dim = kwargs.get("dim", 2)
        self.__entries = {nm: (bld, params, designed, desc) for nm, bld, params, designed, desc in _CATALOG}

    def listCatalog(self):
        """Catalog rows in stable order: name, parameters, designed conditions and description."""
        return [{"name": nm, "parameters": dict(params), "designed": dict(designed), "description": desc} for nm, _, params, designed, desc in _CATALOG]

    def getNames(self):
        return [row[0] for row in _CATALOG]

    def getDesignedConditions(self, name):
        return dict(self.__entries[name][2]) if name in self.__entries else {}

    def build(self, name, parameters=None, dim=None, offset=0.0):
        """Instantiate a builtin body.

        Args:
            name (str): catalog name
            parameters (dict, optional): overrides of the builder parameters. Defaults to None.
            dim (int, optional): surface dimension n. Defaults to the catalog default.
            offset (float, optional): vertical translation. Defaults to 0.0.

        Raises:
            AlexlabInputError: unknown name or parameter

        Returns:
            RevolutionProfile: the body
        """
        if name not in self.__entries:
            raise AlexlabInputError("Unknown catalog surface %r (known: %s)" % (name, ", ".join(self.getNames())))
        builder, defaults, _, _ = self.__entries[name]
        kwD = dict(defaults)
        for ky, vl in (parameters or {}).items():
            if ky not in defaults:
                raise AlexlabInputError("Unknown parameter %r for surface %r" % (ky, name))
            kwD[ky] = vl
        prof = builder(dim=dim if dim is not None else self.__dim, **kwD)
        logger.debug("Built catalog surface %s with %r", name, kwD)
        return prof.shifted(offset) if offset else prof
