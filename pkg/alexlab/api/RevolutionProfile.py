##
# File:    RevolutionProfile.py
# Date:    5-Feb-2026
# Version: 0.001 Initial version
#
# Updates:
#  18-Feb-2026  store the squared radius q = rho^2 so the poles stay regular
#  26-Feb-2026  analytic pole patches solved from q(Z) = |x'|^2
#  10-Mar-2026  side graph patches in tangency frames
##
"""
Closed hypersurfaces of revolution about the X_{n+1} axis.

A profile is described by the squared radius q(z) = rho(z)^2 on [zMin, zMax]
together with q' and q''.  q vanishes with a simple root at both ends, so the
surface closes smoothly at the poles.  The enclosed region G is
{(x', z) : |x'|^2 < q(z)}.

"""
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging

import numpy as np
from scipy import optimize

from alexlab.api.NumericUtils import bisectRootArray
from alexlab.api.ScalarField import ScalarField
from alexlab.api.SurfaceCurvature import CurvatureData, graphCurvatureData, revolutionCurvatures, revolutionPrincipalCurvatures
from alexlab.io.AlexlabExceptions import AlexlabArgumentError, AlexlabDomainError, AlexlabGeometryError

logger = logging.getLogger(__name__)


class RevolutionProfile(object):
    """Body of revolution |x'|^2 = q(z), z in [zMin, zMax], in R^{n+1}."""

    def __init__(self, q, dq, d2q, zMin, zMax, dim=2, name="profile", **kwargs):
        """Create and validate a profile.

        Args:
            q (callable): vectorized squared radius
            dq (callable): vectorized q'
            d2q (callable): vectorized q''
            zMin (float): bottom pole height
            zMax (float): top pole height
            dim (int, optional): surface dimension n (ambient n + 1). Defaults to 2.
            name (str, optional): label. Defaults to "profile".

        Keyword Args:
            poleWindow (float): distance from a pole inside which curvature queries use pole patches (default: 1e-3)
            closeTol (float): tolerance for q at the poles (default: 1e-9)
            samples (int): validation samples (default: 2001)

        Raises:
            AlexlabGeometryError: the profile does not close up or q is not positive inside
        """
        if not 1 <= int(dim) <= 7:
            raise AlexlabArgumentError("Profile surface dimension must lie in 1..7 (got %r)" % dim)
        if not float(zMax) > float(zMin):
            raise AlexlabArgumentError("Profile requires zMax > zMin")
        self.__q = q
        self.__dq = dq
        self.__d2q = d2q
        self.__zMin = float(zMin)
        self.__zMax = float(zMax)
        self.__dim = int(dim)
        self.__name = name
        self.__poleWindow = kwargs.get("poleWindow", 1.0e-3)
        self.__closeTol = kwargs.get("closeTol", 1.0e-9)
        self.__nSamples = kwargs.get("samples", 2001)
        self.__poleCache = {}
        self.__validate()

    def __validate(self):
        zV = np.linspace(self.__zMin, self.__zMax, self.__nSamples)
        qV = self.q(zV)
        scale = max(1.0, float(np.max(qV)))
        if abs(float(qV[0])) > self.__closeTol * scale or abs(float(qV[-1])) > self.__closeTol * scale:
            raise AlexlabGeometryError("Profile %s does not close up: q(zMin)=%r q(zMax)=%r" % (self.__name, float(qV[0]), float(qV[-1])))
        if not np.all(qV[1:-1] > 0.0):
            bad = zV[1:-1][qV[1:-1] <= 0.0][0]
            raise AlexlabGeometryError("Profile %s has nonpositive radius at z=%r" % (self.__name, float(bad)))
        if not np.all(np.isfinite(self.dq(zV))) or not np.all(np.isfinite(self.d2q(zV))):
            raise AlexlabGeometryError("Profile %s has non-finite derivatives" % self.__name)

    #
    # -- accessors
    #
    def getName(self):
        return self.__name

    def getDim(self):
        return self.__dim

    def getRange(self):
        return self.__zMin, self.__zMax

    def getTop(self):
        return self.__zMax

    def getBottom(self):
        return self.__zMin

    def getPoleWindow(self):
        return self.__poleWindow

    def getDiameter(self):
        return max(self.__zMax - self.__zMin, 2.0 * self.getMaxRadius())

    def q(self, z):
        return np.asarray(self.__q(np.asarray(z, dtype=np.float64)), dtype=np.float64)

    def dq(self, z):
        return np.asarray(self.__dq(np.asarray(z, dtype=np.float64)), dtype=np.float64)

    def d2q(self, z):
        return np.asarray(self.__d2q(np.asarray(z, dtype=np.float64)), dtype=np.float64)

    def qDerivatives(self, z):
        return self.q(z), self.dq(z), self.d2q(z)

    def rho(self, z):
        return np.sqrt(np.maximum(self.q(z), 0.0))

    def drho(self, z):
        """rho' = q'/(2 rho), singular at the poles."""
        return self.dq(z) / (2.0 * self.rho(z))

    def d2rho(self, z):
        """rho'' = (2 q q'' - q'^2)/(4 q^(3/2)), singular at the poles."""
        qV, dqV, d2qV = self.qDerivatives(z)
        return (2.0 * qV * d2qV - dqV * dqV) / (4.0 * qV ** 1.5)

    def getMaxRadius(self):
        zV = np.linspace(self.__zMin, self.__zMax, self.__nSamples)
        qV = self.q(zV)
        ii = int(np.argmax(qV))
        lo, hi = zV[max(ii - 1, 0)], zV[min(ii + 1, zV.size - 1)]
        res = optimize.minimize_scalar(lambda zz: -float(self.q(zz)), bounds=(lo, hi), method="bounded", options={"xatol": 1.0e-12})
        return float(np.sqrt(max(float(qV[ii]), -float(res.fun))))

    def nuLast(self, z):
        """Vertical component of the inner unit normal, q'/sqrt(4q + q'^2)."""
        qV, dqV = self.q(z), self.dq(z)
        return dqV / np.sqrt(4.0 * np.maximum(qV, 0.0) + dqV * dqV)

    def pointAt(self, z, azimuth=0.0):
        """Surface point (rho e, z) with e in the (x_1, x_2) plane at the given azimuth."""
        pt = np.zeros(self.__dim + 1)
        rr = float(self.rho(z))
        pt[0] = rr * np.cos(azimuth)
        if self.__dim > 1:
            pt[1] = rr * np.sin(azimuth)
        pt[-1] = float(z)
        return pt

    def normalAt(self, z, azimuth=0.0):
        """Inner unit normal (-2 rho e, q')/sqrt(4q + q'^2)."""
        qV, dqV = float(self.q(z)), float(self.dq(z))
        dd = np.sqrt(4.0 * max(qV, 0.0) + dqV * dqV)
        nu = np.zeros(self.__dim + 1)
        rr = np.sqrt(max(qV, 0.0))
        nu[0] = -2.0 * rr * np.cos(azimuth) / dd
        if self.__dim > 1:
            nu[1] = -2.0 * rr * np.sin(azimuth) / dd
        nu[-1] = dqV / dd
        return nu

    def insideMeasure(self, r, z):
        """q(z) - r^2 inside the height range, -inf outside; nonnegative exactly on the closure of G."""
        zA = np.asarray(z, dtype=np.float64)
        val = self.q(zA) - np.asarray(r, dtype=np.float64) ** 2
        return np.where((zA >= self.__zMin) & (zA <= self.__zMax), val, -np.inf)

    def contains(self, points, tol=1.0e-12):
        """Membership of ambient points (..., n+1) in the closed region G-bar."""
        pA = np.asarray(points, dtype=np.float64)
        rr = np.sqrt(np.sum(pA[..., :-1] ** 2, axis=-1))
        return self.insideMeasure(rr, pA[..., -1]) >= -tol

    #
    # -- curvature
    #
    def curvatureArray(self, z):
        """Meridian and parallel curvatures at heights z (regular through simple-root poles)."""
        return revolutionPrincipalCurvatures(*self.qDerivatives(z))

    def meanCurvatureArray(self, z):
        kMer, kPar = self.curvatureArray(z)
        return (kMer + (self.__dim - 1) * kPar) / self.__dim

    def principalCurvaturesArray(self, z):
        """Ascending principal curvatures at heights z, shape (..., n)."""
        kMer, kPar = self.curvatureArray(z)
        kA = np.concatenate([np.asarray(kMer)[..., None], np.repeat(np.asarray(kPar)[..., None], self.__dim - 1, axis=-1)], axis=-1)
        return np.sort(kA, axis=-1)

    def curvatureAt(self, z):
        """CurvatureData at height z; pole windows are served by the pole graph patches."""
        zz = float(z)
        if not self.__zMin <= zz <= self.__zMax:
            raise AlexlabDomainError("Height %r outside profile range of %s" % (zz, self.__name))
        if self.__zMax - zz < self.__poleWindow:
            return self.__poleCurvature("top", zz)
        if zz - self.__zMin < self.__poleWindow:
            return self.__poleCurvature("bottom", zz)
        return revolutionCurvatures(self, zz)

    def meanCurvatureAt(self, z):
        return self.curvatureAt(z).meanCurvature

    def __poleCurvature(self, which, zz):
        patch = self.polePatch(which)
        xV = np.zeros(self.__dim)
        xV[0] = float(self.rho(zz))
        cd = graphCurvatureData(patch, xV)
        sgn = -1.0 if which == "top" else 1.0
        normal = np.concatenate([cd.normal[:-1], [sgn * cd.normal[-1]]])
        point = np.concatenate([xV, [zz]])
        return CurvatureData(point, normal, cd.curvatures, cd.secondForm)

    def __monotoneSpan(self, which):
        zV = np.linspace(self.__zMin, self.__zMax, self.__nSamples)
        dqV = self.dq(zV)
        if which == "top":
            idx = np.nonzero(dqV[::-1] >= 0.0)[0]
            count = int(idx[0]) if idx.size else zV.size
        else:
            idx = np.nonzero(dqV <= 0.0)[0]
            count = int(idx[0]) if idx.size else zV.size
        span = max(count - 2, 1) * (zV[1] - zV[0])
        return min(span, 0.25 * (self.__zMax - self.__zMin))

    def polePatch(self, which="top"):
        """Graph of the surface over the horizontal tangent plane at a pole.

        The height is measured toward the body (along the inner normal), so the
        patch is u(x') = zMax - Z(|x'|^2) at the top and Z(|x'|^2) - zMin at the
        bottom, where q(Z(s)) = s on the monotone end segment of the profile.

        Returns:
            ScalarField: analytic patch on a box inside the monotone segment
        """
        if which not in ("top", "bottom"):
            raise AlexlabArgumentError("Pole must be 'top' or 'bottom' (got %r)" % which)
        if which in self.__poleCache:
            return self.__poleCache[which]
        span = self.__monotoneSpan(which)
        if which == "top":
            zPole, zInner, sgn = self.__zMax, self.__zMax - span, -1.0
        else:
            zPole, zInner, sgn = self.__zMin, self.__zMin + span, 1.0
        qInner = float(self.q(zInner))
        half = 0.999 * np.sqrt(qInner / self.__dim)

        def solveZ(sA):
            lo = np.full(np.shape(sA), min(zPole, zInner))
            hi = np.full(np.shape(sA), max(zPole, zInner))
            return bisectRootArray(lambda zA: self.q(zA) - sA, lo, hi, tol=1.0e-15, strict=False)

        def derivs(pA):
            sA = np.sum(pA * pA, axis=-1)
            zA = solveZ(sA)
            dqA = self.dq(zA)
            zs = 1.0 / dqA
            zss = -self.d2q(zA) / dqA ** 3
            return zA, zs, zss

        def func(pA):
            zA, _, _ = derivs(pA)
            return sgn * (zA - zPole)

        def grad(pA):
            _, zs, _ = derivs(pA)
            return sgn * 2.0 * zs[..., None] * pA

        def hess(pA):
            _, zs, zss = derivs(pA)
            eye = np.eye(pA.shape[-1])
            return sgn * (2.0 * zs[..., None, None] * eye + 4.0 * zss[..., None, None] * pA[..., :, None] * pA[..., None, :])

        patch = ScalarField(func, self.__dim, box=[(-half, half)] * self.__dim, gradient=grad, hessian=hess, name="%s-%s-pole" % (self.__name, which))
        self.__poleCache[which] = patch
        return patch

    def sideGraph(self, zBar, delta):
        """Local graph v(t, y) = rho(zBar) - sqrt(q(zBar - t) - |y|^2) in a vertical-tangency frame.

        t points down (t = zBar - X_{n+1}), y spans the horizontal tangent directions and the
        graph height is measured along the inner normal -e_1.
        """
        zBar = float(zBar)
        rBar = float(self.rho(zBar))
        dd = float(delta)
        if not dd > 0.0:
            raise AlexlabArgumentError("Frame half-width must be positive")
        nn = self.__dim

        def parts(pA):
            tA = pA[..., 0]
            yA = pA[..., 1:]
            zA = zBar - tA
            qq = self.q(zA) - np.sum(yA * yA, axis=-1)
            gQ = np.concatenate([-self.dq(zA)[..., None], -2.0 * yA], axis=-1)
            hQ = np.zeros(pA.shape + (nn,))
            hQ[..., 0, 0] = self.d2q(zA)
            for ii in range(1, nn):
                hQ[..., ii, ii] = -2.0
            return qq, gQ, hQ

        def func(pA):
            qq, _, _ = parts(pA)
            return rBar - np.sqrt(qq)

        def grad(pA):
            qq, gQ, _ = parts(pA)
            return -gQ / (2.0 * np.sqrt(qq))[..., None]

        def hess(pA):
            qq, gQ, hQ = parts(pA)
            sq = np.sqrt(qq)
            return -hQ / (2.0 * sq)[..., None, None] + gQ[..., :, None] * gQ[..., None, :] / (4.0 * sq ** 3)[..., None, None]

        return ScalarField(func, nn, box=[(-dd, dd)] * nn, gradient=grad, hessian=hess, name="%s-side-%.6g" % (self.__name, zBar))

    def shifted(self, dz):
        """The same body translated by dz along X_{n+1}."""
        dz = float(dz)
        return RevolutionProfile(
            lambda z: self.__q(np.asarray(z) - dz),
            lambda z: self.__dq(np.asarray(z) - dz),
            lambda z: self.__d2q(np.asarray(z) - dz),
            self.__zMin + dz,
            self.__zMax + dz,
            dim=self.__dim,
            name=self.__name,
            poleWindow=self.__poleWindow,
            closeTol=self.__closeTol,
            samples=self.__nSamples,
        )

    def __repr__(self):
        return "RevolutionProfile(%s, n=%d, z in [%g, %g])" % (self.__name, self.__dim, self.__zMin, self.__zMax)
