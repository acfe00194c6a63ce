"""Wigner's little groups in the 2x2 representation.

A Wigner matrix W leaves a momentum invariant, ``P = W P W^dagger``.
Standard momenta and their stabilizers:

    massive          m * 1              rotation_y(theta)
    imaginary mass   mu * diag(1, -1)   boost_x(lambda)
    massless         w * [[1,0],[0,0]]  gauge_triangular(gamma)

The massless group is reached from the massive one by boosting the
rotation, ``B(eta) R(theta) B(eta)^-1``, and letting eta grow while
``e^eta sin(theta/2)`` is held at gamma.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .lorentz_core import (
    DomainError,
    FourVector,
    GroupElement,
    HermitianMatrix,
    boost_x,
    boost_z,
    compose,
    conjugate,
    gauge_triangular,
    inverse,
    lift_to_four_by_four,
    matrix_to_four_vector,
    rotation_y,
    rotation_z,
    _finite,
)

__all__ = [
    "MomentumClass",
    "WignerElement",
    "FourPotential",
    "classify_momentum",
    "standard_momentum",
    "standard_wigner",
    "massless_little_group",
    "frame_change",
    "little_group_element",
    "boost_parameter_for",
    "contracted_wigner",
    "contraction_theta",
    "contraction_residual",
    "apply_gauge_to_potential",
]

CLASSIFY_TOL = 1e-9
STABILIZER_RTOL = 1e-9


class MomentumClass(enum.Enum):
    MASSIVE = "Massive"
    MASSLESS = "Massless"
    IMAGINARY_MASS = "ImaginaryMass"
    NULL = "Null"

    @classmethod
    def parse(cls, name: str) -> MomentumClass:
        key = name.strip().lower().replace("_", "").replace("-", "")
        aliases = {
            "massive": cls.MASSIVE,
            "massless": cls.MASSLESS,
            "imaginary": cls.IMAGINARY_MASS,
            "imaginarymass": cls.IMAGINARY_MASS,
            "null": cls.NULL,
        }
        try:
            return aliases[key]
        except KeyError:
            raise DomainError(f"unknown momentum class {name!r}") from None


@dataclass(frozen=True)
class WignerElement:
    """A group element together with the momentum it leaves invariant."""

    group_element: GroupElement
    stabilized_momentum: HermitianMatrix

    def residual(self) -> float:
        """Max-norm of ``W P W^dagger - P`` relative to the max-norm of P."""
        p = self.stabilized_momentum.matrix
        moved = conjugate(self.group_element, self.stabilized_momentum).matrix
        return float(np.max(np.abs(moved - p)) / np.max(np.abs(p)))

    def is_stabilizer(self, rtol: float = STABILIZER_RTOL) -> bool:
        return self.residual() <= rtol


@dataclass(frozen=True)
class FourPotential:
    """Photon four-potential ``(A0, Az, Ax, Ay)`` for a photon of frequency
    ``omega`` moving along z, i.e. with momentum ``(omega, omega, 0, 0)``."""

    potential: FourVector
    omega: float = 1.0

    def __post_init__(self):
        for n, c in zip("tzxy", self.potential):
            _finite(f"A_{n}", c)
        if not _finite("omega", self.omega) > 0:
            raise DomainError("photon frequency omega must be positive")
        object.__setattr__(self, "potential", FourVector(*map(float, self.potential)))

    @property
    def photon_momentum(self) -> FourVector:
        return FourVector(self.omega, self.omega, 0.0, 0.0)


def classify_momentum(p: HermitianMatrix, tol: float = CLASSIFY_TOL) -> MomentumClass:
    """Wigner class of a four-momentum from the sign of ``det P``.

    The cutoff is ``tol * (trace/2)**2`` so that it scales with energy.
    Negative-energy momenta (negative trace) are rejected.
    """
    if not np.any(p.matrix):
        return MomentumClass.NULL
    scale = p.trace / 2
    if scale < 0:
        raise DomainError("negative-energy momentum (trace < 0) is not classified")
    det = p.det
    cut = tol * scale * scale
    if det > cut:
        return MomentumClass.MASSIVE
    if det < -cut:
        return MomentumClass.IMAGINARY_MASS
    return MomentumClass.MASSLESS


def standard_momentum(cls: MomentumClass, scale: float = 1.0) -> HermitianMatrix:
    scale = _finite("scale", scale)
    if scale <= 0:
        raise DomainError("scale must be positive")
    if cls is MomentumClass.MASSIVE:
        diag = (scale, scale)
    elif cls is MomentumClass.IMAGINARY_MASS:
        diag = (scale, -scale)
    elif cls is MomentumClass.MASSLESS:
        diag = (scale, 0.0)
    else:
        raise DomainError("the null momentum has no standard form")
    return HermitianMatrix(complex(diag[0]), 0j, 0j, complex(diag[1]))


_STANDARD_GENERATOR = {
    MomentumClass.MASSIVE: rotation_y,
    MomentumClass.IMAGINARY_MASS: boost_x,
    MomentumClass.MASSLESS: gauge_triangular,
}


def standard_wigner(cls: MomentumClass, param: float, scale: float = 1.0) -> WignerElement:
    """Stabilizer of the standard momentum of ``cls``.

    ``param`` is theta (massive), lambda (imaginary mass) or gamma
    (massless).
    """
    if cls is MomentumClass.NULL:
        raise DomainError("the null momentum has no standard Wigner matrix")
    return WignerElement(_STANDARD_GENERATOR[cls](param), standard_momentum(cls, scale))


def massless_little_group(gauge_gamma: float, phi: float = 0.0) -> GroupElement:
    """General massless little-group element ``Z(phi) T(gamma)``.

    The helicity rotation is composed explicitly; the triangular factor
    alone carries no phi dependence.
    """
    return compose(rotation_z(phi), gauge_triangular(gauge_gamma))


def frame_change(p: HermitianMatrix, tol: float = CLASSIFY_TOL):
    """Find ``(cls, A, standard)`` with ``conjugate(A, standard) == p``.

    ``A = Z(phi) R(theta) B(eta)``: a boost along z fixes the energy and
    momentum magnitude, the rotations then point the momentum along its
    direction.
    """
    cls = classify_momentum(p, tol)
    if cls is MomentumClass.NULL:
        raise DomainError("the null momentum has no little group element")
    t, z, x, y = matrix_to_four_vector(p)
    pmag = math.sqrt(z * z + x * x + y * y)

    if cls is MomentumClass.MASSIVE:
        mass = math.sqrt(p.det)
        standard = standard_momentum(cls, mass)
        eta = math.asinh(pmag / mass)
    elif cls is MomentumClass.IMAGINARY_MASS:
        mu = math.sqrt(-p.det)
        standard = standard_momentum(cls, mu)
        eta = math.asinh(t / mu)
    else:
        # unit standard form (1/2, 1/2, 0, 0) boosted to energy t
        standard = standard_momentum(cls, 1.0)
        eta = math.log(2 * t)

    if pmag > 0:
        theta = math.atan2(math.hypot(x, y), z)
        phi = math.atan2(-y, x)
    else:
        theta = phi = 0.0
    a = compose(compose(rotation_z(phi), rotation_y(theta)), boost_z(eta))
    return cls, a, standard


def little_group_element(p: HermitianMatrix, param: float, tol: float = CLASSIFY_TOL) -> WignerElement:
    """Little-group element of an arbitrary momentum.

    The standard Wigner matrix of the momentum's class is carried to
    ``p`` by the frame change ``A``: ``W = A W_std A^-1``.
    """
    cls, a, standard = frame_change(p, tol)
    w_std = _STANDARD_GENERATOR[cls](param)
    w = compose(compose(a, w_std), inverse(a))
    return WignerElement(w, p)


def boost_parameter_for(p0: float, p: float) -> float:
    """Rapidity taking a particle from rest to momentum ``p`` at energy ``p0``.

    ``e^eta = sqrt((p0 + p) / (p0 - p))``, which approaches ``2p/m`` for
    ``p >> m``.
    """
    p0 = _finite("p0", p0)
    p = _finite("p", p)
    if p < 0:
        raise DomainError("momentum magnitude must be non-negative")
    if p >= p0:
        raise DomainError(f"no finite rapidity from rest: p={p!r} >= p0={p0!r}")
    return 0.5 * math.log((p0 + p) / (p0 - p))


def _contraction_sine(gauge_gamma: float, eta: float) -> float:
    g = _finite("gauge_gamma", gauge_gamma)
    e = _finite("eta", eta)
    s = g * math.exp(-e)
    if abs(s) > 1:
        raise DomainError(f"|gamma| * e^-eta = {abs(s):g} > 1; no rotation angle exists")
    return s


def contracted_wigner(gauge_gamma: float, eta: float) -> GroupElement:
    """Boosted rotation ``B(eta) R(theta) B(eta)^-1`` at fixed ``gamma``.

    theta is eliminated through ``sin(theta/2) = gamma * e^-eta``, so
    the upper-right entry is exactly ``-gamma`` and the element tends to
    ``gauge_triangular(gamma)`` as eta grows.
    """
    s = _contraction_sine(gauge_gamma, eta)
    c = math.sqrt(1 - s * s) if abs(s) < 0.5 else math.sqrt((1 - s) * (1 + s))
    g = float(gauge_gamma)
    return GroupElement(complex(c), complex(-g), complex(s * math.exp(-eta)), complex(c))


def contraction_theta(gauge_gamma: float, eta: float) -> float:
    """Rotation angle ``2 asin(gamma e^-eta)`` used by :func:`contracted_wigner`."""
    return 2 * math.asin(_contraction_sine(gauge_gamma, eta))


def contraction_residual(gauge_gamma: float, eta: float) -> float:
    diff = contracted_wigner(gauge_gamma, eta).matrix - gauge_triangular(gauge_gamma).matrix
    return float(np.max(np.abs(diff)))


def apply_gauge_to_potential(gauge_gamma: float, a: FourPotential, rtol: float = 1e-12):
    """Act with the lifted triangular element on a photon four-potential.

    Returns ``(a_new, c)``. When ``A0 == Az`` the change is a pure gauge
    shift ``a_new - a = c * p`` along the photon momentum
    ``p = (omega, omega, 0, 0)``; otherwise ``c`` is None.
    """
    lam = lift_to_four_by_four(gauge_triangular(gauge_gamma))
    old = np.array(a.potential)
    new = FourPotential(FourVector(*(lam @ old)), a.omega)
    a0, az = old[0], old[1]
    if abs(a0 - az) > rtol * max(1.0, float(np.max(np.abs(old)))):
        return new, None
    c = (new.potential.t - a0) / a.omega
    return new, float(c)

