"""Two-by-two representation of Lorentz transformations.

Space-time points and four-momenta are Hermitian 2x2 matrices

    X = [[t + z, x - iy],
         [x + iy, t - z]],      det X = t^2 - z^2 - x^2 - y^2,

and a unimodular complex matrix G acts on them by X -> G X G^dagger.
Four-vectors are always ordered (t, z, x, y) and the metric is
diag(+1, -1, -1, -1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

__all__ = [
    "DomainError",
    "GroupElement",
    "HermitianMatrix",
    "FourVector",
    "GroupParameters",
    "METRIC",
    "IDENTITY",
    "rotation_y",
    "boost_z",
    "boost_x",
    "rotation_z",
    "gauge_triangular",
    "four_vector_to_matrix",
    "matrix_to_four_vector",
    "conjugate",
    "compose",
    "inverse",
    "invariant_mass_squared",
    "lift_to_four_by_four",
    "is_lorentz",
]

UNIMODULAR_TOL = 1e-9
HERMITIAN_TOL = 1e-12

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
METRIC.flags.writeable = False


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


def _finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def _as_2x2(matrix) -> np.ndarray:
    arr = np.asarray(matrix, dtype=complex)
    if arr.shape != (2, 2):
        raise DomainError(f"expected a 2x2 matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError("matrix entries must be finite")
    return arr


@dataclass(frozen=True)
class GroupElement:
    """Complex 2x2 matrix ``[[a11, a12], [a21, a22]]``.

    Construction does not enforce ``det == 1`` so that intermediate,
    non-normalized products can be represented; use :meth:`unimodular`
    for a checked element. Operations that require a group element call
    :meth:`check`.
    """

    a11: complex
    a12: complex
    a21: complex
    a22: complex

    @classmethod
    def from_matrix(cls, matrix) -> GroupElement:
        m = _as_2x2(matrix)
        return cls(complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]))

    @classmethod
    def unimodular(cls, matrix, tol: float = UNIMODULAR_TOL) -> GroupElement:
        return cls.from_matrix(matrix).check(tol)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a21, self.a22]], dtype=complex)

    @property
    def det(self) -> complex:
        return self.a11 * self.a22 - self.a12 * self.a21

    @property
    def dagger(self) -> np.ndarray:
        return self.matrix.conj().T

    def is_unimodular(self, tol: float = UNIMODULAR_TOL) -> bool:
        return abs(self.det - 1.0) <= tol

    def is_real(self, tol: float = 0.0) -> bool:
        """True when every entry is real, i.e. the element lies in Sp(2)."""
        return bool(np.all(np.abs(self.matrix.imag) <= tol))

    def check(self, tol: float = UNIMODULAR_TOL) -> GroupElement:
        if not self.is_unimodular(tol):
            raise DomainError(f"group element is not unimodular: det = {self.det!r}")
        return self

    def __matmul__(self, other: GroupElement) -> GroupElement:
        return GroupElement.from_matrix(self.matrix @ other.matrix)

    def __neg__(self) -> GroupElement:
        return GroupElement(-self.a11, -self.a12, -self.a21, -self.a22)


IDENTITY = GroupElement(1 + 0j, 0j, 0j, 1 + 0j)


def _check_hermitian(m: np.ndarray, tol: float) -> None:
    scale = float(np.max(np.abs(m)))
    bound = tol * scale
    if (
        abs(m[0, 0].imag) > bound
        or abs(m[1, 1].imag) > bound
        or abs(m[1, 0] - np.conj(m[0, 1])) > bound
    ):
        raise DomainError(f"matrix is not Hermitian within {tol:g} relative:\n{m}")


@dataclass(frozen=True)
class HermitianMatrix:
    """Hermitian 2x2 matrix holding a space-time point or a four-momentum.

    Construction validates Hermiticity to ``1e-12`` relative to the
    largest entry; nothing is silently symmetrized.
    """

    m11: complex
    m12: complex
    m21: complex
    m22: complex

    def __post_init__(self):
        _check_hermitian(self.matrix, HERMITIAN_TOL)

    @classmethod
    def from_matrix(cls, matrix) -> HermitianMatrix:
        m = _as_2x2(matrix)
        return cls(complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]))

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]], dtype=complex)

    @property
    def det(self) -> float:
        return self.m11.real * self.m22.real - (self.m12 * self.m21).real

    @property
    def trace(self) -> float:
        return self.m11.real + self.m22.real

    def allclose(self, other: HermitianMatrix, rtol: float = 1e-9) -> bool:
        """Entrywise closeness relative to the larger of the two max-norms."""
        a, b = self.matrix, other.matrix
        scale = max(float(np.max(np.abs(a))), float(np.max(np.abs(b))))
        return bool(np.max(np.abs(a - b)) <= rtol * scale)


class FourVector(NamedTuple):
    """Real four-vector in (t, z, x, y) order."""

    t: float
    z: float
    x: float
    y: float

    def minkowski_norm2(self) -> float:
        return self.t ** 2 - self.z ** 2 - self.x ** 2 - self.y ** 2


@dataclass(frozen=True)
class GroupParameters:
    """Named parameters for the closed-form generator families.

    theta: rotation about y, eta: boost along z, lambda_: boost along x,
    phi: rotation about z, gauge_gamma: parameter of the triangular
    massless little-group element.
    """

    theta: float = 0.0
    eta: float = 0.0
    lambda_: float = 0.0
    phi: float = 0.0
    gauge_gamma: float = 0.0

    def __post_init__(self):
        for name in ("theta", "eta", "lambda_", "phi", "gauge_gamma"):
            _finite(name, getattr(self, name))


def rotation_y(theta: float) -> GroupElement:
    """Rotation about the y axis by ``theta`` radians (real, in Sp(2))."""
    h = _finite("theta", theta) / 2
    c, s = math.cos(h), math.sin(h)
    return GroupElement(complex(c), complex(-s), complex(s), complex(c))


def boost_z(eta: float) -> GroupElement:
    """Boost along z with rapidity ``eta``: ``diag(e^{eta/2}, e^{-eta/2})``."""
    h = _finite("eta", eta) / 2
    return GroupElement(complex(math.exp(h)), 0j, 0j, complex(math.exp(-h)))


def boost_x(lambda_: float) -> GroupElement:
    """Boost along x with rapidity ``lambda_``."""
    h = _finite("lambda", lambda_) / 2
    c, s = math.cosh(h), math.sinh(h)
    return GroupElement(complex(c), complex(s), complex(s), complex(c))


def rotation_z(phi: float) -> GroupElement:
    """Rotation about z, ``diag(e^{i phi/2}, e^{-i phi/2})``.

    In optics the same matrix is a phase shifter between the x and y
    field components. ``rotation_z(2*pi)`` is ``-1``: the double cover.
    """
    h = _finite("phi", phi) / 2
    c, s = math.cos(h), math.sin(h)
    return GroupElement(complex(c, s), 0j, 0j, complex(c, -s))


def gauge_triangular(gauge_gamma: float) -> GroupElement:
    """Triangular element ``[[1, -gamma], [0, 1]]`` of the massless little group."""
    g = _finite("gauge_gamma", gauge_gamma)
    return GroupElement(1 + 0j, complex(-g), 0j, 1 + 0j)


def four_vector_to_matrix(v) -> HermitianMatrix:
    v = tuple(v)
    if len(v) != 4:
        raise DomainError(f"four-vector needs 4 components, got {len(v)}")
    t, z, x, y = (_finite(n, c) for n, c in zip("tzxy", v))
    return HermitianMatrix(complex(t + z), complex(x, -y), complex(x, y), complex(t - z))


def matrix_to_four_vector(m: HermitianMatrix) -> FourVector:
    """Inverse of :func:`four_vector_to_matrix`.

    Raises
    ------
    DomainError
        If ``m`` is a raw array that is not Hermitian within tolerance.
    """
    if not isinstance(m, HermitianMatrix):
        m = HermitianMatrix.from_matrix(m)
    a, d = m.m11.real, m.m22.real
    return FourVector((a + d) / 2, (a - d) / 2, m.m12.real, -m.m12.imag)


def compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    g1.check()
    g2.check()
    return g1 @ g2


def inverse(g: GroupElement) -> GroupElement:
    """Inverse of a unimodular element (the adjugate)."""
    g.check()
    return GroupElement(g.a22, -g.a12, -g.a21, g.a11)


def conjugate(g: GroupElement, m: HermitianMatrix) -> HermitianMatrix:
    """Apply ``M -> G M G^dagger``; determinant and Hermiticity are preserved."""
    g.check()
    gm = g.matrix
    return HermitianMatrix.from_matrix(gm @ m.matrix @ gm.conj().T)


def invariant_mass_squared(p: HermitianMatrix) -> float:
    """``det P``; negative for imaginary-mass momenta."""
    return p.det


_BASIS = [four_vector_to_matrix(e) for e in np.eye(4)]


def lift_to_four_by_four(g: GroupElement) -> np.ndarray:
    """4x4 Lorentz matrix acting on (t, z, x, y) induced by ``g``.

    Column j is the image of the j-th basis four-vector under
    conjugation, so ``lift(g) @ v`` equals the conjugated four-vector
    for every ``v``. ``lift(-g) == lift(g)`` exactly.
    """
    g.check()
    lam = np.column_stack([matrix_to_four_vector(conjugate(g, e)) for e in _BASIS])
    lam.flags.writeable = False
    return lam


def is_lorentz(lam: np.ndarray, tol: float = 1e-9) -> bool:
    """Check ``lam.T @ g @ lam == g`` and ``det lam == +1``.

    The tolerance is relative to ``max(1, |lam|_max**2)`` since both
    residuals are quadratic (or quartic for the determinant) in the
    entries of ``lam``.
    """
    lam = np.asarray(lam, dtype=float)
    scale = max(1.0, float(np.max(np.abs(lam))) ** 2)
    metric_ok = np.max(np.abs(lam.T @ METRIC @ lam - METRIC)) <= tol * scale
    det_ok = abs(np.linalg.det(lam) - 1.0) <= tol * scale ** 2
    return bool(metric_ok and det_ok)
