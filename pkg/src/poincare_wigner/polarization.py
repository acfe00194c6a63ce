"""Jones vectors, coherency matrices and the decoherence angle.

The coherency matrix of a beam with unit intensities in both transverse
components is

    C = [[1,                 cos(xi) e^{-i phi}],
         [cos(xi) e^{i phi}, 1                 ]],    det C = sin(xi)^2,

with xi = 0 fully coherent and xi = pi/2 totally incoherent. The same
unimodular matrices that act on four-momenta act on C by G C G^dagger,
so det C plays the role of mass squared, but here it is a free knob.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .lorentz_core import (
    HERMITIAN_TOL,
    DomainError,
    GroupElement,
    HermitianMatrix,
    _as_2x2,
    _check_hermitian,
    _finite,
    rotation_y,
    rotation_z,
)

__all__ = [
    "JonesVector",
    "CoherencyMatrix",
    "DecoherenceParams",
    "StokesVector",
    "FourMomentumMapping",
    "jones",
    "apply_to_jones",
    "coherency_from_params",
    "coherency_from_signals",
    "transform_coherency",
    "decoherence_angle",
    "diagonalize_coherency",
    "stokes",
    "coherency_to_four_momentum",
]

PSD_TOL = 1e-12


@dataclass(frozen=True)
class JonesVector:
    """Complex x and y field amplitudes; plane-wave factors are absorbed
    into the phases."""

    psi1: complex
    psi2: complex

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.psi1, self.psi2], dtype=complex)

    def coherency(self) -> CoherencyMatrix:
        """Coherency matrix of this fully coherent field."""
        v = self.vector
        return CoherencyMatrix.from_matrix(np.outer(v.conj(), v))


@dataclass(frozen=True)
class CoherencyMatrix:
    """Hermitian positive-semidefinite matrix ``S_ij = <psi_i^* psi_j>``."""

    s11: complex
    s12: complex
    s21: complex
    s22: complex

    def __post_init__(self):
        m = self.matrix
        _check_hermitian(m, HERMITIAN_TOL)
        a, d = self.s11.real, self.s22.real
        if a < 0 or d < 0:
            raise DomainError("coherency matrix intensities must be non-negative")
        if self.det < -PSD_TOL * (a + d) ** 2:
            raise DomainError(f"coherency matrix is not positive semidefinite: det = {self.det!r}")

    @classmethod
    def from_matrix(cls, matrix) -> CoherencyMatrix:
        m = _as_2x2(matrix)
        return cls(complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]))

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.s11, self.s12], [self.s21, self.s22]], dtype=complex)

    @property
    def det(self) -> float:
        return self.s11.real * self.s22.real - (self.s12 * self.s21).real

    @property
    def intensity(self) -> float:
        return self.s11.real + self.s22.real

    def as_hermitian(self) -> HermitianMatrix:
        return HermitianMatrix.from_matrix(self.matrix)


@dataclass(frozen=True)
class DecoherenceParams:
    xi: float
    phi: float = 0.0

    def __post_init__(self):
        xi = _finite("xi", self.xi)
        _finite("phi", self.phi)
        if not 0.0 <= xi <= math.pi / 2:
            raise DomainError(f"decoherence angle must lie in [0, pi/2], got {xi!r}")


class StokesVector(NamedTuple):
    s0: float
    s1: float
    s2: float
    s3: float

    @property
    def degree_of_polarization(self) -> float:
        if self.s0 == 0:
            return 0.0
        return math.sqrt(self.s1 ** 2 + self.s2 ** 2 + self.s3 ** 2) / self.s0

    @property
    def sphere_point(self) -> tuple[float, float, float]:
        """Normalized (s1, s2, s3)/s0: a point on or inside the Poincare sphere."""
        if self.s0 == 0:
            return (0.0, 0.0, 0.0)
        return (self.s1 / self.s0, self.s2 / self.s0, self.s3 / self.s0)


class FourMomentumMapping(NamedTuple):
    momentum_matrix: HermitianMatrix
    mass: float
    momentum: float
    energy: float


def jones(a1: float, a2: float, ph1: float = 0.0, ph2: float = 0.0) -> JonesVector:
    a1, a2 = _finite("a1", a1), _finite("a2", a2)
    if a1 < 0 or a2 < 0:
        raise DomainError("Jones amplitudes must be non-negative")
    ph1, ph2 = _finite("ph1", ph1), _finite("ph2", ph2)
    return JonesVector(a1 * complex(math.cos(ph1), math.sin(ph1)),
                       a2 * complex(math.cos(ph2), math.sin(ph2)))


def apply_to_jones(g: GroupElement, j: JonesVector) -> JonesVector:
    out = g.matrix @ j.vector
    return JonesVector(complex(out[0]), complex(out[1]))


def _cos_xi(xi: float) -> float:
    # exact at both endpoints: cos(pi/2) evaluates to 0.0, not 6e-17
    return math.sin(math.pi / 2 - xi)


def coherency_from_params(d: DecoherenceParams) -> CoherencyMatrix:
    c = _cos_xi(d.xi)
    off = c * complex(math.cos(d.phi), -math.sin(d.phi))
    return CoherencyMatrix(1 + 0j, off, off.conjugate(), 1 + 0j)


def coherency_from_signals(x_samples, y_samples, normalize: bool = False) -> CoherencyMatrix:
    """Estimate the coherency matrix from sampled field components.

    Uses the plain time average ``S_ij = mean(conj(psi_i) * psi_j)`` at
    zero lag. With ``normalize`` the result is scaled so that
    ``max(S11, S22) == 1``.
    """
    x = np.asarray(x_samples, dtype=complex).ravel()
    y = np.asarray(y_samples, dtype=complex).ravel()
    if x.size == 0 or x.size != y.size:
        raise DomainError(f"need two equal, non-empty sample sequences (got {x.size} and {y.size})")
    fields = np.vstack([x, y])
    s = fields.conj() @ fields.T / x.size
    if normalize:
        peak = max(s[0, 0].real, s[1, 1].real)
        if peak > 0:
            s = s / peak
    return CoherencyMatrix.from_matrix(s)


def transform_coherency(g: GroupElement, c: CoherencyMatrix) -> CoherencyMatrix:
    g.check()
    gm = g.matrix
    return CoherencyMatrix.from_matrix(gm @ c.matrix @ gm.conj().T)


def decoherence_angle(c: CoherencyMatrix) -> float:
    """Decoherence angle xi in [0, pi/2].

    C is first normalized by ``sqrt(S11 S22)`` so that the unit-diagonal
    form is the canonical case; then ``det = sin(xi)^2`` and
    ``|S12| = cos(xi)``. A matrix with one vanishing intensity is fully
    polarized (xi = 0).

    Raises
    ------
    DomainError
        If the normalized determinant is negative beyond tolerance.
    """
    norm = c.s11.real * c.s22.real
    if norm <= 0:
        return 0.0
    r = abs(c.s12) / math.sqrt(norm)
    det_n = (1 - r) * (1 + r)
    if det_n < -PSD_TOL:
        raise DomainError(f"not a physical coherency matrix: normalized det = {det_n!r}")
    return math.atan2(math.sqrt(max(det_n, 0.0)), min(r, 1.0))


def diagonalize_coherency(c: CoherencyMatrix):
    """Eigenvalues (descending) and a unimodular unitary U with U C U^dagger diagonal.

    U is built as ``R(theta) Z(phi)``: the phase shifter makes the
    off-diagonal entry real and non-negative, then the rotation removes
    it, leaving the larger eigenvalue in the upper slot.
    """
    phase = -math.atan2(c.s12.imag, c.s12.real) if c.s12 != 0 else 0.0
    half_split = (c.s11.real - c.s22.real) / 2
    theta = -math.atan2(abs(c.s12), half_split)
    u = rotation_y(theta) @ rotation_z(phase)
    mean = c.intensity / 2
    radius = math.hypot(half_split, abs(c.s12))
    return (mean + radius, mean - radius), u


def stokes(c: CoherencyMatrix) -> StokesVector:
    s = StokesVector(
        c.s11.real + c.s22.real,
        c.s11.real - c.s22.real,
        (c.s12 + c.s21).real,
        (1j * (c.s12 - c.s21)).real,
    )
    if math.sqrt(s.s1 ** 2 + s.s2 ** 2 + s.s3 ** 2) > s.s0 * (1 + 1e-9):
        raise DomainError("Stokes vector lies outside the Poincare sphere")
    return s


def coherency_to_four_momentum(d: DecoherenceParams, p0: float) -> FourMomentumMapping:
    """Four-momentum at fixed energy ``p0`` with mass ``p0 sin(xi)``.

    The diagonalized coherency matrix scaled by p0 is the momentum matrix
    of a particle moving along z with momentum ``p0 cos(xi)``; xi runs the
    mass continuously from p0 (at rest) down to 0 (light-like).
    """
    p0 = _finite("p0", p0)
    if p0 <= 0:
        raise DomainError("energy p0 must be positive")
    c = _cos_xi(d.xi)
    s = math.sin(d.xi)
    p = HermitianMatrix(complex(p0 * (1 + c)), 0j, 0j, complex(p0 * (1 - c)))
    return FourMomentumMapping(p, p0 * s, p0 * c, p0)
