"""Correspondence between polarization optics and particle symmetry.

The same four 2x2 matrix families do different physical jobs in the two
settings, and the determinant they preserve is a decoherence measure in
optics but the (mass)^2 in relativity.
"""
from __future__ import annotations

import enum
from dataclasses import asdict, dataclass
from typing import Optional

from .lorentz_core import DomainError, GroupElement, boost_x, boost_z, rotation_y, rotation_z

__all__ = ["MatrixFamily", "DictionaryEntry", "entries", "matrix_for", "find", "as_records", "render_table"]


class MatrixFamily(str, enum.Enum):
    ROTATION_Z = "rotation_z"
    ROTATION_Y = "rotation_y"
    BOOST_Z = "boost_z"
    BOOST_X = "boost_x"


_GENERATORS = {
    MatrixFamily.ROTATION_Z: rotation_z,
    MatrixFamily.ROTATION_Y: rotation_y,
    MatrixFamily.BOOST_Z: boost_z,
    MatrixFamily.BOOST_X: boost_x,
}


@dataclass(frozen=True)
class DictionaryEntry:
    optics_name: str
    relativity_name: str
    matrix_family: Optional[MatrixFamily]
    parameter: str
    matrix: str
    invariant_optics: str
    invariant_relativity: str


_PRESERVED_OPTICS = "det C = (sin ξ)² preserved"
_PRESERVED_RELATIVITY = "det P = (mass)² preserved"

_ENTRIES = (
    DictionaryEntry(
        "Phase shift by φ", "Rotation around z", MatrixFamily.ROTATION_Z, "φ",
        "[[e^{iφ/2}, 0], [0, e^{-iφ/2}]]",
        _PRESERVED_OPTICS, _PRESERVED_RELATIVITY,
    ),
    DictionaryEntry(
        "Rotation around z", "Rotation around y", MatrixFamily.ROTATION_Y, "θ",
        "[[cos(θ/2), -sin(θ/2)], [sin(θ/2), cos(θ/2)]]",
        _PRESERVED_OPTICS, _PRESERVED_RELATIVITY,
    ),
    DictionaryEntry(
        "Squeeze along x and y", "Boost along z", MatrixFamily.BOOST_Z, "η",
        "[[e^{η/2}, 0], [0, e^{-η/2}]]",
        _PRESERVED_OPTICS, _PRESERVED_RELATIVITY,
    ),
    DictionaryEntry(
        "Squeeze along 45°", "Boost along x", MatrixFamily.BOOST_X, "λ",
        "[[cosh(λ/2), sinh(λ/2)], [sinh(λ/2), cosh(λ/2)]]",
        _PRESERVED_OPTICS, _PRESERVED_RELATIVITY,
    ),
    DictionaryEntry(
        "(sin ξ)²", "(mass)²", None, "",
        "Determinant",
        "variable: changed by decoherence",
        "Lorentz invariant: cannot be changed",
    ),
)


def entries() -> list[DictionaryEntry]:
    """The four matrix rows followed by the determinant row."""
    return list(_ENTRIES)


def find(family: MatrixFamily | str) -> DictionaryEntry:
    family = MatrixFamily(family)
    for entry in _ENTRIES:
        if entry.matrix_family is family:
            return entry
    raise KeyError(family)


def matrix_for(entry: DictionaryEntry, param: float) -> GroupElement:
    if entry.matrix_family is None:
        raise DomainError(f"dictionary row {entry.optics_name!r} has no transformation matrix")
    return _GENERATORS[entry.matrix_family](param)


def as_records() -> list[dict]:
    records = []
    for entry in _ENTRIES:
        rec = asdict(entry)
        rec["matrix_family"] = entry.matrix_family.value if entry.matrix_family else None
        records.append(rec)
    return records


def render_table() -> str:
    header = ("Polarization optics", "Transformation matrix", "Particle symmetry")
    rows = [(e.optics_name, e.matrix, e.relativity_name) for e in _ENTRIES]
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(3)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)
