"""Command-line front end.

Every command prints one JSON record ``{"command", "inputs", "results"}``
with floats at 17 significant digits and complex numbers as ``[re, im]``.
``trajectory --csv`` and ``dictionary`` (without ``--json``) print
delimited text instead. Exit status is 2 for argument errors and 1 for
domain errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import dictionary as dictionary_mod
from .little_groups import (
    MomentumClass,
    boost_parameter_for,
    classify_momentum,
    contracted_wigner,
    contraction_residual,
    contraction_theta,
    standard_momentum,
    standard_wigner,
)
from .lorentz_core import (
    DomainError,
    GroupElement,
    HermitianMatrix,
    four_vector_to_matrix,
    gauge_triangular,
    is_lorentz,
    lift_to_four_by_four,
)
from .polarization import (
    CoherencyMatrix,
    DecoherenceParams,
    StokesVector,
    coherency_from_params,
    coherency_to_four_momentum,
    decoherence_angle,
    diagonalize_coherency,
    stokes,
)

LITTLE_GROUP_NAMES = {
    MomentumClass.MASSIVE: "O(3)-like",
    MomentumClass.MASSLESS: "E(2)-like",
    MomentumClass.IMAGINARY_MASS: "O(2,1)-like",
    MomentumClass.NULL: None,
}


class LorentzMatrix(np.ndarray):
    """Marker view so the serializer knows to validate the metric."""


def _lorentz(g: GroupElement) -> LorentzMatrix:
    return np.asarray(lift_to_four_by_four(g)).view(LorentzMatrix)


def _format_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"cannot serialize non-finite value {x!r}")
    return format(x + 0.0, ".17g")  # + 0.0 folds -0.0 into 0.0


def _complex_pair(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _to_plain(obj):
    """Reduce domain objects to JSON-ready structures, validating invariants."""
    if isinstance(obj, GroupElement):
        obj.check()
        return [[_complex_pair(v) for v in row] for row in obj.matrix]
    if isinstance(obj, (HermitianMatrix, CoherencyMatrix)):
        # both validate on construction
        return [[_complex_pair(v) for v in row] for row in obj.matrix]
    if isinstance(obj, LorentzMatrix):
        if not is_lorentz(obj):
            raise DomainError("refusing to emit a matrix that does not preserve the metric")
        return np.asarray(obj, dtype=float).tolist()
    if isinstance(obj, StokesVector):
        return list(obj)
    if isinstance(obj, MomentumClass):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): _to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _to_plain(obj.tolist())
    if isinstance(obj, (complex, np.complexfloating)):
        return _complex_pair(obj)
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def _dump(obj, indent: int = 0) -> str:
    pad = "  " * (indent + 1)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_dump(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj) or _is_matrix(obj):
            return "[" + ", ".join(_dump(v, indent + 1) for v in obj) + "]"
        return "[\n" + ",\n".join(pad + _dump(v, indent + 1) for v in obj) + "\n" + "  " * indent + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _is_matrix(obj: list) -> bool:
    return all(isinstance(v, list) and not any(isinstance(w, dict) for w in v) for v in obj)


def serialize_record(command: str, inputs: dict, results: dict) -> str:
    record = {"command": command, "inputs": _to_plain(inputs), "results": _to_plain(results)}
    return _dump(record) + "\n"


def _cmd_classify(args) -> str:
    v = (args.p0, args.pz, args.px, args.py)
    p = four_vector_to_matrix(v)
    cls = classify_momentum(p, args.tol)
    det = p.det
    results = {"class": cls, "little_group": LITTLE_GROUP_NAMES[cls], "det": det, "momentum_matrix": p}
    pmag = math.sqrt(args.pz ** 2 + args.px ** 2 + args.py ** 2)
    if cls is MomentumClass.MASSIVE:
        results["mass"] = math.sqrt(det)
        results["standard_form"] = standard_momentum(cls, math.sqrt(det))
        results["eta"] = boost_parameter_for(args.p0, pmag)
    elif cls is MomentumClass.IMAGINARY_MASS:
        results["standard_form"] = standard_momentum(cls, math.sqrt(-det))
    elif cls is MomentumClass.MASSLESS:
        results["standard_form"] = standard_momentum(cls, 1.0)
    else:
        results["standard_form"] = None
    inputs = {"p0": args.p0, "pz": args.pz, "px": args.px, "py": args.py, "tol": args.tol}
    return serialize_record("classify", inputs, results)


def _cmd_wigner(args) -> str:
    cls = MomentumClass.parse(args.cls)
    param = args.param
    if args.degrees and cls is MomentumClass.MASSIVE:
        param = math.radians(param)
    w = standard_wigner(cls, param, args.scale)
    results = {
        "class": cls,
        "wigner_matrix": w.group_element,
        "stabilized_momentum": w.stabilized_momentum,
        "lift": _lorentz(w.group_element),
        "stabilizer_residual": w.residual(),
    }
    inputs = {"class": args.cls, "param": args.param, "scale": args.scale, "degrees": args.degrees}
    return serialize_record("wigner", inputs, results)


def _cmd_contract(args) -> str:
    g, eta = args.gamma, args.eta
    results = {
        "theta": contraction_theta(g, eta),
        "contracted": contracted_wigner(g, eta),
        "target": gauge_triangular(g),
        "residual": contraction_residual(g, eta),
        "bound": 3 * (g * g + abs(g)) * math.exp(-2 * eta),
    }
    return serialize_record("contract", {"gamma": g, "eta": eta}, results)


TRAJECTORY_COLUMNS = ("eta", "residual", "xi", "mass", "momentum", "boosted_energy", "boosted_momentum")


def trajectory_rows(gauge_gamma: float, eta_max: float, steps: int, p0: float = 1.0) -> list[tuple]:
    """Sample the contraction and the two routes to the light cone.

    For each rapidity eta the row holds the contraction residual, the
    fixed-energy point with the same velocity (``cos xi = tanh eta``, so
    mass ``p0/cosh eta`` and momentum ``p0 tanh eta``), and the point
    reached by boosting a particle of mass p0 along its mass hyperbola
    (energy ``p0 cosh eta``, momentum ``p0 sinh eta``). The grid starts
    at ``max(0, ln|gamma|)``, where the contracted element first exists.
    """
    if steps < 2:
        raise DomainError("trajectory needs at least 2 steps")
    if not p0 > 0:
        raise DomainError("energy p0 must be positive")
    start = max(0.0, math.log(abs(gauge_gamma))) if gauge_gamma != 0 else 0.0
    if not eta_max > start:
        raise DomainError(f"eta-max must exceed the first admissible rapidity {start!r}")
    rows = []
    for eta in np.linspace(start, eta_max, steps):
        eta = float(eta)
        ch = math.cosh(eta)
        xi = math.atan2(1 / ch, math.tanh(eta))
        rows.append((
            eta,
            contraction_residual(gauge_gamma, eta),
            xi,
            p0 / ch,
            p0 * math.tanh(eta),
            p0 * ch,
            p0 * math.sinh(eta),
        ))
    return rows


def _cmd_trajectory(args) -> str:
    rows = trajectory_rows(args.gamma, args.eta_max, args.steps, args.p0)
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(TRAJECTORY_COLUMNS)
        for row in rows:
            writer.writerow([_format_float(v) for v in row])
        return buf.getvalue()
    inputs = {"gamma": args.gamma, "eta_max": args.eta_max, "steps": args.steps, "p0": args.p0}
    results = {"columns": list(TRAJECTORY_COLUMNS), "rows": [list(r) for r in rows]}
    return serialize_record("trajectory", inputs, results)


def _cmd_coherency(args) -> str:
    xi, phi = args.xi, args.phi
    if args.degrees:
        xi, phi = math.radians(xi), math.radians(phi)
    d = DecoherenceParams(xi, phi)
    c = coherency_from_params(d)
    st = stokes(c)
    eigenvalues, u = diagonalize_coherency(c)
    results = {
        "coherency_matrix": c,
        "det": c.det,
        "decoherence_angle": decoherence_angle(c),
        "stokes": st,
        "degree_of_polarization": st.degree_of_polarization,
        "eigenvalues": list(eigenvalues),
        "diagonalizer": u,
    }
    if args.p0 is not None:
        mapping = coherency_to_four_momentum(d, args.p0)
        results.update(
            momentum_matrix=mapping.momentum_matrix,
            mass=mapping.mass,
            momentum=mapping.momentum,
            energy=mapping.energy,
            **{"class": classify_momentum(mapping.momentum_matrix)},
        )
    inputs = {"xi": args.xi, "phi": args.phi, "p0": args.p0, "degrees": args.degrees}
    return serialize_record("coherency", inputs, results)


def _parse_matrix(text: str) -> GroupElement:
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of numbers: {text!r}") from None
    if len(vals) != 8:
        raise argparse.ArgumentTypeError(f"expected 8 comma-separated numbers, got {len(vals)}")
    entries = [complex(vals[i], vals[i + 1]) for i in range(0, 8, 2)]
    return GroupElement(*entries)


def _cmd_lift(args) -> str:
    g = args.matrix.check()
    return serialize_record("lift", {"matrix": g}, {"lift": _lorentz(g)})


def _cmd_dictionary(args) -> str:
    if args.json:
        return serialize_record("dictionary", {}, {"entries": dictionary_mod.as_records()})
    return dictionary_mod.render_table() + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poincare-wigner",
        description="Little groups, contraction and coherency-matrix calculations.",
    )
    parser.add_argument("--out", type=Path, help="write the output to PATH instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a four-momentum")
    p.add_argument("--p0", type=float, required=True)
    p.add_argument("--pz", type=float, required=True)
    p.add_argument("--px", type=float, default=0.0)
    p.add_argument("--py", type=float, default=0.0)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("wigner", help="standard Wigner matrix of a class")
    p.add_argument("--class", dest="cls", required=True, choices=["massive", "massless", "imaginary"])
    p.add_argument("--param", type=float, required=True)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--degrees", action="store_true")
    p.set_defaults(func=_cmd_wigner)

    p = sub.add_parser("contract", help="boosted rotation approaching the gauge element")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--eta", type=float, required=True)
    p.set_defaults(func=_cmd_contract)

    p = sub.add_parser("trajectory", help="contraction residual and mass/momentum paths")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--eta-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--p0", type=float, default=1.0)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_trajectory)

    p = sub.add_parser("coherency", help="coherency matrix for a decoherence angle")
    p.add_argument("--xi", type=float, required=True)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--p0", type=float)
    p.add_argument("--degrees", action="store_true")
    p.set_defaults(func=_cmd_coherency)

    p = sub.add_parser("lift", help="4x4 Lorentz matrix of a 2x2 group element")
    p.add_argument("--matrix", type=_parse_matrix, required=True,
                   help='"a11r,a11i,a12r,a12i,a21r,a21i,a22r,a22i"')
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("dictionary", help="optics/relativity correspondence table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dictionary)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
