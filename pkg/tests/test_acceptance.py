"""Exit criteria. Each test is one criterion; tolerances and time limits
are fixed here and not tuned."""
import json
import math
import time

import numpy as np
import pytest

from poincare_wigner.cli import main
from poincare_wigner.little_groups import (
    FourPotential,
    MomentumClass,
    apply_gauge_to_potential,
    classify_momentum,
    contraction_residual,
    little_group_element,
    standard_wigner,
)
from poincare_wigner.lorentz_core import (
    METRIC,
    FourVector,
    compose,
    conjugate,
    four_vector_to_matrix,
    gauge_triangular,
    lift_to_four_by_four,
)
from poincare_wigner.polarization import (
    DecoherenceParams,
    coherency_from_params,
    coherency_from_signals,
    coherency_to_four_momentum,
    decoherence_angle,
    diagonalize_coherency,
    transform_coherency,
)

from _helpers import DATA, planted_signals, random_element


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def _rel_diff(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return float(np.max(np.abs(a - b)) / max(np.max(np.abs(a)), np.max(np.abs(b))))


def test_c01_determinant_invariance():
    rng = np.random.default_rng(1001)
    with Timer() as t:
        worst = 0.0
        for _ in range(1000):
            g = random_element(rng)
            m = four_vector_to_matrix(rng.uniform(-5, 5, size=4))
            out = conjugate(g, m)
            worst = max(worst, abs(out.det - m.det) / (1 + abs(m.det)))
    assert worst <= 1e-9
    assert t.elapsed < 1.0


def test_c02_lift_homomorphism_and_metric():
    rng = np.random.default_rng(1002)
    with Timer() as t:
        for _ in range(200):
            g1, g2 = random_element(rng, max_rapidity=1.0), random_element(rng, max_rapidity=1.0)
            l1, l2 = lift_to_four_by_four(g1), lift_to_four_by_four(g2)
            l12 = lift_to_four_by_four(compose(g1, g2))
            assert np.max(np.abs(l12 - l1 @ l2)) <= 1e-9
            for lam in (l1, l2, l12):
                assert np.max(np.abs(lam.T @ METRIC @ lam - METRIC)) <= 1e-9
            assert np.array_equal(lift_to_four_by_four(-g1), l1)
    assert t.elapsed < 1.0


def test_c03_wigner_stabilizer_law():
    rng = np.random.default_rng(1003)
    with Timer() as t:
        for cls in (MomentumClass.MASSIVE, MomentumClass.MASSLESS, MomentumClass.IMAGINARY_MASS):
            for param in rng.uniform(-5, 5, size=100):
                w = standard_wigner(cls, param)
                moved = conjugate(w.group_element, w.stabilized_momentum)
                assert _rel_diff(moved.matrix, w.stabilized_momentum.matrix) <= 1e-9
        for _ in range(50):
            t0 = rng.uniform(0.5, 4)
            direction = rng.normal(size=3)
            direction /= np.linalg.norm(direction)
            speed = rng.choice([rng.uniform(0, 0.95), 1.0, rng.uniform(1.05, 2.0)])
            p = four_vector_to_matrix((t0, *(t0 * speed * direction)))
            w = little_group_element(p, rng.uniform(-3, 3))
            assert _rel_diff(conjugate(w.group_element, p).matrix, p.matrix) <= 1e-9
    assert t.elapsed < 1.0


def test_c04_contraction_limit():
    with Timer() as t:
        assert contraction_residual(1.0, 10.0) < 1e-8
        series = [contraction_residual(1.0, eta) for eta in range(2, 13)]
        assert all(a > b for a, b in zip(series, series[1:]))
        for gamma in np.linspace(-2, 2, 41):
            for eta in np.linspace(1, 12, 45):
                bound = 3 * (gamma ** 2 + abs(gamma)) * math.exp(-2 * eta)
                assert contraction_residual(gamma, eta) <= bound
    assert t.elapsed < 1.0


def test_c05_gauge_transformation():
    rng = np.random.default_rng(1005)
    with Timer() as t:
        for _ in range(100):
            gamma = rng.uniform(-5, 5)
            a0 = rng.uniform(-3, 3)
            a = FourPotential(FourVector(a0, a0, rng.uniform(-3, 3), rng.uniform(-3, 3)), rng.uniform(0.2, 5))
            new, c = apply_gauge_to_potential(gamma, a)
            residual = np.array(new.potential) - np.array(a.potential) - c * np.array(a.photon_momentum)
            assert np.max(np.abs(residual)) <= 1e-10
        lam = lift_to_four_by_four(gauge_triangular(rng.uniform(-5, 5)))
        assert np.max(np.abs(lam @ [1, 1, 0, 0] - np.array([1, 1, 0, 0]))) <= 1e-12
    assert t.elapsed < 1.0


def _printed_gamma_matrix(g):
    # the 4x4 matrix exactly as typeset, (t, z, x, y) order
    h = g * g / 2
    return np.array([
        [1 + h, -h, g, 0],
        [h, 1 - h, g, 0],
        [-g, g, 1, 0],
        [0, 0, 0, 1],
    ])


def test_c06_printed_gamma_discrepancy():
    with Timer() as t:
        for g in (0.5, 1.0, -2.0):
            printed = _printed_gamma_matrix(g)
            lifted = lift_to_four_by_four(gauge_triangular(g))
            assert np.max(np.abs(printed.T @ METRIC @ printed - METRIC)) > 0.1
            assert np.max(np.abs(lifted.T @ METRIC @ lifted - METRIC)) <= 1e-12
            # they agree everywhere except the sign of the (t,x) and (z,x) entries
            diff = np.abs(printed - lifted) > 1e-12
            assert {tuple(ix) for ix in np.argwhere(diff)} == {(0, 2), (1, 2)}
    assert t.elapsed < 0.1


def test_c07_decoherence_algebra():
    rng = np.random.default_rng(1007)
    with Timer() as t:
        for xi in np.linspace(0, math.pi / 2, 50):
            c = coherency_from_params(DecoherenceParams(xi, rng.uniform(-math.pi, math.pi)))
            assert abs(decoherence_angle(c) - xi) <= 1e-12
            vals, _ = diagonalize_coherency(coherency_from_params(DecoherenceParams(xi, 0.0)))
            assert abs(vals[0] - (1 + math.cos(xi))) <= 1e-12
            assert abs(vals[1] - (1 - math.cos(xi))) <= 1e-12
        for _ in range(200):
            c = coherency_from_params(DecoherenceParams(rng.uniform(0, math.pi / 2), rng.uniform(-3, 3)))
            out = transform_coherency(random_element(rng), c)
            assert abs(out.det - c.det) <= 1e-9
    assert t.elapsed < 1.0


def test_c08_mass_momentum_triangle():
    rng = np.random.default_rng(1008)
    with Timer() as t:
        for _ in range(1000):
            out = coherency_to_four_momentum(DecoherenceParams(rng.uniform(0, math.pi / 2)), rng.uniform(0.01, 100))
            assert abs(out.mass ** 2 + out.momentum ** 2 - out.energy ** 2) <= 1e-12 * out.energy ** 2
        rest = coherency_to_four_momentum(DecoherenceParams(math.pi / 2), 2.0)
        assert np.array_equal(rest.momentum_matrix.matrix, 2.0 * np.eye(2))
        assert classify_momentum(rest.momentum_matrix) is MomentumClass.MASSIVE
        light = coherency_to_four_momentum(DecoherenceParams(0.0), 2.0)
        assert np.array_equal(light.momentum_matrix.matrix, np.array([[4.0, 0], [0, 0]]))
        assert classify_momentum(light.momentum_matrix) is MomentumClass.MASSLESS
    assert t.elapsed < 1.0


@pytest.mark.parametrize("degrees", [15, 45, 75])
def test_c09_signal_estimator(degrees):
    rng = np.random.default_rng(1009 + degrees)
    xi = math.radians(degrees)
    with Timer() as t:
        c = coherency_from_signals(*planted_signals(rng, xi, 100_000))
        recovered = decoherence_angle(c)
    assert abs(recovered - xi) <= 0.02
    assert t.elapsed < 5.0


def test_c10_cli_golden(capsys):
    with Timer() as t:
        assert main(["classify", "--p0", "5", "--pz", "3"]) == 0
        first = capsys.readouterr().out
        assert main(["classify", "--p0", "5", "--pz", "3"]) == 0
        assert capsys.readouterr().out == first
        rec = json.loads(first)
        assert rec["results"]["det"] == 16
        assert f"{rec['results']['eta']:.17g}" == f"{math.log(2):.17g}"
        assert main(["dictionary", "--json"]) == 0
        got = json.loads(capsys.readouterr().out)
    golden = json.loads((DATA / "dictionary_golden.json").read_text(encoding="utf-8"))
    assert got == golden
    assert t.elapsed < 1.0
