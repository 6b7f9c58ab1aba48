"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline (they
are also emitted with capture disabled, so plain ``pytest`` shows them too).
"""
import itertools
import json
import math
import time
from contextlib import contextmanager

import numpy as np
from scipy.integrate import quad

from topowave import clifford, dirac, ensemble, lightcone, maxwell
from topowave.cli import main

T1 = 1e-12


@contextmanager
def criterion(capsys, number, title, time_limit=None):
    """Time the block, then report one line and enforce the runtime budget."""
    checks = {}
    start = time.perf_counter()
    ok = False
    try:
        yield checks
        elapsed = time.perf_counter() - start
        if time_limit is not None:
            checks["runtime_s"] = (round(elapsed, 3), elapsed < time_limit)
        ok = all(passed for _, passed in checks.values())
    finally:
        detail = ", ".join(f"{k}={v[0]:.3g}" if isinstance(v[0], float) else f"{k}={v[0]}"
                           for k, v in checks.items())
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {title} [{detail}]")
    failed = [k for k, (_, passed) in checks.items() if not passed]
    assert not failed, f"criterion {number} failed: {failed}"


def test_criterion_1_clifford(capsys):
    with criterion(capsys, 1, "Clifford and spin-1 algebra exact", time_limit=1.0) as c:
        eye = np.eye(4)
        anti = [
            np.array_equal(clifford.anticommutator(clifford.gamma(m), clifford.gamma(n)),
                           2 * clifford.METRIC[m, n] * eye)
            for m, n in itertools.product(range(4), repeat=2)
        ]
        comm = [
            np.array_equal(
                clifford.commutator(clifford.spin_matrix(i), clifford.spin_matrix(j)),
                sum(1j * clifford.levi_civita(i, j, k) * clifford.spin_matrix(k) for k in range(3)),
            )
            for i, j in itertools.product(range(3), repeat=2)
        ]
        c["anticommutators_exact"] = (sum(anti), len(anti) == 16 and all(anti))
        c["spin_commutators_exact"] = (sum(comm), all(comm))


def _random_state(rng):
    m = rng.uniform(0.1, 10.0)
    direction = rng.normal(size=3)
    direction /= np.linalg.norm(direction)
    p3 = direction * rng.uniform(0.0, 10.0)
    return dirac.OnShellState.build(m, p3, rng.choice(["up", "down"]))


def test_criterion_2_dirac(capsys):
    with criterion(capsys, 2, "Dirac plane waves", time_limit=10.0) as c:
        rng = np.random.default_rng(2007)
        probes = dirac.probe_points(100)
        states = [_random_state(rng) for _ in range(100)]
        worst = max(
            float(np.max(np.abs(dirac.dirac_residual(s, x)))) for s in states for x in probes
        )
        c["max_dirac_residual"] = (worst, worst < T1)

        identity = max(dirac.wavelength_identity_residual(s.momentum, s.mass) for s in states)
        c["max_wavelength_identity"] = (identity, identity < T1)

        shift_worst = 0.0
        for _ in range(50):
            s = states[int(rng.integers(len(states)))]
            n = rng.integers(-10, 11, size=4)
            shift_worst = max(shift_worst, dirac.translation_invariance_check(s, n, probes))
        c["max_translation_deviation"] = (shift_worst, shift_worst < T1)


def _arc_length(a, b):
    return quad(lambda th: math.sqrt(a * a * math.sin(th) ** 2 + b * b * math.cos(th) ** 2),
                0, 2 * math.pi, epsabs=1e-13, epsrel=1e-13, limit=200)[0]


def test_criterion_3_ensemble(capsys):
    with criterion(capsys, 3, "ellipse ensemble (spreading regions)", time_limit=30.0) as c:
        perimeter = 2 * math.pi
        cfg = ensemble.EnsembleConfig(perimeter, 100_000, 0.01, seed=1, times=(0.0, 1.0, 2.0))
        regions = ensemble.run_ensemble(cfg)
        lo_err = abs(regions[0].x_lo - 0.01 * 4 / 3)
        hi_err = abs(regions[0].x_hi - 4 / 3 * (1 - 1e-9))
        c["t0_envelope_error"] = (max(lo_err, hi_err), max(lo_err, hi_err) < 1e-9)
        growing = all(r2.x_hi > r1.x_hi for r1, r2 in zip(regions, regions[1:]))
        contained = all(r.x_lo <= r.sample_positions.min() and r.sample_positions.max() <= r.x_hi
                        for r in regions)
        c["regions_growing"] = (growing and contained, growing and contained)

        rng = np.random.default_rng(8)
        roundtrip = 0.0
        for _ in range(1000):
            p = rng.uniform(0.1, 50.0)
            a = rng.uniform(1e-6, 1.0) * ensemble.a_max(p)
            roundtrip = max(roundtrip, abs(ensemble.perimeter_of(a, ensemble.solve_b(a, p)) - p) / p)
        c["max_roundtrip_rel"] = (roundtrip, roundtrip < 1e-12)

        approx = max(
            abs(ensemble.perimeter_of(1.0, r) - _arc_length(1.0, r)) / _arc_length(1.0, r)
            for r in np.geomspace(0.2, 5.0, 41)
        )
        c["max_perimeter_rel_error"] = (approx, approx < 0.02)


def test_criterion_4_lightcone(capsys):
    with criterion(capsys, 4, "light-cone invariance") as c:
        speeds = [(lightcone.cone_position(t + h)[0] - lightcone.cone_position(t)[0]) / h
                  for t, h in [(0.0, 1.0), (2.5, 0.125), (-3.0, 7.0)]]
        c["cone_speed_exactly_1"] = (speeds[0], all(s == 1.0 for s in speeds))
        ts = np.linspace(-50.0, 50.0, 101)
        low = max(lightcone.invariant_speed_check(v, ts) for v in np.linspace(-0.9, 0.9, 37))
        c["deviation_v_le_0.9"] = (low, low < 1e-12)
        high = max(lightcone.invariant_speed_check(v, ts) for v in (0.99, -0.99))
        c["deviation_v_0.99"] = (high, high < 1e-10)

        rng = np.random.default_rng(4)
        pts = rng.uniform(-100, 100, size=(1000, 2))
        vs = rng.uniform(-0.9, 0.9, size=1000)
        interval = max(lightcone.interval_deviation(x, t, v) for (x, t), v in zip(pts, vs))
        c["interval_rel_deviation"] = (interval, interval < 1e-12)


def test_criterion_5_maxwell(capsys):
    with criterion(capsys, 5, "Maxwell three-way equivalence", time_limit=10.0) as c:
        rng = np.random.default_rng(17)
        worst = {"majorana": 0.0, "curl": 0.0, "gamma": 0.0}
        dispersion = 0.0
        helicity = 0.0
        for _ in range(100):
            k = rng.normal(size=3)
            k /= np.linalg.norm(k)
            w = maxwell.solve_amplitudes(k)
            points = rng.uniform(-5, 5, size=(20, 4))
            for name, value in maxwell.wave_residuals(w, points).items():
                worst[name] = max(worst[name], value)
            dispersion = max(dispersion, abs(w.omega - np.linalg.norm(w.k)))
            helicity = max(helicity, float(np.max(np.abs(maxwell.helicity_spectrum(k) - [-1, 0, 1]))))
        for name, value in worst.items():
            c[f"max_{name}_residual"] = (value, value < T1)
        c["omega_minus_abs_k"] = (dispersion, dispersion == 0.0)
        c["helicity_deviation"] = (helicity, helicity < 1e-12)

        w = maxwell.solve_amplitudes([0.3, -0.5, 0.8])
        x, t = [0.4, -1.1, 2.0], 0.6
        ratios = []
        for fn in (
            lambda v: maxwell.majorana_max_residual(v, x, t),
            lambda v: maxwell.curl_form_residual(v, x, t),
            lambda v: float(np.max(np.abs(maxwell.big_gamma_form_residual(v, x, t)))),
        ):
            r = [fn(w.with_omega(w.omega + d)) / d for d in (1e-3, 1e-2, 1e-1)]
            ratios.append(max(r) / min(r) - 1.0)
        c["dispersion_linearity_spread"] = (max(ratios), max(ratios) < 0.1)


COMMANDS = [
    ["verify-algebra"],
    ["dirac", "--mass", "3", "--momentum", "0,0,4"],
    ["ensemble", "--perimeter", "6.283185307179586", "--times", "0,1,2"],
    ["lightcone", "--v", "0.5", "--times", "0,1,2"],
    ["maxwell", "--k", "0,0,1", "--random-waves", "5"],
]


def test_criterion_6_determinism(capsys, tmp_path):
    with criterion(capsys, 6, "CLI manifest replay is byte-identical") as c:
        identical = 0
        for i, argv in enumerate(COMMANDS):
            first, again = tmp_path / f"{i}a", tmp_path / f"{i}b"
            assert main(argv + ["--out", str(first)]) == 0
            assert main(["replay", str(first / "manifest.json"), "--out", str(again)]) == 0
            files = json.loads((first / "manifest.json").read_text())["files"]
            if all((first / n).read_bytes() == (again / n).read_bytes() for n in files):
                identical += 1
        c["identical_subcommands"] = (identical, identical == len(COMMANDS))
