import numpy as np
import pytest

from halfwave_lab import (HyperbolicField, SpinField, constant_field, energy,
                          great_circle, hwm_rhs, hwmh_rhs, hyperbolic_circle,
                          hyperbolic_circle_exact, random_band_limited, run,
                          step, tilted_circle, tilted_circle_exact, total_spin)
from halfwave_lab.algebra import eta_dot
from halfwave_lab.evolution import LaxDiagnostics
from halfwave_lab.fields import ConstraintError
from halfwave_lab.spectral import grid


def test_rhs_constant_zero():
    assert np.abs(hwm_rhs(constant_field(64))).max() < 1e-14


def test_rhs_great_circle_stationary():
    # |grad|S = S so the cross product vanishes: a half-harmonic map
    assert np.abs(hwm_rhs(great_circle(64))).max() < 1e-13


def test_rhs_tilted_circle_hand_value():
    a, c = 0.6, 0.8
    x = grid(64)
    expected = np.stack([-a * c * np.sin(x), a * c * np.cos(x),
                         np.zeros(64)], axis=1)
    assert np.abs(hwm_rhs(tilted_circle(64, a, c)) - expected).max() < 1e-13


def test_rhs_orthogonal_to_field():
    f = random_band_limited(64, 6, seed=0)
    r = hwm_rhs(f)
    assert np.abs((f.values * r).sum(axis=1)).max() < 1e-13


def test_hyperbolic_rhs_hand_value():
    a = 0.75
    b = np.sqrt(1 + a * a)
    x = grid(64)
    expected = np.stack([np.zeros(64), -a * b * np.sin(x),
                         a * b * np.cos(x)], axis=1)
    assert np.abs(hwmh_rhs(hyperbolic_circle(64, a)) - expected).max() < 1e-13


def test_hyperbolic_rhs_eta_orthogonal():
    f = hyperbolic_circle(64, 0.5)
    r = hwmh_rhs(f)
    assert np.abs(eta_dot(f.values, r)).max() < 1e-13


def test_step_stationary_great_circle():
    f = great_circle(64)
    g = step(f, 1e-2)
    assert np.abs(g.values - f.values).max() < 1e-12


def test_step_rejects_zero_dt():
    with pytest.raises(ValueError):
        step(great_circle(64), 0.0)


def test_step_unknown_scheme():
    with pytest.raises(ValueError):
        step(great_circle(64), 1e-3, scheme="euler")


def test_rk4_exact_rotating_solution_sphere():
    f, _ = run(tilted_circle(64, 0.6, 0.8), 1e-3, 1.0)
    exact = tilted_circle_exact(64, 0.6, 0.8, 1.0)
    assert np.abs(f.values - exact.values).max() < 1e-6


def test_rk4_exact_rotating_solution_hyperbolic():
    f, _ = run(hyperbolic_circle(64, 0.75), 1e-3, 1.0)
    exact = hyperbolic_circle_exact(64, 0.75, 1.0)
    assert np.abs(f.values - exact.values).max() < 1e-6


def test_fourth_order_convergence():
    errs = []
    for dt in (2e-2, 1e-2, 5e-3, 2.5e-3):
        f, _ = run(tilted_circle(64, 0.6, 0.8), dt, 1.0)
        exact = tilted_circle_exact(64, 0.6, 0.8, 1.0)
        errs.append(np.abs(f.values - exact.values).max())
    for e1, e2 in zip(errs, errs[1:]):
        assert e1 / e2 == pytest.approx(16.0, rel=0.2)


def test_midpoint_scheme_runs():
    f, _ = run(tilted_circle(64, 0.6, 0.8), 1e-2, 0.1, scheme="midpoint")
    exact = tilted_circle_exact(64, 0.6, 0.8, 0.1)
    assert np.abs(f.values - exact.values).max() < 1e-6


def test_constraint_defect_after_steps():
    f = random_band_limited(64, 4, seed=1)
    for _ in range(10):
        f = step(f, 1e-3)
        assert f.defect() < 1e-12


def test_time_reversal():
    f0 = random_band_limited(64, 4, seed=2)
    f = f0
    for _ in range(200):
        f = step(f, 1e-3)
    for _ in range(200):
        f = step(f, -1e-3)
    assert np.abs(f.values - f0.values).max() < 1e-8


def test_energy_values():
    assert abs(energy(constant_field(64))) < 1e-13
    assert energy(great_circle(64)) == pytest.approx(np.pi, abs=1e-12)
    assert energy(tilted_circle(64, 0.6, 0.8)) == pytest.approx(
        0.36 * np.pi, abs=1e-12)


def test_run_conservation_and_isospectrality():
    f0 = tilted_circle(128, 0.6, 0.8)
    _, recs = run(f0, 1e-3, 1.0, record_interval=200,
                  lax_diag=LaxDiagnostics(16))
    e0 = recs[0].energy
    s0 = recs[0].total_spin
    tp0 = recs[0].trace_powers
    lam0 = np.array(recs[0].eigenvalues)
    for r in recs[1:]:
        assert abs(r.energy - e0) / abs(e0) < 1e-8
        assert np.abs(r.total_spin - s0).max() < 1e-8
        for p in "1234":
            assert abs(r.trace_powers[p] - tp0[p]) / abs(tp0[p]) < 1e-6
        assert np.abs(np.sort(r.eigenvalues) - np.sort(lam0)).max() < 1e-8
        assert r.defect < 1e-10


def test_total_spin_of_constant():
    s = total_spin(constant_field(64, (0, 0, 1)))
    assert np.allclose(s, [0, 0, 2 * np.pi], atol=1e-13)


def test_hyperbolic_sheet_violation_detected():
    f = HyperbolicField(np.tile([-1.0, 0.0, 0.0], (8, 1)))
    with pytest.raises(ConstraintError):
        f.renormalized()


def test_field_shape_validation():
    with pytest.raises(ValueError):
        SpinField(np.zeros((8, 2)))
