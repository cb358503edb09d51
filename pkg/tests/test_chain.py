import numpy as np
import pytest

from halfwave_lab import (SpinChain, chain_energy, chain_rhs_direct,
                          chain_rhs_fft, chain_run, chain_step,
                          continuum_compare, random_band_limited,
                          tilted_circle, tilted_circle_exact)
from halfwave_lab.chain import chain_diagnose, inverse_sin2_kernel, rescale_ratio
from halfwave_lab.evolution import hwm_rhs


def aligned_chain(N):
    return SpinChain(np.tile([0.0, 0.0, 1.0], (N, 1)))


def random_chain(N, seed):
    rng = np.random.default_rng(seed)
    v = rng.standard_normal((N, 3))
    return SpinChain(v / np.linalg.norm(v, axis=1, keepdims=True))


def smooth_chain(N, seed):
    # gentle fields keep the absolute fft/direct agreement below 1e-10
    # even at N = 512, where the kernel weights reach (N/pi)^2
    return SpinChain(random_band_limited(N, 2, seed, amplitude=0.1).values)


def test_energy_ferromagnetic_ground_state():
    assert chain_energy(aligned_chain(16)) == 0.0


def test_energy_two_site_hand_values():
    # sites at x = 0, pi; sin^2(pi/2) = 1
    c = SpinChain(np.array([[1.0, 0, 0], [0, 1.0, 0]]))
    assert chain_energy(c) == pytest.approx(1.0, abs=1e-14)
    c2 = SpinChain(np.array([[1.0, 0, 0], [-1.0, 0, 0]]))
    assert chain_energy(c2) == pytest.approx(2.0, abs=1e-14)


def test_rhs_two_site_hand_values():
    c = SpinChain(np.array([[1.0, 0, 0], [0, 1.0, 0]]))
    r = chain_rhs_direct(c)
    assert np.allclose(r[0], [0, 0, -1], atol=1e-14)
    assert np.allclose(r[1], [0, 0, 1], atol=1e-14)


def test_rhs_aligned_zero():
    assert np.abs(chain_rhs_direct(aligned_chain(32))).max() < 1e-12
    assert np.abs(chain_rhs_fft(aligned_chain(32))).max() < 1e-10


def test_total_spin_derivative_vanishes():
    r = chain_rhs_direct(random_chain(48, 0))
    assert np.abs(r.sum(axis=0)).max() < 1e-9


def test_rhs_perpendicular_to_spins():
    c = random_chain(48, 1)
    r = chain_rhs_direct(c)
    assert np.abs((c.sites * r).sum(axis=1)).max() < 1e-10


@pytest.mark.parametrize("N", [8, 64, 512])
def test_fft_matches_direct_smooth(N):
    c = smooth_chain(N, 0)
    d = chain_rhs_direct(c)
    f = chain_rhs_fft(c)
    assert np.abs(d - f).max() < 1e-10


@pytest.mark.parametrize("N", [8, 64, 512])
def test_fft_matches_direct_random_relative(N):
    # rough chains carry O(N^2) kernel weights; compare relative to the
    # force scale, which is what double precision can support
    c = random_chain(N, N + 1)
    d = chain_rhs_direct(c)
    f = chain_rhs_fft(c)
    scale = max(np.abs(d).max(), 1.0)
    assert np.abs(d - f).max() / scale < 1e-12


def test_kernel_values():
    w = inverse_sin2_kernel(8)
    assert w[0] == 0.0
    assert w[4] == pytest.approx(1.0, abs=1e-14)  # sin^2(pi/2)
    assert np.allclose(w[1:], w[1:][::-1])


def test_aligned_chain_stays_fixed():
    c, _ = chain_run(aligned_chain(32), 1e-3, 0.1)
    assert np.abs(c.sites - aligned_chain(32).sites).max() < 1e-12


def test_chain_conservation():
    c0 = SpinChain(tilted_circle(64, 0.6, 0.8).values)
    cf, recs = chain_run(c0, 1e-4, 1.0, record_interval=2000)
    e0 = recs[0].energy
    s0 = recs[0].total_spin
    for r in recs[1:]:
        assert abs(r.energy - e0) / abs(e0) < 1e-6
        assert np.abs(r.total_spin - s0).max() < 1e-8
        assert r.defect < 1e-10


def test_chain_step_validation():
    with pytest.raises(ValueError):
        chain_step(aligned_chain(8), -1.0)
    with pytest.raises(ValueError):
        chain_step(aligned_chain(8), 1e-3, scheme="verlet")


def test_continuum_compare_monotone():
    rows = continuum_compare(
        lambda N: tilted_circle(N, 0.6, 0.8).values,
        lambda N, T: tilted_circle_exact(N, 0.6, 0.8, T).values,
        [32, 64, 128], 0.5)
    errs = [e for _, e in rows]
    assert all(e2 < e1 for e1, e2 in zip(errs, errs[1:]))


def test_continuum_compare_constant_is_exact():
    rows = continuum_compare(
        lambda N: np.tile([0.0, 0.0, 1.0], (N, 1)),
        lambda N, T: np.tile([0.0, 0.0, 1.0], (N, 1)),
        [32, 64], 0.5)
    assert all(e < 1e-12 for _, e in rows)


def test_rescale_ratio_tends_to_one():
    ratios = []
    for N in (64, 128, 256):
        f = tilted_circle(N, 0.6, 0.8)
        ratios.append(rescale_ratio(f.values, hwm_rhs(f)))
    # discrete symbol n(N - n)/N gives ratio 1 - 1/N at bandwidth 1
    for N, r in zip((64, 128, 256), ratios):
        assert r == pytest.approx(1.0 - 1.0 / N, abs=1e-10)
    assert abs(ratios[-1] - 1.0) < 0.02


def test_chain_diagnose_fields():
    rec = chain_diagnose(aligned_chain(16))
    assert rec.energy == 0.0
    assert np.allclose(rec.total_spin, [0, 0, 16])
    assert rec.defect < 1e-15
