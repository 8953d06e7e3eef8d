import math

import numpy as np
import pytest

from wignercert import (
    AliasingError,
    AxisSpec,
    Field,
    GridError,
    LinearSymbol,
    PhaseSpaceGrid,
    WaveFunction,
    compose_linear,
    cross_wigner,
    hbar_ft,
    integrate,
    make_example_final2,
    make_gaussian_field,
    moyal_identity_sides,
    moyal_linear_left,
    moyal_linear_right,
    spectral_gradient,
    symplectic_ft,
    trace_pairing,
    wigner_of_mixture,
    wigner_transform,
)
from wignercert.selftest import random_smooth_field


def _rel_max(a, b):
    return np.max(np.abs(a - b)) / np.max(np.abs(b))


def test_ground_state_wigner(grid, W0):
    h = grid.hbar
    exact = np.exp(-grid.radius_sq() / h) / (math.pi * h)
    assert np.max(np.abs(W0.values - exact)) <= 1e-8
    assert W0.is_real(1e-12)


def test_first_hermite_wigner(grid, hermite):
    h = grid.hbar
    r2 = grid.radius_sq()
    exact = (2 * r2 / h - 1) * np.exp(-r2 / h) / (math.pi * h)
    assert np.max(np.abs(wigner_transform(hermite[1]).values - exact)) <= 1e-8


def test_translated_ground_state(grid, hermite):
    a = 1.5 * math.sqrt(grid.hbar)
    ax = grid.x_axes[0]
    f = WaveFunction((ax,), (math.pi * grid.hbar) ** -0.25 * np.exp(-(ax.coords - a) ** 2 / (2 * grid.hbar)), grid.hbar)
    W = wigner_transform(f)
    exact = np.exp(-((grid.coordinate(0) - a) ** 2 + grid.coordinate(1) ** 2) / grid.hbar) / (math.pi * grid.hbar)
    assert np.max(np.abs(W.values - exact)) <= 1e-8


def test_cross_wigner_symmetry_and_orthogonality(hermite):
    W01 = cross_wigner(hermite[0], hermite[1])
    W10 = cross_wigner(hermite[1], hermite[0])
    assert np.max(np.abs(W01.values - np.conj(W10.values))) < 1e-12
    assert abs(integrate(W01)) < 1e-8
    W00 = cross_wigner(hermite[0], hermite[0])
    assert _rel_max(W00.values, wigner_transform(hermite[0]).values) < 1e-13


def test_cross_wigner_grid_mismatch(hermite):
    other = WaveFunction((AxisSpec(128, 10.0),), np.ones(128))
    with pytest.raises(GridError):
        cross_wigner(hermite[0], other)


def test_nan_input_rejected(hermite):
    bad = hermite[0].values.copy()
    bad[3] = np.nan
    with pytest.raises(ValueError):
        wigner_transform(WaveFunction(hermite[0].axes, bad, hermite[0].hbar))


def test_mixture_validation(hermite):
    with pytest.raises(ValueError):
        wigner_of_mixture([1.2, -0.2], hermite[:2])
    with pytest.raises(ValueError):
        wigner_of_mixture([0.5, 0.4], hermite[:2])
    single = wigner_of_mixture([1.0], hermite[:1])
    assert np.array_equal(single.values, wigner_transform(hermite[0]).values)


def test_mixture_of_displaced_states(grid):
    from wignercert import moment_report
    h = grid.hbar
    ax = grid.x_axes[0]
    z1 = np.array([1.0, 0.5]) * math.sqrt(h)

    def coherent(sign):
        x = ax.coords
        vals = (math.pi * h) ** -0.25 * np.exp(-(x - sign * z1[0]) ** 2 / (2 * h) + 1j * sign * z1[1] * x / h)
        return WaveFunction((ax,), vals, h)

    F = wigner_of_mixture([0.5, 0.5], [coherent(+1), coherent(-1)])
    cov = moment_report(F).covariance
    assert cov == pytest.approx(h / 2 * np.eye(2) + np.outer(z1, z1), abs=1e-8)


def test_marginals(grid, hermite):
    rng = np.random.default_rng(3)
    c = rng.normal(size=4) + 1j * rng.normal(size=4)
    f = WaveFunction(hermite[0].axes, sum(ci * h.values for ci, h in zip(c, hermite)), grid.hbar).normalized()
    W = wigner_transform(f)
    px = np.sum(W.values, axis=1).real * grid.p_axes[0].step
    pp = np.sum(W.values, axis=0).real * grid.x_axes[0].step
    assert _rel_max(px, np.abs(f.values) ** 2) < 1e-6
    assert _rel_max(pp, np.abs(hbar_ft(f).values) ** 2) < 1e-6


def test_wigner_symplectic_covariance(grid):
    """W of lambda^{-1/2} f(x/lambda) equals W f at (x/lambda, lambda p)."""
    h, lam = grid.hbar, 1.3
    ax = grid.x_axes[0]
    f = WaveFunction((ax,), (math.pi * h) ** -0.25 * (1 + ax.coords / math.sqrt(h)) * np.exp(-ax.coords ** 2 / (2 * h)), h)
    g = WaveFunction((ax,), lam ** -0.5 * (math.pi * h) ** -0.25 * (1 + ax.coords / (lam * math.sqrt(h)))
                     * np.exp(-(ax.coords / lam) ** 2 / (2 * h)), h)
    Wf = wigner_transform(f)
    Wg = wigner_transform(g)
    resampled = compose_linear(Wf, np.diag([1 / lam, lam]), order=5)
    assert _rel_max(resampled.values, Wg.values) < 1e-3


def test_sft_of_ground_state(grid, W0):
    h = grid.hbar
    G = symplectic_ft(W0)
    exact = np.exp(-G.grid.radius_sq() / (4 * h)) / (2 * math.pi * h)
    assert np.max(np.abs(G.values - exact)) < 1e-8


def test_sft_involution_and_plancherel(grid, rng):
    F = random_smooth_field(grid, rng)
    G = symplectic_ft(F)
    assert _rel_max(symplectic_ft(G).values, F.values) < 1e-8
    n0 = np.sum(np.abs(F.values) ** 2) * grid.cell_volume
    n1 = np.sum(np.abs(G.values) ** 2) * G.grid.cell_volume
    assert n1 == pytest.approx(n0, rel=1e-10)


def test_sft_final2_eigenfunction(grid):
    F = make_example_final2(grid)
    assert np.max(np.abs(symplectic_ft(F).values + F.values)) < 1e-6


def test_sft_unbalanced_grid_involution(rng):
    a = AxisSpec(128, 6.0)
    g = PhaseSpaceGrid(1, (a,), (AxisSpec(128, 8.0),), 1.0)
    F = make_gaussian_field(np.diag([1.0, 1.5]), [0.3, -0.2], g)
    G = symplectic_ft(F)
    assert not G.grid.same_as(g)
    assert _rel_max(symplectic_ft(G).values, F.values) < 1e-8


def test_hbar_ft(grid, hermite):
    for f in hermite:
        assert hbar_ft(f).norm_sq() == pytest.approx(f.norm_sq(), rel=1e-10)
    assert np.max(np.abs(hbar_ft(hermite[0]).values - hermite[0].values)) < 1e-10
    assert np.max(np.abs(hbar_ft(hermite[1]).values + 1j * hermite[1].values)) < 1e-10


def test_hbar_ft_shift(grid, hermite):
    ax = grid.x_axes[0]
    a = 0.7
    shifted = WaveFunction((ax,), (math.pi * grid.hbar) ** -0.25 * np.exp(-(ax.coords - a) ** 2 / (2 * grid.hbar)), grid.hbar)
    assert np.max(np.abs(np.abs(hbar_ft(shifted).values) - np.abs(hbar_ft(hermite[0]).values))) < 1e-10


def test_trace_pairing(grid, W0, hermite):
    h = grid.hbar
    assert trace_pairing(W0, W0).real * (2 * math.pi * h) == pytest.approx(1 / (2 * math.pi * h), rel=1e-10)
    W1 = wigner_transform(hermite[1])
    assert abs(trace_pairing(W0, W1)) < 1e-10


def test_moyal_left_right(grid, W0):
    h = grid.hbar
    a = LinearSymbol([1.0, 0.0], [0.0, 0.0], h)
    left = moyal_linear_left(a, W0)
    right = moyal_linear_right(a, W0)
    x, p = grid.coordinate(0), grid.coordinate(1)
    dWdp = -2 * p / h * W0.values
    expect = x * W0.values + 0.5j * h * dWdp
    assert np.max(np.abs(left.values - expect)) < 1e-8
    assert np.max(np.abs(0.5 * (left.values + right.values) - x * W0.values)) < 1e-14
    assert np.max(np.abs(right.values - np.conj(left.values))) < 1e-14


def test_spectral_gradient_against_finite_differences(grid, rng):
    F = random_smooth_field(grid, rng)
    grads = spectral_gradient(F)
    for i, ax in enumerate(grid.axes):
        fd = np.gradient(F.values, ax.step, axis=i, edge_order=2)
        # second-order differences: agreement limited by O(step^2)
        assert _rel_max(grads[i], fd) < 5 * ax.step ** 2 / grid.hbar


@pytest.mark.parametrize("seed", range(5))
def test_moyal_identity(grid, seed):
    rng = np.random.default_rng(seed)
    F = random_smooth_field(grid, rng)
    a = LinearSymbol(rng.normal(size=2) + 1j * rng.normal(size=2), rng.normal(size=2), grid.hbar)
    lhs, rhs = moyal_identity_sides(a, F)
    assert lhs == pytest.approx(rhs, rel=1e-6)


def test_moyal_rejects_aliased_fields(grid):
    wide = make_gaussian_field(np.eye(2) * 100 * grid.hbar, None, grid)
    with pytest.raises(AliasingError):
        moyal_linear_left(LinearSymbol([1.0, 0.0], [0.0, 0.0], grid.hbar), wide)


def test_field_grid_mismatch(grid):
    other = PhaseSpaceGrid.default(1, 128, grid.hbar)
    with pytest.raises(GridError):
        trace_pairing(Field(grid, np.ones(grid.shape)), Field(other, np.ones(other.shape)))
