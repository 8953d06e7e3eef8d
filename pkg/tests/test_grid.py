import math

import numpy as np
import pytest

from wignercert import (
    AxisSpec,
    DimensionError,
    Field,
    GridError,
    PhaseSpaceGrid,
    ZeroMassError,
    boundary_mass_fraction,
    compose_linear,
    dilate,
    integrate,
    make_gaussian_field,
    normalize_mass,
    standard_J,
)


def test_axis_validation():
    with pytest.raises(GridError):
        AxisSpec(100, 5.0)
    with pytest.raises(GridError):
        AxisSpec(64, -1.0)
    ax = AxisSpec(8, 2.0)
    assert ax.step == 0.5
    assert ax.coords[0] == -2.0 and ax.coords[-1] == 1.5


@pytest.mark.parametrize("hbar", [1.0, 0.5])
def test_reciprocity(hbar):
    ax = AxisSpec(128, 6.0)
    rp = ax.reciprocal(hbar)
    assert ax.step * rp.step == pytest.approx(2 * math.pi * hbar / 128)
    assert rp.reciprocal(hbar).half_extent == pytest.approx(6.0)
    assert ax.is_reciprocal_to(rp, hbar)


def test_balanced_grid_self_dual(grid):
    assert grid.is_wigner_grid
    assert grid.symplectic_dual().same_as(grid)
    assert grid.fourier_dual().same_as(grid)


def test_grid_roundtrip_and_defaults():
    g = PhaseSpaceGrid.default(2)
    assert g.shape == (32,) * 4
    assert PhaseSpaceGrid.from_dict(g.to_dict()).same_as(g)
    with pytest.raises(GridError):
        PhaseSpaceGrid.default(2, points=128)


def test_field_is_immutable(grid):
    F = Field(grid, np.ones(grid.shape))
    with pytest.raises(ValueError):
        F.values[0, 0] = 2.0
    with pytest.raises(DimensionError):
        Field(grid, np.ones((3, 3)))


def test_mass_and_normalization(grid):
    F = make_gaussian_field(np.eye(2) * grid.hbar, None, grid)
    assert integrate(F).real == pytest.approx(1.0, abs=1e-12)
    G = normalize_mass(F * 3.0)
    assert integrate(G).real == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ZeroMassError):
        normalize_mass(F * 0.0)


def test_boundary_mass(grid):
    F = make_gaussian_field(np.eye(2) * grid.hbar, None, grid)
    assert boundary_mass_fraction(F) < 1e-12
    wide = make_gaussian_field(np.eye(2) * 100 * grid.hbar, None, grid)
    assert boundary_mass_fraction(wide) > 1e-6


@pytest.mark.parametrize("mu", [0.5, 0.8, 1.0])
def test_dilation_scales_covariance(grid, mu):
    from wignercert import moment_report
    F = make_gaussian_field(np.eye(2) * grid.hbar / 4, None, grid)
    G = dilate(F, mu, order=3)
    rep = moment_report(G)
    assert rep.mass.real == pytest.approx(1.0, abs=1e-4)
    assert np.diag(rep.covariance) == pytest.approx([grid.hbar / 4 / mu**2] * 2, rel=1e-3)


def test_compose_with_rotation(grid):
    F = make_gaussian_field(np.diag([2.0, 0.5]) * grid.hbar, None, grid)
    G = compose_linear(F, standard_J(1), order=3)
    # F(Jz) = F(p, -x) swaps the variances
    H = make_gaussian_field(np.diag([0.5, 2.0]) * grid.hbar, None, grid)
    assert np.max(np.abs(G.values - H.values)) < 1e-6 * np.max(np.abs(H.values))
