import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wignercert import (
    EntropyClippingError,
    Field,
    ZeroMassError,
    boltzmann_entropy,
    density_from_square,
    gaussian_entropy,
    make_example_final1,
    make_example_final2,
    make_gaussian_field,
    moment_report,
    wigner_transform,
)


def test_ground_state_moments(grid, W0):
    rep = moment_report(W0)
    assert rep.mass.real == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(rep.mean, 0.0, atol=1e-12)
    assert rep.covariance == pytest.approx(grid.hbar / 2 * np.eye(2), abs=1e-10)
    assert rep.purity == pytest.approx(1.0, abs=1e-10)
    assert rep.boundary_mass_fraction < 1e-12


@settings(max_examples=25, deadline=None)
@given(
    a=st.floats(0.5, 2.0), b=st.floats(0.5, 2.0), c=st.floats(-0.4, 0.4),
    x0=st.floats(-1.0, 1.0), p0=st.floats(-1.0, 1.0),
)
def test_gaussian_field_moments(a, b, c, x0, p0):
    from wignercert import PhaseSpaceGrid
    grid = PhaseSpaceGrid.default(1, 256, 1.0)
    cov = np.array([[a, c], [c, b]])
    F = make_gaussian_field(cov, [x0, p0], grid)
    rep = moment_report(F)
    assert rep.mean == pytest.approx([x0, p0], abs=1e-9)
    assert rep.covariance == pytest.approx(cov, abs=1e-9)
    # purity of a normalized Gaussian: (2 pi hbar)^n / ((4 pi)^n sqrt det)
    assert rep.purity == pytest.approx(1.0 / (2 * math.sqrt(np.linalg.det(cov))), rel=1e-9)


def test_moments_are_mass_normalized(grid, W0):
    rep = moment_report(W0 * 3.0)
    assert rep.mass.real == pytest.approx(3.0)
    assert rep.covariance == pytest.approx(grid.hbar / 2 * np.eye(2), abs=1e-10)
    assert rep.purity == pytest.approx(1.0, abs=1e-10)


def test_zero_mass_rejected(grid):
    with pytest.raises(ZeroMassError):
        moment_report(Field(grid, np.zeros(grid.shape)))


def test_examples_closed_forms(grid):
    h = grid.hbar
    r1 = moment_report(make_example_final1(grid))
    assert r1.covariance == pytest.approx(h / 2 * np.eye(2), abs=1e-9)
    assert r1.purity == pytest.approx(10.0, rel=1e-9)
    r2 = moment_report(make_example_final2(grid))
    assert r2.covariance == pytest.approx(3 * h * np.eye(2), abs=1e-8)
    assert r2.purity == pytest.approx(0.5, rel=1e-9)


def test_gaussian_density_entropy(grid, W0):
    mu = density_from_square(W0)
    # |W0|^2 normalized is a Gaussian with covariance hbar/4 I
    ent = boltzmann_entropy(mu)
    assert ent.value == pytest.approx(gaussian_entropy(grid.hbar / 4 * np.eye(2)), abs=1e-8)
    assert ent.clipped_mass == 0.0


@pytest.mark.parametrize("which", ["direct", "symplectic_ft", "hbar_ft"])
def test_densities_have_unit_mass(grid, hermite, which):
    mu = density_from_square(wigner_transform(hermite[2]), which)
    assert np.sum(mu.values.real) * mu.grid.cell_volume == pytest.approx(1.0, abs=1e-10)


def test_unknown_density_kind(W0):
    with pytest.raises(ValueError):
        density_from_square(W0, "bogus")


def test_entropy_clipping(grid, W0):
    vals = W0.values.real.copy()
    vals[0, 0] -= 1e-3 / grid.cell_volume
    vals[1, 1] += 1e-3 / grid.cell_volume
    mu = W0.with_values(vals)
    with pytest.raises(EntropyClippingError):
        boltzmann_entropy(mu)
    ent = boltzmann_entropy(mu, clip_threshold=None)
    assert ent.clipped_mass == pytest.approx(1e-3, rel=1e-6)
    assert not ent.usable()


def test_entropy_requires_unit_mass(W0):
    with pytest.raises(ValueError):
        boltzmann_entropy(W0 * 2.0)


def test_gaussian_entropy_singular():
    assert gaussian_entropy(np.zeros((2, 2))) == -math.inf
    assert gaussian_entropy(np.eye(2)) == pytest.approx(math.log(2 * math.pi * math.e))
