import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wignercert import (
    DimensionError,
    NotHermitianError,
    NotPositiveDefiniteError,
    NotSymmetricError,
    hermitian_psd_check,
    is_anti_symplectic,
    is_symplectic,
    random_symplectic,
    rsup_matrix,
    standard_J,
    symplectic_spectrum,
    time_reversal,
)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_J_structure(n):
    J = standard_J(n)
    assert np.array_equal(J @ J, -np.eye(2 * n))
    assert np.array_equal(J.T, -J)
    assert is_symplectic(J)
    assert is_anti_symplectic(time_reversal(n))
    assert not is_symplectic(time_reversal(n))


@pytest.mark.parametrize("bad", [0, -1, 1.5])
def test_J_rejects_bad_n(bad):
    with pytest.raises(DimensionError):
        standard_J(bad)


def test_spectrum_of_diagonal():
    # diag(a, b) on R^2 has the single invariant sqrt(ab)
    spec = symplectic_spectrum(np.diag([0.125, 2.0]))
    assert spec.values == pytest.approx([0.5], abs=1e-14)
    spec = symplectic_spectrum(np.diag([1.0, 4.0, 9.0, 1.0]))
    assert spec.values == pytest.approx([3.0, 2.0][::-1], rel=1e-12)


def test_spectrum_errors():
    with pytest.raises(NotSymmetricError):
        symplectic_spectrum(np.array([[1.0, 0.5], [0.0, 1.0]]))
    with pytest.raises(NotPositiveDefiniteError):
        symplectic_spectrum(np.diag([1.0, -1.0]))
    with pytest.raises(NotPositiveDefiniteError):
        symplectic_spectrum(np.diag([1.0, 0.0]))
    with pytest.raises(DimensionError):
        symplectic_spectrum(np.eye(3))


def _spd(seed, d):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(d, d))
    return X @ X.T + 0.1 * np.eye(d)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.sampled_from([1, 2]))
def test_det_product_identity(seed, n):
    B = _spd(seed, 2 * n)
    lam = symplectic_spectrum(B).values
    assert np.prod(lam) ** 2 == pytest.approx(np.linalg.det(B), rel=1e-9)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.sampled_from([1, 2]))
def test_spectrum_symplectic_invariance(seed, n):
    rng = np.random.default_rng(seed)
    B = _spd(seed, 2 * n)
    S = random_symplectic(n, rng)
    assert is_symplectic(S, 1e-9)
    a = symplectic_spectrum(B).values
    b = symplectic_spectrum(S.T @ B @ S).values
    assert b == pytest.approx(a, rel=1e-8)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.sampled_from([1, 2]), hbar=st.sampled_from([1.0, 0.5]))
def test_rsup_equivalence(seed, n, hbar):
    """Cov + (i hbar/2)J >= 0 iff lambda_1 >= hbar/2."""
    B = _spd(seed, 2 * n) * hbar * 0.5
    lam1 = symplectic_spectrum(B).smallest
    verdict = hermitian_psd_check(rsup_matrix(B, hbar), tol=1e-12)
    if abs(lam1 - hbar / 2) > 1e-8:
        assert verdict.is_psd == (lam1 > hbar / 2)


def test_hermitian_check():
    v = hermitian_psd_check(np.diag([1.0, 0.0]))
    assert v.is_psd and v.min_eigenvalue == 0.0
    assert not hermitian_psd_check(np.diag([1.0, -1e-3])).is_psd
    with pytest.raises(NotHermitianError):
        hermitian_psd_check(np.array([[1.0, 1j], [1j, 1.0]]))


def test_rsup_matrix_ground_state():
    H = rsup_matrix(0.5 * np.eye(2), 1.0)
    assert np.allclose(H, H.conj().T)
    assert np.linalg.eigvalsh(H) == pytest.approx([0.0, 1.0], abs=1e-15)
