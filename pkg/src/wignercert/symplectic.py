"""
Linear algebra of the standard symplectic structure on R^{2n}.

Phase-space vectors are ordered ``z = (x_1..x_n, p_1..p_n)`` throughout the
package, so the standard symplectic matrix is the block matrix
``J = [[0, I], [-I, 0]]``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionError,
    NotHermitianError,
    NotPositiveDefiniteError,
    NotSymmetricError,
    PairingError,
)

__all__ = [
    "SymplecticSpectrum",
    "HermitianVerdict",
    "standard_J",
    "time_reversal",
    "is_symplectic",
    "is_anti_symplectic",
    "symmetrize",
    "symplectic_spectrum",
    "hermitian_psd_check",
    "rsup_matrix",
    "random_symplectic",
]

SYMMETRY_RTOL = 1e-8
PAIRING_RTOL = 1e-7


@dataclass(frozen=True)
class SymplecticSpectrum:
    """Williamson invariants of an SPD matrix, ascending."""

    values: np.ndarray
    pairing_residual: float

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def smallest(self) -> float:
        return float(self.values[0])


@dataclass(frozen=True)
class HermitianVerdict:
    min_eigenvalue: float
    scale: float
    is_psd: bool
    tolerance: float


def _half_dim(M) -> int:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] % 2:
        raise DimensionError(f"expected a square 2n x 2n matrix, got shape {M.shape}")
    return M.shape[0] // 2


def standard_J(n: int) -> np.ndarray:
    """Return the 2n x 2n standard symplectic matrix [[0, I], [-I, 0]]."""
    if int(n) != n or n < 1:
        raise DimensionError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye], [-eye, zero]])


def time_reversal(n: int) -> np.ndarray:
    """Momentum reversal T = diag(I, -I); the canonical anti-symplectic matrix."""
    return np.diag(np.concatenate([np.ones(n), -np.ones(n)]))


def is_symplectic(M, tol: float = 1e-9) -> bool:
    """True iff ``max|M^T J M - J| <= tol``."""
    M = np.asarray(M, dtype=float)
    J = standard_J(_half_dim(M))
    return bool(np.max(np.abs(M.T @ J @ M - J)) <= tol)


def is_anti_symplectic(M, tol: float = 1e-9) -> bool:
    """True iff ``max|M^T J M + J| <= tol``."""
    M = np.asarray(M, dtype=float)
    J = standard_J(_half_dim(M))
    return bool(np.max(np.abs(M.T @ J @ M + J)) <= tol)


def symmetrize(B, rtol: float = SYMMETRY_RTOL) -> np.ndarray:
    """Return (B + B^T)/2, refusing inputs that are visibly non-symmetric."""
    B = np.asarray(B, dtype=float)
    _half_dim(B)
    scale = max(np.max(np.abs(B)), np.finfo(float).tiny)
    asym = np.max(np.abs(B - B.T)) / scale
    if asym > rtol:
        raise NotSymmetricError(f"relative asymmetry {asym:.3g} exceeds {rtol:g}")
    return 0.5 * (B + B.T)


def symplectic_spectrum(B, pairing_rtol: float = PAIRING_RTOL) -> SymplecticSpectrum:
    """
    Symplectic eigenvalues of a real symmetric positive-definite matrix.

    The eigenvalues of ``B J^{-1}`` are ``+-i lambda_j``; their moduli are
    sorted and paired greedily, and the worst relative mismatch inside a
    pair is reported as ``pairing_residual``.

    Raises
    ------
    NotSymmetricError, NotPositiveDefiniteError, PairingError
    """
    B = symmetrize(B)
    n = _half_dim(B)
    eig_b = np.linalg.eigvalsh(B)
    if not np.all(np.isfinite(eig_b)):
        raise NotPositiveDefiniteError("matrix has non-finite entries")
    if eig_b[0] <= 0.0:
        raise NotPositiveDefiniteError(f"minimum eigenvalue {eig_b[0]:.3g} is not positive")

    J_inv = -standard_J(n)
    moduli = np.sort(np.abs(np.linalg.eigvals(B @ J_inv)))
    pairs = moduli.reshape(n, 2)
    residual = float(np.max(np.abs(pairs[:, 1] - pairs[:, 0]) / pairs.max(axis=1)))
    if residual > pairing_rtol:
        raise PairingError(f"pairing residual {residual:.3g} exceeds {pairing_rtol:g}")
    return SymplecticSpectrum(values=pairs.mean(axis=1), pairing_residual=residual)


def hermitian_psd_check(H, tol: float = 1e-9) -> HermitianVerdict:
    """
    Positive semi-definiteness of a Hermitian matrix in C^{2n}.

    ``is_psd`` holds iff the smallest eigenvalue of (H + H^dagger)/2 is at
    least ``-tol * max(scale, 1)``, with ``scale`` the largest |eigenvalue|.
    """
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {H.shape}")
    entry_scale = max(float(np.max(np.abs(H))), 1.0)
    if np.max(np.abs(H - H.conj().T)) > tol * entry_scale:
        raise NotHermitianError("matrix is not Hermitian within tolerance")
    eigs = np.linalg.eigvalsh(0.5 * (H + H.conj().T))
    scale = float(np.max(np.abs(eigs)))
    min_eig = float(eigs[0])
    return HermitianVerdict(
        min_eigenvalue=min_eig,
        scale=scale,
        is_psd=min_eig >= -tol * max(scale, 1.0),
        tolerance=tol,
    )


def rsup_matrix(cov, hbar: float) -> np.ndarray:
    """Cov + (i hbar / 2) J, Hermitian whenever Cov is symmetric."""
    cov = np.asarray(cov, dtype=float)
    return cov + 0.5j * hbar * standard_J(_half_dim(cov))


def random_symplectic(n: int, rng: np.random.Generator, max_squeeze: float = 0.5) -> np.ndarray:
    """
    Draw a symplectic matrix as ``O1 . diag(e^r, e^-r) . O2`` with orthosymplectic
    factors; ``|r| <= max_squeeze`` bounds the condition number.
    """
    def orthosymplectic():
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        u, _ = np.linalg.qr(a)
        return np.block([[u.real, -u.imag], [u.imag, u.real]])

    r = rng.uniform(-max_squeeze, max_squeeze, size=n)
    squeeze = np.diag(np.concatenate([np.exp(r), np.exp(-r)]))
    return orthosymplectic() @ squeeze @ orthosymplectic()
