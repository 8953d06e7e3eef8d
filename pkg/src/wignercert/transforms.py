"""
Integral transforms on sampled phase-space functions.

All discrete transforms approximate the continuum integrals with explicit
phase factors for the symmetric ``[-L, L)`` grids, so the outputs can be
compared directly against closed forms:

* ``wigner_transform`` / ``cross_wigner``::

      W(f, g)(x, p) = (2 pi hbar)^-n  int f(x + y/2) conj(g(x - y/2)) e^{-i p.y/hbar} dy

* ``symplectic_ft``::

      (F_sigma F)(zeta) = (2 pi hbar)^-n  int F(z) e^{-i sigma(zeta, z)/hbar} dz,
      sigma(zeta, z) = zeta_p . x - zeta_x . p

* ``hbar_ft``, the unitary hbar-scaled Fourier transform.
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy import fft as sfft, signal

from .errors import AliasingError, DimensionError, GridError
from .grid import (
    BOUNDARY_WARN_FRACTION,
    AxisSpec,
    Field,
    PhaseSpaceGrid,
    WaveFunction,
    boundary_mass_fraction,
)
from .symplectic import standard_J

__all__ = [
    "LinearSymbol",
    "wigner_transform",
    "cross_wigner",
    "wigner_of_mixture",
    "symplectic_ft",
    "hbar_ft",
    "trace_pairing",
    "overlap",
    "spectral_gradient",
    "moyal_linear_left",
    "moyal_linear_right",
    "moyal_identity_sides",
]


def _dft_axis(a: np.ndarray, axis: int, in_ax: AxisSpec, hbar: float, sign: int) -> np.ndarray:
    """
    sum_j a_j exp(sign * i * w_m * x_j / hbar) * dx along one array axis.

    The output frequencies w_m live on ``in_ax.reciprocal(hbar)``.
    """
    out_ax = in_ax.reciprocal(hbar)
    n_pts = in_ax.points
    x0, dx = in_ax.coords[0], in_ax.step
    w = out_ax.coords
    j = np.arange(n_pts)

    shape = [1] * a.ndim
    shape[axis] = n_pts
    pre = np.exp(sign * 1j * w[0] * j * dx / hbar).reshape(shape)
    post = np.exp(sign * 1j * w * x0 / hbar).reshape(shape)
    if sign < 0:
        core = sfft.fft(a * pre, axis=axis)
    else:
        core = sfft.ifft(a * pre, axis=axis) * n_pts
    return core * post * dx


def _upsample2(values: np.ndarray) -> np.ndarray:
    """Band-limited interpolation onto a grid with half the spacing."""
    out = values
    for axis in range(values.ndim):
        out = signal.resample(out, 2 * values.shape[axis], axis=axis)
    return out


def cross_wigner(f: WaveFunction, g: WaveFunction) -> Field:
    """
    Cross-Wigner function W(f, g) on the grid whose p-axes are reciprocal to
    the configuration axes of ``f``.

    The half-integer shifts x +- y/2 are read from a band-limited 2x
    upsampling of the inputs, with y sampled at the configuration step.
    """
    if not f.same_axes(g):
        raise GridError("cross_wigner needs both wave functions on the same axes")
    if not math.isclose(f.hbar, g.hbar, rel_tol=1e-12):
        raise GridError("wave functions carry different hbar")
    for h in (f, g):
        if not np.all(np.isfinite(h.values)):
            raise ValueError("wave function contains NaN or inf")
    n, hbar = f.dim_n, f.hbar
    grid = PhaseSpaceGrid.wigner_grid(f.axes, hbar)

    fu = _upsample2(np.asarray(f.values))
    gu = fu if g is f else _upsample2(np.asarray(g.values))

    plus_idx, minus_idx, valid = [], [], np.ones([1] * (2 * n), dtype=bool)
    for d, ax in enumerate(f.axes):
        N = ax.points
        j = np.arange(N)[:, None]
        k = np.arange(N)[None, :] - N // 2
        plus, minus = 2 * j + k, 2 * j - k
        ok = (plus >= 0) & (plus < 2 * N) & (minus >= 0) & (minus < 2 * N)
        shape = [1] * (2 * n)
        shape[d] = shape[n + d] = N
        plus_idx.append(np.clip(plus, 0, 2 * N - 1).reshape(shape))
        minus_idx.append(np.clip(minus, 0, 2 * N - 1).reshape(shape))
        valid = valid & ok.reshape(shape)

    prod = fu[tuple(plus_idx)] * np.conj(gu[tuple(minus_idx)]) * valid
    for d, ax in enumerate(f.axes):
        prod = _dft_axis(prod, n + d, ax, hbar, sign=-1)
    prod /= (2.0 * math.pi * hbar) ** n
    return Field(grid, prod, label="W(f,g)")


def wigner_transform(f: WaveFunction) -> Field:
    """Wigner function of a pure state; real up to round-off."""
    W = cross_wigner(f, f)
    return W.with_values(W.values.real, label="W(f)")


def wigner_of_mixture(weights, fs) -> Field:
    """sum_a w_a W(f_a) for a convex combination of pure states."""
    weights = np.asarray(weights, dtype=float)
    if len(weights) != len(fs) or len(fs) == 0:
        raise ValueError("need one weight per wave function")
    if np.any(weights < 0):
        raise ValueError("mixture weights must be nonnegative")
    if abs(weights.sum() - 1.0) > 1e-12:
        raise ValueError(f"mixture weights sum to {weights.sum():.15g}, not 1")
    total = None
    for w, f in zip(weights, fs):
        W = wigner_transform(f)
        total = w * W.values if total is None else total + w * W.values
    return Field(W.grid, total, label="W(rho)")


def symplectic_ft(F: Field) -> Field:
    """
    Symplectic Fourier transform; an involution.

    x is transformed against zeta_p and p against zeta_x, after which the
    array axes are swapped so the output is again ordered (zeta_x, zeta_p).
    """
    grid, n, hbar = F.grid, F.grid.dim_n, F.grid.hbar
    vals = np.asarray(F.values)
    for i, ax in enumerate(grid.x_axes):
        vals = _dft_axis(vals, i, ax, hbar, sign=-1)
    for i, ax in enumerate(grid.p_axes):
        vals = _dft_axis(vals, n + i, ax, hbar, sign=+1)
    vals = np.transpose(vals, list(range(n, 2 * n)) + list(range(n)))
    vals = vals / (2.0 * math.pi * hbar) ** n
    return Field(grid.symplectic_dual(), vals, label=f"Fsigma[{F.label}]")


def hbar_ft(obj):
    """
    Unitary hbar-scaled Fourier transform of a WaveFunction (on R^n) or a
    Field (on R^{2n}, every coordinate transformed with the same sign).
    """
    if isinstance(obj, WaveFunction):
        vals = np.asarray(obj.values)
        for i, ax in enumerate(obj.axes):
            vals = _dft_axis(vals, i, ax, obj.hbar, sign=-1)
        vals = vals / (2.0 * math.pi * obj.hbar) ** (obj.dim_n / 2)
        return WaveFunction(tuple(a.reciprocal(obj.hbar) for a in obj.axes), vals, obj.hbar)
    if isinstance(obj, Field):
        grid = obj.grid
        vals = np.asarray(obj.values)
        for i, ax in enumerate(grid.axes):
            vals = _dft_axis(vals, i, ax, grid.hbar, sign=-1)
        vals = vals / (2.0 * math.pi * grid.hbar) ** grid.dim_n
        return Field(grid.fourier_dual(), vals, label=f"Fhbar[{obj.label}]")
    raise TypeError(f"hbar_ft expects a WaveFunction or Field, got {type(obj).__name__}")


def _check_same_grid(A: Field, B: Field):
    if not A.grid.same_as(B.grid):
        raise GridError("fields live on different grids")


def trace_pairing(A: Field, B: Field) -> complex:
    """
    Tr(A B) from Weyl symbols: (2 pi hbar)^-n int a b dz.

    Symbols of density operators are (2 pi hbar)^n times their Wigner
    functions; callers scale explicitly.
    """
    _check_same_grid(A, B)
    n, hbar = A.grid.dim_n, A.grid.hbar
    return complex(np.sum(A.values * B.values) * A.grid.cell_volume / (2.0 * math.pi * hbar) ** n)


def overlap(A: Field, B: Field) -> complex:
    """Phase-space inner product ((A|B)) = int conj(A) B dz."""
    _check_same_grid(A, B)
    return complex(np.sum(np.conj(A.values) * B.values) * A.grid.cell_volume)


@dataclass(frozen=True)
class LinearSymbol:
    """The linear Weyl symbol a(z) = eta . (z - z0)."""

    eta: np.ndarray
    z0: np.ndarray
    hbar: float = 1.0

    def __post_init__(self):
        eta = np.asarray(self.eta, dtype=complex).ravel()
        z0 = np.asarray(self.z0, dtype=float).ravel()
        if eta.shape != z0.shape or eta.size % 2:
            raise DimensionError("eta and z0 must both be 2n-vectors")
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "z0", z0)

    def evaluate(self, grid: PhaseSpaceGrid) -> np.ndarray:
        if self.eta.size != 2 * grid.dim_n:
            raise DimensionError("symbol dimension does not match grid")
        return sum(self.eta[i] * (grid.coordinate(i) - self.z0[i]) for i in range(2 * grid.dim_n))


def spectral_gradient(F: Field) -> list:
    """Partial derivatives along each grid axis by FFT differentiation."""
    grads = []
    vals = np.asarray(F.values)
    for i, ax in enumerate(F.grid.axes):
        k = 2.0 * math.pi * sfft.fftfreq(ax.points, d=ax.step)
        k[ax.points // 2] = 0.0  # Nyquist mode has no odd derivative
        shape = [1] * vals.ndim
        shape[i] = ax.points
        grads.append(sfft.ifft(1j * k.reshape(shape) * sfft.fft(vals, axis=i), axis=i))
    return grads


def _poisson_term(a: LinearSymbol, F: Field, max_boundary: float) -> np.ndarray:
    if not math.isclose(a.hbar, F.grid.hbar, rel_tol=1e-12):
        raise GridError("symbol and field carry different hbar")
    frac = boundary_mass_fraction(F)
    if frac > max_boundary:
        raise AliasingError(f"boundary-shell mass fraction {frac:.3g} exceeds {max_boundary:g}")
    coeff = standard_J(F.grid.dim_n).T @ a.eta  # eta . J grad F = (J^T eta) . grad F
    grads = spectral_gradient(F)
    return sum(c * g for c, g in zip(coeff, grads) if c != 0)


def moyal_linear_left(a: LinearSymbol, F: Field, max_boundary: float = BOUNDARY_WARN_FRACTION) -> Field:
    """a * F = a F + (i hbar / 2) eta . J grad F."""
    term = _poisson_term(a, F, max_boundary)
    vals = a.evaluate(F.grid) * F.values + 0.5j * F.grid.hbar * term
    return F.with_values(vals, label=f"a*{F.label}")


def moyal_linear_right(a: LinearSymbol, F: Field, max_boundary: float = BOUNDARY_WARN_FRACTION) -> Field:
    """F * a = a F - (i hbar / 2) eta . J grad F."""
    term = _poisson_term(a, F, max_boundary)
    vals = a.evaluate(F.grid) * F.values - 0.5j * F.grid.hbar * term
    return F.with_values(vals, label=f"{F.label}*a")


def moyal_identity_sides(a: LinearSymbol, F: Field, max_boundary: float = BOUNDARY_WARN_FRACTION):
    """
    Both sides of

        1/2 int (|a*F|^2 + |F*a|^2) dz = int (|a|^2 |F|^2 + |eta.zeta|^2 |F_sigma F|^2 / 4) dz,

    the right-hand second term evaluated on the dual grid of F_sigma F.
    """
    left = moyal_linear_left(a, F, max_boundary)
    right = moyal_linear_right(a, F, max_boundary)
    dV = F.grid.cell_volume
    lhs = 0.5 * float(np.sum(np.abs(left.values) ** 2 + np.abs(right.values) ** 2)) * dV
    G = symplectic_ft(F)
    eta_z = sum(a.eta[i] * G.grid.coordinate(i) for i in range(2 * F.grid.dim_n))
    rhs = float(np.sum(np.abs(a.evaluate(F.grid)) ** 2 * np.abs(F.values) ** 2)) * dV
    rhs += 0.25 * float(np.sum(np.abs(eta_z) ** 2 * np.abs(G.values) ** 2)) * G.grid.cell_volume
    return lhs, rhs
