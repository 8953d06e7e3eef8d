"""Statistical functionals of fields: mass, mean, covariance, purity, entropy."""

from dataclasses import dataclass
import math

import numpy as np

from .errors import EntropyClippingError, ZeroMassError
from .grid import (
    MASS_EPS,
    Field,
    boundary_mass_fraction,
    integrate,
    l2_norm_sq,
    normalize_l2,
    normalize_mass,
)
from .transforms import hbar_ft, symplectic_ft

__all__ = [
    "MomentReport",
    "EntropyValue",
    "moment_report",
    "mean_and_covariance",
    "density_from_square",
    "boltzmann_entropy",
    "gaussian_entropy",
    "shannon_bound",
]

CLIP_THRESHOLD = 1e-9


@dataclass(frozen=True)
class MomentReport:
    mass: complex
    mean: np.ndarray
    covariance: np.ndarray
    purity: float
    boundary_mass_fraction: float

    def to_dict(self) -> dict:
        return {
            "mass": [self.mass.real, self.mass.imag],
            "mean": [float(v) for v in self.mean],
            "covariance": [float(v) for v in np.asarray(self.covariance).ravel()],
            "purity": float(self.purity),
            "boundary_mass_fraction": float(self.boundary_mass_fraction),
        }


@dataclass(frozen=True)
class EntropyValue:
    value: float
    clipped_mass: float

    def usable(self, threshold: float = CLIP_THRESHOLD) -> bool:
        return self.clipped_mass <= threshold and math.isfinite(self.value)

    def to_dict(self) -> dict:
        return {"entropy_nats": float(self.value), "clipped_mass": float(self.clipped_mass)}


def _marginal(vals: np.ndarray, keep: tuple) -> np.ndarray:
    drop = tuple(i for i in range(vals.ndim) if i not in keep)
    return vals.sum(axis=drop) if drop else vals


def mean_and_covariance(F: Field):
    """
    Mean vector and covariance of a mass-one field (real part used).

    Sums go through one- and two-dimensional marginals; numpy's pairwise
    summation keeps the reductions deterministic and accurate.
    """
    grid = F.grid
    vals = np.asarray(F.values).real
    dV = grid.cell_volume
    d = 2 * grid.dim_n
    coords = [a.coords for a in grid.axes]

    mean = np.empty(d)
    for i in range(d):
        mean[i] = np.sum(_marginal(vals, (i,)) * coords[i]) * dV
    cov = np.empty((d, d))
    for i in range(d):
        ci = coords[i] - mean[i]
        cov[i, i] = np.sum(_marginal(vals, (i,)) * ci * ci) * dV
        for j in range(i + 1, d):
            cj = coords[j] - mean[j]
            m2 = _marginal(vals, (i, j))
            cov[i, j] = cov[j, i] = np.sum(m2 * np.outer(ci, cj)) * dV
    if not (np.all(np.isfinite(mean)) and np.all(np.isfinite(cov))):
        raise FloatingPointError("non-finite moments")
    return mean, cov


def moment_report(F: Field, eps: float = MASS_EPS) -> MomentReport:
    """
    Mass, mean, covariance and purity of F.

    Mean and covariance are those of the mass-normalized field; purity is
    (2 pi hbar)^n ||F / mass||^2, so it is never clamped to 1.
    """
    mass = integrate(F)
    if abs(mass) <= eps:
        raise ZeroMassError(f"total mass {abs(mass):.3g} is below {eps:g}")
    Ft = normalize_mass(F, eps)
    mean, cov = mean_and_covariance(Ft)
    n, hbar = F.grid.dim_n, F.grid.hbar
    purity = (2.0 * math.pi * hbar) ** n * l2_norm_sq(Ft)
    return MomentReport(
        mass=mass,
        mean=mean,
        covariance=cov,
        purity=float(purity),
        boundary_mass_fraction=boundary_mass_fraction(F),
    )


def density_from_square(F: Field, which: str = "direct") -> Field:
    """
    Probability density |F/||F|| |^2, or that of its symplectic or
    hbar-scaled Fourier transform (``which`` in direct, symplectic_ft, hbar_ft).
    """
    G = normalize_l2(F)
    if which == "symplectic_ft":
        G = symplectic_ft(G)
    elif which == "hbar_ft":
        G = hbar_ft(G)
    elif which != "direct":
        raise ValueError(f"unknown density kind {which!r}")
    return G.with_values(np.abs(G.values) ** 2, label=f"|{G.label}|^2")


def boltzmann_entropy(mu, clip_threshold: float | None = CLIP_THRESHOLD, mass_tol: float = 1e-6) -> EntropyValue:
    """
    -int mu log mu for a sampled density (Field or WaveFunction-like object
    exposing ``values`` and ``cell_volume``).

    Negative samples are clipped to zero and their absolute mass is reported.
    With ``clip_threshold=None`` no error is raised and the caller decides.
    """
    vals = np.asarray(mu.values)
    if np.iscomplexobj(vals):
        vals = vals.real
    dV = mu.cell_volume
    mass = float(np.sum(vals) * dV)
    if abs(mass - 1.0) > mass_tol:
        raise ValueError(f"density mass {mass:.9g} is not 1 within {mass_tol:g}")
    clipped = float(-np.sum(vals[vals < 0]) * dV) + 0.0  # no -0.0 in reports
    pos = vals[vals > 0]
    value = float(-np.sum(pos * np.log(pos)) * dV)
    if clip_threshold is not None and clipped > clip_threshold:
        raise EntropyClippingError(f"clipped mass {clipped:.3g} exceeds {clip_threshold:g}")
    return EntropyValue(value=value, clipped_mass=clipped)


def gaussian_entropy(cov) -> float:
    """Entropy of a Gaussian density with covariance ``cov``."""
    cov = np.atleast_2d(np.asarray(cov, dtype=float))
    d = cov.shape[0]
    sign, logdet = np.linalg.slogdet(cov)
    if sign <= 0:
        return -math.inf
    return 0.5 * (d * math.log(2.0 * math.pi * math.e) + logdet)


shannon_bound = gaussian_entropy
