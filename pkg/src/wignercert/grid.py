"""
Uniform discretization of configuration space R^n and phase space R^{2n}.

Every axis covers the half-open interval ``[-L, L)`` with ``points`` samples,
so sample ``j`` sits at ``-L + j * step`` and the origin is a grid point.
Integrals are rectangle-rule sums, which are spectrally accurate for smooth
decaying integrands.

Two axes are *reciprocal* when ``step * step' = 2 pi hbar / points``; a
phase-space grid whose p-axes are reciprocal to its x-axes is mapped onto
itself by the symplectic Fourier transform and is the grid produced by the
Wigner transform.
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy import ndimage

from .errors import DimensionError, GridError, ZeroMassError

__all__ = [
    "AxisSpec",
    "PhaseSpaceGrid",
    "Field",
    "WaveFunction",
    "integrate",
    "l2_norm_sq",
    "normalize_mass",
    "normalize_l2",
    "dilate",
    "compose_linear",
    "boundary_mass_fraction",
    "balanced_half_extent",
    "BOUNDARY_WARN_FRACTION",
]

MASS_EPS = 1e-12
BOUNDARY_WARN_FRACTION = 1e-6
BOUNDARY_LAYERS = 2


def balanced_half_extent(points: int, hbar: float) -> float:
    """Half extent L for which an axis is its own reciprocal: L = sqrt(pi hbar N / 2)."""
    return math.sqrt(math.pi * hbar * points / 2.0)


@dataclass(frozen=True)
class AxisSpec:
    points: int
    half_extent: float

    def __post_init__(self):
        if self.points < 2 or self.points & (self.points - 1):
            raise GridError(f"points must be a power of two >= 2, got {self.points}")
        if not self.half_extent > 0:
            raise GridError(f"half_extent must be positive, got {self.half_extent}")
        object.__setattr__(self, "points", int(self.points))
        object.__setattr__(self, "half_extent", float(self.half_extent))

    @property
    def step(self) -> float:
        return 2.0 * self.half_extent / self.points

    @property
    def coords(self) -> np.ndarray:
        return -self.half_extent + self.step * np.arange(self.points)

    def reciprocal(self, hbar: float) -> "AxisSpec":
        """Axis of the conjugate variable under an hbar-scaled DFT."""
        return AxisSpec(self.points, math.pi * hbar * self.points / (2.0 * self.half_extent))

    def is_reciprocal_to(self, other: "AxisSpec", hbar: float, rtol: float = 1e-12) -> bool:
        if self.points != other.points:
            return False
        target = 2.0 * math.pi * hbar / self.points
        return abs(self.step * other.step - target) <= rtol * target

    def to_dict(self) -> dict:
        return {"points": self.points, "half_extent": self.half_extent}


@dataclass(frozen=True)
class PhaseSpaceGrid:
    """Cartesian grid on R^{2n}; array axes are ordered (x_1..x_n, p_1..p_n)."""

    dim_n: int
    x_axes: tuple
    p_axes: tuple
    hbar: float

    def __post_init__(self):
        object.__setattr__(self, "x_axes", tuple(self.x_axes))
        object.__setattr__(self, "p_axes", tuple(self.p_axes))
        if self.dim_n < 1 or len(self.x_axes) != self.dim_n or len(self.p_axes) != self.dim_n:
            raise DimensionError("need exactly dim_n x-axes and dim_n p-axes")
        if not self.hbar > 0:
            raise GridError("hbar must be positive")

    @classmethod
    def wigner_grid(cls, x_axes, hbar: float) -> "PhaseSpaceGrid":
        """Grid whose p-axes are reciprocal to ``x_axes`` (the Wigner output grid)."""
        x_axes = tuple(x_axes)
        return cls(len(x_axes), x_axes, tuple(a.reciprocal(hbar) for a in x_axes), hbar)

    @classmethod
    def default(cls, n: int = 1, points: int | None = None, hbar: float = 1.0,
                half_extent: float | None = None) -> "PhaseSpaceGrid":
        """
        Desk-scale default: 256 points per axis for n=1, 32 for n=2 (64 max).

        Without ``half_extent`` the x-extent is chosen so that x and p axes
        coincide, which makes the grid self-dual under the symplectic FT.
        """
        if points is None:
            points = 256 if n == 1 else 32
        if n >= 2 and points > 64:
            raise GridError("n >= 2 grids are capped at 64 points per axis")
        if half_extent is None:
            half_extent = balanced_half_extent(points, hbar)
        return cls.wigner_grid([AxisSpec(points, half_extent)] * n, hbar)

    @property
    def axes(self) -> tuple:
        return self.x_axes + self.p_axes

    @property
    def shape(self) -> tuple:
        return tuple(a.points for a in self.axes)

    @property
    def size(self) -> int:
        return int(np.prod(self.shape))

    @property
    def cell_volume(self) -> float:
        return float(np.prod([a.step for a in self.axes]))

    @property
    def is_wigner_grid(self) -> bool:
        return all(xa.is_reciprocal_to(pa, self.hbar) for xa, pa in zip(self.x_axes, self.p_axes))

    def coordinate(self, i: int) -> np.ndarray:
        """Coordinates along axis ``i`` shaped to broadcast against field values."""
        shape = [1] * (2 * self.dim_n)
        shape[i] = self.axes[i].points
        return self.axes[i].coords.reshape(shape)

    def radius_sq(self) -> np.ndarray:
        return sum(self.coordinate(i) ** 2 for i in range(2 * self.dim_n))

    def symplectic_dual(self) -> "PhaseSpaceGrid":
        """Output grid of the symplectic FT: zeta_x is conjugate to p, zeta_p to x."""
        return PhaseSpaceGrid(
            self.dim_n,
            tuple(a.reciprocal(self.hbar) for a in self.p_axes),
            tuple(a.reciprocal(self.hbar) for a in self.x_axes),
            self.hbar,
        )

    def fourier_dual(self) -> "PhaseSpaceGrid":
        """Output grid of the plain hbar-scaled FT on R^{2n}."""
        return PhaseSpaceGrid(
            self.dim_n,
            tuple(a.reciprocal(self.hbar) for a in self.x_axes),
            tuple(a.reciprocal(self.hbar) for a in self.p_axes),
            self.hbar,
        )

    def same_as(self, other: "PhaseSpaceGrid") -> bool:
        return (
            self.dim_n == other.dim_n
            and self.shape == other.shape
            and math.isclose(self.hbar, other.hbar, rel_tol=1e-12)
            and all(math.isclose(a.half_extent, b.half_extent, rel_tol=1e-12)
                    for a, b in zip(self.axes, other.axes))
        )

    def to_dict(self) -> dict:
        return {
            "dim_n": self.dim_n,
            "x_axes": [a.to_dict() for a in self.x_axes],
            "p_axes": [a.to_dict() for a in self.p_axes],
            "hbar": self.hbar,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PhaseSpaceGrid":
        return cls(
            int(d["dim_n"]),
            tuple(AxisSpec(int(a["points"]), float(a["half_extent"])) for a in d["x_axes"]),
            tuple(AxisSpec(int(a["points"]), float(a["half_extent"])) for a in d["p_axes"]),
            float(d["hbar"]),
        )

    def reciprocity_summary(self) -> dict:
        return {
            "x_steps": [a.step for a in self.x_axes],
            "p_steps": [a.step for a in self.p_axes],
            "two_pi_hbar_over_points": [2 * math.pi * self.hbar / a.points for a in self.x_axes],
            "is_wigner_grid": self.is_wigner_grid,
        }


def _frozen(values, shape) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    if arr.shape != tuple(shape):
        try:
            arr = arr.reshape(shape)
        except ValueError:
            raise DimensionError(f"values of shape {arr.shape} do not fit grid shape {shape}") from None
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Field:
    """Complex samples of a phase-space function; immutable."""

    grid: PhaseSpaceGrid
    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values, self.grid.shape))

    def with_values(self, values, label: str | None = None) -> "Field":
        return Field(self.grid, values, self.label if label is None else label)

    @property
    def cell_volume(self) -> float:
        return self.grid.cell_volume

    def max_imag_ratio(self) -> float:
        peak = float(np.max(np.abs(self.values)))
        return float(np.max(np.abs(self.values.imag))) / peak if peak > 0 else 0.0

    def is_real(self, tol: float = 1e-9) -> bool:
        return self.max_imag_ratio() <= tol

    def __mul__(self, c):
        return self.with_values(self.values * c)

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class WaveFunction:
    """Complex samples of f in L^2(R^n) on n configuration axes."""

    axes: tuple
    values: np.ndarray
    hbar: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "axes", tuple(self.axes))
        object.__setattr__(self, "values", _frozen(self.values, tuple(a.points for a in self.axes)))

    @property
    def dim_n(self) -> int:
        return len(self.axes)

    @property
    def cell_volume(self) -> float:
        return float(np.prod([a.step for a in self.axes]))

    def coordinate(self, i: int) -> np.ndarray:
        shape = [1] * self.dim_n
        shape[i] = self.axes[i].points
        return self.axes[i].coords.reshape(shape)

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2) * self.cell_volume)

    def inner(self, other: "WaveFunction") -> complex:
        """(self|other), anti-linear in the first argument."""
        return complex(np.sum(np.conj(self.values) * other.values) * self.cell_volume)

    def normalized(self) -> "WaveFunction":
        nsq = self.norm_sq()
        if nsq <= MASS_EPS:
            raise ZeroMassError("cannot normalize a zero wave function")
        return WaveFunction(self.axes, self.values / math.sqrt(nsq), self.hbar)

    def same_axes(self, other: "WaveFunction") -> bool:
        return len(self.axes) == len(other.axes) and all(
            a.points == b.points and math.isclose(a.half_extent, b.half_extent, rel_tol=1e-12)
            for a, b in zip(self.axes, other.axes)
        )


def integrate(F: Field) -> complex:
    """Rectangle-rule integral of F over phase space."""
    return complex(np.sum(F.values) * F.grid.cell_volume)


def l2_norm_sq(F: Field) -> float:
    return float(np.sum(np.abs(F.values) ** 2) * F.grid.cell_volume)


def normalize_mass(F: Field, eps: float = MASS_EPS) -> Field:
    """F / integral(F)."""
    mass = integrate(F)
    if abs(mass) <= eps:
        raise ZeroMassError(f"total mass {abs(mass):.3g} is below {eps:g}")
    return F.with_values(F.values / mass)


def normalize_l2(F: Field, eps: float = MASS_EPS) -> Field:
    nsq = l2_norm_sq(F)
    if nsq <= eps:
        raise ZeroMassError(f"L2 norm squared {nsq:.3g} is below {eps:g}")
    return F.with_values(F.values / math.sqrt(nsq))


def boundary_mass_fraction(values, layers: int = BOUNDARY_LAYERS) -> float:
    """Fraction of sum|values| carried by the outermost ``layers`` of every axis."""
    a = np.abs(np.asarray(values.values if hasattr(values, "values") else values))
    total = float(np.sum(a))
    if total == 0.0:
        return 0.0
    inner = a[tuple(slice(layers, s - layers) for s in a.shape)]
    return max(0.0, (total - float(np.sum(inner))) / total)


def _resample(F: Field, index_coords: np.ndarray, order: int) -> np.ndarray:
    re = ndimage.map_coordinates(F.values.real, index_coords, order=order, mode="constant", cval=0.0)
    im = ndimage.map_coordinates(F.values.imag, index_coords, order=order, mode="constant", cval=0.0)
    return (re + 1j * im).reshape(F.grid.shape)


def _index_coords(grid: PhaseSpaceGrid, points: np.ndarray) -> np.ndarray:
    """Convert physical points (2n, M) into fractional array indices."""
    idx = np.empty_like(points)
    for i, ax in enumerate(grid.axes):
        idx[i] = (points[i] + ax.half_extent) / ax.step
    return idx


def _grid_points(grid: PhaseSpaceGrid) -> np.ndarray:
    mesh = np.meshgrid(*[a.coords for a in grid.axes], indexing="ij")
    return np.stack([m.ravel() for m in mesh])


def dilate(F: Field, mu: float, order: int = 1) -> Field:
    """
    The mass-preserving dilation z -> mu^{2n} F(mu z), resampled on the same grid.

    ``order=1`` is multilinear interpolation; for ``mu <= 1`` every sample
    point stays inside the grid.
    """
    if not mu > 0:
        raise GridError(f"dilation factor must be positive, got {mu}")
    pts = _grid_points(F.grid) * mu
    vals = _resample(F, _index_coords(F.grid, pts), order)
    return F.with_values(mu ** (2 * F.grid.dim_n) * vals, label=f"{F.label}|dilate({mu:g})")


def compose_linear(F: Field, S, order: int = 3) -> Field:
    """
    The field z -> F(S z) for a linear map S, resampled by spline interpolation.

    |det S| = 1 for (anti-)symplectic S, so mass and L2 norm are preserved.
    """
    S = np.asarray(S, dtype=float)
    if S.shape != (2 * F.grid.dim_n,) * 2:
        raise DimensionError(f"S must be {2 * F.grid.dim_n}x{2 * F.grid.dim_n}")
    pts = S @ _grid_points(F.grid)
    vals = _resample(F, _index_coords(F.grid, pts), order)
    return F.with_values(vals, label=f"{F.label}|compose")
