"""
Generators for the analytic test objects: Gaussian pure states, Hermite
functions, mixtures, tensor products, and the standard counterexample fields.
"""

from dataclasses import dataclass, field
import json
import math
from pathlib import Path

import numpy as np

from .errors import GridError, StateSpecError
from .grid import AxisSpec, Field, PhaseSpaceGrid, WaveFunction, boundary_mass_fraction
from .symplectic import is_symplectic, symmetrize
from .transforms import hbar_ft, wigner_of_mixture, wigner_transform

__all__ = [
    "make_gaussian_pure_wigner",
    "make_gaussian_field",
    "make_gaussian_wavefunction",
    "make_hermite_state",
    "hermite_basis",
    "make_disc_indicator",
    "make_example_final1",
    "make_example_final2",
    "make_tensor_product",
    "tensor_wavefunction",
    "StateSpec",
    "STATE_KINDS",
]

HERMITE_DRIFT_TOL = 1e-10
HERMITE_BOUNDARY_TOL = 1e-10


def _quadratic_form(grid: PhaseSpaceGrid, Q, z0) -> np.ndarray:
    d = 2 * grid.dim_n
    dz = [grid.coordinate(i) - z0[i] for i in range(d)]
    out = 0.0
    for i in range(d):
        for j in range(d):
            if Q[i, j] != 0.0:
                out = out + Q[i, j] * dz[i] * dz[j]
    return out * np.ones(grid.shape)


def make_gaussian_field(cov, z0, grid: PhaseSpaceGrid, label: str = "gaussian") -> Field:
    """Normalized Gaussian density with the given covariance (not necessarily a Wigner function)."""
    cov = symmetrize(cov)
    if cov.shape != (2 * grid.dim_n,) * 2:
        raise GridError("covariance does not match the grid dimension")
    z0 = np.zeros(2 * grid.dim_n) if z0 is None else np.asarray(z0, dtype=float)
    Q = np.linalg.inv(cov)
    norm = (2.0 * math.pi) ** grid.dim_n * math.sqrt(np.linalg.det(cov))
    return Field(grid, np.exp(-0.5 * _quadratic_form(grid, Q, z0)) / norm, label=label)


def make_gaussian_pure_wigner(cov, z0, grid: PhaseSpaceGrid, tol: float = 1e-9) -> Field:
    """
    Wigner function (pi hbar)^-n exp(-1/2 (z-z0).Cov^-1 (z-z0)) of a Gaussian
    pure state; ``(2/hbar) Cov`` must be symplectic.
    """
    cov = symmetrize(cov)
    if not is_symplectic(2.0 / grid.hbar * cov, tol):
        raise StateSpecError("(2/hbar) Cov is not symplectic: not a pure Gaussian state")
    z0 = np.zeros(2 * grid.dim_n) if z0 is None else np.asarray(z0, dtype=float)
    vals = np.exp(-0.5 * _quadratic_form(grid, np.linalg.inv(cov), z0)) / (math.pi * grid.hbar) ** grid.dim_n
    return Field(grid, vals, label="gaussian_pure")


def make_gaussian_wavefunction(axis: AxisSpec, hbar: float = 1.0, width: float | None = None,
                               x0: float = 0.0, p0: float = 0.0) -> WaveFunction:
    """(pi s^2)^-1/4 exp(-(x-x0)^2 / 2s^2 + i p0 x / hbar); s defaults to sqrt(hbar)."""
    s = math.sqrt(hbar) if width is None else width
    x = axis.coords
    vals = (math.pi * s * s) ** -0.25 * np.exp(-((x - x0) ** 2) / (2 * s * s) + 1j * p0 * x / hbar)
    return WaveFunction((axis,), vals, hbar)


def hermite_basis(K: int, axis: AxisSpec, hbar: float = 1.0) -> list:
    """
    The first K Hermite functions h_0..h_{K-1} by the three-term recurrence

        h_{k+1} = sqrt(2/(k+1)) (x/sqrt(hbar)) h_k - sqrt(k/(k+1)) h_{k-1},

    re-orthonormalized by quadrature Gram-Schmidt if the Gram matrix drifts.
    """
    if K < 1:
        raise ValueError("K must be at least 1")
    x = axis.coords / math.sqrt(hbar)
    h = np.empty((K, axis.points))
    h[0] = (math.pi * hbar) ** -0.25 * np.exp(-0.5 * x * x)
    if K > 1:
        h[1] = math.sqrt(2.0) * x * h[0]
    for k in range(1, K - 1):
        h[k + 1] = math.sqrt(2.0 / (k + 1)) * x * h[k] - math.sqrt(k / (k + 1)) * h[k - 1]

    for k in range(K):
        if boundary_mass_fraction(h[k] ** 2) > HERMITE_BOUNDARY_TOL:
            raise GridError(f"Hermite state {k} is not resolved by the configuration axis")
    top = WaveFunction((axis,), h[K - 1], hbar)
    if boundary_mass_fraction(np.abs(hbar_ft(top).values) ** 2) > HERMITE_BOUNDARY_TOL:
        raise GridError(f"Hermite state {K - 1} is not resolved in momentum")

    dx = axis.step
    gram = h @ h.T * dx
    if np.max(np.abs(gram - np.eye(K))) > HERMITE_DRIFT_TOL:
        for k in range(K):
            for j in range(k):
                h[k] -= (h[j] @ h[k]) * dx * h[j]
            h[k] /= math.sqrt(h[k] @ h[k] * dx)
    return [WaveFunction((axis,), h[k], hbar) for k in range(K)]


def make_hermite_state(k: int, axis: AxisSpec, hbar: float = 1.0) -> WaveFunction:
    """k-th Hermite function on one configuration axis."""
    return hermite_basis(k + 1, axis, hbar)[k]


def tensor_wavefunction(*fs: WaveFunction) -> WaveFunction:
    vals = fs[0].values
    for f in fs[1:]:
        vals = np.multiply.outer(vals, f.values)
    return WaveFunction(sum((f.axes for f in fs), ()), vals, fs[0].hbar)


def _require_n1(grid: PhaseSpaceGrid, what: str):
    if grid.dim_n != 1:
        raise GridError(f"{what} is defined on R^2 only; use make_tensor_product for n > 1")


def make_disc_indicator(R: float, grid: PhaseSpaceGrid, supersample: int = 8) -> Field:
    """
    chi_R / (pi R^2) on R^2, each sample being the average of the indicator
    over a ``supersample`` x ``supersample`` sub-lattice of its cell.
    """
    _require_n1(grid, "the disc indicator")
    if not 0 < R < min(a.half_extent for a in grid.axes):
        raise GridError("disc radius must be positive and inside the grid")
    x = grid.coordinate(0)
    p = grid.coordinate(1)
    offsets = (np.arange(supersample) + 0.5) / supersample - 0.5
    inside = np.zeros(grid.shape)
    for ox in offsets * grid.axes[0].step:
        for op in offsets * grid.axes[1].step:
            inside += ((x + ox) ** 2 + (p + op) ** 2 <= R * R)
    inside /= supersample ** 2
    return Field(grid, inside / (math.pi * R * R), label=f"disc(R={R:g})")


def make_example_final1(grid: PhaseSpaceGrid) -> Field:
    """(48 / pi hbar)(|z|^2/hbar - 1/6) exp(-4|z|^2/hbar): obeys RSUP, violates the refined one."""
    _require_n1(grid, "example_final1")
    h = grid.hbar
    r2 = grid.radius_sq()
    return Field(grid, 48.0 / (math.pi * h) * (r2 / h - 1.0 / 6.0) * np.exp(-4.0 * r2 / h),
                 label="example_final1")


def make_example_final2(grid: PhaseSpaceGrid) -> Field:
    """
    (1 / 2 pi hbar)(|z|^2/hbar - 1) exp(-|z|^2 / 2 hbar): obeys the refined
    inequalities, is an eigenfunction of F_sigma with eigenvalue -1, and is
    still not a Wigner function.
    """
    _require_n1(grid, "example_final2")
    h = grid.hbar
    r2 = grid.radius_sq()
    return Field(grid, (r2 / h - 1.0) * np.exp(-r2 / (2.0 * h)) / (2.0 * math.pi * h),
                 label="example_final2")


MAX_PRODUCT_SAMPLES = 64**4


def make_tensor_product(children, max_dim: int = 2, max_samples: int = MAX_PRODUCT_SAMPLES) -> Field:
    """Product field on the concatenated grid, axes reordered to (x..., p...)."""
    children = list(children)
    n_total = sum(c.grid.dim_n for c in children)
    if n_total > max_dim:
        raise GridError(f"tensor product of total dimension {n_total} exceeds the budget {max_dim}")
    size = math.prod(c.values.size for c in children)
    if size > max_samples:
        raise GridError(f"tensor product needs {size} samples, above the budget {max_samples}")
    hbar = children[0].grid.hbar
    if any(not math.isclose(c.grid.hbar, hbar, rel_tol=1e-12) for c in children):
        raise GridError("children carry different hbar")
    vals = children[0].values
    for c in children[1:]:
        vals = np.multiply.outer(vals, c.values)
    x_pos, p_pos, offset = [], [], 0
    for c in children:
        n = c.grid.dim_n
        x_pos += list(range(offset, offset + n))
        p_pos += list(range(offset + n, offset + 2 * n))
        offset += 2 * n
    vals = np.transpose(vals, x_pos + p_pos)
    grid = PhaseSpaceGrid(
        n_total,
        sum((c.grid.x_axes for c in children), ()),
        sum((c.grid.p_axes for c in children), ()),
        hbar,
    )
    return Field(grid, vals, label=" x ".join(c.label for c in children))


STATE_KINDS = (
    "gaussian_pure",
    "gaussian",
    "hermite",
    "mixture",
    "disc_indicator",
    "example_final1",
    "example_final2",
    "tensor_product",
    "custom_file",
)


@dataclass
class StateSpec:
    """
    JSON-serializable recipe for a test object.

    ``params`` by kind: gaussian_pure / gaussian {cov, z0}; hermite {k};
    mixture {weights, children}; disc_indicator {R}; tensor_product
    {children}; custom_file {path}.
    """

    kind: str
    params: dict = field(default_factory=dict)
    hbar: float = 1.0

    def __post_init__(self):
        if self.kind not in STATE_KINDS:
            raise StateSpecError(f"unknown state kind {self.kind!r}; expected one of {STATE_KINDS}")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "hbar": self.hbar, "params": self.params}

    @classmethod
    def from_dict(cls, d: dict) -> "StateSpec":
        if "kind" not in d:
            raise StateSpecError("state spec needs a 'kind'")
        params = dict(d.get("params", {}))
        params.update({k: v for k, v in d.items() if k not in ("kind", "hbar", "params")})
        return cls(d["kind"], params, float(d.get("hbar", 1.0)))

    @classmethod
    def parse(cls, text: str, hbar: float | None = None) -> "StateSpec":
        """Accept a kind name, an inline JSON object, or a path to a JSON file."""
        text = text.strip()
        if text.startswith("{"):
            spec = cls.from_dict(json.loads(text))
        elif text in STATE_KINDS:
            spec = cls(text)
        elif Path(text).suffix.lower() == ".json" and Path(text).is_file():
            spec = cls.from_dict(json.loads(Path(text).read_text()))
        elif Path(text).is_file():
            spec = cls("custom_file", {"path": text})
        else:
            raise StateSpecError(f"{text!r} is neither a state kind {STATE_KINDS} nor an existing file")
        if hbar is not None:
            spec = _with_hbar(spec, hbar)
        return spec

    @property
    def dim_n(self) -> int:
        if self.kind in ("gaussian_pure", "gaussian"):
            return len(self.params["cov"]) // 2
        if self.kind == "tensor_product":
            return sum(_child(c, self.hbar).dim_n for c in self.params["children"])
        if self.kind == "custom_file":
            from .fieldio import read_field
            return read_field(self.params["path"]).grid.dim_n
        return 1

    @property
    def is_wave_function(self) -> bool:
        return self.kind == "hermite"

    def wave_function(self, axes) -> WaveFunction:
        if self.kind != "hermite":
            raise StateSpecError(f"{self.kind} is not a pure state with a wave function")
        return make_hermite_state(int(self.params.get("k", 0)), axes[0], self.hbar)

    def build(self, grid: PhaseSpaceGrid) -> Field:
        if not math.isclose(grid.hbar, self.hbar, rel_tol=1e-12) and self.kind != "custom_file":
            raise StateSpecError("grid and state spec carry different hbar")
        p = self.params
        if self.kind == "gaussian_pure":
            return make_gaussian_pure_wigner(p["cov"], p.get("z0"), grid)
        if self.kind == "gaussian":
            return make_gaussian_field(p["cov"], p.get("z0"), grid)
        if self.kind == "hermite":
            _need_wigner_grid(grid)
            W = wigner_transform(self.wave_function(grid.x_axes))
            return W.with_values(W.values, label=f"hermite({p.get('k', 0)})")
        if self.kind == "mixture":
            _need_wigner_grid(grid)
            children = [_child(c, self.hbar) for c in p["children"]]
            fs = [c.wave_function(grid.x_axes) for c in children]
            return wigner_of_mixture(p["weights"], fs)
        if self.kind == "disc_indicator":
            return make_disc_indicator(float(p["R"]), grid, int(p.get("supersample", 8)))
        if self.kind == "example_final1":
            return make_example_final1(grid)
        if self.kind == "example_final2":
            return make_example_final2(grid)
        if self.kind == "tensor_product":
            children = [_child(c, self.hbar) for c in p["children"]]
            parts, offset = [], 0
            for c in children:
                sub = PhaseSpaceGrid(
                    c.dim_n,
                    grid.x_axes[offset:offset + c.dim_n],
                    grid.p_axes[offset:offset + c.dim_n],
                    grid.hbar,
                )
                parts.append(c.build(sub))
                offset += c.dim_n
            return make_tensor_product(parts)
        from .fieldio import read_field
        return read_field(p["path"])


def _child(c, hbar) -> StateSpec:
    if isinstance(c, StateSpec):
        return c
    d = dict(c)
    d.setdefault("hbar", hbar)
    return StateSpec.from_dict(d)


def _with_hbar(spec: StateSpec, hbar: float) -> StateSpec:
    return StateSpec(spec.kind, spec.params, float(hbar))


def _need_wigner_grid(grid: PhaseSpaceGrid):
    if not grid.is_wigner_grid:
        raise GridError("Wigner transforms need a grid whose p-axes are reciprocal to its x-axes")
