"""
The inequality ladder.

Each certifier turns moments, entropies and spectra of a field into an
immutable :class:`Certificate` with a verdict in {pass, fail, indeterminate}
and named numeric margins. A margin is nonnegative when its inequality holds;
``pass`` requires every margin to be at least ``-tolerance``.

Fields are stored Wigner-normalized; the (2 pi hbar)^n factors that turn them
into Weyl symbols are inserted at each formula.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
import hashlib
import json
import math

import numpy as np

from .errors import (
    GridError,
    NotPositiveDefiniteError,
    PairingError,
    RouteDisagreementError,
    WignerCertError,
)
from .grid import (
    BOUNDARY_WARN_FRACTION,
    Field,
    PhaseSpaceGrid,
    WaveFunction,
    boundary_mass_fraction,
    compose_linear,
    dilate,
    normalize_mass,
)
from .moments import (
    CLIP_THRESHOLD,
    MomentReport,
    boltzmann_entropy,
    density_from_square,
    mean_and_covariance,
    moment_report,
)
from .states import hermite_basis, make_gaussian_pure_wigner, tensor_wavefunction
from .symplectic import (
    hermitian_psd_check,
    is_anti_symplectic,
    is_symplectic,
    rsup_matrix,
    standard_J,
    symplectic_spectrum,
)
from .transforms import LinearSymbol, cross_wigner, moyal_linear_left, wigner_transform

__all__ = [
    "PASS",
    "FAIL",
    "INDETERMINATE",
    "CERTIFICATE_NAMES",
    "DEFAULT_TOLERANCES",
    "Certificate",
    "RefinedRsupReport",
    "Analysis",
    "certify_heisenberg",
    "certify_rsup",
    "certify_refined_rsup",
    "certify_corollary1",
    "certify_saturation",
    "certify_purity_equality",
    "certify_heinig_smith",
    "certify_hirschman_shannon_chain",
    "certify_lieb_pure_chain",
    "positivity_probe",
    "certify_symplectic_invariance",
    "dilation_to_rsup",
    "run_ladder",
]

PASS, FAIL, INDETERMINATE = "pass", "fail", "indeterminate"

CERTIFICATE_NAMES = (
    "heisenberg",
    "heinig_smith",
    "rsup",
    "refined_rsup_ineq1",
    "refined_rsup_ineq2",
    "refined_rsup_cor1a",
    "refined_rsup_cor1b",
    "refined_rsup_cor1c",
    "saturation",
    "purity_equality",
    "hirschman_shannon_chain",
    "lieb_pure_chain",
    "positivity_probe",
    "symplectic_invariance",
)

# Eigenvalue tolerances are multiplied by hbar; log-determinant and entropy
# tolerances are dimensionless.
DEFAULT_TOLERANCES = {
    "eig": 1e-6,
    "heinig_smith": 1e-5,
    "entropy": 1e-4,
    "probe": 1e-6,
    "interpolation": 1e-3,
}
EQUALITY_FACTOR = 10.0
DILATION_SAFETY = 1e-2
DEFAULT_PROBE_K = 8


@dataclass(frozen=True)
class Certificate:
    """Outcome of one inequality check."""

    name: str
    verdict: str
    margins: dict
    tolerance: float
    inputs_digest: str
    warnings: tuple = ()
    flags: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in (PASS, FAIL, INDETERMINATE):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == PASS and any(m < -self.tolerance for m in self.margins.values()):
            raise ValueError("a passing certificate cannot carry a failing margin")
        if self.verdict == INDETERMINATE and not self.warnings:
            raise ValueError("an indeterminate certificate needs a warning")
        object.__setattr__(self, "warnings", tuple(self.warnings))

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict,
            "margins": {k: float(v) for k, v in self.margins.items()},
            "tolerance": float(self.tolerance),
            "inputs_digest": self.inputs_digest,
            "warnings": list(self.warnings),
            "flags": {k: bool(v) for k, v in self.flags.items()},
            "details": _jsonable(self.details),
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in np.asarray(obj).tolist()] if isinstance(obj, np.ndarray) else [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    return obj


def _verdict(margins: dict, tol: float, warnings) -> str:
    if warnings:
        return INDETERMINATE
    return PASS if all(m >= -tol for m in margins.values()) else FAIL


def field_digest(F) -> str:
    h = hashlib.sha256()
    grid = F.grid.to_dict() if isinstance(F, Field) else [a.to_dict() for a in F.axes]
    h.update(json.dumps(grid, sort_keys=True).encode())
    h.update(memoryview(np.ascontiguousarray(np.asarray(F.values, dtype=complex))).cast("B"))
    return h.hexdigest()[:16]


def _min_eig_sym(M) -> float:
    M = np.asarray(M, dtype=float)
    return float(np.linalg.eigvalsh(0.5 * (M + M.T))[0])


def _is_singular(cov, rtol: float = 1e-12) -> bool:
    eig = np.linalg.eigvalsh(0.5 * (cov + cov.T))
    return bool(eig[0] <= rtol * max(abs(eig[-1]), np.finfo(float).tiny))


DENSITY_KINDS = ("direct", "symplectic_ft", "hbar_ft")
DENSITY_LABELS = {"direct": "|F~|^2", "symplectic_ft": "|F_sigma F~|^2", "hbar_ft": "|F_hbar F~|^2"}


class _LazyMap(Mapping):
    """Read-only mapping whose values are computed on first access."""

    def __init__(self, keys, compute):
        self._keys = tuple(keys)
        self._compute = compute
        self._cache = {}

    def __getitem__(self, key):
        if key not in self._keys:
            raise KeyError(key)
        if key not in self._cache:
            self._cache[key] = self._compute(key)
        return self._cache[key]

    def __iter__(self):
        return iter(self._keys)

    def __len__(self):
        return len(self._keys)


class Analysis:
    """
    Lazily computed quantities of one field, shared by the certifiers so that
    each transform and density is built once per field.
    """

    def __init__(self, F: Field, boundary_threshold: float = BOUNDARY_WARN_FRACTION):
        if not isinstance(F, Field):
            raise TypeError("Analysis expects a Field")
        self.field = F
        self.grid: PhaseSpaceGrid = F.grid
        self.hbar = F.grid.hbar
        self.n = F.grid.dim_n
        self.boundary_threshold = boundary_threshold
        self.digest = field_digest(F)

    def _boundary_warning(self, what: str, frac: float) -> list:
        if frac > self.boundary_threshold:
            return [f"boundary-shell mass fraction of {what} is {frac:.3g} (> {self.boundary_threshold:g})"]
        return []

    @cached_property
    def report(self) -> MomentReport:
        return moment_report(self.field)

    @cached_property
    def field_warnings(self) -> list:
        out = []
        if not self.field.is_real(1e-9):
            out.append(f"field has imaginary part (ratio {self.field.max_imag_ratio():.3g}); real part used")
        return out + self._boundary_warning("the field", self.report.boundary_mass_fraction)

    @cached_property
    def densities(self) -> Mapping:
        return _LazyMap(DENSITY_KINDS, lambda k: density_from_square(self.field, k))

    def density_warnings_for(self, *kinds) -> list:
        out = []
        for k in kinds:
            out += self._boundary_warning(DENSITY_LABELS[k], boundary_mass_fraction(self.densities[k]))
        return out

    @property
    def density_warnings(self) -> list:
        return self.density_warnings_for(*DENSITY_KINDS)

    @cached_property
    def covariances(self) -> Mapping:
        return _LazyMap(DENSITY_KINDS, lambda k: mean_and_covariance(self.densities[k])[1])

    @property
    def cov(self) -> np.ndarray:
        return self.report.covariance

    @property
    def purity(self) -> float:
        return self.report.purity

    @cached_property
    def entropies(self) -> Mapping:
        return _LazyMap(DENSITY_KINDS, lambda k: boltzmann_entropy(self.densities[k], clip_threshold=None))

    @cached_property
    def refined(self) -> "RefinedRsupReport":
        h, J, P = self.hbar, standard_J(self.n), self.purity
        cov, cq, cs = self.cov, self.covariances["direct"], self.covariances["symplectic_ft"]
        M1 = rsup_matrix(cov, h)
        M2 = P * (cq + 0.25 * cs + 0.5j * h * J)
        return RefinedRsupReport(
            cov_W=cov,
            cov_sq=cq,
            cov_ft_sq=cs,
            purity=P,
            lhs_min_eig=hermitian_psd_check(M1).min_eigenvalue,
            middle_min_eig=hermitian_psd_check(M2).min_eigenvalue,
            gap_min_eig=hermitian_psd_check(M1 - M2).min_eigenvalue,
        )


def _analysis(F) -> Analysis:
    return F if isinstance(F, Analysis) else Analysis(F)


@dataclass(frozen=True)
class RefinedRsupReport:
    """Every matrix of the refined inequality chain M1 >= M2 >= 0."""

    cov_W: np.ndarray
    cov_sq: np.ndarray
    cov_ft_sq: np.ndarray
    purity: float
    lhs_min_eig: float
    middle_min_eig: float
    gap_min_eig: float

    def to_dict(self) -> dict:
        return {
            "cov_W": np.asarray(self.cov_W).tolist(),
            "cov_sq": np.asarray(self.cov_sq).tolist(),
            "cov_ft_sq": np.asarray(self.cov_ft_sq).tolist(),
            "purity": float(self.purity),
            "lhs_min_eig": float(self.lhs_min_eig),
            "middle_min_eig": float(self.middle_min_eig),
            "gap_min_eig": float(self.gap_min_eig),
        }


def _eig_tol(hbar: float, tol: float | None) -> float:
    return DEFAULT_TOLERANCES["eig"] * hbar if tol is None else tol


def certify_heisenberg(report: MomentReport, hbar: float, tol: float | None = None, digest: str = "") -> Certificate:
    """Delta x_i Delta p_i >= hbar/2 for each degree of freedom."""
    tol = _eig_tol(hbar, tol)
    cov = np.asarray(report.covariance, dtype=float)
    if not np.all(np.isfinite(cov)):
        raise FloatingPointError("covariance is not finite")
    n = cov.shape[0] // 2
    margins = {
        f"dx{i + 1}_dp{i + 1}": math.sqrt(max(cov[i, i], 0.0) * max(cov[n + i, n + i], 0.0)) - hbar / 2
        for i in range(n)
    }
    warnings = ["singular covariance"] if _is_singular(cov) else []
    return Certificate("heisenberg", _verdict(margins, tol, warnings), margins, tol, digest, warnings)


def certify_rsup(report: MomentReport, hbar: float, tol: float | None = None, digest: str = "",
                 extra_warnings=()) -> Certificate:
    """
    Cov + (i hbar/2) J >= 0, checked both as a Hermitian eigenvalue problem
    and through the smallest symplectic eigenvalue against hbar/2.

    Raises
    ------
    RouteDisagreementError
        If the two routes reach opposite verdicts beyond the tolerance.
    """
    tol = _eig_tol(hbar, tol)
    cov = np.asarray(report.covariance, dtype=float)
    if not np.all(np.isfinite(cov)):
        raise FloatingPointError("covariance is not finite")
    warnings = list(extra_warnings)
    margins = {"hermitian_min_eig": hermitian_psd_check(rsup_matrix(cov, hbar)).min_eigenvalue}
    details = {}
    if _is_singular(cov):
        warnings.append("singular covariance: symplectic spectrum undefined")
    else:
        try:
            spec = symplectic_spectrum(cov)
            margins["symplectic_eig_gap"] = spec.smallest - hbar / 2
            details["symplectic_spectrum"] = spec.values.tolist()
            details["pairing_residual"] = spec.pairing_residual
        except NotPositiveDefiniteError:
            # an indefinite covariance violates the Hermitian route outright
            pass
        except PairingError as exc:
            warnings.append(str(exc))
    if "symplectic_eig_gap" in margins:
        a, b = margins["hermitian_min_eig"], margins["symplectic_eig_gap"]
        if (a < -tol and b > tol) or (b < -tol and a > tol):
            raise RouteDisagreementError(f"RSUP routes disagree: hermitian {a:.3g}, symplectic {b:.3g}")
    return Certificate("rsup", _verdict(margins, tol, warnings), margins, tol, digest, warnings, details=details)


def certify_refined_rsup(F, tol: float | None = None):
    """
    The two layers of Cov + (i hbar/2)J >= M2 >= 0 with
    M2 = P (Cov(|F~|^2) + Cov(|F_sigma F~|^2)/4 + (i hbar/2) J).

    Returns
    -------
    (RefinedRsupReport, Certificate ineq2 [M2 >= 0], Certificate ineq1 [M1 - M2 >= 0])
    """
    A = _analysis(F)
    tol = _eig_tol(A.hbar, tol)
    rep = A.refined
    warnings = A.field_warnings + A.density_warnings_for("direct", "symplectic_ft")
    flags_eq = {"equality": abs(rep.gap_min_eig) <= EQUALITY_FACTOR * tol}
    m2 = {"middle_min_eig": rep.middle_min_eig}
    gap = {"gap_min_eig": rep.gap_min_eig}
    c2 = Certificate("refined_rsup_ineq2", _verdict(m2, tol, warnings), m2, tol, A.digest, warnings)
    c1 = Certificate("refined_rsup_ineq1", _verdict(gap, tol, warnings), gap, tol, A.digest, warnings,
                     flags=flags_eq, details={"purity": rep.purity})
    return rep, c2, c1


def certify_corollary1(F, tol: float | None = None):
    """
    Real-matrix consequences, reported separately:
    (a) Cov - P (Cov_sq + Cov_sft / 4), (b) Cov - P Cov_sq, (c) Cov - (P/4) Cov_sft.
    """
    A = _analysis(F)
    tol = _eig_tol(A.hbar, tol)
    rep = A.refined
    warnings = A.field_warnings + A.density_warnings_for("direct", "symplectic_ft")
    P, cov, cq, cs = rep.purity, rep.cov_W, rep.cov_sq, rep.cov_ft_sq
    mats = {
        "refined_rsup_cor1a": cov - P * (cq + 0.25 * cs),
        "refined_rsup_cor1b": cov - P * cq,
        "refined_rsup_cor1c": cov - 0.25 * P * cs,
    }
    # check (b) uses no Fourier density
    out = []
    for name, M in mats.items():
        w = A.field_warnings + A.density_warnings_for("direct") if name == "refined_rsup_cor1b" else warnings
        m = {"min_eig": _min_eig_sym(M)}
        out.append(Certificate(name, _verdict(m, tol, w), m, tol, A.digest, w))
    return tuple(out)


def certify_saturation(F, tol: float | None = None) -> Certificate:
    """
    All symplectic eigenvalues of Cov equal hbar/2 and the refined RSUP
    holds; on pass also reports the Littlejohn check and a Gaussian fit.
    """
    A = _analysis(F)
    tol = _eig_tol(A.hbar, tol)
    h = A.hbar
    warnings = list(A.field_warnings)
    margins, details = {}, {}
    if _is_singular(A.cov):
        warnings.append("singular covariance")
    else:
        spec = symplectic_spectrum(A.cov)
        margins["symplectic_gap"] = -float(np.max(np.abs(spec.values - h / 2)))
        details["symplectic_spectrum"] = spec.values.tolist()
    saturated = margins.get("symplectic_gap", -math.inf) >= -tol
    if saturated:
        _, c2, c1 = certify_refined_rsup(A, tol)
        margins["middle_min_eig"] = c2.margins["middle_min_eig"]
        margins["gap_min_eig"] = c1.margins["gap_min_eig"]
        warnings += [w for w in c1.warnings if w not in warnings]
    verdict = FAIL if (not saturated and "symplectic_gap" in margins) else _verdict(margins, tol, warnings)
    flags = {}
    if verdict == PASS:
        M = 2.0 / h * A.cov
        J = standard_J(A.n)
        details["littlejohn_residual"] = float(np.max(np.abs(M.T @ J @ M - J)))
        flags["littlejohn"] = is_symplectic(M, 1e-8)
        G = make_gaussian_pure_wigner(A.cov, A.report.mean, A.grid, tol=1e-6)
        Ft = normalize_mass(A.field)
        details["gaussian_fit_residual"] = float(np.max(np.abs(Ft.values.real - G.values.real)) / np.max(np.abs(G.values)))
        flags["gaussian_fit"] = details["gaussian_fit_residual"] <= 1e-6
    return Certificate("saturation", verdict, margins, tol, A.digest, warnings, flags, details)


def _trace_spot_check(A: Analysis, n_draws: int = 4, seed: int = 0) -> float:
    """
    min over random eta of Tr(A rho) - Tr(A rho^2) for A = conj(a) * a,
    a(z) = eta.(z - mean): Tr(A rho) = int conj(a) (a*W) and
    Tr(A rho^2) = (2 pi hbar)^n int |a*W|^2.
    """
    rng = np.random.default_rng(seed)
    W = normalize_mass(A.field)
    W = W.with_values(W.values.real)
    d, dV = 2 * A.n, A.grid.cell_volume
    worst = math.inf
    for _ in range(n_draws):
        eta = rng.normal(size=d) + 1j * rng.normal(size=d)
        eta /= np.linalg.norm(eta)
        a = LinearSymbol(eta, A.report.mean, A.hbar)
        aW = moyal_linear_left(a, W, max_boundary=math.inf).values
        tr1 = float(np.real(np.sum(np.conj(a.evaluate(A.grid)) * aW)) * dV)
        tr2 = (2.0 * math.pi * A.hbar) ** A.n * float(np.sum(np.abs(aW) ** 2)) * dV
        worst = min(worst, tr1 - tr2)
    return worst


def certify_purity_equality(F, tol: float | None = None) -> Certificate:
    """
    Margin min eig(M1 - M2) and the spot check Tr(A rho^2) <= Tr(A rho);
    flagged pure-consistent iff the gap vanishes and the purity is 1.
    """
    A = _analysis(F)
    tol = _eig_tol(A.hbar, tol)
    _, _, c1 = certify_refined_rsup(A, tol)
    margins = {"gap_min_eig": c1.margins["gap_min_eig"], "trace_spot_check": _trace_spot_check(A)}
    band = EQUALITY_FACTOR * tol
    flags = {"pure_consistent": abs(margins["gap_min_eig"]) <= band and abs(A.purity - 1.0) <= band}
    return Certificate("purity_equality", _verdict(margins, tol, c1.warnings), margins, tol, A.digest,
                       c1.warnings, flags, {"purity": A.purity})


def certify_heinig_smith(F, tol: float | None = None) -> Certificate:
    """log det Cov(|F~|^2) + log det Cov(|F_sigma F~|^2) - 4n log(hbar/2) >= 0."""
    A = _analysis(F)
    tol = DEFAULT_TOLERANCES["heinig_smith"] if tol is None else tol
    warnings = A.field_warnings + A.density_warnings_for("direct", "symplectic_ft")
    cq, cs = A.covariances["direct"], A.covariances["symplectic_ft"]
    margins = {}
    if _is_singular(cq) or _is_singular(cs):
        warnings.append("singular covariance")
    else:
        margins["log_margin"] = (np.linalg.slogdet(cq)[1] + np.linalg.slogdet(cs)[1]
                                 - 4 * A.n * math.log(A.hbar / 2))
    flags = {"equality": "log_margin" in margins and abs(margins["log_margin"]) <= EQUALITY_FACTOR * tol}
    return Certificate("heinig_smith", _verdict(margins, tol, warnings), margins, tol, A.digest, warnings, flags)


def _entropy_warnings(values: dict, threshold: float = CLIP_THRESHOLD) -> list:
    return [f"entropy of {k} clipped mass {v.clipped_mass:.3g} (> {threshold:g})"
            for k, v in values.items() if not v.usable(threshold)]


def certify_hirschman_shannon_chain(F, tol: float | None = None) -> Certificate:
    """
    T1 >= T2 >= T3 >= T4 with

        T1 = log[(2 pi e)^{2n} det Cov(W)]
        T2 = log[(2 pi e P)^{2n} sqrt(det Cov(|W~|^2) det Cov(|F_hbar W~|^2))]
        T3 = 2n log P + E(|W~|^2) + E(|F_hbar W~|^2)
        T4 = 2n log(pi hbar e P)

    The F_hbar covariance is cross-checked against J^T Cov(|F_sigma W~|^2) J
    and the two Fourier entropies against each other.
    """
    A = _analysis(F)
    tol = DEFAULT_TOLERANCES["entropy"] if tol is None else tol
    n, h, P = A.n, A.hbar, A.purity
    warnings = A.field_warnings + A.density_warnings
    ent = A.entropies
    warnings += _entropy_warnings(ent)
    cq, ch, cs = A.covariances["direct"], A.covariances["hbar_ft"], A.covariances["symplectic_ft"]
    J = standard_J(n)
    details = {
        "hbar_vs_sigma_cov_residual": float(np.max(np.abs(ch - J.T @ cs @ J))),
        "entropy_hbar_ft": ent["hbar_ft"].value,
        "entropy_symplectic_ft": ent["symplectic_ft"].value,
    }
    if abs(ent["hbar_ft"].value - ent["symplectic_ft"].value) > tol:
        warnings.append("entropies of |F_hbar W~|^2 and |F_sigma W~|^2 differ beyond tolerance")
    margins = {}
    if any(_is_singular(c) for c in (A.cov, cq, ch)):
        warnings.append("singular covariance")
    else:
        two_pi_e = 2.0 * math.pi * math.e
        T1 = 2 * n * math.log(two_pi_e) + np.linalg.slogdet(A.cov)[1]
        T2 = 2 * n * math.log(two_pi_e * P) + 0.5 * (np.linalg.slogdet(cq)[1] + np.linalg.slogdet(ch)[1])
        T3 = 2 * n * math.log(P) + ent["direct"].value + ent["hbar_ft"].value
        T4 = 2 * n * math.log(math.pi * h * math.e * P)
        details.update(T1=T1, T2=T2, T3=T3, T4=T4)
        margins = {"T1_minus_T2": T1 - T2, "T2_minus_T3": T2 - T3, "T3_minus_T4": T3 - T4}
    band = EQUALITY_FACTOR * tol
    flags = {"all_equal": bool(margins) and all(abs(m) <= band for m in margins.values())}
    return Certificate("hirschman_shannon_chain", _verdict(margins, tol, warnings), margins, tol, A.digest,
                       warnings, flags, details)


def certify_lieb_pure_chain(f, tol: float | None = None) -> Certificate:
    """
    For a pure state psi, with d = 2n:

        log[(2 pi e)^n sqrt(det Cov(W psi))] >= log[(2 pi e)^n sqrt(det Cov(|W~ psi|^2))]
            >= E(|W~ psi|^2) >= n log(pi hbar e / 2).

    Accepts the wave function or an ``Analysis`` of its Wigner function.
    """
    A = _analysis(wigner_transform(f) if isinstance(f, WaveFunction) else f)
    tol = DEFAULT_TOLERANCES["entropy"] if tol is None else tol
    n, h = A.n, A.hbar
    warnings = A.field_warnings + A.density_warnings_for("direct")
    E = A.entropies["direct"]
    warnings += _entropy_warnings({"|W~|^2": E})
    cq = A.covariances["direct"]
    margins, details = {}, {"entropy": E.value, "bound": n * math.log(math.pi * h * math.e / 2)}
    if _is_singular(A.cov) or _is_singular(cq):
        warnings.append("singular covariance")
    else:
        margins = {
            "cov_vs_cov_sq": 0.5 * (np.linalg.slogdet(A.cov)[1] - np.linalg.slogdet(cq)[1]),
            "shannon": n * math.log(2 * math.pi * math.e) + 0.5 * np.linalg.slogdet(cq)[1] - E.value,
            "lieb": E.value - details["bound"],
        }
    flags = {"lieb_equality": "lieb" in margins and abs(margins["lieb"]) <= EQUALITY_FACTOR * tol}
    return Certificate("lieb_pure_chain", _verdict(margins, tol, warnings), margins, tol, A.digest,
                       warnings, flags, details)


def _probe_basis(grid: PhaseSpaceGrid, K: int) -> list:
    if grid.dim_n == 1:
        return hermite_basis(K, grid.x_axes[0], grid.hbar)
    m = max(1, int(round(K ** (1.0 / grid.dim_n))))
    per_axis = [hermite_basis(m, ax, grid.hbar) for ax in grid.x_axes]
    basis = [per_axis[0][i] for i in range(m)]
    for axis_basis in per_axis[1:]:
        basis = [tensor_wavefunction(b, h) for b in basis for h in axis_basis]
    return basis


def positivity_probe(F, K: int = DEFAULT_PROBE_K, tol: float | None = None) -> Certificate:
    """
    rho_jk = (2 pi hbar)^n int F conj(W(h_j, h_k)) dz over the first K
    Hermite states; a negative eigenvalue proves F is not a Wigner function,
    a pass is only non-refutation at this truncation.

    Raises
    ------
    GridError
        If the highest basis state is not resolved by the grid.
    """
    A = _analysis(F)
    tol = DEFAULT_TOLERANCES["probe"] if tol is None else tol
    grid = A.grid
    if not grid.is_wigner_grid:
        raise GridError("positivity probe needs a grid whose p-axes are reciprocal to its x-axes")
    basis = _probe_basis(grid, K)
    Fv = normalize_mass(A.field).values.real
    scale = (2.0 * math.pi * A.hbar) ** A.n * grid.cell_volume
    k = len(basis)
    rho = np.zeros((k, k), dtype=complex)
    for a in range(k):
        for b in range(a, k):
            Wab = cross_wigner(basis[a], basis[b]).values
            rho[a, b] = scale * np.sum(Fv * np.conj(Wab))
            rho[b, a] = np.conj(rho[a, b])
    eigs = np.linalg.eigvalsh(rho)
    margins = {"min_eigenvalue": float(eigs[0])}
    warnings = list(A.field_warnings)
    verdict = FAIL if eigs[0] < -tol else _verdict(margins, tol, warnings)
    details = {"basis_size": k, "diagonal": np.real(np.diag(rho)).tolist(), "eigenvalues": eigs.tolist()}
    return Certificate("positivity_probe", verdict, margins, tol, A.digest, warnings, {"conclusive": verdict == FAIL}, details)


def certify_symplectic_invariance(F, S, tol: float | None = None, order: int = 5) -> Certificate:
    """
    Refined RSUP on F and on F o S. S may be symplectic or anti-symplectic;
    the covariance blocks of F o S, pushed forward by S, must match those of
    F within the interpolation tolerance and both verdict pairs must agree.
    """
    S = np.asarray(S, dtype=float)
    if not (is_symplectic(S, 1e-9) or is_anti_symplectic(S, 1e-9)):
        raise ValueError("S is neither symplectic nor anti-symplectic")
    A = _analysis(F)
    tol = DEFAULT_TOLERANCES["interpolation"] if tol is None else tol
    B = Analysis(compose_linear(A.field, S, order=order))
    _, a2, a1 = certify_refined_rsup(A)
    _, b2, b1 = certify_refined_rsup(B)
    ra, rb = A.refined, B.refined
    rel = 0.0
    for ma, mb in ((ra.cov_W, rb.cov_W), (ra.cov_sq, rb.cov_sq), (ra.cov_ft_sq, rb.cov_ft_sq)):
        pushed = S @ mb @ S.T
        rel = max(rel, float(np.max(np.abs(pushed - ma)) / np.max(np.abs(ma))))
    rel = max(rel, abs(ra.purity - rb.purity) / abs(ra.purity))
    margins = {"covariance_agreement": -rel}
    agree = a1.verdict == b1.verdict and a2.verdict == b2.verdict
    warnings = sorted(set(a1.warnings) | set(b1.warnings))
    verdict = FAIL if not agree else _verdict(margins, tol, warnings)
    details = {
        "verdicts_F": [a2.verdict, a1.verdict],
        "verdicts_FS": [b2.verdict, b1.verdict],
        "gap_min_eig": [a1.margins["gap_min_eig"], b1.margins["gap_min_eig"]],
        "middle_min_eig": [a2.margins["middle_min_eig"], b2.margins["middle_min_eig"]],
        "anti_symplectic": is_anti_symplectic(S, 1e-9),
    }
    return Certificate("symplectic_invariance", verdict, margins, tol, A.digest, warnings,
                       {"verdicts_agree": agree}, details)


def dilation_to_rsup(F, safety: float = DILATION_SAFETY, tol: float | None = None):
    """
    mu = min(1, sqrt(2 lambda_1 / hbar) (1 - safety)) and the RSUP certificate
    of the mass-preserving dilation mu^{2n} F(mu z); mu = 1 when F already
    satisfies the RSUP within tolerance.

    Raises
    ------
    NotPositiveDefiniteError
        If Cov(F) is singular or indefinite.
    """
    A = _analysis(F)
    if _is_singular(A.cov):
        raise NotPositiveDefiniteError("singular covariance: no dilation restores the RSUP")
    lam = symplectic_spectrum(A.cov).smallest
    # the safety factor only applies when the RSUP actually fails
    if lam - A.hbar / 2 >= -_eig_tol(A.hbar, tol):
        mu = 1.0
    else:
        mu = min(1.0, math.sqrt(2.0 * lam / A.hbar) * (1.0 - safety))
    if mu == 1.0:
        G = A.field
    else:
        G = dilate(A.field, mu)
    B = Analysis(G)
    cert = certify_rsup(B.report, A.hbar, tol, B.digest, B.field_warnings)
    return mu, cert


def run_ladder(F: Field, names=None, pure: bool = False, tolerances: dict | None = None,
               probe_k: int = DEFAULT_PROBE_K, symplectic_matrix=None):
    """
    Run the requested certificates on one field. ``pure`` marks F as the
    Wigner function of a known pure state, which the Lieb chain requires.

    Returns
    -------
    (list of Certificate, Analysis, list of error strings)
    """
    tolerances = tolerances or {}
    names = list(CERTIFICATE_NAMES if names is None else names)
    bad = [n for n in names if n not in CERTIFICATE_NAMES]
    if bad:
        raise ValueError(f"unknown certificate names {bad}")
    A = Analysis(F)

    def tol(kind):
        return tolerances.get(kind)

    out, errors = [], []
    refined_names = {"refined_rsup_ineq1", "refined_rsup_ineq2"}
    cor_names = {"refined_rsup_cor1a", "refined_rsup_cor1b", "refined_rsup_cor1c"}
    done = set()
    for name in names:
        if name in done:
            continue
        try:
            if name == "heisenberg":
                out.append(certify_heisenberg(A.report, A.hbar, tol("eig"), A.digest))
            elif name == "rsup":
                out.append(certify_rsup(A.report, A.hbar, tol("eig"), A.digest, A.field_warnings))
            elif name in refined_names:
                _, c2, c1 = certify_refined_rsup(A, tol("eig"))
                out += [c for c in (c1, c2) if c.name in names]
                done |= refined_names
            elif name in cor_names:
                out += [c for c in certify_corollary1(A, tol("eig")) if c.name in names]
                done |= cor_names
            elif name == "saturation":
                out.append(certify_saturation(A, tol("eig")))
            elif name == "purity_equality":
                out.append(certify_purity_equality(A, tol("eig")))
            elif name == "heinig_smith":
                out.append(certify_heinig_smith(A, tol("heinig_smith")))
            elif name == "hirschman_shannon_chain":
                out.append(certify_hirschman_shannon_chain(A, tol("entropy")))
            elif name == "lieb_pure_chain":
                if not pure:
                    errors.append("lieb_pure_chain: input is not known to be a pure state")
                else:
                    out.append(certify_lieb_pure_chain(A, tol("entropy")))
            elif name == "positivity_probe":
                out.append(positivity_probe(A, probe_k, tol("probe")))
            elif name == "symplectic_invariance":
                S = standard_J(A.n) if symplectic_matrix is None else symplectic_matrix
                out.append(certify_symplectic_invariance(A, S, tol("interpolation")))
        except (WignerCertError, FloatingPointError) as exc:
            errors.append(f"{name}: {type(exc).__name__}: {exc}")
        done.add(name)
    return out, A, errors
