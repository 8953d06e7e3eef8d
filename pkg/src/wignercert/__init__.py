"""
wignercert: Wigner-calculus observables and uncertainty-principle certificates
for quantum states and candidate phase-space functions on discrete grids.
"""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .symplectic import (  # noqa: F401
    HermitianVerdict,
    SymplecticSpectrum,
    hermitian_psd_check,
    is_anti_symplectic,
    is_symplectic,
    random_symplectic,
    rsup_matrix,
    standard_J,
    symplectic_spectrum,
    time_reversal,
)
from .grid import (  # noqa: F401
    AxisSpec,
    Field,
    PhaseSpaceGrid,
    WaveFunction,
    boundary_mass_fraction,
    compose_linear,
    dilate,
    integrate,
    l2_norm_sq,
    normalize_l2,
    normalize_mass,
)
from .transforms import (  # noqa: F401
    LinearSymbol,
    cross_wigner,
    hbar_ft,
    moyal_identity_sides,
    moyal_linear_left,
    moyal_linear_right,
    overlap,
    spectral_gradient,
    symplectic_ft,
    trace_pairing,
    wigner_of_mixture,
    wigner_transform,
)
from .moments import (  # noqa: F401
    EntropyValue,
    MomentReport,
    boltzmann_entropy,
    density_from_square,
    gaussian_entropy,
    mean_and_covariance,
    moment_report,
    shannon_bound,
)
from .states import (  # noqa: F401
    StateSpec,
    hermite_basis,
    make_disc_indicator,
    make_example_final1,
    make_example_final2,
    make_gaussian_field,
    make_gaussian_pure_wigner,
    make_gaussian_wavefunction,
    make_hermite_state,
    make_tensor_product,
    tensor_wavefunction,
)
from .certifiers import (  # noqa: F401
    Analysis,
    Certificate,
    RefinedRsupReport,
    certify_corollary1,
    certify_heinig_smith,
    certify_heisenberg,
    certify_hirschman_shannon_chain,
    certify_lieb_pure_chain,
    certify_purity_equality,
    certify_refined_rsup,
    certify_rsup,
    certify_saturation,
    certify_symplectic_invariance,
    dilation_to_rsup,
    positivity_probe,
    run_ladder,
)
from .fieldio import read_field, read_object, write_field  # noqa: F401
