"""
F(z) = (|z|^2/hbar - 1) exp(-|z|^2 / 2 hbar) / (2 pi hbar) is its own symplectic
Fourier transform up to sign and passes every covariance-based test, including
the refined inequality. Pairing it with Hermite projectors exposes a negative
diagonal entry, which proves it is not a Wigner function.
"""

import math

import numpy as np

from wignercert import (
    PhaseSpaceGrid,
    certify_refined_rsup,
    hermite_basis,
    make_example_final2,
    positivity_probe,
    symplectic_ft,
    trace_pairing,
    wigner_transform,
)

hbar = 1.0
grid = PhaseSpaceGrid.default(1, hbar=hbar)
F = make_example_final2(grid)
print("max |F_sigma F + F| =", f"{np.max(np.abs(symplectic_ft(F).values + F.values)):.2e}")
rep, c2, c1 = certify_refined_rsup(F)
print("purity =", round(rep.purity, 8), " refined verdicts:", c2.verdict, c1.verdict)

W0 = wigner_transform(hermite_basis(1, grid.x_axes[0], hbar)[0])
# trace_pairing is the operator trace (2 pi hbar)^-n int A B dz
pairing = (2 * math.pi * hbar) * trace_pairing(F, W0).real
print(f"int F W f0 dz = {pairing:.8f}   closed form -1/(9 pi hbar) = {-1 / (9 * math.pi * hbar):.8f}")

probe = positivity_probe(F, K=4)
print("probe diagonal (h_k | rho h_k):", np.round(probe.details["diagonal"], 6).tolist())
print("probe verdict:", probe.verdict, "(a fail is conclusive)")
