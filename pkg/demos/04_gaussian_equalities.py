"""
Pure Gaussian states sit on the boundary of every inequality at once:
saturation, the refined equality, Heinig-Smith, the Hirschman-Shannon chain
and the entropy lower bound. A coherent state and a squeezed state agree.
"""

import math

import numpy as np

from wignercert import (
    PhaseSpaceGrid,
    certify_heinig_smith,
    certify_hirschman_shannon_chain,
    certify_lieb_pure_chain,
    certify_purity_equality,
    certify_saturation,
    make_gaussian_pure_wigner,
)

hbar = 1.0
grid = PhaseSpaceGrid.default(1, hbar=hbar)
states = {
    "coherent": make_gaussian_pure_wigner(hbar / 2 * np.eye(2), [0.5, -0.3], grid),
    "squeezed": make_gaussian_pure_wigner(np.diag([hbar, hbar / 4]), None, grid),
}
for name, W in states.items():
    print(f"== {name}")
    s = certify_saturation(W)
    print(f"  saturation      {s.verdict}  Gaussian fit residual {s.details['gaussian_fit_residual']:.1e}")
    p = certify_purity_equality(W)
    print(f"  purity equality {p.verdict}  pure-consistent {p.flags['pure_consistent']}")
    hs = certify_heinig_smith(W)
    print(f"  Heinig-Smith    log margin {hs.margins['log_margin']:+.2e}")
    ch = certify_hirschman_shannon_chain(W)
    print("  entropy chain   margins", ", ".join(f"{v:+.1e}" for v in ch.margins.values()))
    lb = certify_lieb_pure_chain(W)
    print(f"  entropy bound   E = {lb.details['entropy']:.6f}, n log(pi hbar e/2) = {math.log(math.pi * hbar * math.e / 2):.6f}")
    print(f"                  det Cov / det Cov(|W~|^2) gap = {lb.margins['cov_vs_cov_sq']:.6f} (log 2 = {math.log(2):.6f})")
