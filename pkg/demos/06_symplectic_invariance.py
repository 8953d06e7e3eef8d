"""
Linear symplectic and anti-symplectic changes of variables leave every
verdict unchanged. The covariance blocks of F o S, pushed forward by S, match
those of F up to interpolation error.
"""

import numpy as np

from wignercert import (
    PhaseSpaceGrid,
    certify_symplectic_invariance,
    make_example_final2,
    random_symplectic,
    standard_J,
    time_reversal,
)

grid = PhaseSpaceGrid.default(1, hbar=1.0)
F = make_example_final2(grid)
rng = np.random.default_rng(7)
maps = {"J": standard_J(1), "T": time_reversal(1)}
for k in range(3):
    S = random_symplectic(1, rng)
    maps[f"S{k}"] = S
    maps[f"T S{k}"] = time_reversal(1) @ S
for name, S in maps.items():
    c = certify_symplectic_invariance(F, S)
    print(f"{name:>5}: {c.verdict:<5} agreement {-c.margins['covariance_agreement']:.1e}  "
          f"verdicts F {c.details['verdicts_F']} / F o S {c.details['verdicts_FS']}")
