"""
A uniform disc of radius R is a normalized phase-space density, yet it is a
Wigner function for no radius. Its covariance is (R^2/4) I, so the
Robertson-Schrodinger inequality holds exactly when R >= sqrt(2 hbar).
Below the threshold a mass-preserving dilation restores the inequality.
"""

import math

from wignercert import (
    Analysis,
    PhaseSpaceGrid,
    certify_rsup,
    dilation_to_rsup,
    make_disc_indicator,
    positivity_probe,
)

hbar = 1.0
grid = PhaseSpaceGrid.default(1, hbar=hbar)
print(f"grid: {grid.shape[0]} points per axis, half extent {grid.x_axes[0].half_extent:.3f}")
print()
print(f"{'R/sqrt(hbar)':>12} {'Cov_xx':>10} {'R^2/4':>10} {'lambda_1 - hbar/2':>18}  RSUP")
for r in (0.8, 1.2, math.sqrt(2), 1.6, 2.0):
    R = r * math.sqrt(hbar)
    A = Analysis(make_disc_indicator(R, grid))
    c = certify_rsup(A.report, hbar, tol=0.02 * hbar)  # staircase edges: 2% band
    print(f"{r:12.4f} {A.cov[0, 0]:10.5f} {R * R / 4:10.5f} {c.margins['symplectic_eig_gap']:18.5f}  {c.verdict}")

print()
print("Shrinking the phase-space scale of a sub-threshold disc:")
for r in (1.0, 0.5):
    mu, cert = dilation_to_rsup(make_disc_indicator(r * math.sqrt(hbar), grid))
    print(f"  R = {r} sqrt(hbar): mu = {mu:.4f}, dilated disc RSUP verdict = {cert.verdict}")
print()
print("Passing the RSUP does not make the disc a quantum state:")
big = make_disc_indicator(2.0 * math.sqrt(hbar), grid)
probe = positivity_probe(big)
print(f"  R = 2 sqrt(hbar): positivity probe {probe.verdict}, min eigenvalue {probe.margins['min_eigenvalue']:+.4f}")
