"""
Mixing two orthogonal pure states lowers the purity to p^2 + (1-p)^2 and
opens a strict gap in the refined inequality. The gap closes only at the
pure endpoints.
"""

from wignercert import PhaseSpaceGrid, certify_refined_rsup, hermite_basis, positivity_probe, wigner_of_mixture

hbar = 1.0
grid = PhaseSpaceGrid.default(1, hbar=hbar)
h = hermite_basis(2, grid.x_axes[0], hbar)
print(f"{'p':>5} {'purity':>9} {'closed form':>11} {'gap min eig':>12}  probe")
for p in (0.0, 0.1, 0.25, 0.5, 0.75, 1.0):
    weights, states = [w for w in (p, 1 - p) if w > 0], [s for w, s in zip((p, 1 - p), h) if w > 0]
    W = wigner_of_mixture(weights, states)
    rep, _, c1 = certify_refined_rsup(W)
    probe = positivity_probe(W, K=4)
    print(f"{p:5.2f} {rep.purity:9.6f} {p * p + (1 - p) ** 2:11.6f} {c1.margins['gap_min_eig']:12.6f}  {probe.verdict}")
