import json
import math

import numpy as np
import pytest
import sympy as sp

from wignercert import (
    AxisSpec,
    GridError,
    PhaseSpaceGrid,
    StateSpec,
    StateSpecError,
    hermite_basis,
    make_disc_indicator,
    make_example_final1,
    make_example_final2,
    make_gaussian_pure_wigner,
    make_tensor_product,
    moment_report,
    write_field,
)

_r, _h = sp.symbols("r hbar", positive=True)
_FINAL1 = 48 / (sp.pi * _h) * (_r**2 / _h - sp.Rational(1, 6)) * sp.exp(-4 * _r**2 / _h)
_FINAL2 = (_r**2 / _h - 1) * sp.exp(-_r**2 / (2 * _h)) / (2 * sp.pi * _h)


def _radial_oracle(expr, hbar):
    """Mass, per-axis variance and purity of a radial field by exact integration."""
    mass = sp.integrate(2 * sp.pi * _r * expr, (_r, 0, sp.oo))
    var = sp.integrate(sp.pi * _r**3 * expr, (_r, 0, sp.oo))
    purity = 2 * sp.pi * _h * sp.integrate(2 * sp.pi * _r * expr**2, (_r, 0, sp.oo))
    return tuple(float(sp.simplify(v).subs(_h, hbar)) for v in (mass, var, purity))


@pytest.mark.parametrize("expr,builder", [(_FINAL1, make_example_final1), (_FINAL2, make_example_final2)],
                         ids=["final1", "final2"])
def test_examples_against_symbolic_oracle(grid, expr, builder):
    mass, var, purity = _radial_oracle(expr, grid.hbar)
    F = builder(grid)
    rep = moment_report(F)
    assert rep.mass.real == pytest.approx(mass, abs=1e-10)
    assert rep.covariance == pytest.approx(var * np.eye(2), abs=1e-8)
    assert rep.purity == pytest.approx(purity, rel=1e-8)


def test_examples_need_n1(grid1):
    g2 = PhaseSpaceGrid.default(2, 16, 1.0)
    with pytest.raises(GridError):
        make_example_final1(g2)


def test_hermite_orthonormality(grid):
    basis = hermite_basis(12, grid.x_axes[0], grid.hbar)
    G = np.array([[np.vdot(a.values, b.values) * a.axes[0].step for b in basis] for a in basis])
    assert np.max(np.abs(G - np.eye(12))) < 1e-10


def test_hermite_unresolved():
    with pytest.raises(GridError):
        hermite_basis(40, AxisSpec(64, 4.0), 1.0)
    with pytest.raises(ValueError):
        hermite_basis(0, AxisSpec(64, 4.0), 1.0)


def test_gaussian_pure_requires_symplectic(grid):
    h = grid.hbar
    S = np.array([[2.0, 0.3], [0.0, 0.5]])
    F = make_gaussian_pure_wigner(h / 2 * S @ S.T, [0.1, 0.2], grid)
    assert moment_report(F).purity == pytest.approx(1.0, abs=1e-8)
    with pytest.raises(StateSpecError):
        make_gaussian_pure_wigner(h * np.eye(2), None, grid)


def test_disc_indicator_moments(grid):
    R = 1.2 * math.sqrt(grid.hbar)
    F = make_disc_indicator(R, grid)
    rep = moment_report(F)
    assert rep.covariance == pytest.approx(R**2 / 4 * np.eye(2), rel=1e-2)
    with pytest.raises(GridError):
        make_disc_indicator(-1.0, grid)


def test_tensor_product(hbar):
    ax = AxisSpec(32, 7 * math.sqrt(hbar))
    g = PhaseSpaceGrid(1, (ax,), (ax,), hbar)
    F1 = make_example_final2(g)
    T = make_tensor_product([F1, F1])
    assert T.grid.dim_n == 2
    rep = moment_report(T)
    assert rep.purity == pytest.approx(0.25, rel=1e-6)
    assert rep.covariance == pytest.approx(3 * hbar * np.eye(4), rel=1e-6, abs=1e-6)
    with pytest.raises(GridError):
        make_tensor_product([F1, F1, F1])


def test_tensor_product_size_budget(grid):
    F1 = make_example_final2(grid)
    with pytest.raises(GridError):
        make_tensor_product([F1, F1])


def test_tensor_product_spec_layout():
    g = PhaseSpaceGrid.default(2, 32, 1.0)
    spec = StateSpec("tensor_product", {"children": [
        {"kind": "gaussian", "cov": [[0.5, 0.0], [0.0, 0.5]], "z0": [1.0, 0.0]},
        {"kind": "gaussian", "cov": [[0.5, 0.0], [0.0, 0.5]], "z0": [0.0, -1.0]},
    ]})
    rep = moment_report(spec.build(g))
    # axes are ordered x1, x2, p1, p2
    assert rep.mean == pytest.approx([1.0, 0.0, 0.0, -1.0], abs=1e-6)


def test_spec_round_trip():
    spec = StateSpec("mixture", {"weights": [0.5, 0.5], "children": [{"kind": "hermite", "k": 0},
                                                                      {"kind": "hermite", "k": 1}]}, 0.5)
    again = StateSpec.from_dict(json.loads(json.dumps(spec.to_dict())))
    assert again == spec


def test_spec_parse(tmp_path, grid):
    assert StateSpec.parse("hermite").kind == "hermite"
    assert StateSpec.parse('{"kind": "hermite", "k": 2}', hbar=0.5).params == {"k": 2}
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"kind": "disc_indicator", "R": 1.0}))
    assert StateSpec.parse(str(p)).kind == "disc_indicator"
    f = write_field(tmp_path / "w.wcf", make_example_final2(grid))
    spec = StateSpec.parse(str(f))
    assert spec.kind == "custom_file"
    assert spec.build(grid).grid.same_as(grid)
    with pytest.raises(StateSpecError):
        StateSpec.parse("bogus")
    with pytest.raises(StateSpecError):
        StateSpec("bogus")
    with pytest.raises(StateSpecError):
        StateSpec.from_dict({"k": 1})


def test_spec_hbar_mismatch(grid):
    with pytest.raises(StateSpecError):
        StateSpec("hermite", {"k": 0}, hbar=grid.hbar * 2).build(grid)


def test_hermite_needs_wigner_grid():
    g = PhaseSpaceGrid(1, (AxisSpec(64, 6.0),), (AxisSpec(64, 9.0),), 1.0)
    with pytest.raises(GridError):
        StateSpec("hermite").build(g)


def test_wave_function_only_for_pure():
    with pytest.raises(StateSpecError):
        StateSpec("disc_indicator", {"R": 1.0}).wave_function((AxisSpec(64, 6.0),))
