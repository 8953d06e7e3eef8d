import numpy as np
import pytest

from wignercert import PhaseSpaceGrid, hermite_basis, wigner_transform

HBARS = (1.0, 0.5)


@pytest.fixture(scope="session", params=HBARS, ids=lambda h: f"hbar={h:g}")
def hbar(request):
    return request.param


@pytest.fixture(scope="session")
def grid(hbar):
    return PhaseSpaceGrid.default(1, hbar=hbar)


@pytest.fixture(scope="session")
def grid1():
    return PhaseSpaceGrid.default(1, hbar=1.0)


@pytest.fixture(scope="session")
def hermite(grid):
    return hermite_basis(4, grid.x_axes[0], grid.hbar)


@pytest.fixture(scope="session")
def W0(hermite):
    return wigner_transform(hermite[0])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


_ACCEPTANCE_LINES = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def acceptance_log(request):
    """Collects one summary line per acceptance criterion."""
    return request.config.stash.setdefault(_ACCEPTANCE_LINES, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
