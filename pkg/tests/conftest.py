import numpy as np
import pytest

from threshspec.oracle import eigenvalues
from threshspec.sequences import adjacency, enumerate_connected

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _acceptance.items():
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


_spectra = {}


def oracle_spectrum(seq):
    """Cached Jacobi spectrum as a numpy array."""
    key = seq.bits
    if key not in _spectra:
        _spectra[key] = np.array(eigenvalues(adjacency(seq)).eigenvalues)
    return _spectra[key]


def connected_upto(n_max, n_min=2):
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected(n)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
