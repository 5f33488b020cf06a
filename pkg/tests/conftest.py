import numpy as np
import pytest
from hypothesis import strategies as st

from digitalnets.f2 import F2Matrix

_acceptance_results = {}


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def f2_matrices(min_dim=1, max_dim=8):
    """Hypothesis strategy for arbitrary square matrices."""
    def build(m):
        return st.lists(st.integers(0, (1 << m) - 1), min_size=m, max_size=m) \
            .map(lambda rows: F2Matrix(rows, m))
    return st.integers(min_dim, max_dim).flatmap(build)


def mat(*rows):
    return F2Matrix.from_strings(list(rows))


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if name.startswith("test_criterion_"):
        _acceptance_results[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance_results, key=lambda n: int(n.split("_")[2])):
        outcome = _acceptance_results[name]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
