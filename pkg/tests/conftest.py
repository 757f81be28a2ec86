import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from ordtri.constructions import grid  # noqa: E402
from ordtri.geometry import Point, PointSet  # noqa: E402

small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=1, max_value=3),
)

points = st.builds(Point, small_rationals, small_rationals)


def point_sets(min_size=2, max_size=9):
    return st.lists(points, min_size=min_size, max_size=max_size, unique=True).map(PointSet)


@pytest.fixture
def grid3():
    return grid(3, 3)


@pytest.fixture
def triangle():
    return PointSet([(0, 0), (1, 0), (0, 1)])


@pytest.fixture
def collinear4():
    return PointSet([(0, 0), (1, 1), (2, 2), (3, 3)])


# -- acceptance reporting ----------------------------------------------------

_acceptance: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")


def pytest_runtest_logreport(report):
    label = report.user_properties and dict(report.user_properties).get("acceptance")
    if not label:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[label] = report.outcome.upper()


@pytest.fixture(autouse=True)
def _acceptance_label(request):
    marker = request.node.get_closest_marker("acceptance")
    if marker:
        request.node.user_properties.append(("acceptance", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_acceptance, key=lambda s: int(s.split()[0])):
        verdict = "PASS" if _acceptance[label] == "PASSED" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {label}")
