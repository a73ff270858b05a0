import pytest
from hypothesis import strategies as st

from skewhook.shapes import Partition, SkewShape


def partitions(max_rows: int = 5, max_cols: int = 5):
    return st.lists(st.integers(1, max_cols), max_size=max_rows).map(
        lambda ps: Partition(tuple(sorted(ps, reverse=True)))
    )


@st.composite
def skew_shapes(draw, max_rows: int = 4, max_cols: int = 4):
    lam = draw(partitions(max_rows, max_cols))
    mu = [draw(st.integers(0, p)) for p in lam.parts]
    for i in range(1, len(mu)):
        mu[i] = min(mu[i], mu[i - 1])
    return SkewShape(lam, Partition(tuple(mu)))


# ---------------------------------------------------------------- acceptance summary

_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    label = getattr(report, "criterion", None)
    if label is None:
        return
    if report.when == "call" or report.outcome != "passed":
        if hasattr(report, "wasxfail"):
            status = f"FAIL (known: {report.wasxfail})"
        else:
            status = "PASS" if report.outcome == "passed" else "FAIL"
        if _criteria.get(label, "PASS") == "PASS":
            _criteria[label] = status


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: [int(p) for p in s.split()[0].split(".")]):
        status = _criteria[label]
        word, _, rest = status.partition(" ")
        terminalreporter.write_line(f"{word} {label}" + (f" {rest}" if rest else ""))
