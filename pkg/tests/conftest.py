import pytest

# bold vertices of the K2 x K3 x K4 figure, read off the drawing
FIG1_SHAPE = (2, 3, 4)
FIG1_SET = [(1, 1, 1), (1, 2, 1), (2, 3, 2), (2, 3, 3), (2, 3, 4)]


def subsets(n):
    """Every subset of range(n), as lists."""
    for mask in range(1 << n):
        yield [i for i in range(n) if mask >> i & 1]


@pytest.fixture
def fig1():
    from hamvis.hamming import HammingShape

    return HammingShape(FIG1_SHAPE), list(FIG1_SET)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py" in rep.nodeid:
                lines.append((rep.nodeid.split("::")[-1], outcome.upper()))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'PASSED' else 'FAIL'}  {name}")
