import pytest
from hypothesis import settings

from valmat.enumerate import enumerate_matroids

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def small_tables():
    """Every table on two elements with lengths <= 2 and at most two summands."""
    return list(enumerate_matroids(2, "int", 2, 2))


ACCEPTANCE = {}


@pytest.fixture
def record():
    """Store one PASS/FAIL line per acceptance criterion for the terminal summary."""
    def _record(number: int, passed: bool, detail: str = ""):
        line = f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}"
        if detail:
            line += f"  {detail}"
        ACCEPTANCE[number] = line
        print(line)
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
