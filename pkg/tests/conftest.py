import pytest

from cyclopair.bernoulli import IrregularPair


@pytest.fixture(scope="session")
def pair37():
    return IrregularPair(37, 32)


@pytest.fixture(scope="session")
def pair691():
    return IrregularPair(691, 12)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split()[0])):
            terminalreporter.write_line(line)
