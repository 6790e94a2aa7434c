import pytest

from cellring.cells import cell_c_enumerate
from cellring.jring import GammaTable


@pytest.fixture(scope="session")
def window22():
    return cell_c_enumerate(22)


@pytest.fixture(scope="session")
def table30():
    return GammaTable(cell_c_enumerate(30))


@pytest.fixture(scope="session")
def table46():
    return GammaTable(cell_c_enumerate(46))


# Acceptance results, printed as one PASS/FAIL line per criterion.
ACCEPTANCE: dict[int, tuple[bool, str, str]] = {}


class _Criterion:
    def __init__(self, number: int, title: str):
        self.number, self.title = number, title
        self.ok = False
        self.detail = ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc_type is not None:
            self.ok = False
            self.detail = self.detail or f"{exc_type.__name__}: {exc}"
        ACCEPTANCE[self.number] = (self.ok, self.title, self.detail)
        print(_line(self.number))
        return False


def _line(n: int) -> str:
    ok, title, detail = ACCEPTANCE[n]
    return f"{'PASS' if ok else 'FAIL'} criterion {n}: {title} [{detail}]"


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(_line(n))
