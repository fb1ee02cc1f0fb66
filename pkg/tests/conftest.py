from __future__ import annotations

import pytest

from friezeforge.cli import load_config
from friezeforge.polygon import Arc


def arc(i: int, j: int, size: int = 8) -> Arc:
    return Arc(i, j, size)


@pytest.fixture(scope="session")
def a5():
    """n = 5, R = {2,5},{2,7}, S = {1,7},{2,4},{5,7}, ε = u, v, z on S."""
    return load_config("@a5")


@pytest.fixture(scope="session")
def ctx(a5):
    return a5.context()


@pytest.fixture(scope="session")
def gens():
    from friezeforge.laurent import LaurentPoly

    return LaurentPoly.gens("u", "v", "z")


# acceptance bookkeeping: one line per criterion in the terminal summary

_CRITERIA: dict[int, tuple[str, str, str]] = {}


class _Criterion:
    def __init__(self, number: int, title: str):
        self.number, self.title, self.detail = number, title, ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        state = "PASS" if exc_type is None else "FAIL"
        detail = self.detail if exc is None else f"{exc_type.__name__}: {exc}".splitlines()[0]
        _CRITERIA[self.number] = (state, self.title, detail)
        line = f"criterion {self.number:2d} {state}: {self.title}" + (f" ({detail})" if detail else "")
        print(line)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        state, title, detail = _CRITERIA[k]
        tail = f" ({detail})" if detail else ""
        terminalreporter.write_line(f"criterion {k:2d} {state}: {title}{tail}")
