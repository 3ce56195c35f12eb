import functools

import pytest

from dessinlab.dessin import enumerate_dessins, from_cycles


@functools.lru_cache(maxsize=None)
def classes(n):
    return tuple(enumerate_dessins(n))


def classes_upto(n):
    return [d for k in range(1, n + 1) for d in classes(k)]


@pytest.fixture
def fig1():
    return from_cycles([(2, 5, 3), (4, 6, 8, 7)], 4)


@pytest.fixture
def single_edge():
    return from_cycles([], 1)


@pytest.fixture
def single_loop():
    return from_cycles([(1, 2)], 1)


@pytest.fixture
def double_edge():
    return from_cycles([(1, 3), (2, 4)], 2)


@pytest.fixture
def path3():
    return from_cycles([(2, 3), (4, 5)], 3)


@pytest.fixture
def fig7_left():
    return from_cycles([(2, 3, 5), (4, 7, 6, 8)], 4)


@pytest.fixture
def fig7_right():
    return from_cycles([(2, 3, 5, 7), (4, 6, 8)], 4)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
