"""
Shared fixtures: small fields used across the suites.
"""

import pytest

from src.config import config
from src.gf.field import build_field


@pytest.fixture(scope="session")
def f2():
    return build_field(2)


@pytest.fixture(scope="session")
def f3():
    return build_field(3)


@pytest.fixture(scope="session")
def f4():
    return build_field(2, 2)


@pytest.fixture(scope="session")
def f5():
    return build_field(5)


@pytest.fixture(scope="session")
def f7():
    return build_field(7)


@pytest.fixture(scope="session")
def f8():
    return build_field(2, 3, [1, 1, 0, 1])


@pytest.fixture(scope="session")
def f9():
    return build_field(3, 2)


@pytest.fixture
def fresh_config(monkeypatch):
    """
    The global config, re-read after the test's environment changes are undone.
    """
    yield config
    monkeypatch.undo()
    config.reload()
