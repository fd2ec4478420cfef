import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from lieforge import build_algebra  # noqa: E402


@pytest.fixture(scope="session")
def algebras():
    """f4, e7 and e8 structure constants, built once per session."""
    return {k: build_algebra(k) for k in ("f4", "e7", "e8")}


@pytest.fixture(scope="session")
def f4(algebras):
    return algebras["f4"]


@pytest.fixture(scope="session")
def e7(algebras):
    return algebras["e7"]


@pytest.fixture(scope="session")
def e8(algebras):
    return algebras["e8"]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[num])
