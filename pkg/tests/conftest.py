from __future__ import annotations

import functools
import os
import time

import pytest
from hypothesis import settings

from hopfkit import catalog

settings.register_profile("default", max_examples=40, deadline=None)
settings.register_profile("ci", max_examples=100, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# acceptance results collected by tests/test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@functools.lru_cache(maxsize=None)
def built(name: str, **params):
    """Catalog algebras are immutable, so one build per session is enough."""
    return catalog.build(name, params)


@pytest.fixture(scope="session")
def taft3():
    return built("taft", N=3)


@pytest.fixture(scope="session")
def sweedler():
    return built("taft", N=2)


@functools.lru_cache(maxsize=None)
def catalog_timed():
    """(reports, seconds); the 27-dim catalog is the slowest fixture, so share it."""
    t0 = time.perf_counter()
    reports = catalog.catalog27()
    return reports, time.perf_counter() - t0


@pytest.fixture(scope="session")
def catalog_reports():
    return catalog_timed()[0]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
