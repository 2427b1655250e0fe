from functools import lru_cache

import pytest

from pakstanley.arrangement import CoxeterSpec
from pakstanley.paklabel import label_of_region
from pakstanley.regions import enumerate_regions


@lru_cache(maxsize=None)
def regions_of(n, k, l):
    return tuple(enumerate_regions(CoxeterSpec(n, k, l)))


@lru_cache(maxsize=None)
def labeled(n, k, l):
    """(region, label) pairs for every region."""
    return tuple((r, label_of_region(r)) for r in regions_of(n, k, l))


def label_set(n, k, l):
    return {lab for _, lab in labeled(n, k, l)}


def lab(s):
    """'612' -> (6, 1, 2)."""
    return tuple(int(c) for c in s)


@pytest.fixture
def spec322():
    return CoxeterSpec(3, 2, 2)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
