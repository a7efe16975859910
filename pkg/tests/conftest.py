from functools import lru_cache

import pytest

from commhilb.cartan import group_preset
from commhilb.weylgen import enumerate_census

ACCEPTANCE = []


def preset_names(max_rank):
    """A representative preset of every family, up to ``max_rank``."""
    names = []
    for r in range(1, max_rank + 1):
        names += [f"U{r}", f"A{r}", f"B{r}", f"C{r}", f"Sp{r}", f"Spin{2 * r + 1}"]
        names.append(f"SU{r + 1}")
        if r >= 2:
            names += [f"D{r}", f"Spin{2 * r}", f"SO{2 * r}"]
    names += [n for n, r in (("G2", 2), ("F4", 4), ("E6", 6)) if r <= max_rank]
    return names


@lru_cache(maxsize=None)
def cached_census(name):
    return enumerate_census(group_preset(name))


@pytest.fixture
def census_of():
    return cached_census


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE:
        terminalreporter.write_line(line)
