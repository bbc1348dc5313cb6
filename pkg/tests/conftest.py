import sys
import warnings
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fareymosaics.errors import OrphanWarning
from fareymosaics.farey import ProgressionClass
from fareymosaics.mosaics import assemble_with_orphans
from fareymosaics.tiles import enumerate_tiles

_ACCEPTANCE_LINES = []


def record_criterion(line):
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def d5_cls():
    return ProgressionClass(1, 5)


@pytest.fixture(scope="session")
def d5_tiles(d5_cls):
    """Full d=5 c=1 enumeration used by the table criteria."""
    return enumerate_tiles(d5_cls, 16, kernel_cap=9)


@pytest.fixture(scope="session")
def d5_mosaics(d5_tiles):
    out = {}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OrphanWarning)
        for kern in (1, 3, 4, 5, 6, 7, 8, 9):
            group = [t for t in d5_tiles if t.kernel == kern]
            out[kern], _ = assemble_with_orphans(group, kern)
    return out


@pytest.fixture(scope="session")
def d12_cls():
    return ProgressionClass(3, 12)


@pytest.fixture(scope="session")
def d12_tiles_30(d12_cls):
    return enumerate_tiles(d12_cls, 30, kernel_cap=27, budget=10 ** 7)
