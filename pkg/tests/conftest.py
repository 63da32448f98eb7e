import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cowordmap import fixtures
from cowordmap.corpus import TimeWindow, ingest


@pytest.fixture(scope="session")
def fixture_store():
    return fixtures.fixture_store()

@pytest.fixture(scope="session")
def fixture_csvs(tmp_path_factory):
    """Fixture corpus CSVs written to a temp dir (same content as shipped)."""
    base = tmp_path_factory.mktemp("fixture")
    occ = base / "occ.csv"
    cooc = base / "cooc.csv"
    fixtures.write_fixture_csvs(occ, cooc)
    return occ, cooc


@pytest.fixture(scope="session")
def fixture_window():
    return fixtures.FIXTURE_WINDOW


def tiny_store(occ=None, cooc=None, validation="strict"):
    """Shorthand for small synthetic stores in unit tests."""
    return ingest(occ or [], cooc or [], validation=validation)


@pytest.fixture
def make_store():
    return tiny_store


WINDOW_2003 = TimeWindow(2003, 2003)
