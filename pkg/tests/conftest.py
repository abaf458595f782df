import pytest

from vaguescope.matcher import load_tables
from vaguescope.scoring import default_lexicon


@pytest.fixture(scope="session")
def en_lexicon():
    return default_lexicon("en")


@pytest.fixture(scope="session")
def fr_lexicon():
    return default_lexicon("fr")


@pytest.fixture(scope="session")
def en_tables():
    return load_tables("en")
