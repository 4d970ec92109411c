import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from jordanloops.search import SearchOptions, enumerate_loops

_SEARCH_CACHE: dict = {}


@pytest.fixture(scope="session")
def searched():
    """Cached exhaustive enumeration, so expensive orders run once per session."""

    def run(order: int, require_jordan: bool = True):
        key = (order, require_jordan)
        if key not in _SEARCH_CACHE:
            _SEARCH_CACHE[key] = enumerate_loops(
                SearchOptions(order=order, require_jordan=require_jordan)
            )
        return _SEARCH_CACHE[key]

    return run
