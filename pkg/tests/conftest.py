import functools

import pytest

from naplespark import enumerate_family


@pytest.fixture(scope="session")
def members():
    """Cached family enumeration, shared across the whole run."""

    @functools.cache
    def _members(family, m, n, k=None, start=None):
        return tuple(enumerate_family(family, m, n, k, start))

    return _members
