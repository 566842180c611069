import pytest


@pytest.fixture(scope="session")
def structure_cache(tmp_path_factory):
    """Shared on-disk structure cache so each genus is enumerated once."""
    return str(tmp_path_factory.mktemp("bases-cache"))
