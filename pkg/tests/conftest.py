import os
import sys

import pytest

# Add parent dir to path to import the packages
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from catalog.loader import load_catalog
from config import Settings
from pipeline.orchestrator import FujikiTableRunner


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def settings(tmp_path_factory):
    log_dir = tmp_path_factory.mktemp("logs")
    return Settings(cache_enabled=False, max_workers=2, log_file=str(log_dir / "fujiki.log"))


@pytest.fixture(scope="session")
def runner(catalog, settings):
    return FujikiTableRunner(catalog=catalog, settings=settings)


@pytest.fixture
def no_cache():
    from utils.cache_decorator import configure_cache
    configure_cache(False)
    yield
    configure_cache(False)
