import pytest

from galoiskit.core import get_plugin_manager
from galoiskit.settings import settings


@pytest.fixture
def plugin_manager():
    get_plugin_manager.cache_clear()
    yield get_plugin_manager()
    get_plugin_manager.cache_clear()


@pytest.fixture(autouse=True)
def _reset_settings():
    yield
    settings.__init__()
