# Basic test setup for ncx tests
import os
import sys

import pytest

# Add the project root to the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from ncx.services.field_factory import FieldFactory
from ncx.services.generator import make_rng
from ncx.services.settings import Settings
from tests.helpers import complex_from


@pytest.fixture
def Q():
    return FieldFactory.create_field("q")


@pytest.fixture
def F5():
    return FieldFactory.create_field("fp:5")


@pytest.fixture(params=["q", "fp:5"], ids=["Q", "F5"])
def field(request):
    # Runs the test once over Q and once over F_5
    return FieldFactory.create_field(request.param)


@pytest.fixture
def rng():
    return make_rng(20240611)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    # Every test sees the defaults, never a developer's .env
    for name in ("NCX_DEFAULT_FIELD", "NCX_LOG_LEVEL", "NCX_SELFTEST_CASES", "NCX_SEED",
                 "NCX_API_HOST", "NCX_API_PORT"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr("ncx.services.settings.load_dotenv", lambda *args, **kwargs: False)
    Settings.reset()
    yield
    Settings.reset()


@pytest.fixture
def two_step_q(Q):
    """N=3 over Q: k --1--> k --0--> k in degrees 0, 1, 2"""
    return complex_from(3, Q, 0, [1, 1, 1], [[[1]], [[0]]])


@pytest.fixture
def complex_document():
    """mu_2^1 for N=3 over Q as a JSON document"""
    return {
        "N": 3,
        "field": {"kind": "Q"},
        "min_degree": 0,
        "dims": [1, 1],
        "diffs": [[["1"]]],
    }


@pytest.fixture
def identity_map_document(complex_document):
    return {
        "source": complex_document,
        "target": complex_document,
        "min_degree": 0,
        "maps": [[["1"]], [["1"]]],
    }
