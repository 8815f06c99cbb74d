import sys
from pathlib import Path

try:
    import e8nogo  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import pytest


@pytest.fixture(scope="session")
def alg():
    from e8nogo.chevalley import build_e8_chevalley

    return build_e8_chevalley()


@pytest.fixture(scope="session")
def ctx():
    from e8nogo.toe import default_context

    return default_context()
