import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parents[1]
SRC_PATH = PROJECT_ROOT / "src"
if str(SRC_PATH) not in sys.path:
    sys.path.insert(0, str(SRC_PATH))


@pytest.fixture(autouse=True)
def _isolated_environment(monkeypatch):
    """Budgets and log levels from the caller's shell must not leak into tests."""
    monkeypatch.delenv("BISETKIT_BUDGET", raising=False)
    monkeypatch.delenv("BISETKIT_LOG_LEVEL", raising=False)
