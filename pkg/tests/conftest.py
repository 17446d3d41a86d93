import os
import sys

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from app import config, metrics


@pytest.fixture(autouse=True)
def _isolate_audit_log(tmp_path, monkeypatch):
    """Keep tests from appending to the real audit trail."""
    monkeypatch.setattr(config, "AUDIT_LOG_PATH", str(tmp_path / "audit.log"))


@pytest.fixture(autouse=True)
def _reset_metrics():
    metrics.reset()
    yield
    metrics.reset()


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(20240611)


def pytest_collection_modifyitems(config, items):
    if os.environ.get("RUN_SLOW") == "1":
        return
    skip_marker = pytest.mark.skip(reason="long-running sweep; set RUN_SLOW=1 to include")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_marker)
