import pytest

from common.parallel import THREADS_ENV
from env_loader import LOG_LEVEL_ENV, RUN_LOG_ENV


@pytest.fixture(autouse=True)
def isolated_env(monkeypatch, tmp_path):
    """No run log, thread count or log level leaks in from the shell or a .env file."""
    for name in (THREADS_ENV, LOG_LEVEL_ENV, RUN_LOG_ENV):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)


@pytest.fixture
def run_log(tmp_path):
    return tmp_path / "runs.json"
