"""Tests for logging setup."""

import json
import logging
import os
import time

import pytest

from mec.config import get_settings
from mec.utils.logging import JsonFormatter, cleanup_old_logs, setup_logging


@pytest.fixture(autouse=True)
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    for handler in root.handlers:
        handler.close()
    root.handlers[:] = handlers
    root.setLevel(level)


class TestSetupLogging:
    """Root logger configuration."""

    def test_level_override(self):
        setup_logging("DEBUG")
        assert logging.getLogger().level == logging.DEBUG
        assert logging.getLogger("matplotlib").level == logging.WARNING

    def test_settings_level(self, monkeypatch):
        monkeypatch.setenv("MEC_LOG_LEVEL", "ERROR")
        get_settings.cache_clear()
        setup_logging()
        assert logging.getLogger().level == logging.ERROR

    def test_file_named_after_command(self, monkeypatch, tmp_path):
        monkeypatch.setenv("MEC_LOG_FILE_ENABLED", "true")
        monkeypatch.setenv("MEC_LOG_FILE_PATH", str(tmp_path))
        get_settings.cache_clear()
        setup_logging("INFO", command="bench")
        logging.getLogger("mec.test").info("cell done")
        for handler in logging.getLogger().handlers:
            handler.flush()
        files = list(tmp_path.glob("mec_bench_*.log"))
        assert len(files) == 1
        assert "cell done" in files[0].read_text()


class TestJsonFormatter:
    """Structured log lines."""

    def test_quotes_survive(self):
        record = logging.LogRecord("mec.x", logging.INFO, __file__, 1, 'bad "mass" [0.5]', None,
                                   None)
        payload = json.loads(JsonFormatter().format(record))
        assert payload["message"] == 'bad "mass" [0.5]'
        assert payload["level"] == "INFO"
        assert payload["logger"] == "mec.x"


class TestCleanup:
    """Retention of old log files."""

    def test_removes_only_old(self, tmp_path):
        old, fresh = tmp_path / "mec_old.log", tmp_path / "mec_new.log"
        old.write_text("x")
        fresh.write_text("y")
        stale = time.time() - 10 * 86400
        os.utime(old, (stale, stale))
        assert cleanup_old_logs(tmp_path, retention_days=7) == 1
        assert not old.exists()
        assert fresh.exists()
