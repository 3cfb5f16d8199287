"""Logging configuration with auto-rotation and cleanup."""

import json
import logging
import sys
from datetime import datetime, timedelta
from logging.handlers import RotatingFileHandler
from pathlib import Path

from mec.config import Settings, get_settings

TEXT_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
QUIET_LOGGERS = ("matplotlib", "PIL")


class JsonFormatter(logging.Formatter):
    """One JSON object per record; mass lists and quotes in messages stay valid JSON."""

    def format(self, record: logging.LogRecord) -> str:
        payload = {
            "time": self.formatTime(record, DATE_FORMAT),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        if record.exc_info:
            payload["exc"] = self.formatException(record.exc_info)
        return json.dumps(payload)


def build_formatter(log_format: str) -> logging.Formatter:
    if log_format == "json":
        return JsonFormatter()
    return logging.Formatter(TEXT_FORMAT, datefmt=DATE_FORMAT)


def _file_handler(settings: Settings, command: str | None) -> RotatingFileHandler:
    log_dir = Path(settings.log_file_path)
    log_dir.mkdir(parents=True, exist_ok=True)
    stem = f"mec_{command}" if command else "mec"
    log_file = log_dir / f"{stem}_{datetime.now().strftime('%Y-%m-%d')}.log"
    cleanup_old_logs(log_dir, settings.log_file_retention_days)
    return RotatingFileHandler(
        log_file,
        maxBytes=10 * 1024 * 1024,  # 10 MB
        backupCount=5,
        encoding="utf-8",
    )


def setup_logging(level_override: str | None = None, command: str | None = None) -> None:
    """Configure the root logger; `command` names the log file when files are on."""
    settings = get_settings()
    level_name = level_override or settings.log_level
    formatter = build_formatter(settings.log_format)

    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, level_name.upper(), logging.WARNING))
    root_logger.handlers.clear()

    # stderr keeps stdout clean for tables and CSV
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if settings.log_file_enabled:
        handlers.append(_file_handler(settings, command))
    for handler in handlers:
        handler.setFormatter(formatter)
        root_logger.addHandler(handler)

    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)


def cleanup_old_logs(log_dir: Path, retention_days: int) -> int:
    """Delete log files older than the retention period; returns how many went."""
    cutoff = datetime.now() - timedelta(days=retention_days)
    removed = 0
    for log_file in log_dir.glob("*.log*"):
        try:
            if datetime.fromtimestamp(log_file.stat().st_mtime) < cutoff:
                log_file.unlink()
                removed += 1
        except OSError as e:
            logging.warning(f"Failed to delete log file {log_file}: {e}")
    return removed
