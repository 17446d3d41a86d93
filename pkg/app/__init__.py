import json
import logging
import sys
from typing import Any, Dict, Optional


class JsonFormatter(logging.Formatter):
    """JSON log lines for stdout; verification fields ride along in ``extra_data``."""

    def format(self, record: logging.LogRecord) -> str:
        log_obj: Dict[str, Any] = {
            "timestamp": self.formatTime(record),
            "level": record.levelname,
            "message": record.getMessage(),
            "logger": record.name,
        }
        if hasattr(record, "extra_data") and isinstance(record.extra_data, dict):
            log_obj.update(record.extra_data)
        if record.exc_info:
            log_obj["exc_info"] = self.formatException(record.exc_info)
        return json.dumps(log_obj, ensure_ascii=False, default=str)


def configure_logging(logger: Optional[logging.Logger] = None) -> logging.Logger:
    """Attach the JSON stdout handler at ``config.LOG_LEVEL`` unless the logger already has handlers."""
    from . import config

    target = logger if logger is not None else logging.getLogger()
    if target.handlers:
        return target
    handler = logging.StreamHandler(sys.stdout)
    handler.setFormatter(JsonFormatter())
    target.addHandler(handler)
    target.setLevel(getattr(logging, config.LOG_LEVEL, logging.INFO))
    return target


def log_fields(**fields: Any) -> Dict[str, Any]:
    """Build the ``extra`` mapping understood by :class:`JsonFormatter`."""
    return {"extra_data": fields}


configure_logging()
