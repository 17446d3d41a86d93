"""JSONL audit trail for verification runs and report files."""

from __future__ import annotations

import getpass
import json
import os
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Mapping, Sequence

from . import config


def _serialise(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, Mapping):
        return {str(key): _serialise(val) for key, val in value.items()}
    if isinstance(value, Sequence) and not isinstance(value, (str, bytes, bytearray)):
        return [_serialise(item) for item in value]
    # Fraction, numpy scalars and paths all end up as text
    return str(value)


def _user() -> str:
    try:
        return getpass.getuser() or "unknown"
    except Exception:
        return "unknown"


def log_event(event: str, *, details: Dict[str, Any] | None = None, severity: str = "info") -> None:
    path_value = config.AUDIT_LOG_PATH
    if not path_value:
        return
    record: Dict[str, Any] = {
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds").replace("+00:00", "Z"),
        "event": event,
        "severity": severity,
        "user": _user(),
    }
    if details:
        record["details"] = _serialise(details)
    path = Path(path_value)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("a", encoding="utf-8") as handle:
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")
    except OSError:
        # audit failures never break a verification run
        return


def log_function_call(function: str, **metadata: Any) -> None:
    log_event("function_call", details={"function": function, **metadata})


def log_file_access(path: str | os.PathLike[str], *, operation: str, status: str = "success", **metadata: Any) -> None:
    log_event("file_access", details={"path": str(Path(path)), "operation": operation, "status": status, **metadata})


def log_exception(event: str, *, error: Exception, **metadata: Any) -> None:
    log_event(event, details={"error": type(error).__name__, "message": str(error), **metadata}, severity="error")
