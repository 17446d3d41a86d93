import os
from pathlib import Path


def _parse_int_default(default: int, *names: str) -> int:
    for name in names:
        raw = os.environ.get(name)
        if raw is None or raw == "":
            continue
        try:
            return int(raw)
        except ValueError:
            continue
    return default


def _parse_bool_default(default: bool, *names: str) -> bool:
    for name in names:
        raw = os.environ.get(name)
        if raw is None or raw == "":
            continue
        lowered = raw.strip().lower()
        if lowered in {"1", "true", "yes", "on"}:
            return True
        if lowered in {"0", "false", "no", "off"}:
            return False
    return default


_ROOT = Path(__file__).resolve().parent.parent

# Hard cap on series length; the largest Sturm-driven run needs about 3.5e5 terms.
MAX_PRECISION = _parse_int_default(2_000_000, "CONGRUENCE_MAX_PRECISION")
ORACLE_MAX_N = _parse_int_default(60, "CONGRUENCE_ORACLE_MAX_N")
DIRECT_CHECK_LIMIT = _parse_int_default(200, "CONGRUENCE_DIRECT_CHECK_LIMIT")
SUPPORT_PRECISION = _parse_int_default(10_000, "CONGRUENCE_SUPPORT_PRECISION")
SCAN_N_MAX = _parse_int_default(100, "CONGRUENCE_SCAN_N_MAX")
DEFAULT_WORKERS = max(1, _parse_int_default(4, "CONGRUENCE_WORKERS", "WORKERS"))
STRICT_CUSPS = _parse_bool_default(True, "CONGRUENCE_STRICT_CUSPS")

AUDIT_LOG_PATH = os.environ.get("AUDIT_LOG_PATH", str(_ROOT / "data" / "audit.log"))
REPORTS_DIR = os.environ.get("CONGRUENCE_REPORTS_DIR") or str(_ROOT / "reports")
LOG_LEVEL = (os.environ.get("LOG_LEVEL") or "INFO").upper()

REPORT_SCHEMA_VERSION = "1.0"
