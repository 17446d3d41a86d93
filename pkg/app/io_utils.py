from pathlib import Path
import json
from typing import Any, Dict, Iterable, List

import pandas as pd

from .audit import log_file_access, log_function_call
from .schemas import RunEnvelope
from .validation import validate_payload


def write_table(rows: Iterable[Dict[str, Any]], path: str) -> pd.DataFrame:
    p = Path(path)
    suffix = p.suffix.lower()
    fmt = suffix.lstrip('.') or 'text'
    df = pd.DataFrame(list(rows))
    count = int(len(df))
    log_function_call('write_table', stage='start', path=str(p), format=fmt, rows=count)

    p.parent.mkdir(parents=True, exist_ok=True)
    try:
        if suffix in {".xlsx", ".xls"}:
            df.to_excel(p, index=False)
        else:
            df.to_csv(p, index=False)
    except Exception as exc:
        log_file_access(p, operation='write', status='error', source='io_utils', format=fmt, error=type(exc).__name__)
        raise

    log_file_access(p, operation='write', status='success', source='io_utils', format=fmt, rows=count)
    log_function_call('write_table', stage='completed', path=str(p), format=fmt, rows=count)
    return df


def write_report(envelope: RunEnvelope, path: str, deterministic: bool = False) -> Dict[str, Any]:
    """Validate the envelope against the report schema and write it as JSON."""
    p = Path(path)
    payload = envelope.as_payload(deterministic=deterministic)
    validate_payload(payload)
    p.parent.mkdir(parents=True, exist_ok=True)
    try:
        p.write_text(json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    except Exception as exc:
        log_file_access(p, operation='write', status='error', source='io_utils', format='json', error=type(exc).__name__)
        raise
    log_file_access(p, operation='write', status='success', source='io_utils', format='json', results=len(envelope.results))
    return payload


def report_rows(envelope: RunEnvelope) -> List[Dict[str, Any]]:
    """One flat row per result, for CSV/XLSX exports."""
    return [
        {
            "check": r.check,
            "alpha": r.alpha,
            "k": r.k,
            "claim": r.claim,
            "status": r.status,
            "bound": r.bound,
            "precision": r.precision,
            "first_failure": r.first_failure,
            "duration_ms": r.duration_ms,
        }
        for r in envelope.results
    ]
