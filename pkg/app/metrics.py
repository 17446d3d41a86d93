"""In-memory counters and timings for verification runs."""

from __future__ import annotations

import threading
from collections import defaultdict
from typing import Dict, List

_LOCK = threading.Lock()
_COUNTERS: Dict[str, int] = defaultdict(int)
_TIMINGS: Dict[str, List[float]] = defaultdict(list)


def incr(name: str, amount: int = 1) -> None:
    with _LOCK:
        _COUNTERS[name] += amount


def timing(name: str, duration_seconds: float) -> None:
    with _LOCK:
        _TIMINGS[name].append(duration_seconds)


def record_status(status: str) -> None:
    incr({"passed": "checks_passed", "failed": "checks_failed"}.get(status, "checks_errored"))


def reset() -> None:
    with _LOCK:
        _COUNTERS.clear()
        _TIMINGS.clear()


def snapshot() -> Dict[str, object]:
    with _LOCK:
        counters = dict(_COUNTERS)
        timings = {k: list(v) for k, v in _TIMINGS.items()}
    return {
        "counters": counters,
        "timings": {k: {"count": len(v), "p50_ms": _percentile_ms(v, 50), "p95_ms": _percentile_ms(v, 95)} for k, v in timings.items()},
        "spikes": _detect_spikes(counters),
    }


def _percentile_ms(samples: List[float], pct: float) -> float:
    if not samples:
        return 0.0
    ordered = sorted(samples)
    idx = int(len(ordered) * (pct / 100))
    idx = min(max(idx, 0), len(ordered) - 1)
    return ordered[idx] * 1000


def _detect_spikes(counters: Dict[str, int]) -> Dict[str, object]:
    failures = counters.get("checks_failed", 0) + counters.get("checks_errored", 0)
    passes = counters.get("checks_passed", 0)
    return {"failure_spike": failures > passes, "failures": failures, "passes": passes}
