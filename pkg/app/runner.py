"""Bounded worker pool for independent checks and a thread-safe report sink."""

from __future__ import annotations

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from . import config, log_fields, metrics
from .audit import log_exception
from .schemas import VerificationReport

logger = logging.getLogger(__name__)

Task = Tuple[str, Optional[int], Callable[[], VerificationReport]]


class ReportSink:
    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._reports: List[VerificationReport] = []

    def add(self, report: VerificationReport) -> None:
        with self._lock:
            self._reports.append(report)

    def extend(self, reports: Iterable[VerificationReport]) -> None:
        for report in reports:
            self.add(report)

    def sorted(self) -> List[VerificationReport]:
        with self._lock:
            return sorted(self._reports, key=VerificationReport.sort_key)

    def __len__(self) -> int:
        with self._lock:
            return len(self._reports)


def _run_one(label: str, alpha: Optional[int], fn: Callable[[], VerificationReport]) -> VerificationReport:
    started = time.perf_counter()
    try:
        report = fn()
    except Exception as exc:
        logger.error("check raised", extra=log_fields(check=label, alpha=alpha, error=type(exc).__name__))
        log_exception("check_error", error=exc, check=label, alpha=alpha)
        report = VerificationReport(
            check=label,
            claim=label,
            alpha=alpha,
            status="error",
            duration_ms=round((time.perf_counter() - started) * 1000.0, 3),
            error=f"{type(exc).__name__}: {exc}",
        )
    metrics.record_status(report.status)
    metrics.timing(report.check, time.perf_counter() - started)
    return report


def run_checks(
    tasks: Sequence[Task],
    sink: Optional[ReportSink] = None,
    workers: Optional[int] = None,
) -> List[VerificationReport]:
    """Run ``(label, alpha, fn)`` tasks on a thread pool; exceptions become ``error`` reports."""
    batch = ReportSink()
    workers = max(1, workers or config.DEFAULT_WORKERS)
    if workers == 1 or len(tasks) <= 1:
        for label, alpha, fn in tasks:
            batch.add(_run_one(label, alpha, fn))
    else:
        with ThreadPoolExecutor(max_workers=min(workers, len(tasks))) as ex:
            futures = [ex.submit(_run_one, label, alpha, fn) for label, alpha, fn in tasks]
            for fut in as_completed(futures):
                batch.add(fut.result())
    results = batch.sorted()
    if sink is not None:
        sink.extend(results)
    return results
