import argparse
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from pathlib import Path
import sys

ROOT = Path(__file__).resolve().parents[1]
sys.path.append(str(ROOT))

from app import config
from app.io_utils import write_table
from app.prover import parse_alpha_spec, resolve_params, verify_internal


def _time_alpha(alpha):
    params, _, _ = resolve_params(alpha)
    start = time.perf_counter()
    try:
        report = verify_internal(alpha)
        status, precision = report.status, report.precision
    except Exception as exc:
        status, precision = f"error: {type(exc).__name__}", 0
    end = time.perf_counter()
    return {
        "alpha": alpha,
        "A": params.effective_A,
        "weight": params.weight,
        "level": params.level,
        "bound": params.sturm,
        "precision": precision,
        "seconds": round(end - start, 3),
        "status": status,
    }


def main():
    ap = argparse.ArgumentParser(description="Time the Sturm-bound internal check per alpha")
    ap.add_argument("--alpha", default="theorem-list", help="Named set or list such as 1,4,7-9")
    ap.add_argument("--workers", type=int, default=config.DEFAULT_WORKERS, help="Number of worker threads")
    ap.add_argument("--out", default=str(Path(config.REPORTS_DIR) / "bench.csv"), help="CSV/XLSX output")
    args = ap.parse_args()

    alphas = parse_alpha_spec(args.alpha)
    rows = []
    t0 = time.perf_counter()
    with ThreadPoolExecutor(max_workers=max(1, args.workers)) as ex:
        futures = [ex.submit(_time_alpha, a) for a in alphas]
        for fut in as_completed(futures):
            rows.append(fut.result())
    t1 = time.perf_counter()

    if not rows:
        print("No alphas benchmarked")
        return

    rows.sort(key=lambda r: r["alpha"])
    write_table(rows, args.out)
    secs = sorted(r["seconds"] for r in rows)
    slowest = max(rows, key=lambda r: r["seconds"])
    print(f"alphas: {len(rows)}  wall: {t1 - t0:.1f} s")
    print(f"median per alpha: {secs[len(secs) // 2]:.2f} s")
    print(f"slowest: alpha={slowest['alpha']} ({slowest['seconds']:.2f} s, precision {slowest['precision']})")
    failed = [r["alpha"] for r in rows if r["status"] != "passed"]
    print(f"not passed: {failed or 'none'}")
    print(f"table: {args.out}")


if __name__ == "__main__":
    main()
