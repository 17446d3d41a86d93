"""Command-line front end: coefficient tables and reproducible verification runs.

Exit codes: 0 when every requested check passes, 1 when any check fails or
errors, 2 for usage and configuration errors (including refused precision
overrides).
"""

import json
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

import click
import pandas as pd

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.append(str(ROOT))

from app import config, metrics
from app.audit import log_function_call
from app.etaquotient import EtaQuotient, EtaQuotientError, check_modularity
from app.hecke import InsufficientPrecisionError
from app.io_utils import report_rows, write_report, write_table
from app.partitions import OracleLimitError, brute_force_a, gen_a
from app.prover import (
    derive_params,
    internal_precisions,
    parse_alpha_spec,
    resolve_params,
    scan_alpha,
    verify_base,
    verify_e4_reduction,
    verify_eta_conditions,
    verify_family_member,
    verify_internal,
    verify_lifting,
    verify_quintuple_family,
    verify_sturm_extension,
)
from app.ramanujan import (
    scan_ramanujan,
    verify_a11,
    verify_a11_factorization,
    verify_cube_dissection,
    verify_partition_ramanujan,
)
from app.runner import run_checks
from app.schemas import RunConfig, RunEnvelope, VerificationReport
from app.series import ModulusError, PrecisionLimitError


def parse_int_list(value: str, name: str = "value") -> List[int]:
    """Comma list of integers and inclusive ranges ``a-b``."""
    out: List[int] = []
    for item in str(value).split(","):
        item = item.strip()
        if not item:
            continue
        try:
            if "-" in item:
                lo, hi = (int(x) for x in item.split("-", 1))
                if hi < lo:
                    raise ValueError
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(item))
        except ValueError:
            raise click.BadParameter(f"cannot parse {item!r} as an integer or range a-b", param_hint=name)
    if any(v < 0 for v in out):
        raise click.BadParameter("values must be >= 0", param_hint=name)
    return sorted(set(out))


def parse_alphas(value: str) -> List[int]:
    try:
        return parse_alpha_spec(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--alpha")


def parse_n_range(value: str) -> range:
    try:
        if ":" in value:
            lo, hi = (int(x) for x in value.split(":", 1))
        else:
            lo = hi = int(value)
    except ValueError:
        raise click.BadParameter(f"expected n or a:b, got {value!r}", param_hint="--n")
    if lo < 0 or hi < lo:
        raise click.BadParameter(f"need 0 <= a <= b, got {value!r}", param_hint="--n")
    return range(lo, hi + 1)


@click.group()
def cli():
    """Congruences for partitions with k-colored odd parts."""


@cli.command()
@click.option("--k", "k", type=int, required=True, help="Number of colors for odd parts")
@click.option("--n", "n_spec", required=True, help="Single n or inclusive range a:b")
@click.option("--modulus", type=int, default=3, show_default=True)
@click.option("--exact", is_flag=True, help="Also enumerate exact values (n <= CONGRUENCE_ORACLE_MAX_N)")
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text", show_default=True)
def coeffs(k, n_spec, modulus, exact, fmt):
    """Print a_k(n) mod m, one row per n."""
    if k < 1:
        raise click.BadParameter("k must be >= 1", param_hint="--k")
    ns = parse_n_range(n_spec)
    try:
        series = gen_a(k, modulus, ns.stop)
    except (ModulusError, PrecisionLimitError) as exc:
        raise click.UsageError(str(exc))
    rows: List[Dict[str, Optional[int]]] = []
    for n in ns:
        row: Dict[str, Optional[int]] = {"k": k, "n": n, "modulus": modulus, "residue": series.coeff(n)}
        if exact:
            try:
                row["exact"] = brute_force_a(k, n)
            except OracleLimitError:
                row["exact"] = None
        rows.append(row)
    if fmt == "json":
        click.echo(json.dumps(rows, indent=2))
    elif fmt == "csv":
        click.echo(pd.DataFrame(rows).to_csv(index=False), nl=False)
    else:
        for row in rows:
            line = f"a_{k}({row['n']}) mod {modulus} = {row['residue']}"
            if exact:
                line += f"   exact = {row['exact'] if row['exact'] is not None else '-'}"
            click.echo(line)


@cli.group()
def verify():
    """Run verification checks and emit a report."""


def run_options(fn: Callable) -> Callable:
    fn = click.option("--table", "table", default=None, help="Also export results as CSV/XLSX")(fn)
    fn = click.option("--output", "-o", "output", default=None, help="Write the JSON report here")(fn)
    fn = click.option("--workers", type=int, default=None, help="Worker threads (default $CONGRUENCE_WORKERS)")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)(fn)
    return fn


def _run_config(command: str, fmt: str, workers: Optional[int], output: Optional[str], **fields) -> RunConfig:
    try:
        return RunConfig(
            command=command,
            output_format=fmt,
            workers=workers or config.DEFAULT_WORKERS,
            output=output,
            **fields,
        )
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _emit(run: RunConfig, results: Sequence[VerificationReport], table: Optional[str]) -> None:
    envelope = RunEnvelope.build(run, list(results))
    if run.output:
        write_report(envelope, run.output)
    if table:
        write_table(report_rows(envelope), table)
    if run.output_format == "json":
        click.echo(envelope.to_json())
    else:
        for r in envelope.results:
            mark = {"passed": "PASS", "failed": "FAIL", "error": "ERROR"}[r.status]
            where = f"alpha={r.alpha} " if r.alpha is not None else ""
            where += f"k={r.k} " if r.k is not None else ""
            bound = f" bound={r.bound}" if r.bound is not None else ""
            first = f" first_failure={r.first_failure}" if r.first_failure is not None else ""
            click.echo(f"{mark:5} {r.check:18} {where}{r.claim}{bound} precision={r.precision}{first}")
            if r.error:
                click.echo(f"      {r.error}")
        passed = sum(r.passed for r in envelope.results)
        click.echo(f"{passed}/{len(envelope.results)} checks passed")
        click.echo("metrics: " + json.dumps(metrics.snapshot(), sort_keys=True))
    log_function_call("verify", stage="completed", command=run.command, passed=envelope.all_passed, results=len(envelope.results))
    sys.exit(0 if envelope.all_passed else 1)


def _dispatch(run: RunConfig, tasks, table: Optional[str]) -> None:
    log_function_call("verify", stage="start", command=run.command, checks=len(tasks))
    _emit(run, run_checks(tasks, workers=run.workers), table)


@verify.command()
@click.option("--j", "j_spec", default="0-2", show_default=True)
@click.option("--t", "t_spec", default="0-8", show_default=True)
@click.option("--n-max", type=int, default=50, show_default=True)
@run_options
def base(j_spec, t_spec, n_max, fmt, workers, output, table):
    """a_{27j+3t+2}(27n + 18 + t) == 0 (mod 3)."""
    js, ts = parse_int_list(j_spec, "--j"), parse_int_list(t_spec, "--t")
    if any(t > 8 for t in ts):
        raise click.BadParameter("t must lie in 0..8", param_hint="--t")
    run = _run_config("verify base", fmt, workers, output, alphas=[9 * j + t for j in js for t in ts], n_max=n_max)
    tasks = [(f"base j={j} t={t}", 9 * j + t, (lambda j=j, t=t: verify_base(j, t, n_max))) for j in js for t in ts]
    _dispatch(run, tasks, table)


@verify.command()
@click.option("--alpha", "alpha_spec", default="theorem-list", show_default=True)
@click.option("--n-max", type=int, default=None, help="Bound for the direct cross-check")
@click.option("--mode", type=click.Choice(["sturm", "direct"]), default="sturm", show_default=True)
@click.option("--precision", type=int, default=None, help="Input precision for the g2 side (>= Sturm minimum)")
@click.option("--no-lift", is_flag=True, help="Never raise A by 24 when the minimal A fails at a cusp")
@run_options
def internal(alpha_spec, n_max, mode, precision, no_lift, fmt, workers, output, table):
    """a(9n+t) == a(81n+10t+9j) (mod 3) via g1|T_3^2 == g2|T_3^4 up to the Sturm bound."""
    alphas = parse_alphas(alpha_spec)
    if precision is not None and mode == "sturm":
        for alpha in alphas:
            params, _, _ = resolve_params(alpha, allow_lift=not no_lift)
            try:
                internal_precisions(params, precision)
            except InsufficientPrecisionError as exc:
                raise click.UsageError(f"refusing run: {exc}")
    run = _run_config("verify internal", fmt, workers, output, alphas=alphas, n_max=n_max, precision=precision)
    tasks = [
        (
            f"internal alpha={a}",
            a,
            (lambda a=a: verify_internal(a, n_max, mode=mode, precision=precision, allow_lift=not no_lift)),
        )
        for a in alphas
    ]
    _dispatch(run, tasks, table)


@verify.command()
@click.option("--alpha", "alpha_spec", default="theorem-list", show_default=True)
@click.option("--k", "k_spec", default="0", show_default=True)
@click.option("--n-max", type=int, default=50, show_default=True)
@run_options
def family(alpha_spec, k_spec, n_max, fmt, workers, output, table):
    """a_{3 alpha+2}(3^(2k+3) n + delta_k) == 0 (mod 3)."""
    alphas, ks = parse_alphas(alpha_spec), parse_int_list(k_spec, "--k")
    run = _run_config("verify family", fmt, workers, output, alphas=alphas, ks=ks, n_max=n_max)
    tasks = [
        (f"family alpha={a} k={k}", a, (lambda a=a, k=k: verify_family_member(a, k, n_max)))
        for a in alphas
        for k in ks
    ]
    _dispatch(run, tasks, table)


@verify.command()
@click.option("--k", "k_spec", default="0,1", show_default=True)
@click.option("--n-max", type=int, default=10, show_default=True)
@run_options
def a5(k_spec, n_max, fmt, workers, output, table):
    """a_5(3^(2k+3) n + (153 * 9^k - 1)/8) == 0 (mod 3)."""
    ks = parse_int_list(k_spec, "--k")
    run = _run_config("verify a5", fmt, workers, output, alphas=[1], ks=ks, n_max=n_max)
    tasks = [(f"a5 k={k}", 1, (lambda k=k: verify_quintuple_family(k, n_max))) for k in ks]
    _dispatch(run, tasks, table)


@verify.command()
@click.option("--n-max", type=int, default=5000, show_default=True)
@click.option("--case", "case_spec", default="5,7,11", show_default=True)
@click.option("--precision", type=int, default=None, help="Precision for the support checks")
@run_options
def ramanujan(n_max, case_spec, precision, fmt, workers, output, table):
    """a_11(5n+4), a_11(7n+4), a_11(11n+1) and the reductions behind them."""
    cases = parse_int_list(case_spec, "--case")
    if not set(cases) <= {5, 7, 11}:
        raise click.BadParameter("cases are 5, 7 and 11", param_hint="--case")
    run = _run_config("verify ramanujan", fmt, workers, output, n_max=n_max, precision=precision)
    tasks = []
    for m in cases:
        tasks.append((f"a11 mod {m}", None, (lambda m=m: verify_a11(m, n_max))))
        tasks.append((f"p mod {m}", None, (lambda m=m: verify_partition_ramanujan(m, n_max))))
        tasks.append((f"a11 factor mod {m}", None, (lambda m=m: verify_a11_factorization(m, precision))))
    _dispatch(run, tasks, table)


@verify.command("cube-dissection")
@click.option("--precision", type=int, default=None)
@run_options
def cube_dissection(precision, fmt, workers, output, table):
    """f_1^3 mod 7: triangular expansion and support on residues 0, 1, 3."""
    run = _run_config("verify cube-dissection", fmt, workers, output, precision=precision)
    _dispatch(run, [("cube-dissection", None, lambda: verify_cube_dissection(precision))], table)


def _eta_report(eq: EtaQuotient) -> VerificationReport:
    verdict = check_modularity(eq)
    return VerificationReport(
        check="eta-check",
        claim=f"eta quotient {eq.as_dict()} on Gamma_0({eq.level})",
        status="passed" if verdict.ok else "failed",
        details=verdict.as_dict(),
    )


def _parse_eta(spec: str, level: int, e4: int) -> EtaQuotient:
    try:
        pairs = dict((int(d), int(r)) for d, r in (item.split(":") for item in spec.split(",") if item.strip()))
        return EtaQuotient(level, pairs, e4_power=e4)
    except (ValueError, EtaQuotientError) as exc:
        raise click.BadParameter(f"{spec!r}: {exc}", param_hint="--eta")


@verify.command("eta-check")
@click.option("--alpha", "alpha_spec", default="theorem-list", show_default=True)
@click.option("--eta", "eta_spec", default=None, help="Explicit quotient delta:r,... (requires --level)")
@click.option("--level", type=int, default=None)
@click.option("--e4", type=int, default=0, show_default=True)
@click.option("--no-lift", is_flag=True)
@run_options
def eta_check(alpha_spec, eta_spec, level, e4, no_lift, fmt, workers, output, table):
    """Modularity conditions for g1/g2 (per alpha) or for an explicit eta quotient."""
    if eta_spec is not None:
        if level is None:
            raise click.UsageError("--eta needs --level")
        eq = _parse_eta(eta_spec, level, e4)
        run = _run_config("verify eta-check", fmt, workers, output)
        _dispatch(run, [("eta-check", None, lambda: _eta_report(eq))], table)
        return
    alphas = parse_alphas(alpha_spec)
    run = _run_config("verify eta-check", fmt, workers, output, alphas=alphas)
    tasks = [(f"eta alpha={a}", a, (lambda a=a: verify_eta_conditions(a, allow_lift=not no_lift))) for a in alphas]
    _dispatch(run, tasks, table)


@verify.command()
@click.option("--alpha", "alpha_spec", default="theorem-list", show_default=True)
@click.option("--factor", type=int, default=2, show_default=True)
@click.option("--no-lift", is_flag=True, help="Keep the minimal A even when it fails at a cusp")
@run_options
def sturm(alpha_spec, factor, no_lift, fmt, workers, output, table):
    """Direct comparison past the Sturm bound, up to factor * B."""
    if factor < 1:
        raise click.BadParameter("factor must be >= 1", param_hint="--factor")
    alphas = parse_alphas(alpha_spec)
    run = _run_config("verify sturm", fmt, workers, output, alphas=alphas)
    tasks = [(f"sturm alpha={a}", a, (lambda a=a: verify_sturm_extension(a, factor, allow_lift=not no_lift))) for a in alphas]
    _dispatch(run, tasks, table)


@verify.command()
@click.option("--alpha", "alpha_spec", default="0-80", show_default=True)
@click.option("--n-max", type=int, default=None, help="Default $CONGRUENCE_SCAN_N_MAX")
@run_options
def scan(alpha_spec, n_max, fmt, workers, output, table):
    """Exploratory direct-mode scan of the internal congruence over alpha."""
    alphas = parse_alphas(alpha_spec)
    n_max = config.SCAN_N_MAX if n_max is None else n_max
    run = _run_config("verify scan", fmt, workers, output, alphas=alphas, n_max=n_max)
    log_function_call("verify", stage="start", command=run.command, checks=len(alphas))
    _emit(run, scan_alpha(alphas, n_max=n_max, workers=run.workers), table)


@verify.command()
@click.option("--alpha", "alpha_spec", default="1,4,7,63", show_default=True)
@click.option("--k", "k_spec", default="0,1", show_default=True)
@click.option("--n-max", type=int, default=10, show_default=True)
@run_options
def lifting(alpha_spec, k_spec, n_max, fmt, workers, output, table):
    """Base case plus internal congruence imply the family member, end to end."""
    alphas, ks = parse_alphas(alpha_spec), parse_int_list(k_spec, "--k")
    run = _run_config("verify lifting", fmt, workers, output, alphas=alphas, ks=ks, n_max=n_max)
    tasks = [(f"lifting alpha={a} k={k}", a, (lambda a=a, k=k: verify_lifting(a, k, n_max))) for a in alphas for k in ks]
    _dispatch(run, tasks, table)


@verify.command()
@click.option("--precision", type=int, default=10_000, show_default=True)
@run_options
def e4(precision, fmt, workers, output, table):
    """E_4 == 1 (mod 3)."""
    run = _run_config("verify e4", fmt, workers, output, precision=precision)
    _dispatch(run, [("e4-reduction", None, lambda: verify_e4_reduction(precision))], table)


@cli.command("ramanujan-scan")
@click.option("--k", "k_spec", default="1-12", show_default=True)
@click.option("--primes", "prime_spec", default="5,7,11,13", show_default=True)
@click.option("--n-max", type=int, default=200, show_default=True)
@click.option("--table", default=None, help="Export hits as CSV/XLSX")
def ramanujan_scan(k_spec, prime_spec, n_max, table):
    """List progressions m n + c on which a_k vanishes mod m for all n <= n_max."""
    hits = scan_ramanujan(parse_int_list(k_spec, "--k"), parse_int_list(prime_spec, "--primes"), n_max)
    if table:
        write_table(hits, table)
    for hit in hits:
        click.echo(f"a_{hit['k']}({hit['prime']}n + {hit['residue']}) == 0 (mod {hit['prime']}) for n <= {hit['n_max']}")
    click.echo(f"{len(hits)} progressions")


@cli.command()
@click.option("--alpha", "alpha_spec", default="theorem-list", show_default=True)
@click.option("--table", default=None, help="Export as CSV/XLSX")
def params(alpha_spec, table):
    """Show derived family parameters (A, N, weight, shifts, Sturm bound)."""
    rows = [derive_params(a).as_dict() for a in parse_alphas(alpha_spec)]
    if table:
        write_table(rows, table)
    click.echo(pd.DataFrame(rows).to_string(index=False))


if __name__ == "__main__":
    cli()
