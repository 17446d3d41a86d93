"""Ramanujan-type congruences for a_11 and the dissection facts the proofs rest on.

a_11 = f_2^10 / f_1^11 vanishes on 5n+4 (mod 5), 7n+4 (mod 7) and 11n+1 (mod 11).
Each case reduces, through f^p == f(q^p) (mod p), to a statement about p(n) or
to the 7-dissection of f_1^3.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional

import numpy as np

from . import config, log_fields
from .partitions import gen_a, gen_p
from .prover import first_nonvanishing, progression_report
from .schemas import CongruenceClaim, VerificationReport
from .series import (
    TruncSeries,
    eta_product,
    eta_quotient_series,
    mul,
    scale_exponents,
    support,
    triangular_series,
)

logger = logging.getLogger(__name__)

A11_CASES: Dict[int, tuple] = {5: (5, 4), 7: (7, 4), 11: (11, 1)}
PARTITION_CASES: Dict[int, tuple] = {5: (5, 4), 7: (7, 5), 11: (11, 6)}
CUBE_RESIDUES_MOD_7 = frozenset({0, 1, 3})


@dataclass(frozen=True)
class DissectionProfile:
    series_id: str
    modulus: int
    classes: FrozenSet[int]
    precision: int

    def as_dict(self) -> Dict[str, object]:
        return {
            "series": self.series_id,
            "modulus": self.modulus,
            "classes": sorted(self.classes),
            "precision": self.precision,
        }


def dissection_support(series: TruncSeries, m: int, series_id: str = "series") -> DissectionProfile:
    """Residues r mod m such that some nonzero coefficient sits at an index == r (mod m)."""
    if m < 2:
        raise ValueError(f"dissection modulus must be >= 2, got {m}")
    classes = frozenset(int(r) for r in np.unique(support(series) % m))
    return DissectionProfile(series_id, m, classes, series.precision)


def _case(table: Dict[int, tuple], case: int) -> tuple:
    if case not in table:
        raise ValueError(f"case must be one of {sorted(table)}, got {case}")
    return table[case]


def verify_a11(case: int, n_max: int) -> VerificationReport:
    started = time.perf_counter()
    M, c = _case(A11_CASES, case)
    claim = CongruenceClaim(k_colors=11, modulus_ap=M, residue=c, prime=case, n_max=n_max)
    series = gen_a(11, case, M * n_max + c + 1).series
    return progression_report("ramanujan-a11", claim, series, started)


def verify_partition_ramanujan(m: int, n_max: int) -> VerificationReport:
    """p(5n+4), p(7n+5), p(11n+6) == 0 modulo 5, 7, 11."""
    started = time.perf_counter()
    M, c = _case(PARTITION_CASES, m)
    claim = CongruenceClaim(k_colors=1, modulus_ap=M, residue=c, prime=m, n_max=n_max)
    series = gen_p(m, M * n_max + c + 1).series
    return progression_report("ramanujan-p", claim, series, started)


def _report(check: str, claim: str, precision: int, problems: List[str], started: float, details: Dict) -> VerificationReport:
    return VerificationReport(
        check=check,
        claim=claim,
        precision=precision,
        status="failed" if problems else "passed",
        duration_ms=round((time.perf_counter() - started) * 1000.0, 3),
        details={**details, "problems": problems},
    )


def verify_cube_dissection(precision: Optional[int] = None) -> VerificationReport:
    """f_1^3 equals sum (-1)^k (2k+1) q^(k(k+1)/2) mod 7 and lives on residues {0, 1, 3} mod 7."""
    started = time.perf_counter()
    P = precision or config.SUPPORT_PRECISION
    f1 = eta_product(1, 1, 7, P)
    cube = mul(f1, mul(f1, f1))
    jacobi = triangular_series(7, P)
    problems: List[str] = []
    mismatch = np.flatnonzero(cube.coeffs != jacobi.coeffs)
    if mismatch.size:
        problems.append(f"triple product and triangular expansion differ first at q^{int(mismatch[0])}")
    profile = dissection_support(cube, 7, "f1^3")
    if not profile.classes <= CUBE_RESIDUES_MOD_7:
        problems.append(f"support reaches residues {sorted(profile.classes - CUBE_RESIDUES_MOD_7)} mod 7")
    return _report(
        "cube-dissection",
        "f_1^3 (mod 7) is supported on exponents == 0, 1, 3 (mod 7)",
        P,
        problems,
        started,
        {"profile": profile.as_dict()},
    )


def verify_a11_factorization(case: int, precision: Optional[int] = None) -> VerificationReport:
    """The per-prime reduction step behind each a_11 congruence."""
    started = time.perf_counter()
    _case(A11_CASES, case)
    P = precision or config.SUPPORT_PRECISION
    problems: List[str] = []
    details: Dict[str, object] = {}

    if case in (5, 11):
        power = 10 if case == 5 else 11
        factor = eta_quotient_series({2: power, 1: -power}, case, P)
        profile = dissection_support(factor, case, f"f2^{power}/f1^{power}")
        details["factor"] = profile.as_dict()
        if not profile.classes <= {0}:
            problems.append(f"factor is not a series in q^{case}: residues {sorted(profile.classes)}")
    if case == 11:
        # a_11 == (f_22 / f_11) * sum p(n) q^(2n) (mod 11)
        doubled = scale_exponents(gen_p(11, P).series, 2)
        idx = np.arange(P)
        on_progression = (idx % 11 == 1) & (idx % 2 == 0)
        if not np.array_equal(on_progression, idx % 22 == 12):
            problems.append("exponents == 1 (mod 11) with even index are not exactly those == 12 (mod 22)")
        nonzero = np.flatnonzero(doubled.coeffs[on_progression])
        details["p_11n_plus_6_terms"] = int(on_progression.sum())
        if nonzero.size:
            problems.append(f"p(11n+6) is nonzero mod 11 at n={int(nonzero[0])}")
    if case == 7:
        # a_11 == (f_14 / f_7^2) * f_1^3 f_2^3 (mod 7)
        factor = eta_quotient_series({14: 1, 7: -2}, 7, P)
        factor_profile = dissection_support(factor, 7, "f14/f7^2")
        product_profile = dissection_support(eta_quotient_series({1: 3, 2: 3}, 7, P), 7, "f1^3 f2^3")
        details["factor"] = factor_profile.as_dict()
        details["product"] = product_profile.as_dict()
        if not factor_profile.classes <= {0}:
            problems.append("f14/f7^2 is not a series in q^7")
        if 4 in product_profile.classes:
            problems.append("f1^3 f2^3 has a term with exponent == 4 (mod 7)")

    M, c = A11_CASES[case]
    return _report(
        "a11-factorization",
        f"reduction step for a_11({M}n + {c}) == 0 (mod {case})",
        P,
        problems,
        started,
        details,
    )


def scan_ramanujan(
    k_values: Iterable[int],
    primes: Iterable[int],
    n_max: int,
) -> List[Dict[str, int]]:
    """Progressions (m n + c) on which a_k vanishes mod m for every n <= n_max.

    Exploratory only: a hit is numerical evidence, not a claim.
    """
    hits: List[Dict[str, int]] = []
    primes = list(primes)
    for k in k_values:
        for m in primes:
            series = gen_a(k, m, m * (n_max + 1)).series
            for c in range(m):
                if first_nonvanishing(series, m, c, n_max) is None:
                    hits.append({"k": int(k), "prime": int(m), "residue": c, "n_max": int(n_max)})
    logger.info("ramanujan scan finished", extra=log_fields(hits=len(hits), n_max=n_max, primes=primes))
    return hits
