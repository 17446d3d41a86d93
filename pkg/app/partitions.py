"""Generating functions for p(n), p_k(n), a_k(n) and exact enumeration oracles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import config
from .series import TruncSeries, eta_quotient_series

FAMILY_P = "p"
FAMILY_PK = "p_k"
FAMILY_A = "a_k"


class PartitionFamilyError(ValueError):
    pass


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class PartitionSeries:
    family: str
    k: int
    series: TruncSeries

    @property
    def modulus(self) -> int:
        return self.series.modulus

    @property
    def precision(self) -> int:
        return self.series.precision

    def coeff(self, n: int) -> int:
        return self.series.coeff(n)


def _require_colors(k: int) -> int:
    if k < 1:
        raise PartitionFamilyError(f"color count must be >= 1, got {k}")
    return int(k)


def gen_a(k: int, modulus: int, precision: int) -> PartitionSeries:
    """sum a_k(n) q^n = f_2^(k-1) / f_1^k, reduced mod ``modulus``."""
    k = _require_colors(k)
    series = eta_quotient_series({1: -k, 2: k - 1}, modulus, precision)
    return PartitionSeries(FAMILY_A, k, series)


def gen_pk(k: int, modulus: int, precision: int) -> PartitionSeries:
    """k-colored partitions, 1 / f_1^k."""
    k = _require_colors(k)
    return PartitionSeries(FAMILY_PK, k, eta_quotient_series({1: -k}, modulus, precision))


def gen_p(modulus: int, precision: int) -> PartitionSeries:
    return PartitionSeries(FAMILY_P, 1, eta_quotient_series({1: -1}, modulus, precision))


def brute_force_a(k: int, n: int) -> int:
    """Exact a_k(n) by enumeration: odd parts carry one of k colors, even parts none.

    Parts are taken in decreasing size; an odd size used c times contributes
    the number of color multisets of size c, C(c + k - 1, k - 1).
    """
    k = _require_colors(k)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > config.ORACLE_MAX_N:
        raise OracleLimitError(f"oracle is limited to n <= {config.ORACLE_MAX_N} (CONGRUENCE_ORACLE_MAX_N), got {n}")
    return _count(k, n, n)


@lru_cache(maxsize=None)
def _count(k: int, remaining: int, largest: int) -> int:
    if remaining == 0:
        return 1
    if largest == 0:
        return 0
    total = 0
    for used in range(remaining // largest + 1):
        colorings = comb(used + k - 1, k - 1) if largest % 2 else 1
        total += colorings * _count(k, remaining - used * largest, largest - 1)
    return total


def brute_force_p(n: int) -> int:
    return brute_force_a(1, n)
