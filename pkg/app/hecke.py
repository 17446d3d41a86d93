"""Hecke operator T_p reduced modulo p, where it is the extraction U_p."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

from sympy import isprime

from .series import TruncSeries


class HeckeModulusError(ValueError):
    pass


class InsufficientPrecisionError(RuntimeError):
    pass


@dataclass(frozen=True)
class HeckeResult:
    series: TruncSeries
    iterations: int
    input_precision: int
    p: int

    @property
    def output_precision(self) -> int:
        return self.series.precision

    def as_dict(self) -> Dict[str, int]:
        return {
            "p": self.p,
            "iterations": self.iterations,
            "input_precision": self.input_precision,
            "output_precision": self.output_precision,
        }


def required_input_precision(output_terms: int, p: int, e: int = 1) -> int:
    return int(output_terms) * int(p) ** int(e)


def _check_prime_modulus(a: TruncSeries, p: int) -> None:
    if not isprime(p):
        raise HeckeModulusError(f"T_p needs a prime p, got {p}")
    if a.modulus != p:
        raise HeckeModulusError(f"T_p reduces to U_p only modulo p; series modulus is {a.modulus}, p={p}")


def u_p(a: TruncSeries, p: int) -> TruncSeries:
    """Coefficient n of the result is coefficient p*n of ``a``; precision floor(P/p)."""
    _check_prime_modulus(a, p)
    terms = a.precision // p
    if terms < 1:
        raise InsufficientPrecisionError(
            f"U_{p} of a series with precision {a.precision} is empty; need input precision >= {p}"
        )
    return TruncSeries(a.modulus, a.coeffs[::p][:terms])


def u_p_iter(a: TruncSeries, p: int, e: int) -> HeckeResult:
    if e < 1:
        raise ValueError(f"iteration count must be >= 1, got {e}")
    _check_prime_modulus(a, p)
    needed = required_input_precision(1, p, e)
    if a.precision < needed:
        raise InsufficientPrecisionError(
            f"T_{p}^{e} needs input precision >= {needed}, got {a.precision}"
        )
    out = a
    for _ in range(e):
        out = u_p(out, p)
    return HeckeResult(series=out, iterations=e, input_precision=a.precision, p=p)
