"""Eta quotients (optionally times a power of E_4) and their modularity conditions.

An eta quotient prod eta(delta z)^r_delta of level N is a holomorphic modular
form on Gamma_0(N) when the two 24-divisibility conditions hold and the order
sums at every cusp 1/d (d | N) are nonnegative. E_4 only adds weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Dict, List, Mapping, Optional, Tuple

from sympy import divisors, factorint

CHARACTER_TRIVIAL = "trivial"
CHARACTER_MINUS_ONE = "minus-one-kronecker"
CHARACTER_GENERAL = "general-kronecker"


class EtaQuotientError(ValueError):
    pass


@dataclass(frozen=True, init=False)
class EtaQuotient:
    level: int
    exponents: Tuple[Tuple[int, int], ...]
    e4_power: int = 0

    def __init__(self, level: int, exponents: Mapping[int, int], e4_power: int = 0) -> None:
        if level < 1:
            raise EtaQuotientError(f"level must be >= 1, got {level}")
        if e4_power < 0:
            raise EtaQuotientError(f"E4 power must be >= 0, got {e4_power}")
        cleaned = tuple(sorted((int(d), int(r)) for d, r in exponents.items() if r != 0))
        for delta, _ in cleaned:
            if delta < 1 or level % delta:
                raise EtaQuotientError(f"eta scale {delta} does not divide level {level}")
        total = sum(r for _, r in cleaned)
        if total % 2:
            raise EtaQuotientError(f"weight sum(r)/2 = {total}/2 is not an integer")
        object.__setattr__(self, "level", int(level))
        object.__setattr__(self, "exponents", cleaned)
        object.__setattr__(self, "e4_power", int(e4_power))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.exponents)

    @property
    def weight(self) -> int:
        return sum(r for _, r in self.exponents) // 2 + 4 * self.e4_power

    @property
    def prefactor_shift(self) -> Fraction:
        """Exponent of the q^(sum delta r_delta / 24) prefactor."""
        return Fraction(sum(d * r for d, r in self.exponents), 24)

    @property
    def character_numerator(self) -> int:
        """Squarefree kernel of (-1)^k prod delta^r_delta."""
        parity: Dict[int, int] = {}
        for delta, r in self.exponents:
            for p, e in factorint(delta).items():
                parity[p] = (parity.get(p, 0) + e * r) % 2
        kernel = prod(p for p, odd in parity.items() if odd)
        return -kernel if self.weight % 2 else kernel


@dataclass(frozen=True)
class FormSpec:
    weight: int
    level: int
    character_kind: str
    discriminant: int = 1

    def character(self, d: int) -> int:
        return kronecker(self.discriminant, d)

    def as_dict(self) -> Dict[str, object]:
        return {
            "weight": self.weight,
            "level": self.level,
            "character": self.character_kind,
            "discriminant": self.discriminant,
        }


@dataclass(frozen=True)
class ModularityVerdict:
    ok: bool
    form: Optional[FormSpec]
    violations: List[str] = field(default_factory=list)
    cusp_sums: Dict[int, Fraction] = field(default_factory=dict)
    cusps_nonnegative: bool = False
    cusps_positive: bool = False

    @property
    def cusp_verdict(self) -> str:
        if self.cusps_positive:
            return "strict"
        if self.cusps_nonnegative:
            return "weak_only"
        return "violated"

    def as_dict(self) -> Dict[str, object]:
        return {
            "ok": self.ok,
            "form": self.form.as_dict() if self.form else None,
            "violations": list(self.violations),
            "cusp_sums": {str(d): str(v) for d, v in self.cusp_sums.items()},
            "cusps": self.cusp_verdict,
        }


def character_kind(eq: EtaQuotient) -> Tuple[str, int]:
    numerator = eq.character_numerator
    if numerator == 1:
        return CHARACTER_TRIVIAL, 1
    if numerator == -1:
        return CHARACTER_MINUS_ONE, -1
    return CHARACTER_GENERAL, numerator


def cusp_order_sums(eq: EtaQuotient) -> Dict[int, Fraction]:
    """sum_delta gcd(d, delta)^2 r_delta / delta for each divisor d of the level."""
    return {
        int(d): sum((Fraction(gcd(d, delta) ** 2 * r, delta) for delta, r in eq.exponents), Fraction(0))
        for d in divisors(eq.level)
    }


def check_modularity(eq: EtaQuotient) -> ModularityVerdict:
    N = eq.level
    violations: List[str] = []
    sum_delta = sum(d * r for d, r in eq.exponents)
    sum_level = sum((N // d) * r for d, r in eq.exponents)
    if sum_delta % 24:
        violations.append(f"sum delta*r_delta = {sum_delta} is not 0 mod 24")
    if sum_level % 24:
        violations.append(f"sum (N/delta)*r_delta = {sum_level} is not 0 mod 24")
    sums = cusp_order_sums(eq)
    negative = [d for d, v in sums.items() if v < 0]
    if negative:
        detail = ", ".join(f"d={d}: {sums[d]}" for d in negative)
        violations.append(f"negative cusp order sums at {detail}")
    nonnegative = not negative
    positive = all(v > 0 for v in sums.values())
    form = None
    if not violations:
        kind, disc = character_kind(eq)
        form = FormSpec(eq.weight, N, kind, disc)
    return ModularityVerdict(
        ok=not violations,
        form=form,
        violations=violations,
        cusp_sums=sums,
        cusps_nonnegative=nonnegative,
        cusps_positive=positive,
    )


def _jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0, by quadratic reciprocity."""
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), defined for all integers a and n."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0
    result = 1
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos % 2 and a % 8 in (3, 5):
        result = -result
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    return result * _jacobi(a, n)
