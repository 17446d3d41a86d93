"""Truncated formal power series in q over Z/mZ for small m.

Coefficients are numpy vectors of residues. Index n is the coefficient of q^n;
fractional q-powers never reach this layer, callers fold eta prefactors into an
integer shift first. Every operation returns a new read-only series; mixed
precisions truncate to the minimum.
"""

from __future__ import annotations

import logging
from bisect import bisect_right
from dataclasses import dataclass
from math import isqrt
from typing import Iterable, List, Mapping, Sequence, Tuple

import numpy as np
from sympy import isprime

from . import config, log_fields

logger = logging.getLogger(__name__)

MAX_MODULUS = 255
_LEAF = 32


class ModulusMismatchError(ValueError):
    pass


class ModulusError(ValueError):
    pass


class PrecisionLimitError(RuntimeError):
    pass


def _check_modulus(m: int) -> int:
    m = int(m)
    if m < 2 or m > MAX_MODULUS:
        raise ModulusError(f"modulus must lie in [2, {MAX_MODULUS}], got {m}")
    return m


def _check_precision(precision: int) -> int:
    precision = int(precision)
    if precision < 1:
        raise PrecisionLimitError(f"precision must be >= 1, got {precision}")
    if precision > config.MAX_PRECISION:
        raise PrecisionLimitError(
            f"precision {precision} exceeds the configured cap {config.MAX_PRECISION} (CONGRUENCE_MAX_PRECISION)"
        )
    return precision


@dataclass(frozen=True, eq=False)
class TruncSeries:
    """Coefficients c_0..c_{P-1} of a power series, each reduced mod ``modulus``."""

    modulus: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        m = _check_modulus(self.modulus)
        arr = np.asarray(self.coeffs)
        if arr.ndim != 1 or arr.size < 1:
            raise PrecisionLimitError("a series needs a one-dimensional coefficient vector with at least one entry")
        _check_precision(arr.size)
        if arr.dtype != np.uint8:
            work = arr.astype(np.int64, copy=False)
            if work.size and (work.min() < 0 or work.max() >= m):
                raise ValueError("coefficients must be reduced residues; use from_coeffs() to reduce")
            arr = work.astype(np.uint8)
        else:
            arr = arr.copy()
            if arr.max() >= m:
                raise ValueError("coefficients must be reduced residues; use from_coeffs() to reduce")
        arr.setflags(write=False)
        object.__setattr__(self, "modulus", m)
        object.__setattr__(self, "coeffs", arr)

    @property
    def precision(self) -> int:
        return int(self.coeffs.size)

    def coeff(self, n: int) -> int:
        if n < 0 or n >= self.precision:
            raise IndexError(f"coefficient {n} is outside precision {self.precision}")
        return int(self.coeffs[n])

    def work(self, precision: int | None = None) -> np.ndarray:
        """Writable int64 copy of the first ``precision`` coefficients."""
        P = self.precision if precision is None else min(precision, self.precision)
        return self.coeffs[:P].astype(np.int64)

    def nnz(self) -> int:
        return int(np.count_nonzero(self.coeffs))

    def tolist(self) -> List[int]:
        return [int(c) for c in self.coeffs]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.precision == other.precision
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.coeffs.tobytes()))

    def __repr__(self) -> str:
        head = ", ".join(str(int(c)) for c in self.coeffs[:12])
        tail = ", ..." if self.precision > 12 else ""
        return f"TruncSeries(mod {self.modulus}, P={self.precision}, [{head}{tail}])"


def _wrap(values: np.ndarray, m: int) -> TruncSeries:
    return TruncSeries(m, np.mod(values, m))


def from_coeffs(values: Iterable[int], modulus: int, precision: int | None = None) -> TruncSeries:
    """Build a series from arbitrary integers, reducing them mod ``modulus``."""
    m = _check_modulus(modulus)
    raw = [int(v) % m for v in values]
    if precision is not None:
        precision = _check_precision(precision)
        raw = (raw + [0] * precision)[:precision]
    return TruncSeries(m, np.asarray(raw, dtype=np.int64))


def zero(modulus: int, precision: int) -> TruncSeries:
    return TruncSeries(_check_modulus(modulus), np.zeros(_check_precision(precision), dtype=np.int64))


def one(modulus: int, precision: int) -> TruncSeries:
    values = np.zeros(_check_precision(precision), dtype=np.int64)
    values[0] = 1
    return TruncSeries(_check_modulus(modulus), values)


def _require_same_modulus(a: TruncSeries, b: TruncSeries) -> int:
    if a.modulus != b.modulus:
        raise ModulusMismatchError(f"modulus mismatch: {a.modulus} vs {b.modulus}")
    return a.modulus


def truncate(a: TruncSeries, precision: int) -> TruncSeries:
    precision = _check_precision(precision)
    if precision >= a.precision:
        return a
    return TruncSeries(a.modulus, a.coeffs[:precision])


def add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    m = _require_same_modulus(a, b)
    P = min(a.precision, b.precision)
    return _wrap(a.work(P) + b.work(P), m)


def sub(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    m = _require_same_modulus(a, b)
    P = min(a.precision, b.precision)
    return _wrap(a.work(P) - b.work(P), m)


def neg(a: TruncSeries) -> TruncSeries:
    return _wrap(-a.work(), a.modulus)


def scalar(a: TruncSeries, c: int) -> TruncSeries:
    return _wrap(a.work() * (int(c) % a.modulus), a.modulus)


def shift(a: TruncSeries, s: int) -> TruncSeries:
    """Multiply by q^s (s >= 0); the precision is unchanged."""
    if s < 0:
        raise ValueError("negative shifts would need fractional bookkeeping below index 0")
    out = np.zeros(a.precision, dtype=np.int64)
    if s < a.precision:
        out[s:] = a.coeffs[: a.precision - s]
    return TruncSeries(a.modulus, out)


def support(a: TruncSeries) -> np.ndarray:
    return np.flatnonzero(a.coeffs)


# --- multiplication -------------------------------------------------------


def _sparse_terms(values: np.ndarray) -> Tuple[List[int], List[int]]:
    idx = np.flatnonzero(values)
    return [int(i) for i in idx], [int(values[i]) for i in idx]


def _mul_dense_sparse(dense: np.ndarray, gaps: Sequence[int], weights: Sequence[int], m: int) -> np.ndarray:
    P = dense.size
    out = np.zeros(P, dtype=np.int64)
    for g, c in zip(gaps, weights):
        if g >= P:
            break
        out[g:] += c * dense[: P - g]
    return np.mod(out, m)


def _mul_arrays(x: np.ndarray, y: np.ndarray, m: int) -> np.ndarray:
    P = min(x.size, y.size)
    x, y = x[:P], y[:P]
    nx, ny = int(np.count_nonzero(x)), int(np.count_nonzero(y))
    if min(nx, ny) * 16 <= P:
        dense, sparse = (x, y) if ny <= nx else (y, x)
        gaps, weights = _sparse_terms(sparse)
        return _mul_dense_sparse(dense, gaps, weights, m)
    return np.mod(np.convolve(x, y)[:P], m)


def mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Product truncated to the smaller precision.

    When either factor is sparse (eta products are) the product is a sum of
    shifted copies of the dense factor; otherwise a direct convolution.
    """
    m = _require_same_modulus(a, b)
    return TruncSeries(m, _mul_arrays(a.work(), b.work(), m))


# --- division by a unit series ----------------------------------------------


def _divide_arrays(a: np.ndarray, s: np.ndarray, m: int) -> np.ndarray:
    """Solve b * s = a mod m for b, where s[0] is a unit mod m.

    Divide and conquer over the index range: once the left half of a block is
    final its contributions are pushed into the right half with one vector
    update per nonzero term of s shorter than the block.
    """
    P = min(a.size, s.size)
    try:
        inv0 = pow(int(s[0]) % m, -1, m)
    except ValueError as exc:
        raise ModulusError(f"constant term {int(s[0])} is not invertible mod {m}") from exc
    gaps, weights = _sparse_terms(s[:P])
    if gaps and gaps[0] == 0:
        gaps, weights = gaps[1:], weights[1:]
    acc = a[:P].astype(np.int64)
    out = np.zeros(P, dtype=np.int64)

    def leaf(lo: int, hi: int) -> None:
        small = bisect_right(gaps, hi - lo - 1)
        local: List[int] = []
        for n in range(lo, hi):
            v = int(acc[n])
            off = n - lo
            for i in range(small):
                g = gaps[i]
                if g > off:
                    break
                v -= weights[i] * local[off - g]
            local.append((v * inv0) % m)
        out[lo:hi] = local

    def solve(lo: int, hi: int) -> None:
        if hi - lo <= _LEAF:
            leaf(lo, hi)
            return
        mid = (lo + hi) // 2
        solve(lo, mid)
        reach = bisect_right(gaps, hi - lo - 1)
        for i in range(reach):
            g = gaps[i]
            start = max(mid, lo + g)
            end = min(hi, mid + g)
            if start < end:
                acc[start:end] -= weights[i] * out[start - g : end - g]
        solve(mid, hi)

    solve(0, P)
    return out


def divide_sparse(a: TruncSeries, s: TruncSeries) -> TruncSeries:
    """Return a / s truncated to min precision; s must have a unit constant term."""
    m = _require_same_modulus(a, s)
    return TruncSeries(m, _divide_arrays(a.work(), s.work(), m))


# --- eta products -----------------------------------------------------------


def _pentagonal_terms(limit: int) -> Tuple[np.ndarray, np.ndarray]:
    """Exponents k(3k-1)/2 < limit (k over all integers) with signs (-1)^k, ascending."""
    K = isqrt(2 * max(limit, 1) // 3 + 1) + 2
    ks = np.arange(-K, K + 1, dtype=np.int64)
    exps = ks * (3 * ks - 1) // 2
    signs = np.where(ks % 2 == 0, 1, -1)
    keep = exps < limit
    order = np.argsort(exps[keep], kind="stable")
    return exps[keep][order], signs[keep][order]


def _eta_array(scale: int, modulus: int, precision: int) -> np.ndarray:
    exps, signs = _pentagonal_terms((precision + scale - 1) // scale)
    out = np.zeros(precision, dtype=np.int64)
    out[exps * scale] = signs
    return np.mod(out, modulus)


def _power(base: TruncSeries, exponent: int) -> TruncSeries:
    result = one(base.modulus, base.precision)
    square = base
    while exponent:
        if exponent & 1:
            result = mul(result, square)
        exponent >>= 1
        if exponent:
            square = mul(square, square)
    return result


def eta_product(scale: int, exponent: int, modulus: int, precision: int) -> TruncSeries:
    """f_scale^exponent mod ``modulus`` to ``precision`` terms, without the q^(scale*exponent/24) prefactor.

    exponent +1 uses the pentagonal number theorem, -1 the pentagonal
    recurrence; larger powers go through base-3 Frobenius digits when the
    modulus is 3 and through binary powering otherwise.
    """
    if scale < 1:
        raise ValueError(f"eta scale must be >= 1, got {scale}")
    m = _check_modulus(modulus)
    P = _check_precision(precision)
    if exponent == 0:
        return one(m, P)
    if exponent == 1:
        return TruncSeries(m, _eta_array(scale, m, P))
    if exponent == -1:
        unit = np.zeros(P, dtype=np.int64)
        unit[0] = 1
        return TruncSeries(m, _divide_arrays(unit, _eta_array(scale, m, P), m))
    if m == 3:
        return eta_quotient_series({scale: exponent}, m, P)
    base = eta_product(scale, 1 if exponent > 0 else -1, m, P)
    return _power(base, abs(exponent))


def _frobenius_digits(exponent: int, p: int) -> List[Tuple[int, int]]:
    """(power of p, digit) pairs of |exponent| in base p, nonzero digits only."""
    digits: List[Tuple[int, int]] = []
    mag, place = abs(exponent), 1
    while mag:
        mag, d = divmod(mag, p)
        if d:
            digits.append((place, d))
        place *= p
    return digits


def _eta_plan(factors: Mapping[int, int], m: int) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """Split prod f_delta^e_delta into (scale, times) multiplications and divisions.

    For a prime modulus p each exponent is written in base p and every digit
    position collapses through f_delta^p = f_(p*delta) (mod p), leaving at most
    p-1 sparse steps per position.
    """
    frobenius_ok = bool(isprime(m))
    multiply: List[Tuple[int, int]] = []
    divide: List[Tuple[int, int]] = []
    for delta, e in sorted(factors.items()):
        if delta < 1:
            raise ValueError(f"eta scale must be >= 1, got {delta}")
        if e == 0:
            continue
        plan = [(delta * place, d) for place, d in _frobenius_digits(e, m)] if frobenius_ok else [(delta, abs(e))]
        (multiply if e > 0 else divide).extend(plan)
    return multiply, divide


def mul_eta_quotient(a: TruncSeries, factors: Mapping[int, int]) -> TruncSeries:
    """a * prod f_delta^e_delta, truncated to a's precision."""
    m, P = a.modulus, a.precision
    multiply, divide = _eta_plan(factors, m)
    values = a.work()
    for scale, times in multiply:
        if scale >= P:
            continue
        gaps, weights = _sparse_terms(_eta_array(scale, m, P))
        for _ in range(times):
            values = _mul_dense_sparse(values, gaps, weights, m)
    for scale, times in divide:
        if scale >= P:
            continue
        eta = _eta_array(scale, m, P)
        for _ in range(times):
            values = _divide_arrays(values, eta, m)
    logger.debug(
        "applied eta quotient",
        extra=log_fields(factors=dict(factors), modulus=m, precision=P, steps=len(multiply) + len(divide)),
    )
    return TruncSeries(m, values)


def eta_quotient_series(factors: Mapping[int, int], modulus: int, precision: int) -> TruncSeries:
    """Expand prod f_delta^e_delta mod a small modulus to ``precision`` terms."""
    return mul_eta_quotient(one(modulus, precision), factors)


# --- substitutions q -> q^d ---------------------------------------------------


def scale_exponents(a: TruncSeries, d: int) -> TruncSeries:
    """F(q) -> F(q^d), precision preserved (indices not hit are zero)."""
    if d < 1:
        raise ValueError(f"scale must be >= 1, got {d}")
    if d == 1:
        return a
    P = a.precision
    out = np.zeros(P, dtype=np.int64)
    slots = (P - 1) // d + 1
    out[::d] = a.coeffs[:slots]
    return TruncSeries(a.modulus, out)


def frobenius(a: TruncSeries, p: int) -> TruncSeries:
    """a(q)^p mod p computed as a(q^p); requires the modulus to be the prime p."""
    if a.modulus != p or not isprime(p):
        raise ModulusError(f"the Frobenius identity needs a prime modulus equal to p; got modulus {a.modulus}, p={p}")
    return scale_exponents(a, p)


def frobenius_pow3(a: TruncSeries) -> TruncSeries:
    if a.modulus != 3:
        raise ModulusError(f"frobenius_pow3 needs modulus 3, got {a.modulus}")
    return scale_exponents(a, 3)


# --- named expansions ---------------------------------------------------------


def e4_series(modulus: int, precision: int) -> TruncSeries:
    """E_4 = 1 + 240 * sum sigma_3(n) q^n, reduced mod ``modulus``."""
    m = _check_modulus(modulus)
    P = _check_precision(precision)
    sigma = np.zeros(P, dtype=np.int64)
    for d in range(1, P):
        sigma[d::d] += pow(d, 3, m)
    values = np.mod(240 * np.mod(sigma, m), m)
    values[0] = 1
    return TruncSeries(m, values)


def triangular_series(modulus: int, precision: int) -> TruncSeries:
    """sum_{k>=0} (-1)^k (2k+1) q^(k(k+1)/2), Jacobi's expansion of f_1^3."""
    m = _check_modulus(modulus)
    P = _check_precision(precision)
    values = np.zeros(P, dtype=np.int64)
    k = 0
    while k * (k + 1) // 2 < P:
        values[k * (k + 1) // 2] += (-1) ** k * (2 * k + 1)
        k += 1
    return _wrap(values, m)
