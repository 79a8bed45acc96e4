"""Truncated p-adic numbers: ``p**valuation * unit`` with the unit known mod ``p**precision``.

Multiplication and division are exact on valuations and lose nothing beyond
the weaker operand's precision.  Addition can consume digits through carries
into the valuation; the result's trusted digits are tracked and running out
raises ``PrecisionExhausted`` instead of returning a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    DivisionByZero,
    InsufficientPrecision,
    NegativeValuation,
    PrecisionExhausted,
    PrimeMismatch,
)
from .modarith import Residue, check_modulus, split_p


@dataclass(frozen=True)
class PadicTrunc:
    """Zero is represented by ``valuation is None`` (and ``unit == 0``)."""

    p: int
    valuation: int | None
    unit: int
    precision: int

    def __post_init__(self):
        if self.precision < 1:
            raise PrecisionExhausted(f"precision must be >= 1, got {self.precision}")
        if self.valuation is not None and self.unit % self.p == 0:
            raise ValueError(f"unit {self.unit} is divisible by {self.p}")

    @classmethod
    def zero(cls, p: int, precision: int = 1) -> "PadicTrunc":
        return cls(p, None, 0, precision)

    @property
    def is_zero(self) -> bool:
        return self.valuation is None

    @property
    def unit_modulus(self) -> int:
        return self.p**self.precision

    def __repr__(self) -> str:
        if self.is_zero:
            return f"PadicTrunc(p={self.p}, Zero)"
        return f"PadicTrunc(p={self.p}, v={self.valuation}, u={self.unit}, N={self.precision})"

    def __add__(self, other: "PadicTrunc") -> "PadicTrunc":
        return padic_add(self, other)

    def __sub__(self, other: "PadicTrunc") -> "PadicTrunc":
        return padic_add(self, padic_neg(other))

    def __mul__(self, other: "PadicTrunc") -> "PadicTrunc":
        return padic_mul(self, other)

    def __truediv__(self, other: "PadicTrunc") -> "PadicTrunc":
        return padic_div(self, other)

    def __neg__(self) -> "PadicTrunc":
        return padic_neg(self)


def _same_prime(a: PadicTrunc, b: PadicTrunc) -> int:
    if a.p != b.p:
        raise PrimeMismatch(f"p-adic operands over {a.p} and {b.p}")
    return a.p


def padic_from_int(x: int, p: int, N: int) -> PadicTrunc:
    if N < 1:
        raise PrecisionExhausted(f"precision must be >= 1, got {N}")
    modulus = check_modulus(p**N)
    if x == 0:
        return PadicTrunc.zero(p, N)
    v, u = split_p(x, p)
    return PadicTrunc(p, v, u % modulus, N)


def padic_from_ratio(num: int, den: int, p: int, N: int) -> PadicTrunc:
    """``num / den`` as a truncated p-adic number (``den`` nonzero)."""
    return padic_div(padic_from_int(num, p, N), padic_from_int(den, p, N))


def padic_neg(a: PadicTrunc) -> PadicTrunc:
    if a.is_zero:
        return a
    return PadicTrunc(a.p, a.valuation, (-a.unit) % a.unit_modulus, a.precision)


def padic_mul(a: PadicTrunc, b: PadicTrunc) -> PadicTrunc:
    p = _same_prime(a, b)
    N = min(a.precision, b.precision)
    if a.is_zero or b.is_zero:
        return PadicTrunc.zero(p, N)
    return PadicTrunc(p, a.valuation + b.valuation, a.unit * b.unit % p**N, N)


def padic_div(a: PadicTrunc, b: PadicTrunc) -> PadicTrunc:
    p = _same_prime(a, b)
    if b.is_zero:
        raise DivisionByZero("division by the p-adic zero")
    N = min(a.precision, b.precision)
    if a.is_zero:
        return PadicTrunc.zero(p, N)
    modulus = p**N
    return PadicTrunc(p, a.valuation - b.valuation, a.unit * pow(b.unit, -1, modulus) % modulus, N)


def padic_add(a: PadicTrunc, b: PadicTrunc) -> PadicTrunc:
    _same_prime(a, b)
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    return padic_sum((a, b))


def padic_sum(terms: Iterable[PadicTrunc], p: int | None = None) -> PadicTrunc:
    """Sum many terms at once under the same precision rule as ``padic_add``.

    The absolute precision of the result is the minimum of ``v + N`` over the
    nonzero terms, so intermediate partial sums never exhaust precision.
    """
    live = []
    for t in terms:
        if p is None:
            p = t.p
        elif t.p != p:
            raise PrimeMismatch(f"p-adic operands over {p} and {t.p}")
        if not t.is_zero:
            live.append(t)
    if p is None:
        raise ValueError("padic_sum of no terms needs an explicit p")
    if not live:
        return PadicTrunc.zero(p)
    vmin = min(t.valuation for t in live)
    absprec = min(t.valuation + t.precision for t in live)
    total = sum(t.unit * p ** (t.valuation - vmin) for t in live)
    return _normalize(p, vmin, total, absprec)


def _normalize(p: int, vmin: int, total: int, absprec: int) -> PadicTrunc:
    digits = absprec - vmin
    total %= p**digits
    if total == 0:
        raise PrecisionExhausted(
            f"sum vanishes to all {digits} trusted digits; valuation unknown"
        )
    w, u = split_p(total, p)
    return PadicTrunc(p, vmin + w, u, digits - w)


def padic_to_residue(a: PadicTrunc, k: int) -> Residue:
    modulus = a.p**k
    if a.is_zero:
        return Residue(0, modulus)
    if a.valuation < 0:
        raise NegativeValuation(f"{a!r} is not a p-adic integer")
    if a.valuation + a.precision < k:
        raise InsufficientPrecision(
            f"{a!r} is known only mod p^{a.valuation + a.precision}, need p^{k}"
        )
    if a.valuation >= k:
        return Residue(0, modulus)
    return Residue(a.p**a.valuation * a.unit, modulus)


def sum_to_residue(p: int, terms: Iterable[tuple[int, int]], precision: int, k: int) -> Residue:
    """Reduce ``sum p**v * u`` mod ``p**k`` where every unit is known mod ``p**precision``.

    ``terms`` holds raw ``(valuation, unit)`` pairs.  Unlike ``padic_sum`` this
    never re-extracts a valuation, so a sum that vanishes to working precision
    is fine; it only requires the value to be a p-adic integer known to ``k``
    digits.
    """
    terms = list(terms)
    modulus = p**k
    if not terms:
        return Residue(0, modulus)
    vmin = min(v for v, _ in terms)
    absprec = vmin + precision
    if absprec < k:
        raise InsufficientPrecision(f"sum known only mod p^{absprec}, need p^{k}")
    width = p ** (absprec - vmin)
    total = sum(u * p ** (v - vmin) for v, u in terms) % width
    if vmin < 0:
        lift = p**-vmin
        if total % lift:
            raise NegativeValuation(f"sum has negative {p}-adic valuation")
        return Residue(total // lift, modulus)
    return Residue(total * p**vmin, modulus)
