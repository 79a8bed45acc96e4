"""Exact verification of the polynomial and rational identities.

Each ``check_*`` builds both sides with arbitrary-precision integers or
``Fraction`` coefficients and compares them exactly.  Nothing here is modular.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .modarith import jacobi
from .poly import Poly
from .sequences import named_sequence, poly_u, poly_v


def binom(n: int, k: int) -> int:
    """``C(n, k)``, zero outside ``0 <= k <= n`` (including negative ``k``)."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    params: dict
    lhs: object
    rhs: object

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.equal


@lru_cache(maxsize=None)
def u_shifted(j: int) -> Poly:
    """``u_j(x - 2)`` for ``j >= -1``."""
    return poly_u(j).shift(-2)


@lru_cache(maxsize=None)
def v_shifted(j: int) -> Poly:
    """``v_j(x - 2)`` for ``j >= -1``."""
    return poly_v(j).shift(-2)


def thm21_u_sides(n: int, d: int) -> tuple[Poly, Poly]:
    lhs = Poly()
    for k in range(n):
        lhs += Poly.monomial(n - 1 - k, binom(2 * k, k + d))
    if d > 0:
        lhs += u_shifted(d).shift_degree(n)
    rhs = Poly()
    for k in range(n + d):
        rhs += u_shifted(n + d - k) * binom(2 * n, k)
    return lhs, rhs


def check_thm21_u(n: int, d: int) -> IdentityCheck:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    lhs, rhs = thm21_u_sides(n, d)
    return IdentityCheck("2.1", {"n": n, "d": d}, lhs, rhs)


def thm21_v_sides(n: int, d: int) -> tuple[Poly, Poly]:
    lhs = Poly()
    for k in range(1, n):
        lhs += Poly.monomial(n - k, Fraction(d * binom(2 * k, k + d), k))
    if d >= 0:
        lhs -= v_shifted(d).shift_degree(n)
    if d == 0:
        lhs += Poly.monomial(n)
    rhs = Poly()
    for k in range(n + d):
        rhs -= v_shifted(n + d - k) * binom(2 * n, k)
    rhs -= 2 * binom(2 * n - 1, n + d - 1)
    return lhs, rhs


def check_thm21_v(n: int, d: int) -> IdentityCheck:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    lhs, rhs = thm21_v_sides(n, d)
    return IdentityCheck("2.2", {"n": n, "d": d}, lhs, rhs)


def _j3(x: int) -> int:
    return jacobi(x, 3)


def check_cor21(which: str, n: int, d: int) -> IdentityCheck:
    """The integer specialisations "2.3", "2.4", "2.5" as exact rationals."""
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    F = lambda k: named_sequence("F", k)  # noqa: E731
    L = lambda k: named_sequence("L", k)  # noqa: E731
    if which == "2.3":
        lhs = sum(binom(2 * k, k + d) for k in range(n)) + _j3(d)
        rhs = sum(binom(2 * n, k) * _j3(n + d - k) for k in range(n + d))
    elif which == "2.4":
        lhs = sum((-1) ** (k + d) * binom(2 * k, k + d) for k in range(n)) + F(2 * d)
        rhs = sum((-1) ** k * binom(2 * n, k) * F(2 * (n + d - k)) for k in range(n + d))
    elif which == "2.5":
        lhs = d * sum(Fraction((-1) ** (k + d) * binom(2 * k, k + d), k) for k in range(1, n))
        lhs += sum(binom(2 * n, k) * (-1) ** k * L(2 * (n + d - k)) for k in range(n + d))
        rhs = L(2 * d) - (-1) ** (n + d) * 2 * binom(2 * n - 1, n + d - 1) - (d == 0)
    else:
        raise ValueError(f"unknown specialised identity {which!r}")
    return IdentityCheck(which, {"n": n, "d": d}, Fraction(lhs), Fraction(rhs))


def lemma41_sides(n: int) -> tuple[Poly, Poly]:
    """Both sides of the half-central-coefficient identity multiplied by ``x^(n-1)``."""
    lhs = Poly()
    for k in range(1, n):
        lhs += Poly.monomial(n - 1 - k, Fraction(binom(2 * k, k), 2 * k))
    rhs = Poly()
    for d in range(1, n):
        sign = 1 if d % 2 == 1 else -1
        for k in range(1, n):
            c = binom(2 * k, k + d)
            if c:
                rhs += Poly.monomial(n - 1 - k, Fraction(sign * c, k))
    return lhs, rhs


def lemma41_at(n: int, x: Fraction) -> tuple[Fraction, Fraction]:
    """Both sides of the half-central-coefficient identity at a nonzero rational ``x``."""
    x = Fraction(x)
    lhs = Fraction(1, 2) * sum(Fraction(binom(2 * k, k), k) / x**k for k in range(1, n))
    rhs = sum(
        (-1) ** (d - 1) * sum(Fraction(binom(2 * k, k + d), k) / x**k for k in range(1, n))
        for d in range(1, n)
    )
    return lhs, rhs


def check_lemma41(n: int, x_samples: Sequence[Fraction] = ()) -> IdentityCheck:
    """Exact polynomial comparison; ``x_samples`` add a secondary pointwise check."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    lhs, rhs = lemma41_sides(n)
    if lhs == rhs:
        for x in x_samples:
            a, b = lemma41_at(n, x)
            if a != b:
                return IdentityCheck("4.1", {"n": n, "x": str(x)}, a, b)
    return IdentityCheck("4.1", {"n": n}, lhs, rhs)


def staver_forms(n: int) -> tuple[Fraction, Fraction, Fraction]:
    first = sum(Fraction(binom(2 * k, k), k) for k in range(1, n + 1))
    second = Fraction(2 * n + 1, 3 * n * n) * binom(2 * n, n) * sum(
        Fraction(1, binom(n - 1, k - 1) ** 2) for k in range(1, n + 1)
    )
    third = Fraction(n + 1, 3) * binom(2 * n + 1, n) * sum(
        Fraction(1, k * k * binom(n, k) ** 2) for k in range(1, n + 1)
    )
    return first, second, third


def check_staver(n: int) -> IdentityCheck:
    """All three expressions of Staver's identity must coincide."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    a, b, c = staver_forms(n)
    # the reported right side is the first form that disagrees with the sum
    rhs = b if a != b else c
    return IdentityCheck("5.1", {"n": n}, a, rhs)
