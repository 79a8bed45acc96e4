"""Central binomial coefficients modulo prime powers, and the sums built from them.

Two independent routes exist for the sums over ``C(2k, k+d)``:

* ``BinomialStream`` walks ``k`` upward with exact multiplicative updates,
  keeping each coefficient as a p-adic valuation plus a unit.  Divisions by
  ``k`` then only shift valuations.
* ``BinomialTable`` builds Pascal rows mod ``p**a`` with numpy and answers a
  whole sweep over ``(d, m)`` with one dot product per query.

The catalog uses the table for the large (p, a, d, m) sweeps; the tests pin the
two routes against each other and against exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import (
    BadParameter,
    BaseDivisible,
    DenominatorDivisible,
    NegativeValuation,
    NonIntegralSum,
    PrecisionExhausted,
)
from .modarith import PrimePower, Residue, check_modulus, invmod, split_p
from .padic import PadicTrunc, padic_from_ratio, padic_sum, padic_to_residue, sum_to_residue


def _strip(x: int, p: int) -> tuple[int, int]:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v, x


def central_vu(p: int, N: int, d: int, kmax: int) -> Iterator[tuple[int, int | None, int]]:
    """Yield ``(k, v, u)`` with ``C(2k, k+d) = p**v * u`` (u mod ``p**N``) for ``0 <= k <= kmax``.

    ``v`` is None where the coefficient vanishes (``|d| > k``).
    """
    M = p**N
    d = abs(d)
    for k in range(min(d, kmax + 1)):
        yield k, None, 0
    if d > kmax:
        return
    v, u = 0, 1
    yield d, v, u
    for k in range(d, kmax):
        a1, n1 = _strip(2 * k + 1, p)
        a2, n2 = _strip(2 * k + 2, p)
        b1, m1 = _strip(k + 1 + d, p)
        b2, m2 = _strip(k + 1 - d, p)
        v += a1 + a2 - b1 - b2
        u = u * n1 * n2 * pow(m1 * m2, -1, M) % M
        yield k + 1, v, u


class BinomialStream:
    """Stateful producer of ``C(2k, k+d)`` as ``PadicTrunc`` for ``k = 0, 1, 2, ...``."""

    def __init__(self, p: int, precision: int, d: int = 0):
        check_modulus(p**precision)
        self.p = p
        self.precision = precision
        self.d = d
        self.k = 0
        self._M = p**precision
        self._ad = abs(d)
        self._v: int | None = 0 if d == 0 else None
        self._u = 1 if d == 0 else 0

    @property
    def value(self) -> PadicTrunc:
        if self._v is None:
            return PadicTrunc.zero(self.p, self.precision)
        return PadicTrunc(self.p, self._v, self._u, self.precision)

    def advance(self) -> PadicTrunc:
        k, p, d = self.k, self.p, self._ad
        if k + 1 < d:
            pass
        elif k + 1 == d:
            self._v, self._u = 0, 1
        else:
            a1, n1 = _strip(2 * k + 1, p)
            a2, n2 = _strip(2 * k + 2, p)
            b1, m1 = _strip(k + 1 + d, p)
            b2, m2 = _strip(k + 1 - d, p)
            self._v += a1 + a2 - b1 - b2
            self._u = self._u * n1 * n2 * pow(m1 * m2, -1, self._M) % self._M
        self.k = k + 1
        return self.value

    def __iter__(self) -> Iterator[PadicTrunc]:
        yield self.value
        while True:
            yield self.advance()


def central_binomial_mod(k: int, d: int, pp: PrimePower) -> Residue:
    """``C(2k, k+d) mod p**a`` including its powers of ``p``."""
    if abs(d) > k:
        return Residue(0, pp.modulus)
    for kk, v, u in central_vu(pp.p, pp.exponent, d, k):
        if kk == k:
            return Residue(pp.p**v * u if v < pp.exponent else 0, pp.modulus)
    raise AssertionError("unreachable")


def binomial_mod(n: int, r: int, pp: PrimePower) -> Residue:
    """``C(n, r) mod p**a`` by a valuation-tracked product."""
    if r < 0 or r > n:
        return Residue(0, pp.modulus)
    p, M = pp.p, pp.modulus
    r = min(r, n - r)
    v, u = 0, 1
    for i in range(1, r + 1):
        a, num = _strip(n - r + i, p)
        b, den = _strip(i, p)
        v += a - b
        u = u * num * pow(den, -1, M) % M
    return Residue(p**v * u if v < pp.exponent else 0, M)


def _ratio_unit(ratio: Fraction | int, p: int, M: int) -> int:
    ratio = Fraction(ratio)
    if ratio.numerator % p == 0 or ratio.denominator % p == 0:
        raise BadParameter(f"ratio {ratio} is not a {p}-adic unit")
    return ratio.numerator * pow(ratio.denominator, -1, M) % M


def weighted_central_terms(
    p: int,
    N: int,
    d: int,
    kmin: int,
    kmax: int,
    ratio: Fraction | int = 1,
    over_k: bool = False,
) -> Iterator[tuple[int, int]]:
    """Raw ``(valuation, unit)`` terms of ``C(2k, k+d) * ratio**k [/ k]`` for ``kmin <= k <= kmax``."""
    M = p**N
    r = _ratio_unit(ratio, p, M)
    rk = pow(r, kmin, M)
    for k, v, u in central_vu(p, N, d, kmax):
        if k < kmin:
            continue
        if v is not None:
            if over_k:
                w, ku = _strip(k, p)
                yield v - w, u * rk * pow(ku, -1, M) % M
            else:
                yield v, u * rk % M
        rk = rk * r % M


def sum_binomial_over_mk(pp: PrimePower, d: int, m: int) -> Residue:
    """``sum_{k=0}^{p^a-1} C(2k, k+d) / m^k mod p`` by one streaming pass."""
    p = pp.p
    if m % p == 0:
        raise BadParameter(f"{p} divides m = {m}")
    terms = weighted_central_terms(p, 1, d, 0, pp.modulus - 1, Fraction(1, m))
    return sum_to_residue(p, terms, 1, 1)


def sum_binomial_over_kmk(pp: PrimePower, d: int, m: int) -> Residue:
    """``d * sum_{k=1}^{p^a-1} C(2k, k+d) / (k m^{k-1}) mod p``, accumulated p-adically."""
    p, a = pp.p, pp.exponent
    if m % p == 0:
        raise BadParameter(f"{p} divides m = {m}")
    if d < 1:
        raise BadParameter(f"d must be >= 1, got {d}")
    N = a + 2
    M = p**N
    terms = weighted_central_terms(p, N, d, 1, pp.modulus - 1, Fraction(1, m), over_k=True)
    dv, du = split_p(d, p)
    # d * m * sum C / (k m^k)
    scale = du * m % M
    scaled = [(v + dv, u * scale % M) for v, u in terms]
    try:
        return sum_to_residue(p, scaled, N, 1)
    except NegativeValuation as exc:
        raise NonIntegralSum(str(exc)) from exc


def negative_valuation_terms(pp: PrimePower, d: int) -> list[int]:
    """The ``k`` in ``[1, p^a)`` with ``v_p(C(2k, k+d)) < v_p(k)``, i.e. non-integral terms."""
    p = pp.p
    out = []
    for k, v, _ in central_vu(p, 1, d, pp.modulus - 1):
        if k >= 1 and v is not None and v < _strip(k, p)[0]:
            out.append(k)
    return out


def central_over_k(p: int, kmax: int, ratio: Fraction | int = 1, precision: int = 3) -> PadicTrunc:
    """``sum_{k=1}^{kmax} C(2k, k) ratio^k / k`` as a truncated p-adic number."""
    terms = weighted_central_terms(p, precision, 0, 1, kmax, ratio, over_k=True)
    return padic_sum((PadicTrunc(p, v, u, precision) for v, u in terms), p=p)


def central_over_k_residue(p: int, kmax: int, ratio: Fraction | int, k: int, precision: int) -> Residue:
    """Same sum reduced mod ``p**k``; tolerates a result that vanishes to working precision."""
    terms = weighted_central_terms(p, precision, 0, 1, kmax, ratio, over_k=True)
    return sum_to_residue(p, terms, precision, k)


def theorem13_lhs(pp: PrimePower) -> Residue:
    """``p^(a-1) * sum_{k=1}^{p^a-1} C(2k, k) / k mod p^3`` at ``a + 4`` working digits."""
    p, a = pp.p, pp.exponent
    N = a + 4
    check_modulus(p**N)
    terms = weighted_central_terms(p, N, 0, 1, pp.modulus - 1, 1, over_k=True)
    return sum_to_residue(p, ((v + a - 1, u) for v, u in terms), N, 3)


@lru_cache(maxsize=256)
def _bernoulli_table_mod_p(n: int, p: int) -> tuple[int, ...]:
    """``B_0 .. B_n mod p`` for ``n <= p - 2`` by the defining recurrence."""
    B = [1]
    row = [1, 1]  # row j+1 of Pascal's triangle mod p, starting with j = 0
    for j in range(1, n + 1):
        row = [1] + [(row[i] + row[i + 1]) % p for i in range(len(row) - 1)] + [1]
        # row is now C(j+1, .) mod p
        acc = 0
        for i in range(j):
            acc += row[i] * B[i]
        B.append(-acc * pow(j + 1, -1, p) % p)
    return tuple(B)


def _bernoulli_padic(n: int, p: int, N: int) -> PadicTrunc:
    from math import comb

    B: list[PadicTrunc] = [PadicTrunc(p, 0, 1, N)]
    for j in range(1, n + 1):
        if j % 2 == 1 and j > 1:
            B.append(PadicTrunc.zero(p, N))
            continue
        terms = [b * padic_from_ratio(comb(j + 1, i), 1, p, N) for i, b in enumerate(B) if not b.is_zero]
        s = padic_sum(terms, p=p)
        B.append(-(s / padic_from_ratio(j + 1, 1, p, N)))
    return B[n]


def bernoulli_mod_p(n: int, p: int) -> Residue:
    """``B_n mod p`` (``B_1 = -1/2``); needs ``p - 1`` not dividing ``n`` unless ``n = 0``."""
    if n < 0:
        raise BadParameter(f"n must be nonnegative, got {n}")
    if n == 0:
        return Residue(1, p)
    if n % (p - 1) == 0:
        raise DenominatorDivisible(f"{p} divides the denominator of B_{n}")
    if n > 1 and n % 2 == 1:
        return Residue(0, p)
    if n <= p - 2:
        return Residue(_bernoulli_table_mod_p(n, p)[n], p)
    N = 3
    while True:
        try:
            return padic_to_residue(_bernoulli_padic(n, p, N), 1)
        except PrecisionExhausted:
            N += 2


def fermat_quotient(base: int, p: int) -> Residue:
    """``(base^(p-1) - 1) / p mod p``."""
    if base % p == 0:
        raise BaseDivisible(f"{p} divides the base {base}")
    p2 = p * p
    t = (pow(base % p2, p - 1, p2) - 1) % p2
    assert t % p == 0, "Fermat's little theorem failed: is p prime?"
    return Residue(t // p, p)


@dataclass(frozen=True)
class HarmonicTable:
    modulus: int
    values: tuple[int, ...]  # values[k] = H_k, values[0] = 0

    def __getitem__(self, k: int) -> Residue:
        return Residue(self.values[k], self.modulus)

    def __len__(self) -> int:
        return len(self.values) - 1


def harmonic_table(n: int, modulus: int) -> HarmonicTable:
    acc = 0
    values = [0]
    for k in range(1, n + 1):
        acc = (acc + invmod(k, modulus)) % modulus
        values.append(acc)
    return HarmonicTable(modulus, tuple(values))


def alt_harmonic_upto(upper: int, p: int) -> Residue:
    """``sum_{k=1}^{upper} (-1)^(k-1) / k mod p``."""
    acc = 0
    for k in range(1, upper + 1):
        term = pow(k, -1, p)
        acc += term if k % 2 else -term
    return Residue(acc, p)


def alt_harmonic_partial(bound_numerator: int, bound_denominator: int, p: int) -> Residue:
    """``sum_{0 < k < (num/den) p} (-1)^(k-1) / k mod p`` (strict upper bound)."""
    upper = (bound_numerator * p - 1) // bound_denominator
    return alt_harmonic_upto(upper, p)


class BinomialTable:
    """``C(2k, k+d) mod p**a`` for ``0 <= k < p**a`` and ``0 <= d <= p**a`` as a numpy array.

    Row ``d`` of ``self.rows`` is contiguous, so a query for fixed ``d`` is a
    single dot product with a weight vector.
    """

    def __init__(self, p: int, a: int):
        n = p**a
        M = n
        if M * M * n >= 1 << 62:
            raise BadParameter(f"table for {p}^{a} would overflow int64 accumulation")
        self.p, self.a, self.n, self.modulus = p, a, n, M
        rows = np.zeros((n + 1, n), dtype=np.int64)
        pascal = np.zeros(2 * n + 1, dtype=np.int64)
        pascal[0] = 1
        for r in range(2 * n - 1):
            if r % 2 == 0:
                k = r // 2
                rows[:, k] = pascal[k : k + n + 1]
            pascal[1 : r + 2] = (pascal[1 : r + 2] + pascal[0 : r + 1]) % M
        self.rows = rows
        self._mk_weights: dict[int, np.ndarray] = {}
        self._kmk_weights: dict[int, np.ndarray] = {}

    def _weights_mk(self, m: int) -> np.ndarray:
        w = self._mk_weights.get(m)
        if w is None:
            p = self.p
            r = pow(m, -1, p)
            vals = [1] * self.n
            for k in range(1, self.n):
                vals[k] = vals[k - 1] * r % p
            w = self._mk_weights[m] = np.array(vals, dtype=np.int64)
        return w

    def _weights_kmk(self, m: int) -> np.ndarray:
        # k-th weight: m^{-(k-1)} * p^{a-1-v_p(k)} / unit(k)  (mod p^a), zero at k = 0
        w = self._kmk_weights.get(m)
        if w is None:
            p, a, M = self.p, self.a, self.modulus
            r = pow(m, -1, M)
            vals = [0] * self.n
            mk = 1  # m^{-(k-1)}
            for k in range(1, self.n):
                v, ku = _strip(k, p)
                vals[k] = mk * p ** (a - 1 - v) * pow(ku, -1, M) % M
                mk = mk * r % M
            w = self._kmk_weights[m] = np.array(vals, dtype=np.int64)
        return w

    def sum_over_mk(self, d: int, m: int) -> int:
        """``sum_k C(2k, k+d) / m^k mod p``."""
        p = self.p
        if m % p == 0:
            raise BadParameter(f"{p} divides m = {m}")
        return int(np.dot(self.rows[d] % p, self._weights_mk(m)) % p)

    def sum_over_kmk(self, d: int, m: int) -> int:
        """``d * sum_{k>=1} C(2k, k+d) / (k m^{k-1}) mod p``."""
        p, a, M = self.p, self.a, self.modulus
        if m % p == 0:
            raise BadParameter(f"{p} divides m = {m}")
        t = int(np.dot(self.rows[d], self._weights_kmk(m)) % M)
        t = t * d % M
        lift = p ** (a - 1)
        if t % lift:
            raise NonIntegralSum(f"d * sum has negative {p}-adic valuation (p={p}, a={a}, d={d}, m={m})")
        return t // lift % p


@lru_cache(maxsize=4)
def binomial_table(p: int, a: int) -> BinomialTable:
    return BinomialTable(p, a)
