"""Registry of checkable congruences: independent left/right evaluators per entry.

Each entry declares the parameters it ranges over, a domain predicate and a
modulus rule.  ``evaluate`` runs one instance; ``instances`` enumerates a
parameter grid under user limits.  Left sides go through the binomial/p-adic
kernels; right sides through Lucas sequences, Fermat quotients, Bernoulli
numbers and harmonic sums, so a pass compares two unrelated computations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, NamedTuple

from .binomial import (
    alt_harmonic_partial,
    alt_harmonic_upto,
    bernoulli_mod_p,
    binomial_mod,
    binomial_table,
    fermat_quotient,
    harmonic_table,
    sum_to_residue,
    theorem13_lhs,
    weighted_central_terms,
)
from .errors import CongruenceError, DomainViolation, UnknownId
from .modarith import MAX_MODULUS, PrimePower, jacobi, primes_in, split_p
from .sequences import lucas_uu, named_sequence, poly_u_mod, poly_V_mod, poly_v_mod, quotient_by_p

DEFAULT_MSET = (-6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12)


class Params(NamedTuple):
    p: int
    a: int | None = None
    d: int | None = None
    m: int | None = None
    A: int | None = None
    B: int | None = None

    @property
    def pa(self) -> int:
        return self.p ** (self.a or 1)

    def as_dict(self) -> dict:
        return dict(self._asdict())

    def sort_key(self) -> tuple:
        return tuple(-(1 << 62) if x is None else x for x in self)


@dataclass(frozen=True)
class CheckResult:
    id: str
    params: Params
    modulus: int
    lhs: int | None
    rhs: int | None
    verdict: str
    conjecture: bool = False

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def counts_as_failure(self) -> bool:
        return not self.passed and not self.conjecture


@dataclass(frozen=True)
class CongruenceSpec:
    id: str
    description: str
    modulus_exp: int  # the modulus is p ** modulus_exp
    lhs: Callable[[Params], int]
    rhs: Callable[[Params], int]
    uses_a: bool = False
    d_range: str | None = None  # "0..p", "0..pa" or "1..pa"
    uses_m: bool = False
    uses_AB: bool = False
    p_rule: tuple[str, Callable[[int], bool]] = ("any prime", lambda p: True)
    extra_rule: tuple[str, Callable[[Params], bool]] | None = None
    conjecture: bool = False
    # working modulus needed by the kernels, as an exponent of p (on top of a - 1)
    work_exp: int = 0

    @property
    def modulus_label(self) -> str:
        return "p" if self.modulus_exp == 1 else f"p^{self.modulus_exp}"

    @property
    def domain_text(self) -> str:
        parts = [self.p_rule[0]]
        if self.uses_a:
            parts.append("a >= 1")
        if self.d_range:
            parts.append({"0..p": "0 <= d <= p", "0..pa": "0 <= d <= p^a", "1..pa": "1 <= d <= p^a"}[self.d_range])
        if self.uses_m:
            parts.append("p does not divide m")
        if self.uses_AB:
            parts.append("B != 0")
        if self.extra_rule:
            parts.append(self.extra_rule[0])
        return "; ".join(parts)

    def d_bounds(self, P: Params) -> tuple[int, int] | None:
        if self.d_range is None:
            return None
        lo = 1 if self.d_range == "1..pa" else 0
        hi = P.p if self.d_range == "0..p" else P.pa
        return lo, hi

    def domain_violation(self, P: Params) -> str | None:
        """Name the first violated constraint, or None when ``P`` is in the domain."""
        from .modarith import is_prime

        if not is_prime(P.p):
            return f"p = {P.p} is not prime"
        if not self.p_rule[1](P.p):
            return f"requires {self.p_rule[0]}"
        if self.uses_a != (P.a is not None):
            return "parameter a is required" if self.uses_a else "parameter a is not used"
        if self.uses_a and P.a < 1:
            return "requires a >= 1"
        if (self.d_range is None) != (P.d is None):
            return "parameter d is required" if self.d_range else "parameter d is not used"
        bounds = self.d_bounds(P)
        if bounds and not bounds[0] <= P.d <= bounds[1]:
            return f"requires {bounds[0]} <= d <= {bounds[1]}"
        if self.uses_m != (P.m is not None):
            return "parameter m is required" if self.uses_m else "parameter m is not used"
        if self.uses_m and P.m % P.p == 0:
            return "requires p not dividing m"
        if self.uses_AB != (P.A is not None and P.B is not None):
            return "parameters A, B are required" if self.uses_AB else "parameters A, B are not used"
        if self.uses_AB and P.B == 0:
            return "requires B != 0"
        if P.p ** max(self.modulus_exp, (P.a or 1) - 1 + self.work_exp) > MAX_MODULUS:
            return "modulus exceeds 2^63 - 1"
        if self.extra_rule and not self.extra_rule[1](P):
            return f"requires {self.extra_rule[0]}"
        return None

    def modulus(self, P: Params) -> int:
        return P.p**self.modulus_exp


REGISTRY: dict[str, CongruenceSpec] = {}


def _register(spec: CongruenceSpec) -> None:
    REGISTRY[spec.id] = spec


# --- shared helpers -----------------------------------------------------------

ODD = ("p odd", lambda p: p != 2)
GT3 = ("p > 3", lambda p: p > 3)
NOT_2_5 = ("p != 2, 5", lambda p: p not in (2, 5))
NOT_2_3 = ("p != 2, 3", lambda p: p > 3)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _jpow(x: int, p: int, a: int) -> int:
    """``(x / p^a)`` computed as ``(x / p)^a``."""
    return jacobi(x, p) ** a


def _inv(x: int, M: int) -> int:
    return pow(x, -1, M)


def _table(P: Params):
    return binomial_table(P.p, P.a or 1)


def _central_sum(p: int, ratio: Fraction, scale: Fraction = Fraction(1), upper: int | None = None) -> int:
    """``scale * sum_{k=1}^{upper} C(2k, k) ratio^k / k mod p`` (``upper`` defaults to ``p - 1``)."""
    upper = p - 1 if upper is None else upper
    N = 3
    M = p**N
    sv_num, su_num = split_p(scale.numerator, p)
    sv_den, su_den = split_p(scale.denominator, p)
    sv = sv_num - sv_den
    su = su_num * _inv(su_den, M) % M
    terms = [(v + sv, u * su % M) for v, u in weighted_central_terms(p, N, 0, 1, upper, ratio, over_k=True)]
    return int(sum_to_residue(p, terms, N, 1))


def _fib_quotient(p: int) -> int:
    """``F_{p - (p/5)} / p mod p``."""
    e = jacobi(p, 5)
    return int(quotient_by_p(named_sequence("F", p - e, p * p), p))


def _pell_quotient(p: int) -> int:
    e = jacobi(2, p)
    return int(quotient_by_p(named_sequence("P", p - e, p * p), p))


def _s_quotient(p: int) -> int:
    e = jacobi(3, p)
    return int(quotient_by_p(named_sequence("S", (p - e) // 2, p * p), p))


def _q(base: int, p: int) -> int:
    return int(fermat_quotient(base, p))


def _bern(p: int) -> int:
    return int(bernoulli_mod_p(p - 3, p))


# --- sums of C(2k, k+d) over a full prime power ------------------------------------


_register(CongruenceSpec(
    "1.1",
    "sum_{k<p} C(2k,k+d) == ((p-d)/3)",
    1,
    lhs=lambda P: _table(P).sum_over_mk(P.d, 1),
    rhs=lambda P: jacobi(P.p - P.d, 3) % P.p,
    d_range="0..p",
))

_register(CongruenceSpec(
    "1.3",
    "sum_{k<p^a} C(2k,k+d)/m^k == u_{p^a-d}(m-2)",
    1,
    lhs=lambda P: _table(P).sum_over_mk(P.d, P.m),
    rhs=lambda P: poly_u_mod(P.pa - P.d, P.m - 2, P.p),
    uses_a=True, d_range="0..pa", uses_m=True,
))

_register(CongruenceSpec(
    "1.4",
    "d sum_{0<k<p^a} C(2k,k+d)/(k m^(k-1)) == 2(-1)^d + v_{p^a-d}(m-2)",
    1,
    lhs=lambda P: _table(P).sum_over_kmk(P.d, P.m),
    rhs=lambda P: (2 * _sign(P.d) + poly_v_mod(P.pa - P.d, P.m - 2, P.p)) % P.p,
    uses_a=True, d_range="1..pa", uses_m=True,
))


def _delta_symbol(P: Params) -> int:
    return _jpow(P.m * (P.m - 4), P.p, P.a)


_register(CongruenceSpec(
    "1.5",
    "sum_{k<p^a} C(2k,k+d)/m^k == -u_{d-(m(m-4)/p^a)}(m-2), u_{-1} = -1",
    1,
    lhs=lambda P: _table(P).sum_over_mk(P.d, P.m),
    rhs=lambda P: -poly_u_mod(P.d - _delta_symbol(P), P.m - 2, P.p) % P.p,
    uses_a=True, d_range="0..pa", uses_m=True, p_rule=ODD,
))

_register(CongruenceSpec(
    "1.6",
    "d sum_{0<k<p^a} C(2k,k+d)/(k m^(k-1)) == 2(-1)^d + v_{d-(m(m-4)/p^a)}(m-2)",
    1,
    lhs=lambda P: _table(P).sum_over_kmk(P.d, P.m),
    rhs=lambda P: (2 * _sign(P.d) + poly_v_mod(P.d - _delta_symbol(P), P.m - 2, P.p)) % P.p,
    uses_a=True, d_range="1..pa", uses_m=True, p_rule=ODD,
))


def _rhs_17(P: Params) -> int:
    e = _jpow(P.p, 5, P.a)
    sign = _sign(P.d - (P.p != 5))
    return sign * named_sequence("F", 2 * (P.d - e), P.p) % P.p


def _rhs_18(P: Params) -> int:
    e = _jpow(P.p, 5, P.a)
    sign = _sign(P.d - (P.p == 5))
    return (sign * named_sequence("L", 2 * (P.d - e), P.p) - 2 * _sign(P.d)) % P.p


def _rhs_19(P: Params) -> int:
    diff = P.pa - P.d
    if diff % 2 == 0:
        return 0
    return 1 if (diff - 1) % 4 == 0 else P.p - 1


def _rhs_110(P: Params) -> int:
    diff = P.pa - P.d
    if diff % 2:
        return 0
    return 1 if diff % 4 == 0 else P.p - 1


_register(CongruenceSpec(
    "1.7",
    "sum_{k<p^a} (-1)^k C(2k,k+d) == (-1)^(d-[p!=5]) F_{2(d-(p^a/5))}",
    1,
    lhs=lambda P: _table(P).sum_over_mk(P.d, -1),
    rhs=_rhs_17,
    uses_a=True, d_range="0..pa", p_rule=ODD,
))

_register(CongruenceSpec(
    "1.8",
    "d sum_{0<k<p^a} (-1)^k C(2k,k+d)/k == (-1)^(d-[p=5]) L_{2(d-(p^a/5))} - 2(-1)^d",
    1,
    lhs=lambda P: -_table(P).sum_over_kmk(P.d, -1) % P.p,
    rhs=_rhs_18,
    uses_a=True, d_range="1..pa", p_rule=ODD,
))

_register(CongruenceSpec(
    "1.9",
    "sum_{k<p^a} C(2k,k+d)/2^k == 0, 1, -1 by p^a - d mod 4",
    1,
    lhs=lambda P: _table(P).sum_over_mk(P.d, 2),
    rhs=_rhs_19,
    uses_a=True, d_range="0..pa", p_rule=ODD,
))

_register(CongruenceSpec(
    "1.10",
    "d sum_{0<k<p^a} C(2k,k+d)/(k 2^k) - (-1)^d == 0, 1, -1 by p^a - d mod 4",
    1,
    lhs=lambda P: (_table(P).sum_over_kmk(P.d, 2) * _inv(2, P.p) - _sign(P.d)) % P.p,
    rhs=_rhs_110,
    uses_a=True, d_range="1..pa", p_rule=ODD,
))

_register(CongruenceSpec(
    "R1.1a",
    "sum_{k<p^a} C(2k,k+d) == ((p^a-d)/3)",
    1,
    lhs=lambda P: _table(P).sum_over_mk(P.d, 1),
    rhs=lambda P: jacobi(P.pa - P.d, 3) % P.p,
    uses_a=True, d_range="0..pa",
))

_register(CongruenceSpec(
    "R1.1b",
    "d sum_{0<k<p^a} C(2k,k+d)/k == 2(-1)^d + 2 if 3 | p^a - d, else 2(-1)^d - 1",
    1,
    lhs=lambda P: _table(P).sum_over_kmk(P.d, 1),
    rhs=lambda P: (2 * _sign(P.d) + (2 if (P.pa - P.d) % 3 == 0 else -1)) % P.p,
    uses_a=True, d_range="1..pa",
))


# --- single-prime sums with Fermat, Fibonacci, Pell and S quotients -----------------------


def _lhs_111(P: Params) -> int:
    # (1/2) sum (-1)^k C(2k,k)/(k m^(k-1)) = (m/2) sum C(2k,k) (-1/m)^k / k
    return _central_sum(P.p, Fraction(-1, P.m), Fraction(P.m, 2))


def _rhs_111(P: Params) -> int:
    p, p2 = P.p, P.p * P.p
    num = (pow(P.m, p, p2) - poly_V_mod(p, P.m, p2)) % p2
    return int(quotient_by_p(num, p))


_register(CongruenceSpec(
    "1.11",
    "(1/2) sum_{0<k<p} (-1)^k C(2k,k)/(k m^(k-1)) == (m^p - V_p(m))/p",
    1, lhs=_lhs_111, rhs=_rhs_111, uses_m=True,
))

_register(CongruenceSpec(
    "1.12",
    "sum_{0<k<p} C(2k,k)/(k 2^(k-1)) == 2 q_p(2)",
    1,
    lhs=lambda P: _central_sum(P.p, Fraction(1, 2), Fraction(2)),
    rhs=lambda P: 2 * _q(2, P.p) % P.p,
    p_rule=ODD,
))

_register(CongruenceSpec(
    "1.12b",
    "sum_{0<k<p} C(2k,k)/(k 4^k) == 2 q_p(2)",
    1,
    lhs=lambda P: _central_sum(P.p, Fraction(1, 4)),
    rhs=lambda P: 2 * _q(2, P.p) % P.p,
    p_rule=ODD,
))

_register(CongruenceSpec(
    "1.13",
    "sum_{0<k<p} C(2k,k)/(k 3^(k-1)) == 3 q_p(3)",
    1,
    lhs=lambda P: _central_sum(P.p, Fraction(1, 3), Fraction(3)),
    rhs=lambda P: 3 * _q(3, P.p) % P.p,
    p_rule=NOT_2_3,
))

_register(CongruenceSpec(
    "1.14",
    "sum_{0<k<p} (-1)^k C(2k,k)/k == -5 F_{p-(p/5)}/p",
    1,
    lhs=lambda P: _central_sum(P.p, Fraction(-1)),
    rhs=lambda P: -5 * _fib_quotient(P.p) % P.p,
    p_rule=NOT_2_5,
))

_register(CongruenceSpec(
    "1.15",
    "sum_{0<k<p} (-1)^k C(2k,k)/(k 5^k) == q_p(5) - 6 F_{p-(p/5)}/p",
    1,
    lhs=lambda P: _central_sum(P.p, Fraction(-1, 5)),
    rhs=lambda P: (_q(5, P.p) - 6 * _fib_quotient(P.p)) % P.p,
    p_rule=NOT_2_5,
))

_register(CongruenceSpec(
    "1.16",
    "sum_{0<k<p} C(2k,k)/(k 5^k) == q_p(5) - F_{p-(p/5)}/p",
    1,
    lhs=lambda P: _central_sum(P.p, Fraction(1, 5)),
    rhs=lambda P: (_q(5, P.p) - _fib_quotient(P.p)) % P.p,
    p_rule=NOT_2_5,
))

_register(CongruenceSpec(
    "1.17",
    "sum_{0<k<p} (-1)^k C(2k,k)/(k 4^k) == 2 q_p(2) - 4 P_{p-(2/p)}/p",
    1,
    lhs=lambda P: _central_sum(P.p, Fraction(-1, 4)),
    rhs=lambda P: (2 * _q(2, P.p) - 4 * _pell_quotient(P.p)) % P.p,
    p_rule=ODD,
))

_register(CongruenceSpec(
    "1.17b",
    "sum_{0<k<p} (-1)^k C(2k,k)/(k 4^k) == 2 sum_{0<k<3p/4} (-1)^(k-1)/k",
    1,
    lhs=lambda P: _central_sum(P.p, Fraction(-1, 4)),
    rhs=lambda P: 2 * int(alt_harmonic_partial(3, 4, P.p)) % P.p,
    p_rule=ODD,
))

_register(CongruenceSpec(
    "1.18",
    "sum_{0<k<p} (-1)^k C(2k,k)/(k 2^k) == q_p(2) - 6 (2/p) S_{(p-(3/p))/2}/p",
    1,
    lhs=lambda P: _central_sum(P.p, Fraction(-1, 2)),
    rhs=lambda P: (_q(2, P.p) - 6 * jacobi(2, P.p) * _s_quotient(P.p)) % P.p,
    p_rule=GT3,
))

_register(CongruenceSpec(
    "1.18b",
    "sum_{0<k<p} (-1)^k C(2k,k)/(k 2^k) == sum_{0<k<5p/6} (-1)^(k-1)/k",
    1,
    lhs=lambda P: _central_sum(P.p, Fraction(-1, 2)),
    rhs=lambda P: int(alt_harmonic_partial(5, 6, P.p)),
    p_rule=GT3,
))

_register(CongruenceSpec(
    "1.19",
    "sum_{0<k<p} C(2k,k)/(k 6^k) == q_p(2) + q_p(3) - 2 (2/p) S_{(p-(3/p))/2}/p",
    1,
    lhs=lambda P: _central_sum(P.p, Fraction(1, 6)),
    rhs=lambda P: (_q(2, P.p) + _q(3, P.p) - 2 * jacobi(2, P.p) * _s_quotient(P.p)) % P.p,
    p_rule=GT3,
))


# --- mod p^3 statements ---------------------------------------------------------------


def _rhs_120(P: Params) -> int:
    p = P.p
    M = p**3
    if p == 2:
        return 2
    if p == 3:
        return 5
    return 8 * _inv(9, M) * p * p * _bern(p) % M


_register(CongruenceSpec(
    "1.20",
    "p^(a-1) sum_{0<k<p^a} C(2k,k)/k == 2 (p=2), 5 (p=3), (8/9) p^2 B_{p-3} (p>3)",
    3,
    lhs=lambda P: int(theorem13_lhs(PrimePower(P.p, P.a))),
    rhs=_rhs_120,
    uses_a=True, work_exp=5,
))


def _lhs_c11(P: Params) -> int:
    terms = weighted_central_terms(P.p, 3, 0, 0, P.pa - 1, -1)
    return int(sum_to_residue(P.p, terms, 3, 3))


def _rhs_c11(P: Params) -> int:
    M = P.p**3
    e = _jpow(P.pa, 5, 1)
    return e * (1 - 2 * named_sequence("F", P.pa - e, M)) % M


_register(CongruenceSpec(
    "C1.1",
    "sum_{k<p^a} (-1)^k C(2k,k) == (p^a/5)(1 - 2 F_{p^a-(p^a/5)})  [conjecture]",
    3, lhs=_lhs_c11, rhs=_rhs_c11,
    uses_a=True, p_rule=NOT_2_5, conjecture=True,
))


# --- general Lucas sequences --------------------------------------------------------------


def _l31_symbol(P: Params) -> int:
    delta = P.A * P.A - 4 * P.B
    return _jpow(delta, P.p, P.a)


def _lhs_l31(P: Params) -> int:
    p = P.p
    u = lucas_uu(P.A, P.B, P.pa - P.d, p)[0]
    return pow(P.B, P.d, p) * u % p


def _rhs_l31(P: Params) -> int:
    p = P.p
    e = _l31_symbol(P)
    if e == 0:
        c = P.A * _inv(2, p)
    elif e == 1:
        c = P.B
    else:
        c = 1
    idx = P.d - e
    u = -_inv(P.B, p) if idx == -1 else lucas_uu(P.A, P.B, idx, p)[0]
    return -c * u % p


def _l31_ok(P: Params) -> bool:
    return not (P.B % P.p == 0 and P.d - _l31_symbol(P) == -1)


_register(CongruenceSpec(
    "L3.1",
    "B^d u_{p^a-d}(A,B) == -c(A,B) u_{d-(D/p^a)}(A,B), D = A^2 - 4B",
    1, lhs=_lhs_l31, rhs=_rhs_l31,
    uses_a=True, d_range="0..pa", uses_AB=True, p_rule=ODD,
    extra_rule=("p not dividing B where u_{-1} = -1/B is needed", _l31_ok),
))


# --- classical congruences used along the way ----------------------------------------------

_register(CongruenceSpec(
    "PS",
    "sum_{0<k<p} C(2k,k)/k == 0",
    1,
    lhs=lambda P: _central_sum(P.p, Fraction(1)),
    rhs=lambda P: 0,
    p_rule=GT3,
))

_register(CongruenceSpec(
    "W",
    "C(2p-1, p-1) == 1 (Wolstenholme)",
    3,
    lhs=lambda P: int(binomial_mod(2 * P.p - 1, P.p - 1, PrimePower(P.p, 3))),
    rhs=lambda P: 1,
    p_rule=GT3,
))

_register(CongruenceSpec(
    "L2.2",
    "C(2p^a-1, p^a-1) == 1 + p[p=2] + p^2[p=3]",
    3,
    lhs=lambda P: int(binomial_mod(2 * P.pa - 1, P.pa - 1, PrimePower(P.p, 3))),
    rhs=lambda P: (1 + P.p * (P.p == 2) + P.p**2 * (P.p == 3)) % P.p**3,
    uses_a=True,
))

_register(CongruenceSpec(
    "G",
    "C(2p-1, p-1) == 1 - (2/3) p^3 B_{p-3} (Glaisher)",
    4,
    lhs=lambda P: int(binomial_mod(2 * P.p - 1, P.p - 1, PrimePower(P.p, 4))),
    rhs=lambda P: (1 - 2 * _inv(3, P.p**4) * P.p**3 * _bern(P.p)) % P.p**4,
    p_rule=GT3,
))


def _lhs_53(P: Params) -> int:
    p = P.p
    M = p * p
    H = harmonic_table(p - 1, M).values
    return sum((1 + 2 * p * H[k]) * _inv(k * k, M) for k in range(1, p)) % M


def _lhs_54(P: Params) -> int:
    p = P.p
    H = harmonic_table(p - 1, p).values
    return sum(H[k] * _inv(k * k, p) for k in range(1, p)) % p


def _lhs_55(P: Params) -> int:
    M = P.p**2
    return sum(_inv(k * k, M) for k in range(1, P.p)) % M


_register(CongruenceSpec(
    "5.3",
    "sum_{0<k<p} (1 + 2p H_k)/k^2 == (8/3) p B_{p-3}",
    2, lhs=_lhs_53,
    rhs=lambda P: 8 * _inv(3, P.p**2) * P.p * _bern(P.p) % P.p**2,
    p_rule=GT3,
))

_register(CongruenceSpec(
    "5.4",
    "sum_{0<k<p} H_k/k^2 == B_{p-3}",
    1, lhs=_lhs_54, rhs=lambda P: _bern(P.p),
    p_rule=GT3,
))

_register(CongruenceSpec(
    "5.5",
    "sum_{0<k<p} 1/k^2 == (2/3) p B_{p-3}",
    2, lhs=_lhs_55,
    rhs=lambda P: 2 * _inv(3, P.p**2) * P.p * _bern(P.p) % P.p**2,
    p_rule=GT3,
))

_register(CongruenceSpec(
    "E",
    "2 q_p(2) == sum_{0<k<p} (-1)^(k-1)/k (Eisenstein)",
    1,
    lhs=lambda P: 2 * _q(2, P.p) % P.p,
    rhs=lambda P: int(alt_harmonic_upto(P.p - 1, P.p)),
    p_rule=ODD,
))

_register(CongruenceSpec(
    "R1.2W",
    "F_{p-(p/5)}/p == (2/5) sum_{0<k<4p/5} (-1)^k/k (Williams)",
    1,
    lhs=lambda P: _fib_quotient(P.p),
    rhs=lambda P: -2 * _inv(5, P.p) * int(alt_harmonic_partial(4, 5, P.p)) % P.p,
    p_rule=NOT_2_5,
))


def _lhs_zws(P: Params) -> int:
    p = P.p
    return sum(pow(3, k, p) * _inv(k, p) for k in range(1, (p - 1) // 2 + 1)) % p


_register(CongruenceSpec(
    "ZWS",
    "sum_{k=1}^{(p-1)/2} 3^k/k == sum_{0<k<p/6} (-1)^k/k",
    1, lhs=_lhs_zws,
    rhs=lambda P: -int(alt_harmonic_partial(1, 6, P.p)) % P.p,
    p_rule=GT3,
))


# --- evaluation -----------------------------------------------------------------------------


def get_spec(id: str) -> CongruenceSpec:
    try:
        return REGISTRY[id]
    except KeyError:
        raise UnknownId(f"unknown congruence id {id!r}") from None


def evaluate(id: str, params: Params) -> CheckResult:
    """Evaluate both sides of one instance; kernel errors become ``error:<Kind>`` verdicts."""
    spec = get_spec(id)
    if not isinstance(params, Params):
        params = Params(**params)
    reason = spec.domain_violation(params)
    if reason:
        raise DomainViolation(f"{id} at {params.as_dict()}: {reason}")
    modulus = spec.modulus(params)
    lhs = rhs = None
    try:
        lhs = int(spec.lhs(params)) % modulus
        rhs = int(spec.rhs(params)) % modulus
    except CongruenceError as exc:
        verdict = f"error:{exc.kind}"
    else:
        verdict = "pass" if lhs == rhs else "fail"
    if spec.conjecture and verdict != "pass":
        verdict = "CONJECTURE-FAIL" if verdict == "fail" else f"CONJECTURE-{verdict}"
    return CheckResult(id, params, modulus, lhs, rhs, verdict, spec.conjecture)


# --- enumeration ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Limits:
    pmin: int = 2
    pmax: int = 50
    amax: int = 1
    pamax: int | None = None
    dmode: str = "all"  # all | sample | fixed
    mset: tuple[int, ...] = DEFAULT_MSET
    samples: int = 8
    dvalues: tuple[int, ...] = ()
    seed: int = 0
    ab_pairs: int = 25
    ab_bound: int = 50


def ab_pairs(seed: int, count: int, bound: int) -> list[tuple[int, int]]:
    """``count`` distinct seeded pairs with ``|A|, |B| <= bound`` and ``B != 0``."""
    rng = random.Random(f"{seed}:AB")
    seen: list[tuple[int, int]] = []
    limit = (2 * bound + 1) * 2 * bound
    while len(seen) < min(count, limit):
        pair = (rng.randint(-bound, bound), rng.choice([b for b in range(-bound, bound + 1) if b]))
        if pair not in seen:
            seen.append(pair)
    return seen


def _d_values(spec: CongruenceSpec, P: Params, limits: Limits) -> list[int | None]:
    bounds = spec.d_bounds(P)
    if bounds is None:
        return [None]
    lo, hi = bounds
    if limits.dmode == "all":
        return list(range(lo, hi + 1))
    if limits.dmode == "fixed":
        return [d for d in limits.dvalues if lo <= d <= hi]
    if limits.dmode == "sample":
        rng = random.Random(f"{limits.seed}:{spec.id}:{P.p}:{P.a}")
        picked = {lo, hi}
        pool = hi - lo + 1
        while len(picked) < min(pool, limits.samples + 2):
            picked.add(rng.randint(lo, hi))
        return sorted(picked)
    raise ValueError(f"unknown dmode {limits.dmode!r}")


def instances(id: str, limits: Limits) -> Iterator[Params]:
    """All in-domain parameter assignments for ``id`` under ``limits``, in a fixed order."""
    spec = get_spec(id)
    pairs = ab_pairs(limits.seed, limits.ab_pairs, limits.ab_bound) if spec.uses_AB else [(None, None)]
    for p in primes_in(limits.pmin, limits.pmax):
        if not spec.p_rule[1](p):
            continue
        for a in range(1, limits.amax + 1) if spec.uses_a else [None]:
            pa = p ** (a or 1)
            if spec.uses_a and limits.pamax is not None and pa > limits.pamax:
                break
            if p ** max(spec.modulus_exp, (a or 1) - 1 + spec.work_exp) > MAX_MODULUS:
                break
            base = Params(p, a)
            ms = [m for m in limits.mset if m % p] if spec.uses_m else [None]
            for d in _d_values(spec, base, limits):
                for m in ms:
                    for A, B in pairs:
                        P = Params(p, a, d, m, A, B)
                        if spec.extra_rule and not spec.extra_rule[1](P):
                            continue
                        yield P


def conjecture_ids() -> list[str]:
    return [i for i, s in REGISTRY.items() if s.conjecture]


# --- cross-checks between entries and independent Bernoulli routes --------------------------


def specialisation_agreement(p: int, a: int, d: int) -> dict[str, bool]:
    """Right sides of the m = -1, 2 specialisations agree with the general-m forms.

    The left sides of the specialised entries relate to the general ones by
    fixed factors: ``1.7 = 1.5(m=-1)``, ``1.8 = -1.6(m=-1)``, ``1.9 = 1.5(m=2)``
    and ``1.10 = 1.6(m=2)/2 - (-1)^d``.
    """
    P = Params(p, a, d)
    out = {
        "1.7~1.5": _rhs_17(P) == REGISTRY["1.5"].rhs(Params(p, a, d, -1)),
        "1.9~1.5": _rhs_19(P) == REGISTRY["1.5"].rhs(Params(p, a, d, 2)),
    }
    if d >= 1:
        r16m = REGISTRY["1.6"].rhs(Params(p, a, d, -1))
        r162 = REGISTRY["1.6"].rhs(Params(p, a, d, 2))
        out["1.8~1.6"] = _rhs_18(P) == -r16m % p
        out["1.10~1.6"] = _rhs_110(P) == (r162 * _inv(2, p) - _sign(d)) % p
    return out


def bernoulli_routes(p: int) -> dict[str, int]:
    """``B_{p-3} mod p`` by recurrence and as implied by three other sums (p > 3)."""
    M2, M4 = p * p, p**4
    inv32 = 3 * _inv(2, p) % p
    squares = _lhs_55(Params(p))
    glaisher = int(binomial_mod(2 * p - 1, p - 1, PrimePower(p, 4)))
    assert squares % p == 0 and (glaisher - 1) % p**3 == 0, "divisibility failed"
    return {
        "recurrence": _bern(p),
        "harmonic": _lhs_54(Params(p)),
        "squares": squares // p * inv32 % p,
        "glaisher": -((glaisher - 1) % M4 // p**3) * inv32 % p,
    }
