"""Lucas sequences by fast doubling and the polynomial families u_n(x), v_n(x), V_n(x).

``u_n(A, B)`` and ``v_n(A, B)`` solve ``x_{n+1} = A x_n - B x_{n-1}`` with
seeds ``(0, 1)`` and ``(2, A)``.  The polynomial families are the special
case ``B = 1`` with ``A = x`` (u, v) and the recurrence
``V_{n+1} = x (V_n + V_{n-1})`` (``A = x``, ``B = -x``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import IndexOutOfDomain, NotDivisible
from .modarith import Residue, check_modulus, invmod
from .poly import Poly, X


class LucasParams(NamedTuple):
    A: int
    B: int

    @property
    def discriminant(self) -> int:
        return self.A * self.A - 4 * self.B


FIBONACCI = LucasParams(1, -1)
PELL = LucasParams(2, -1)
S_PARAMS = LucasParams(4, 1)


@dataclass(frozen=True)
class LucasPair:
    u: Residue
    v: Residue
    n: int
    params: LucasParams
    modulus: int

    def __iter__(self):
        yield self.u
        yield self.v


def lucas_uu(A: int, B: int, n: int, modulus: int | None = None) -> tuple[int, int]:
    """Return ``(u_n, u_{n+1})`` as plain ints, reduced when ``modulus`` is given.

    Doubling steps: ``u_{2k} = u_k (2 u_{k+1} - A u_k)`` and
    ``u_{2k+1} = u_{k+1}^2 - B u_k^2``; no division, so any modulus works.
    """
    if n < 0:
        raise IndexOutOfDomain(f"fast doubling needs n >= 0, got {n}")
    a, b = 0, 1
    if modulus is None:
        for bit in bin(n)[2:]:
            a, b = a * (2 * b - A * a), b * b - B * a * a
            if bit == "1":
                a, b = b, A * b - B * a
        return a, b
    A %= modulus
    B %= modulus
    for bit in bin(n)[2:]:
        a, b = a * (2 * b - A * a) % modulus, (b * b - B * a * a) % modulus
        if bit == "1":
            a, b = b, (A * b - B * a) % modulus
    return a % modulus, b % modulus


def lucas_uv(A: int, B: int, n: int, modulus: int | None = None) -> tuple[int, int]:
    """``(u_n, v_n)`` as plain ints; ``v_n = 2 u_{n+1} - A u_n``."""
    u, u1 = lucas_uu(A, B, n, modulus)
    v = 2 * u1 - A * u
    if modulus is not None:
        v %= modulus
    return u, v


def lucas_pair_mod(params: LucasParams, n: int, modulus: int) -> LucasPair:
    check_modulus(modulus)
    u, v = lucas_uv(params.A, params.B, n, modulus)
    return LucasPair(Residue(u, modulus), Residue(v, modulus), n, params, modulus)


def lucas_u_at(params: LucasParams, n: int, modulus: int) -> Residue:
    """``u_n`` for ``n >= -1``, with ``u_{-1} = -1/B``."""
    check_modulus(modulus)
    if n == -1:
        return -invmod(params.B, modulus)
    if n < -1:
        raise IndexOutOfDomain(f"u_n is defined here only for n >= -1, got {n}")
    return Residue(lucas_uu(params.A, params.B, n, modulus)[0], modulus)


def lucas_v_at(params: LucasParams, n: int, modulus: int) -> Residue:
    """``v_n`` for ``n >= -1``, with ``v_{-1} = A/B``."""
    check_modulus(modulus)
    if n == -1:
        return Residue(params.A * invmod(params.B, modulus), modulus)
    if n < -1:
        raise IndexOutOfDomain(f"v_n is defined here only for n >= -1, got {n}")
    return Residue(lucas_uv(params.A, params.B, n, modulus)[1], modulus)


def poly_u_mod(n: int, x: int, modulus: int) -> int:
    """``u_n(x) mod modulus`` as a plain int, ``n >= -1`` (``u_{-1} = -1``)."""
    if n == -1:
        return (-1) % modulus
    return lucas_uu(x, 1, n, modulus)[0]


def poly_v_mod(n: int, x: int, modulus: int) -> int:
    """``v_n(x) mod modulus`` as a plain int, ``n >= -1`` (``v_{-1} = x``)."""
    if n == -1:
        return x % modulus
    return lucas_uv(x, 1, n, modulus)[1]


def poly_V_mod(n: int, x: int, modulus: int) -> int:
    """``V_n(x) mod modulus`` through the companion sequence ``v_n(x, -x)``."""
    return lucas_uv(x, -x, n, modulus)[1]


_POLY_CACHE: dict[str, list[Poly]] = {
    "u": [Poly((0,)), Poly((1,))],
    "v": [Poly((2,)), X],
    "V": [Poly((2,)), X],
}


def _poly_at(kind: str, n: int) -> Poly:
    seq = _POLY_CACHE[kind]
    while len(seq) <= n:
        a, b = seq[-2], seq[-1]
        seq.append(X * (b + a) if kind == "V" else X * b - a)
    return seq[n]


def poly_u(n: int) -> Poly:
    if n == -1:
        return Poly((-1,))
    if n < -1:
        raise IndexOutOfDomain(f"u_n(x) is defined for n >= -1, got {n}")
    return _poly_at("u", n)


def poly_v(n: int) -> Poly:
    if n == -1:
        return X
    if n < -1:
        raise IndexOutOfDomain(f"v_n(x) is defined for n >= -1, got {n}")
    return _poly_at("v", n)


def poly_V(n: int) -> Poly:
    if n < 0:
        raise IndexOutOfDomain(f"V_n(x) is defined for n >= 0, got {n}")
    return _poly_at("V", n)


# Values below index 0 where they are defined.
_NEGATIVE = {
    ("F", -1): 1,
    ("F", -2): -1,
    ("L", -1): -1,
    ("L", -2): 3,
}

_NAMED = {
    "F": (FIBONACCI, 0),
    "L": (FIBONACCI, 1),
    "P": (PELL, 0),
    "Q": (PELL, 1),
    "S": (S_PARAMS, 0),
}


def named_sequence(name: str, n: int, modulus: int | None = None) -> int:
    """F, L (Fibonacci/Lucas), P, Q (Pell and companion), S (``S_{n+1} = 4S_n - S_{n-1}``).

    Returns an exact int when ``modulus`` is None, otherwise a Residue.
    """
    if name not in _NAMED:
        raise IndexOutOfDomain(f"unknown sequence {name!r}")
    if n < 0:
        if (name, n) not in _NEGATIVE:
            raise IndexOutOfDomain(f"{name}_{n} is not defined")
        value = _NEGATIVE[name, n]
        return value if modulus is None else Residue(value, modulus)
    params, which = _NAMED[name]
    value = lucas_uv(params.A, params.B, n, modulus)[which]
    return value if modulus is None else Residue(value, modulus)


def quotient_by_p(value: int, p: int) -> Residue:
    """``(value / p) mod p`` for a value known mod ``p**2`` that ``p`` divides."""
    value %= p * p
    if value % p:
        raise NotDivisible(f"{value} is not divisible by {p}")
    return Residue(value // p, p)

