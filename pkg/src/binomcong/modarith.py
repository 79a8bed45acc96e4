"""Modular arithmetic substrate: residues, inverses, Jacobi symbols, primes.

Every modulus handled here is bounded by ``MAX_MODULUS`` (2**63 - 1).  Python
integers make the double-width product free; the bound exists so that values
can be handed to fixed-width consumers (numpy tables, JSON readers) safely.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from .errors import EvenModulus, ModulusTooLarge, NotInvertible, NotPrime, ZeroInput

MAX_MODULUS = (1 << 63) - 1

# Deterministic for every n < 3.3e24, which covers all 64-bit inputs.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SIEVE_LIMIT = 10_000_000


def check_modulus(modulus: int) -> int:
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    if modulus > MAX_MODULUS:
        raise ModulusTooLarge(f"modulus {modulus} exceeds 2**63 - 1")
    return modulus


class Residue(int):
    """An integer in ``[0, modulus)`` that remembers its modulus.

    Subclasses ``int`` so residues compare and hash like their value; the
    arithmetic operators keep the modulus when both operands agree on it.
    """

    modulus: int

    def __new__(cls, value: int, modulus: int) -> "Residue":
        check_modulus(modulus)
        obj = super().__new__(cls, value % modulus)
        obj.modulus = modulus
        return obj

    def __repr__(self) -> str:
        return f"Residue({int(self)}, {self.modulus})"

    def _other(self, other) -> int:
        if isinstance(other, Residue) and other.modulus != self.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
        return int(other)

    def __add__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return Residue(int(self) + self._other(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return Residue(int(self) - self._other(other), self.modulus)

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return Residue(self._other(other) - int(self), self.modulus)

    def __mul__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return Residue(int(self) * self._other(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-int(self), self.modulus)

    def __pow__(self, exp, mod=None):
        if mod is not None:
            return NotImplemented
        if exp < 0:
            return Residue(pow(invmod(int(self), self.modulus), -exp, self.modulus), self.modulus)
        return Residue(pow(int(self), exp, self.modulus), self.modulus)

    def inverse(self) -> "Residue":
        return invmod(int(self), self.modulus)

    def __reduce__(self):
        return (Residue, (int(self), self.modulus))


@dataclass(frozen=True)
class PrimePower:
    """``p ** exponent`` with a verified prime base."""

    p: int
    exponent: int = 1
    modulus: int = field(init=False)

    def __post_init__(self):
        if self.exponent < 1:
            raise ValueError(f"exponent must be >= 1, got {self.exponent}")
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        modulus = self.p**self.exponent
        check_modulus(modulus)
        object.__setattr__(self, "modulus", modulus)


def powmod(base: int, exp: int, modulus: int) -> Residue:
    """``base ** exp`` reduced into ``[0, modulus)``; negative bases are fine."""
    if exp < 0:
        raise ValueError("exponent must be nonnegative; use invmod first")
    return Residue(pow(base % modulus, exp, check_modulus(modulus)), modulus)


def invmod(x: int, modulus: int) -> Residue:
    """Inverse of ``x`` modulo ``modulus``; raises NotInvertible with the gcd."""
    check_modulus(modulus)
    g = gcd(x, modulus)
    if g != 1:
        raise NotInvertible(x, modulus, g)
    if modulus == 1:
        return Residue(0, 1)
    return Residue(pow(x % modulus, -1, modulus), modulus)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol ``(a/n)`` for odd positive ``n``."""
    if n < 1 or n % 2 == 0:
        raise EvenModulus(f"Jacobi symbol needs an odd positive modulus, got {n}")
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


def valuation(x: int, p: int) -> int:
    """Exponent of ``p`` in the nonzero integer ``x``."""
    if x == 0:
        raise ZeroInput("valuation of 0 is infinite")
    x = abs(x)
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def split_p(x: int, p: int) -> tuple[int, int]:
    """Return ``(v, u)`` with ``x = p**v * u`` and ``p`` not dividing ``u``."""
    if x == 0:
        raise ZeroInput("cannot split 0")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v, x


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit inputs."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _sieve(limit: int) -> bytearray:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return flags


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes in ``[lo, hi]`` in ascending order."""
    lo = max(lo, 2)
    if hi < lo:
        return []
    if hi <= _SIEVE_LIMIT:
        flags = _sieve(hi)
        return [i for i in range(lo, hi + 1) if flags[i]]
    return [n for n in range(lo, hi + 1) if is_prime(n)]
