import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from binomcong.errors import EvenModulus, ModulusTooLarge, NotInvertible, NotPrime, ZeroInput
from binomcong.modarith import (
    MAX_MODULUS,
    PrimePower,
    Residue,
    invmod,
    is_prime,
    jacobi,
    powmod,
    primes_in,
    split_p,
    valuation,
)


def naive_primes(n):
    return [k for k in range(2, n + 1) if all(k % q for q in range(2, math.isqrt(k) + 1))]


@pytest.mark.parametrize("args, expected", [((2, 4, 25), 16), ((7, 0, 13), 1), ((2, 6, 49), 15)])
def test_powmod_examples(args, expected):
    assert powmod(*args) == expected


def test_powmod_reduces_negative_base():
    assert powmod(-2, 3, 7) == (-8) % 7


@given(st.integers(-10**6, 10**6), st.integers(0, 20), st.integers(1, 10**9))
def test_powmod_matches_repeated_multiplication(base, exp, m):
    acc = 1 % m
    for _ in range(exp):
        acc = acc * base % m
    assert powmod(base, exp, m) == acc


def test_invmod_examples():
    assert invmod(4, 125) == 94
    assert invmod(1, 7) == 1
    with pytest.raises(NotInvertible) as info:
        invmod(3, 6)
    assert info.value.gcd == 3


@settings(max_examples=300)
@given(st.integers(2, 2**32), st.integers(-(2**40), 2**40))
def test_invmod_is_inverse(m, x):
    if math.gcd(x, m) != 1:
        with pytest.raises(NotInvertible):
            invmod(x, m)
    else:
        assert invmod(x, m) * x % m == 1


def test_jacobi_examples():
    assert jacobi(5, 3) == -1
    assert jacobi(3, 5) == -1
    assert jacobi(0, 3) == 0
    with pytest.raises(EvenModulus):
        jacobi(3, 8)


def test_jacobi_matches_square_root_search():
    for p in primes_in(3, 200):
        squares = {x * x % p for x in range(1, p)}
        for a in range(p):
            expected = 0 if a == 0 else (1 if a in squares else -1)
            assert jacobi(a, p) == expected, (a, p)


def test_jacobi_completely_multiplicative():
    for n in range(1, 100, 2):
        for a in range(-20, 21):
            for b in range(-20, 21):
                assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)


def test_valuation_examples():
    assert valuation(50, 5) == 2
    assert valuation(7, 5) == 0
    assert valuation(252, 5) == 0
    assert valuation(-16, 2) == 4
    with pytest.raises(ZeroInput):
        valuation(0, 3)


def test_split_p():
    assert split_p(250, 5) == (3, 2)
    assert split_p(-12, 2) == (2, -3)


def test_primes_in_examples():
    assert primes_in(2, 11) == [2, 3, 5, 7, 11]
    assert primes_in(24, 28) == []
    assert primes_in(90, 100) == [97]
    assert primes_in(10, 5) == []
    assert primes_in(-5, 1) == []


def test_primes_in_matches_trial_division():
    assert primes_in(2, 10**5) == naive_primes(10**5)


def test_primes_in_beyond_sieve_range():
    lo = 10**7 - 300
    expected = [k for k in range(lo, lo + 601) if all(k % q for q in range(2, math.isqrt(k) + 1))]
    assert primes_in(lo, lo + 600) == expected


def test_is_prime_known_values():
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert not is_prime(1) and not is_prime(0) and not is_prime(-7)
    rng = random.Random(7)
    small = set(naive_primes(20000))
    for _ in range(2000):
        k = rng.randrange(20000)
        assert is_prime(k) == (k in small)


def test_residue_arithmetic():
    a = Residue(7, 11)
    b = Residue(5, 11)
    assert a + b == 1 and (a + b).modulus == 11
    assert a - b == 2
    assert a * b == 2
    assert -a == 4
    assert a ** -1 == invmod(7, 11)
    assert a.inverse() * a == 1
    assert Residue(-1, 5) == 4


def test_prime_power_validation():
    pp = PrimePower(5, 3)
    assert pp.modulus == 125
    with pytest.raises(NotPrime):
        PrimePower(9, 1)
    with pytest.raises(ModulusTooLarge):
        PrimePower(3, 60)
    assert MAX_MODULUS == 2**63 - 1
