import random
from fractions import Fraction

import pytest

from binomcong.errors import (
    DivisionByZero,
    InsufficientPrecision,
    NegativeValuation,
    PrecisionExhausted,
    PrimeMismatch,
)
from binomcong.padic import (
    PadicTrunc,
    padic_add,
    padic_div,
    padic_from_int,
    padic_from_ratio,
    padic_mul,
    padic_sum,
    padic_to_residue,
    sum_to_residue,
)


def frac_valuation(x: Fraction, p: int) -> int:
    v, num, den = 0, x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def as_fraction(a: PadicTrunc) -> Fraction:
    if a.is_zero:
        return Fraction(0)
    return Fraction(a.p) ** a.valuation * a.unit


def test_from_int_examples():
    a = padic_from_int(50, 5, 3)
    assert (a.valuation, a.unit) == (2, 2)
    assert padic_from_int(0, 7, 2).is_zero
    b = padic_from_int(-6, 5, 3)
    assert (b.valuation, b.unit) == (0, 119)


def test_mul_examples():
    a = PadicTrunc(5, 1, 2, 3)
    b = PadicTrunc(5, 0, 3, 3)
    c = padic_mul(a, b)
    assert (c.valuation, c.unit) == (1, 6)
    assert padic_mul(a, PadicTrunc.zero(5, 3)).is_zero
    q = padic_mul(padic_from_int(70, 5, 3), padic_div(padic_from_int(1, 5, 3), padic_from_int(4, 5, 3)))
    assert (q.valuation, q.unit) == (1, 66)


def test_div_examples():
    x = PadicTrunc(5, 2, 1, 3)
    assert (padic_div(x, x).valuation, padic_div(x, x).unit) == (0, 1)
    q = padic_div(padic_from_int(70, 5, 3), padic_from_int(4, 5, 3))
    assert (q.valuation, q.unit) == (1, 66)
    r = padic_div(PadicTrunc(5, 0, 1, 3), PadicTrunc(5, 1, 1, 3))
    assert (r.valuation, r.unit) == (-1, 1)
    with pytest.raises(DivisionByZero):
        padic_div(x, PadicTrunc.zero(5, 3))


def test_add_examples():
    s = padic_add(PadicTrunc(5, 0, 1, 3), PadicTrunc(5, 0, 4, 3))
    assert (s.valuation, s.unit, s.precision) == (1, 1, 2)
    x = PadicTrunc(5, 0, 2, 3)
    assert padic_add(x, PadicTrunc.zero(5, 3)) == x
    t = padic_add(PadicTrunc(5, 0, 2, 3), PadicTrunc(5, 2, 1, 3))
    assert (t.valuation, t.unit, t.precision) == (0, 27, 3)


def test_add_exhausts_precision():
    x = padic_from_int(7, 5, 2)
    with pytest.raises(PrecisionExhausted):
        padic_add(x, padic_from_int(-7, 5, 2))


def test_prime_mismatch():
    with pytest.raises(PrimeMismatch):
        padic_mul(padic_from_int(1, 3, 2), padic_from_int(1, 5, 2))


def test_to_residue_examples():
    assert padic_to_residue(PadicTrunc(5, 1, 66, 3), 3) == 80
    assert padic_to_residue(PadicTrunc.zero(5, 3), 3) == 0
    with pytest.raises(NegativeValuation):
        padic_to_residue(PadicTrunc(5, -1, 1, 3), 1)
    with pytest.raises(InsufficientPrecision):
        padic_to_residue(PadicTrunc(5, 0, 1, 2), 3)


def test_round_trip():
    rng = random.Random(1)
    for p in (3, 5, 7, 11):
        for N in (1, 2, 4):
            M = p**N
            for _ in range(300):
                x = rng.randrange(-M + 1, M)
                assert padic_to_residue(padic_from_int(x, p, N), N) == x % M


def _random_rational(rng, p):
    num = rng.randint(-60, 60)
    den = rng.randint(1, 60)
    while den % p == 0:
        den = rng.randint(1, 60)
    return Fraction(num, den)


def _run_chain(start, steps, p, N):
    acc = padic_from_ratio(start.numerator, start.denominator, p, N)
    for op, r in steps:
        operand = padic_from_ratio(r.numerator, r.denominator, p, N)
        acc = {"add": padic_add, "mul": padic_mul, "div": padic_div}[op](acc, operand)
    return acc


def _exact_chain(start, steps):
    acc = start
    for op, r in steps:
        acc = acc + r if op == "add" else acc * r if op == "mul" else acc / r
    return acc


def test_oracle_equivalence_random_chains():
    """Chains at N = 6 agree with exact rationals: never optimistic, and equal mod p^3."""
    rng = random.Random(20240601)
    compared = 0
    for trial in range(15000):
        p = rng.choice([2, 3, 5, 7, 11, 13])
        start = _random_rational(rng, p)
        steps = [(rng.choice(["add", "mul", "div"]), _random_rational(rng, p)) for _ in range(rng.randint(1, 8))]
        try:
            exact = _exact_chain(start, steps)
        except ZeroDivisionError:
            # an earlier cancellation may legitimately stop the chain first
            with pytest.raises((DivisionByZero, PrecisionExhausted)):
                _run_chain(start, steps, p, 6)
            continue
        try:
            got = _run_chain(start, steps, p, 6)
        except PrecisionExhausted:
            # only legitimate when the chain passed through a heavy cancellation
            continue
        if got.is_zero:
            assert exact == 0
            continue
        # the claimed digits are correct: exact - got has valuation >= v + N
        diff = exact - as_fraction(got)
        assert diff == 0 or frac_valuation(diff, p) >= got.valuation + got.precision, (p, start, steps)
        if exact == 0 or frac_valuation(exact, p) < 0 or got.valuation + got.precision < 3:
            continue
        M = p**3
        expected = exact.numerator * pow(exact.denominator, -1, M) % M
        assert padic_to_residue(got, 3) == expected
        compared += 1
    assert compared >= 10**4


def test_addition_precision_is_a_prefix_of_wider_run():
    rng = random.Random(99)
    checked = 0
    for _ in range(3000):
        p = rng.choice([2, 3, 5, 7])
        start = _random_rational(rng, p)
        steps = [(rng.choice(["add", "mul", "div"]), _random_rational(rng, p)) for _ in range(rng.randint(1, 8))]
        try:
            narrow = _run_chain(start, steps, p, 6)
            wide = _run_chain(start, steps, p, 8)
        except (PrecisionExhausted, DivisionByZero):
            continue
        if narrow.is_zero:
            assert wide.is_zero
            continue
        assert wide.valuation == narrow.valuation
        assert wide.precision >= narrow.precision
        assert wide.unit % p**narrow.precision == narrow.unit
        checked += 1
    assert checked > 2000


def test_padic_sum_batches_precision():
    terms = [padic_from_int(x, 5, 3) for x in (1, 4, 20)]
    s = padic_sum(terms)
    assert (s.valuation, s.unit, s.precision) == (2, 1, 1)
    with pytest.raises(PrecisionExhausted):
        padic_sum(terms + [padic_from_int(100, 5, 3)])
    assert padic_sum([], p=5).is_zero


def test_sum_to_residue_handles_vanishing_sums():
    assert sum_to_residue(5, [(0, 1), (0, 4)], 1, 1) == 0
    assert sum_to_residue(5, [(-1, 1), (-1, 4)], 3, 1) == 1
    with pytest.raises(NegativeValuation):
        sum_to_residue(5, [(-1, 1)], 3, 1)
    with pytest.raises(InsufficientPrecision):
        sum_to_residue(5, [(0, 1)], 1, 2)
