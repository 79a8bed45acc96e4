from fractions import Fraction

import pytest

from binomcong.identities import (
    binom,
    check_cor21,
    check_lemma41,
    check_staver,
    check_thm21_u,
    check_thm21_v,
    lemma41_at,
    staver_forms,
    thm21_u_sides,
    u_shifted,
)
from binomcong.sequences import poly_u_mod


def test_binom_convention():
    assert binom(4, 2) == 6
    assert binom(4, -1) == 0
    assert binom(4, 5) == 0
    assert binom(-1, 0) == 0


@pytest.mark.parametrize("n", range(1, 13))
def test_shifted_binomial_polynomial_identities(n):
    for d in range(-15, 16):
        assert check_thm21_u(n, d), (n, d)
        assert check_thm21_v(n, d), (n, d)


def test_fibonacci_lucas_specialisations():
    for n in range(1, 21):
        for d in range(0, 21):
            for which in ("2.3", "2.4", "2.5"):
                assert check_cor21(which, n, d), (which, n, d)


def test_half_central_identity_as_polynomials():
    samples = [Fraction(3), Fraction(-2), Fraction(5, 7)]
    for n in range(1, 31):
        assert check_lemma41(n, samples if n <= 8 else ())


def test_half_central_identity_pointwise():
    for n in (2, 5, 9):
        for x in (Fraction(1), Fraction(-3, 2), Fraction(7)):
            lhs, rhs = lemma41_at(n, x)
            assert lhs == rhs


def test_three_forms_of_central_over_k_sum():
    for n in range(1, 51):
        assert check_staver(n)
    assert staver_forms(1) == (2, 2, 2)


def test_identity_check_detects_mismatch():
    result = check_thm21_u(3, 1)
    assert result.equal
    lhs, rhs = thm21_u_sides(3, 1)
    assert lhs != rhs + 1


def test_invalid_arguments():
    with pytest.raises(ValueError):
        check_thm21_u(0, 1)
    with pytest.raises(ValueError):
        check_cor21("2.9", 2, 1)
    with pytest.raises(ValueError):
        check_cor21("2.3", 2, -1)


def test_bridge_to_modular_sums():
    """Reducing both sides at n = p^a, x = m gives the mod-p sum identity."""
    for p, a in [(3, 1), (5, 1), (7, 1), (3, 2)]:
        n = p**a
        for m in (1, 2, 4, -1, 6):
            if m % p == 0:
                continue
            for d in range(0, n + 1):
                lhs, rhs = thm21_u_sides(n, d)
                assert lhs.eval_mod(m, p) == rhs.eval_mod(m, p)
                # mod p only k = 0 and k = p^a survive, with C(2p^a, p^a) == 2
                expected = poly_u_mod(n + d, m - 2, p)
                if d >= 1:
                    expected += 2 * u_shifted(d).eval_mod(m, p)
                assert rhs.eval_mod(m, p) == expected % p
