"""Cyclotomic field arithmetic against independent polynomial oracles."""

import random
from fractions import Fraction

import pytest

from pkummer import CycNum, cyclotomic_polynomial, phi_degree


# -- oracles -----------------------------------------------------------------

def poly_divmod(num, den):
    """Naive polynomial long division over Q, coefficients low to high."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while den and den[-1] == 0:
        den.pop()
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    while len(num) >= len(den) and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        k = len(num) - len(den)
        q = num[-1] / den[-1]
        quot[k] = q
        for i, c in enumerate(den):
            num[k + i] -= q * c
    while num and num[-1] == 0:
        num.pop()
    return quot, num


def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += Fraction(a) * b
    return out


def oracle_cyclotomic(n):
    """Phi_n by dividing x^n - 1 by the product of proper-divisor factors."""
    if n == 1:
        return [Fraction(-1), Fraction(1)]
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    den = [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            den = poly_mul(den, oracle_cyclotomic(d))
    quot, rem = poly_divmod(num, den)
    assert not rem
    return quot


def oracle_inverse_mod(poly, modulus):
    """Extended Euclid in Q[x]: s with s*poly = 1 mod modulus."""
    r0, r1 = [Fraction(c) for c in modulus], [Fraction(c) for c in poly]
    s0, s1 = [], [Fraction(1)]
    while any(r1):
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        prod = poly_mul(q, s1) if s1 else []
        new = [Fraction(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            new[i] += c
        for i, c in enumerate(prod):
            new[i] -= c
        while new and new[-1] == 0:
            new.pop()
        s0, s1 = s1, new
    const = r0[0]
    return [c / const for c in s0]


# -- cyclotomic polynomials ---------------------------------------------------

def test_polynomial_base_case():
    assert cyclotomic_polynomial(1) == (-1, 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 8, 12])
def test_polynomial_matches_division_oracle(n):
    assert list(cyclotomic_polynomial(n)) == oracle_cyclotomic(n)


def test_polynomial_known_values():
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)


def test_phi_degree():
    assert [phi_degree(n) for n in (1, 2, 3, 4, 5, 6, 12)] == [1, 1, 2, 2, 4, 2, 4]


# -- field arithmetic ----------------------------------------------------------

def test_root_powers_wrap():
    w = CycNum.root_of_unity(4)
    assert w * w ** 3 == CycNum.one(4)


def test_kummer_identities_small():
    w = CycNum.root_of_unity(4)
    assert sum((w ** i for i in range(4)), CycNum.zero(4)) == CycNum.zero(4)
    prod = CycNum.one(4)
    for i in range(1, 4):
        prod = prod * (CycNum.one(4) - w ** i)
    assert prod == CycNum.rational(4, 4)


@pytest.mark.parametrize("n", range(2, 13))
def test_kummer_identities_all_orders(n):
    w = CycNum.root_of_unity(n)
    assert w ** n == CycNum.one(n)
    total = CycNum.zero(n)
    prod = CycNum.one(n)
    for i in range(n):
        total = total + w ** i
        if i:
            term = CycNum.one(n) - w ** i
            assert term, f"1 - w^{i} must be invertible for n={n}"
            prod = prod * term
    assert total == CycNum.zero(n)
    assert prod == CycNum.rational(n, n)


def test_inverse_of_one():
    assert CycNum.one(6).inverse() == CycNum.one(6)


def test_inverse_one_minus_root_matches_euclid_oracle():
    w = CycNum.root_of_unity(4)
    got = (CycNum.one(4) - w).inverse()
    # oracle: inverse of (1 - x) modulo x^2 + 1
    s = oracle_inverse_mod([1, -1], [1, 0, 1])
    assert got == CycNum(4, s)
    assert got == CycNum(4, [Fraction(1, 2), Fraction(1, 2)])


def test_inverse_of_root_is_power():
    w = CycNum.root_of_unity(5)
    assert w.inverse() == CycNum.root_of_unity(5, 4)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycNum.zero(4).inverse()


@pytest.mark.parametrize("n", range(2, 13))
def test_inverse_roundtrip_randomized(n):
    rng = random.Random(n)
    checked = 0
    while checked < 100:
        a = CycNum(n, [Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                       for _ in range(phi_degree(n))])
        if a.is_zero():
            continue
        assert a * a.inverse() == CycNum.one(n)
        checked += 1


def test_root_of_unity_reductions():
    assert CycNum.root_of_unity(4, 0) == CycNum.one(4)
    # x^2 mod x^2 + 1 = -1
    assert CycNum.root_of_unity(4, 2) == CycNum.rational(4, -1)
    # x^4 mod Phi_5 = -1 - x - x^2 - x^3
    assert CycNum.root_of_unity(5, 4) == CycNum(5, [-1, -1, -1, -1])


def test_mixed_order_arithmetic_rejected():
    with pytest.raises(ValueError):
        CycNum.one(4) + CycNum.one(5)


def test_canonical_form_and_hash():
    a = CycNum(4, [Fraction(2, 4), 0, 1, 0])  # reduces: z^2 = -1
    b = CycNum(4, [Fraction(-1, 2), 0])
    assert a == b and hash(a) == hash(b)


def test_division_and_pow():
    w = CycNum.root_of_unity(8)
    assert (w ** -3) * w ** 3 == CycNum.one(8)
    assert (CycNum.rational(8, 3) / CycNum.rational(8, 6)) == CycNum.rational(8, Fraction(1, 2))


def test_serialization_roundtrip():
    a = CycNum(5, [1, Fraction(-2, 3), 0, 7])
    assert a.serialize() == ["1/1", "-2/3", "0/1", "7/1"]
    assert CycNum.deserialize(5, a.serialize()) == a
