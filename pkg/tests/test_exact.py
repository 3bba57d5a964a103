"""Tests for the exact integer/rational arithmetic primitives."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dedekind.exact import (
    NotInvertibleError,
    ResidueClass,
    crt_combine,
    gcd,
    is_integer,
    mod_inverse,
    rat,
    rat_add,
    rat_mul,
    rat_str,
    rat_sub,
)


@pytest.mark.parametrize(
    "a,b,expected",
    [(12, 18, 6), (17, 15015, 1), (0, 7, 7), (0, 0, 0), (-12, 18, 6)],
)
def test_gcd(a, b, expected):
    assert gcd(a, b) == expected


@pytest.mark.parametrize(
    "num,den,expected",
    [
        (3550, 15015, Fraction(710, 3003)),
        (0, 5, Fraction(0, 1)),
        (2, -4, Fraction(-1, 2)),
        (7, 1, Fraction(7)),
    ],
)
def test_rat_reduces(num, den, expected):
    value = rat(num, den)
    assert value == expected
    assert value.denominator >= 1
    assert gcd(value.numerator, value.denominator) == 1


def test_rat_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)


def test_rat_scaling_invariance():
    for k in (2, -3, 17):
        assert rat(k * 3, k * 7) == rat(3, 7)


def test_rat_arithmetic():
    assert rat_add(rat(1, 3), rat(1, 6)) == rat(1, 2)
    assert rat_sub(rat(710, 3003) + 880, rat(710, 3003) + 40) == rat(840)
    assert rat_mul(rat(1, 17), rat(12)) == rat(12, 17)


@given(
    st.integers(-10**6, 10**6),
    st.integers(1, 10**6),
    st.integers(-10**6, 10**6),
    st.integers(1, 10**6),
)
def test_arithmetic_stays_reduced(a, b, c, d):
    x, y = rat(a, b), rat(c, d)
    for value in (rat_add(x, y), rat_sub(x, y), rat_mul(x, y)):
        assert value.denominator >= 1
        assert gcd(value.numerator, value.denominator) == 1


@pytest.mark.parametrize(
    "x,expected",
    [(Fraction(840), True), (Fraction(710, 3003), False), (Fraction(0), True)],
)
def test_is_integer(x, expected):
    assert is_integer(x) is expected


def test_rat_str_keeps_denominator():
    assert rat_str(Fraction(710, 3003)) == "710/3003"
    assert rat_str(Fraction(5)) == "5/1"
    assert rat_str(Fraction(-1, 2)) == "-1/2"


@pytest.mark.parametrize(
    "m,n,expected", [(17, 15015, 3533), (1, 9, 1), (2, 7, 4), (1, 1, 0), (5, 1, 0)]
)
def test_mod_inverse(m, n, expected):
    got = mod_inverse(m, n)
    assert got == expected
    assert (m * got) % n == 1 % n


def test_mod_inverse_negative_input_reduced_first():
    assert mod_inverse(-5, 7) == mod_inverse(2, 7)


def test_mod_inverse_not_invertible():
    with pytest.raises(NotInvertibleError):
        mod_inverse(6, 9)
    with pytest.raises(NotInvertibleError):
        mod_inverse(0, 5)


def test_mod_inverse_involution_exhaustive():
    for n in range(1, 501):
        for m in range(n):
            if gcd(m, n) == 1:
                assert mod_inverse(mod_inverse(m, n), n) == m % n


def test_residue_class_validation():
    with pytest.raises(ValueError):
        ResidueClass(3, 3)
    with pytest.raises(ValueError):
        ResidueClass(-1, 3)
    with pytest.raises(ValueError):
        ResidueClass(0, 0)


@pytest.mark.parametrize(
    "parts,expected",
    [
        ([(2, 3), (3, 5)], (8, 15)),
        ([(1, 3), (1, 5)], (1, 15)),
        ([(0, 1)], (0, 1)),
        ([(5, 7), (3, 4), (2, 9)], (47, 252)),
    ],
)
def test_crt_combine(parts, expected):
    got = crt_combine([ResidueClass(r, q) for r, q in parts])
    assert (got.residue, got.modulus) == expected


def test_crt_combine_matches_exhaustive_search():
    for moduli in ((3, 5), (7, 11), (2, 9, 5), (16, 9, 49)):
        prod = 1
        for q in moduli:
            prod *= q
        assert prod <= 10**4
        for x in range(0, prod, max(1, prod // 97)):
            parts = [ResidueClass(x % q, q) for q in moduli]
            hits = [
                y
                for y in range(prod)
                if all(y % q == x % q for q in moduli)
            ]
            got = crt_combine(parts)
            assert hits == [got.residue]
            assert got.modulus == prod


def test_crt_combine_rejects_bad_input():
    with pytest.raises(ValueError):
        crt_combine([])
    with pytest.raises(ValueError):
        crt_combine([ResidueClass(1, 6), ResidueClass(2, 9)])


@given(st.integers(0, 10**9))
def test_crt_combine_roundtrip(x):
    moduli = (11, 13, 17, 19)
    prod = 11 * 13 * 17 * 19
    parts = [ResidueClass(x % q, q) for q in moduli]
    got = crt_combine(parts)
    assert got.residue == x % prod
    assert got.modulus == prod
