"""Exact integer and rational arithmetic primitives.

Everything in this package computes with exact values; floats never appear.
Rationals are stdlib ``fractions.Fraction`` objects, which are stored reduced
with a positive denominator, so the ``Rational`` invariants hold by
construction. Modular inverses use the extended Euclidean algorithm directly
(rather than ``pow(m, -1, n)``) so they form an arithmetic route independent
of the continued-fraction machinery they are checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


class NotCoprimeError(ValueError):
    """An operation required gcd(m, n) = 1 and the inputs are not coprime."""

    def __init__(self, m: int, n: int):
        super().__init__(f"gcd({m}, {n}) = {math.gcd(m, n)}, expected 1")
        self.m = m
        self.n = n


class NotInvertibleError(ValueError):
    """No inverse of m exists mod n (the residue is not a unit)."""

    def __init__(self, m: int, n: int):
        super().__init__(f"{m} is not invertible mod {n} (gcd = {math.gcd(m, n)})")
        self.m = m
        self.n = n


@dataclass(frozen=True)
class ResidueClass:
    """A residue r mod a positive modulus, normalized so 0 <= r < modulus."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(
                f"residue {self.residue} not in [0, {self.modulus})"
            )

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus}"


def gcd(a: int, b: int) -> int:
    """Greatest common divisor, nonnegative; gcd(0, 0) = 0."""
    return math.gcd(a, b)


def rat(num: int, den: int = 1) -> Rational:
    """The reduced fraction num/den. Raises ZeroDivisionError for den = 0."""
    return Fraction(num, den)


def rat_add(x: Rational, y: Rational) -> Rational:
    return x + y


def rat_sub(x: Rational, y: Rational) -> Rational:
    return x - y


def rat_mul(x: Rational, y: Rational) -> Rational:
    return x * y


def is_integer(x: Rational) -> bool:
    """True iff x has denominator 1."""
    return x.denominator == 1


def rat_str(x: Rational) -> str:
    """Machine form "p/q", always with the denominator ("5" renders as "5/1")."""
    return f"{x.numerator}/{x.denominator}"


def mod_inverse(m: int, n: int) -> int:
    """The inverse of m mod n: the unique m* in [0, n) with m*m* == 1 mod n.

    Extended Euclidean algorithm; m may be negative or >= n (it is reduced
    first). For n = 1 the answer is 0, the only residue of the zero ring.
    Raises NotInvertibleError when gcd(m, n) != 1.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n == 1:
        return 0
    m0 = m % n
    r_prev, r_cur = n, m0
    s_prev, s_cur = 0, 1
    while r_cur:
        q = r_prev // r_cur
        r_prev, r_cur = r_cur, r_prev - q * r_cur
        s_prev, s_cur = s_cur, s_prev - q * s_cur
    if r_prev != 1:
        raise NotInvertibleError(m, n)
    return s_prev % n


def crt_combine(parts: list[ResidueClass]) -> ResidueClass:
    """Combine residues with pairwise-coprime moduli into one class.

    Returns the unique residue mod the product of the moduli that is
    congruent to every part. Raises ValueError on an empty list or when the
    moduli are not pairwise coprime.
    """
    if not parts:
        raise ValueError("crt_combine requires at least one residue class")
    r, n = parts[0].residue, parts[0].modulus
    for part in parts[1:]:
        if math.gcd(n, part.modulus) != 1:
            raise ValueError(
                f"moduli not pairwise coprime: gcd so far {n} vs {part.modulus}"
            )
        # lift: r + n*k == part.residue mod part.modulus
        k = ((part.residue - r) * mod_inverse(n, part.modulus)) % part.modulus
        r += n * k
        n *= part.modulus
    return ResidueClass(r % n, n)
