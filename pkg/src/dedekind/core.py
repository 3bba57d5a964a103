"""Dedekind-sum evaluation.

Two independent evaluators for the scaled Dedekind sum

    S(m/n) = 12 * sum_{k=1..n} ((k/n)) ((mk/n)),

where ((x)) is the sawtooth function: the O(n) definitional sum, and the
O(log n) Barkan-Hickerson-Knuth closed form driven by the continued-fraction
expansion of m/n. Both produce exact rationals and must agree on every
input; the definitional sum is the oracle the fast path is tested against.

S(m/n) depends only on the residue class of m mod n, so all entry points
reduce m mod n first. The fractional part of S(m/n) is (m + m*)/n mod 1,
with m* the inverse of m mod n; the two evaluators reach that residue by
different routes (extended Euclid vs. the next-to-last convergent), which
the tests exploit as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exact import NotCoprimeError, Rational, gcd, mod_inverse, rat_str


class Method(str, Enum):
    NAIVE = "naive"
    BHK = "bhk"


@dataclass(frozen=True)
class ContinuedFraction:
    """Continued-fraction expansion [a0, a1, ..., ak] of m/n with 0 <= m < n.

    quotients[0] is always 0; convergent_numerators[j] / convergent_denominators[j]
    is the j-th convergent, ending at m/n itself.
    """

    quotients: tuple[int, ...]
    convergent_numerators: tuple[int, ...]
    convergent_denominators: tuple[int, ...]

    @property
    def k(self) -> int:
        """Index of the last partial quotient."""
        return len(self.quotients) - 1


@dataclass(frozen=True)
class DedekindEvaluation:
    """An exact evaluation of S(m/n), with its fractional residue.

    value - fractional_residue/n is always an integer; method records which
    evaluator produced the value.
    """

    m: int
    n: int
    value: Rational
    fractional_residue: int
    method: Method

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "value": rat_str(self.value),
            "residue": self.fractional_residue,
            "method": self.method.value,
        }


def _require_coprime(m: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if gcd(m, n) != 1:
        raise NotCoprimeError(m, n)


def sawtooth(x: Rational) -> Rational:
    """The sawtooth ((x)): 0 at integers, else x - floor(x) - 1/2.

    Odd, 1-periodic, valued in (-1/2, 1/2); vanishes at half-integers too.
    """
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def dedekind_sum_naive(m: int, n: int) -> DedekindEvaluation:
    """S(m/n) by the definitional O(n) sum, in exact rational arithmetic.

    This is the oracle: a direct transcription of the defining sum, kept
    free of the continued-fraction machinery. The sawtooth values ((j/n))
    are tabulated once per call; the k-th term is ((k/n)) ((mk/n)) looked up
    through 1-periodicity of the sawtooth.
    """
    _require_coprime(m, n)
    m %= n
    saw = [sawtooth(Fraction(j, n)) for j in range(n)]
    total = Fraction(0)
    for k in range(1, n + 1):
        total += saw[k % n] * saw[(m * k) % n]
    residue = (m + mod_inverse(m, n)) % n
    return DedekindEvaluation(m, n, 12 * total, residue, Method.NAIVE)


def cf_expand(m: int, n: int) -> ContinuedFraction:
    """Euclidean continued-fraction expansion of (m mod n)/n with convergents.

    Plain floor-division quotients, no normalization of the final quotient.
    The convergents follow the standard two-term recursion; the last one is
    m/n itself, and consecutive ones satisfy the determinant identity
    s_j t_{j-1} - t_j s_{j-1} = (-1)^(j-1).
    """
    _require_coprime(m, n)
    m %= n
    quotients = [0]
    nums = [0]
    dens = [1]
    a, b = n, m
    s_prev, s_cur = 1, 0
    t_prev, t_cur = 0, 1
    while b:
        q, r = divmod(a, b)
        quotients.append(q)
        s_prev, s_cur = s_cur, q * s_cur + s_prev
        t_prev, t_cur = t_cur, q * t_cur + t_prev
        nums.append(s_cur)
        dens.append(t_cur)
        a, b = b, r
    return ContinuedFraction(tuple(quotients), tuple(nums), tuple(dens))


def dedekind_sum_bhk(m: int, n: int) -> DedekindEvaluation:
    """S(m/n) by the Barkan-Hickerson-Knuth closed form, O(log n).

    With m/n = [0, a1, ..., ak] and convergents s_j/t_j,

        S = sum_{j=1..k} (-1)^(j-1) a_j + (s_k + t_{k-1})/t_k - 3   (k odd)
        S = sum_{j=1..k} (-1)^(j-1) a_j + (s_k - t_{k-1})/t_k       (k even)

    and S = 0 in the trivial case k = 0 (n = 1). The fractional residue is
    read off the next-to-last convergent denominator: (m + (-1)^(k-1) t_{k-1})
    mod n, which equals (m + m*) mod n without computing an inverse.
    """
    _require_coprime(m, n)
    m %= n
    cf = cf_expand(m, n)
    k = cf.k
    if k == 0:
        return DedekindEvaluation(m, n, Fraction(0), 0, Method.BHK)
    alt = 0
    sign = 1
    for a in cf.quotients[1:]:
        alt += sign * a
        sign = -sign
    t_prev = cf.convergent_denominators[-2]
    if k % 2 == 1:
        value = alt + Fraction(m + t_prev, n) - 3
    else:
        value = alt + Fraction(m - t_prev, n)
    residue = (m + (-1) ** (k - 1) * t_prev) % n
    return DedekindEvaluation(m, n, value, residue, Method.BHK)


def fractional_residue(m: int, n: int) -> int:
    """The residue (m + m*) mod n, so that S(m/n) - residue/n is an integer.

    Computed by extended Euclid, independent of either sum evaluator.
    """
    _require_coprime(m, n)
    m %= n
    return (m + mod_inverse(m, n)) % n
