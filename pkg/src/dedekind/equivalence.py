"""Fractional-part classes of Dedekind sums.

Two units m1, m2 mod n have S(m1/n) - S(m2/n) an integer exactly when
(m1*m2 - 1)(m1 - m2) == 0 mod n, equivalently when they share the residue
(m + m*) mod n. This module provides that predicate, enumeration of a full
class (by brute-force scan for any n, or by CRT-combining the local
solutions {m1, m1*} mod each prime when n is square-free), the 2^s count for
square-free n, and the partition of all units of (Z/nZ)* into classes.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .core import dedekind_sum_bhk, fractional_residue
from .exact import NotCoprimeError, Rational, ResidueClass, crt_combine, gcd, mod_inverse, rat_str

# below this, splitting a scan across processes costs more than it saves
_PARALLEL_MIN_N = 1 << 16


class NotSquarefreeError(ValueError):
    """n has a repeated prime factor; carries the offending prime."""

    def __init__(self, n: int, prime: int):
        super().__init__(f"{n} is divisible by {prime}^2")
        self.n = n
        self.prime = prime


@dataclass(frozen=True)
class SquarefreeFactorization:
    """The distinct primes p1 < ... < pt whose product is n."""

    primes: tuple[int, ...]
    n: int


@dataclass(frozen=True)
class EquivalenceReport:
    """One fractional-part class, grouped the way the worked example lays it out.

    Every member m2 satisfies S(m2/n) = base_fraction + offset for the
    integer offset of its group; m1 itself is always among the members.
    groups is ordered by descending offset, members ascending. s_exponent is
    present only when n is square-free, in which case count = 2**s_exponent.
    """

    n: int
    m1: int
    base_fraction: Rational
    groups: tuple[tuple[int, tuple[int, ...]], ...]
    count: int
    s_exponent: int | None

    @property
    def members(self) -> list[int]:
        return sorted(m for _, ms in self.groups for m in ms)

    def to_dict(self) -> dict:
        doc = {
            "n": self.n,
            "m1": self.m1,
            "base": rat_str(self.base_fraction),
        }
        if self.s_exponent is not None:
            doc["s"] = self.s_exponent
        doc["count"] = self.count
        doc["groups"] = [
            {"offset": off, "members": list(ms)} for off, ms in self.groups
        ]
        return doc


def thm2_condition(m1: int, m2: int, n: int) -> bool:
    """True iff (m1*m2 - 1)(m1 - m2) == 0 mod n.

    Holds exactly when S(m1/n) and S(m2/n) differ by an integer.
    """
    _require_units(n, m1, m2)
    return ((m1 * m2 - 1) * (m1 - m2)) % n == 0


def same_fractional_part(m1: int, m2: int, n: int) -> bool:
    """True iff S(m1/n) and S(m2/n) share their fractional part.

    Decided through the residues (m + m*) mod n; agrees with thm2_condition
    on every valid input.
    """
    _require_units(n, m1, m2)
    return fractional_residue(m1, n) == fractional_residue(m2, n)


def enumerate_bruteforce(m1: int, n: int, jobs: int = 1) -> list[int]:
    """All m2 in [0, n) with gcd(m2, n) = 1 and S(m1/n) - S(m2/n) an integer.

    O(n) scan of the congruence condition; works for any n. With jobs > 1
    the range is split into contiguous chunks scanned in parallel; the
    merged result is identical to the sequential one.
    """
    _require_units(n, m1)
    m1 %= n
    if jobs > 1 and n >= _PARALLEL_MIN_N:
        bounds = _chunk_bounds(n, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                _scan_chunk,
                [m1] * len(bounds),
                [n] * len(bounds),
                [lo for lo, _ in bounds],
                [hi for _, hi in bounds],
            )
        return [m2 for part in parts for m2 in part]
    return _scan_chunk(m1, n, 0, n)


def factor_squarefree(n: int) -> SquarefreeFactorization:
    """Factor a square-free n into its ordered primes (empty for n = 1).

    Deterministic trial division by 2, 3, then 6k+-1 up to sqrt(n); raises
    NotSquarefreeError naming the offending prime if any square divides n.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    primes = []
    rem = n
    for p in _trial_divisors():
        if p * p > rem:
            break
        if rem % p == 0:
            rem //= p
            if rem % p == 0:
                raise NotSquarefreeError(n, p)
            primes.append(p)
    if rem > 1:
        primes.append(rem)
    return SquarefreeFactorization(tuple(primes), n)


def local_solutions(m1: int, p: int) -> list[int]:
    """The residues mod a prime p that m2 may take in m1's class: {m1, m1*}.

    A one-element list exactly when m1 == +-1 mod p (then m1 is its own
    inverse), otherwise two elements; the length is the local factor in the
    class-size product.
    """
    if m1 % p == 0:
        raise NotCoprimeError(m1, p)
    r = m1 % p
    return sorted({r, mod_inverse(r, p)})


def enumerate_crt(m1: int, fact: SquarefreeFactorization) -> list[int]:
    """The class of m1 mod a square-free n, assembled by the CRT.

    Combines every choice of one local solution per prime; the local sets
    never overlap across choices, so the product has exactly 2^s members and
    equals the brute-force scan.
    """
    _require_units(fact.n, m1)
    if not fact.primes:
        return [0]
    locals_per_prime = [local_solutions(m1, p) for p in fact.primes]
    members = []
    for choice in itertools.product(*locals_per_prime):
        parts = [ResidueClass(r, p) for r, p in zip(choice, fact.primes)]
        members.append(crt_combine(parts).residue)
    return sorted(members)


def count_thm3(m1: int, fact: SquarefreeFactorization) -> tuple[int, int]:
    """(class size, s) for square-free n: size = 2^s.

    s counts the primes of n at which m1 is not congruent to +-1.
    """
    _require_units(fact.n, m1)
    s = sum(1 for p in fact.primes if m1 % p not in (1 % p, p - 1))
    return 2**s, s


def build_report(m1: int, n: int, jobs: int = 1) -> EquivalenceReport:
    """Enumerate m1's class and lay it out by integer offset from the base.

    base_fraction is residue/n in [0, 1); each member's S(m2/n) is evaluated
    by the fast path and grouped by its (always integral) offset from the
    base. Uses the CRT enumeration when n is square-free, the brute-force
    scan otherwise.
    """
    _require_units(n, m1)
    m1 %= n
    try:
        fact = factor_squarefree(n)
    except NotSquarefreeError:
        members = enumerate_bruteforce(m1, n, jobs=jobs)
        s_exponent = None
    else:
        members = enumerate_crt(m1, fact)
        s_exponent = count_thm3(m1, fact)[1]
    base = Fraction(fractional_residue(m1, n), n)
    by_offset: dict[int, list[int]] = {}
    for m2 in members:
        offset = dedekind_sum_bhk(m2, n).value - base
        if offset.denominator != 1:
            raise AssertionError(
                f"non-integer offset {offset} for member {m2} of class ({m1}, {n})"
            )
        by_offset.setdefault(int(offset), []).append(m2)
    groups = tuple(
        (off, tuple(sorted(by_offset[off])))
        for off in sorted(by_offset, reverse=True)
    )
    return EquivalenceReport(n, m1, base, groups, len(members), s_exponent)


def classify_all(n: int, jobs: int = 1) -> list[tuple[int, list[int]]]:
    """Partition the units mod n by their fractional residue (m + m*) mod n.

    Returns (residue, members) pairs sorted by residue, members ascending;
    the class sizes sum to phi(n). For n = 1 the single unit is 0.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if jobs > 1 and n >= _PARALLEL_MIN_N:
        bounds = _chunk_bounds(n, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                _classify_chunk,
                [n] * len(bounds),
                [lo for lo, _ in bounds],
                [hi for _, hi in bounds],
            )
    else:
        parts = [_classify_chunk(n, 0, n)]
    classes: dict[int, list[int]] = {}
    for part in parts:
        for r, ms in part:
            classes.setdefault(r, []).extend(ms)
    return sorted(classes.items())


def _require_units(n: int, *ms: int) -> None:
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    for m in ms:
        if gcd(m, n) != 1:
            raise NotCoprimeError(m, n)


def _scan_chunk(m1: int, n: int, lo: int, hi: int) -> list[int]:
    # congruence first: it fails for almost every m2, and the gcd then only
    # runs on the handful of survivors
    return [
        m2
        for m2 in range(lo, hi)
        if ((m1 * m2 - 1) * (m1 - m2)) % n == 0 and gcd(m2, n) == 1
    ]


def _classify_chunk(n: int, lo: int, hi: int) -> list[tuple[int, list[int]]]:
    classes: dict[int, list[int]] = {}
    for m in range(lo, hi):
        if gcd(m, n) == 1:
            classes.setdefault(fractional_residue(m, n), []).append(m)
    return sorted(classes.items())


def _chunk_bounds(n: int, jobs: int) -> list[tuple[int, int]]:
    step = -(-n // jobs)
    return [(lo, min(lo + step, n)) for lo in range(0, n, step)]


def _trial_divisors():
    yield 2
    yield 3
    d = 5
    while True:
        yield d
        yield d + 2
        d += 6
