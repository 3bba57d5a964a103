"""Built-in self checks: the module property suites at reduced bounds.

Each check sweeps a scaled-down version of an invariant the test suite pins
at full scale, so `dedekind selftest` gives a fast, dependency-free
confidence pass in the field.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, TextIO

from .core import (
    cf_expand,
    dedekind_sum_bhk,
    dedekind_sum_naive,
    sawtooth,
)
from .equivalence import (
    classify_all,
    count_thm3,
    enumerate_bruteforce,
    enumerate_crt,
    factor_squarefree,
    local_solutions,
    same_fractional_part,
    thm2_condition,
    NotSquarefreeError,
)
from .exact import ResidueClass, crt_combine, gcd, is_integer, mod_inverse
from .reference import verify_worked_example


def _units(n: int) -> list[int]:
    return [m for m in range(n) if gcd(m, n) == 1]


def _check_mod_inverse_involution() -> bool:
    for n in range(1, 101):
        for m in _units(n):
            if mod_inverse(mod_inverse(m, n), n) != m % n:
                return False
    return True


def _check_crt_exhaustive() -> bool:
    for moduli in ((3, 5), (4, 9, 25), (7, 8), (2, 3, 5, 7)):
        prod = 1
        for q in moduli:
            prod *= q
        for x in range(0, prod, max(1, prod // 50)):
            parts = [ResidueClass(x % q, q) for q in moduli]
            combined = crt_combine(parts)
            if combined.residue != x or combined.modulus != prod:
                return False
    return True


def _check_oracle_equivalence() -> bool:
    for n in range(1, 61):
        for m in _units(n):
            naive = dedekind_sum_naive(m, n)
            fast = dedekind_sum_bhk(m, n)
            if naive.value != fast.value:
                return False
            if naive.fractional_residue != fast.fractional_residue:
                return False
            if not is_integer(naive.value - Fraction(naive.fractional_residue, n)):
                return False
    return True


def _check_determinant_identity() -> bool:
    for m, n in ((7, 17), (355, 113 * 9 + 1), (12345, 100003), (1, 2)):
        if gcd(m, n) != 1:
            return False
        cf = cf_expand(m, n)
        s, t = cf.convergent_numerators, cf.convergent_denominators
        for j in range(1, cf.k + 1):
            if s[j] * t[j - 1] - t[j] * s[j - 1] != (-1) ** (j - 1):
                return False
    return True


def _check_reciprocity() -> bool:
    for n in range(1, 41):
        for m in range(1, 41):
            if gcd(m, n) == 1:
                lhs = dedekind_sum_bhk(m, n).value + dedekind_sum_bhk(n, m).value
                rhs = Fraction(m * m + n * n + 1, m * n) - 3
                if lhs != rhs:
                    return False
    return True


def _check_closed_form_and_symmetry() -> bool:
    for n in range(1, 201):
        if dedekind_sum_bhk(1, n).value != Fraction((n - 1) * (n - 2), n):
            return False
    for n in range(1, 61):
        for m in _units(n):
            v = dedekind_sum_bhk(m, n).value
            if dedekind_sum_bhk(mod_inverse(m, n), n).value != v:
                return False
            if dedekind_sum_bhk(n - m if m else 0, n).value != -v:
                return False
    return True


def _check_sawtooth() -> bool:
    for den in range(1, 21):
        for num in range(-40, 41):
            x = Fraction(num, den)
            if sawtooth(-x) != -sawtooth(x):
                return False
            if sawtooth(x + 1) != sawtooth(x):
                return False
            if sawtooth(x) != 0 and not -Fraction(1, 2) < sawtooth(x) < Fraction(1, 2):
                return False
    return True


def _check_three_way_agreement() -> bool:
    for n in range(1, 41):
        units = _units(n)
        values = {m: dedekind_sum_naive(m, n).value for m in units}
        for m1 in units:
            for m2 in units:
                a = thm2_condition(m1, m2, n)
                b = same_fractional_part(m1, m2, n)
                c = is_integer(values[m1] - values[m2])
                if not (a == b == c):
                    return False
    return True


def _check_crt_vs_bruteforce() -> bool:
    for n in range(1, 151):
        try:
            fact = factor_squarefree(n)
        except NotSquarefreeError:
            continue
        for m1 in _units(n):
            crt = enumerate_crt(m1, fact)
            brute = enumerate_bruteforce(m1, n)
            count, s = count_thm3(m1, fact)
            if crt != brute or len(crt) != count or count != 2**s:
                return False
    return True


def _check_local_solution_sizes() -> bool:
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29):
        for m1 in range(1, p):
            size = len(local_solutions(m1, p))
            expected = 1 if m1 % p in (1 % p, p - 1) else 2
            if size != expected:
                return False
    return True


def _check_classify() -> bool:
    for n in range(1, 101):
        classes = classify_all(n)
        if sum(len(ms) for _, ms in classes) != len(_units(n)):
            return False
        for _, ms in classes:
            members = set(ms)
            if any(mod_inverse(m, n) not in members for m in ms):
                return False
    return True


def _check_worked_example() -> bool:
    ok, _ = verify_worked_example()
    return ok


_CHECKS: list[tuple[str, Callable[[], bool]]] = [
    ("mod_inverse involution (n <= 100)", _check_mod_inverse_involution),
    ("crt_combine vs exhaustive residues", _check_crt_exhaustive),
    ("fast evaluator matches definitional sum (n <= 60)", _check_oracle_equivalence),
    ("convergent determinant identity", _check_determinant_identity),
    ("reciprocity identity (m, n <= 40)", _check_reciprocity),
    ("closed form and symmetry laws", _check_closed_form_and_symmetry),
    ("sawtooth oddness and periodicity", _check_sawtooth),
    ("integrality condition three-way agreement (n <= 40)", _check_three_way_agreement),
    ("CRT enumeration vs brute force (square-free n <= 150)", _check_crt_vs_bruteforce),
    ("local solution sizes", _check_local_solution_sizes),
    ("classification covers all units (n <= 100)", _check_classify),
    ("worked example n=15015", _check_worked_example),
]


def run_selftest(out: TextIO) -> int:
    """Run every reduced-bound check; returns the number of failures."""
    failures = 0
    for name, check in _CHECKS:
        ok = check()
        print(("ok  " if ok else "FAIL") + f"  {name}", file=out)
        if not ok:
            failures += 1
    total = len(_CHECKS)
    print(f"{total - failures}/{total} checks passed", file=out)
    return failures
