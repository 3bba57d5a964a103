"""Exact Dedekind sums: evaluation, integrality of differences, and
fractional-part class enumeration.

The scaled sum S(m/n) = 12 s(m/n) is computed exactly (rationals only) by
either the O(n) definitional sum or the O(log n) continued-fraction closed
form; two units share the fractional part of S exactly when
(m1 m2 - 1)(m1 - m2) == 0 mod n, and for square-free n the class of m1 has
exactly 2^s members, enumerable through the CRT.
"""

from .core import (
    ContinuedFraction,
    DedekindEvaluation,
    Method,
    cf_expand,
    dedekind_sum_bhk,
    dedekind_sum_naive,
    fractional_residue,
    sawtooth,
)
from .equivalence import (
    EquivalenceReport,
    NotSquarefreeError,
    SquarefreeFactorization,
    build_report,
    classify_all,
    count_thm3,
    enumerate_bruteforce,
    enumerate_crt,
    factor_squarefree,
    local_solutions,
    same_fractional_part,
    thm2_condition,
)
from .exact import (
    NotCoprimeError,
    NotInvertibleError,
    Rational,
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
from .reference import WORKED_EXAMPLE, ReferenceExample, verify_worked_example

__version__ = "0.1.0"

__all__ = [
    "ContinuedFraction",
    "DedekindEvaluation",
    "EquivalenceReport",
    "Method",
    "NotCoprimeError",
    "NotInvertibleError",
    "NotSquarefreeError",
    "Rational",
    "ReferenceExample",
    "ResidueClass",
    "SquarefreeFactorization",
    "WORKED_EXAMPLE",
    "build_report",
    "cf_expand",
    "classify_all",
    "count_thm3",
    "crt_combine",
    "dedekind_sum_bhk",
    "dedekind_sum_naive",
    "enumerate_bruteforce",
    "enumerate_crt",
    "factor_squarefree",
    "fractional_residue",
    "gcd",
    "is_integer",
    "local_solutions",
    "mod_inverse",
    "rat",
    "rat_add",
    "rat_mul",
    "rat_str",
    "rat_sub",
    "same_fractional_part",
    "sawtooth",
    "thm2_condition",
    "verify_worked_example",
]
