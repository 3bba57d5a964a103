"""Golden worked example: the class of m1 = 17 mod n = 15015 = 3*5*7*11*13.

The table below is the published reference layout for this class: sixteen
residues whose scaled Dedekind sums all have fractional part 710/3003,
grouped by the integer offset of S(m2/n) from that base. It is embedded as
static data so the check needs no network or files, and every entry can be
recomputed from scratch here by the brute-force scan plus either evaluator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .equivalence import build_report
from .exact import Rational, rat_str


@dataclass(frozen=True)
class ReferenceExample:
    n: int
    m1: int
    base: Rational
    s_exponent: int
    groups: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def count(self) -> int:
        return sum(len(ms) for _, ms in self.groups)


WORKED_EXAMPLE = ReferenceExample(
    n=15015,
    m1=17,
    base=Fraction(710, 3003),
    s_exponent=4,
    groups=(
        (880, (17, 3533)),
        (40, (6023, 12542)),
        (16, (992, 2558, 6452, 12113)),
        (-8, (563, 2987, 6107, 6998, 11567, 12458)),
        (-32, (8993, 9572)),
    ),
)


def verify_worked_example(
    expected: ReferenceExample = WORKED_EXAMPLE,
) -> tuple[bool, list[str]]:
    """Recompute the class of expected.m1 mod expected.n and diff the table.

    Returns (passed, diff lines); the diff is empty exactly when the
    recomputed base fraction, exponent, member count, and every offset group
    match the table. A corrupted `expected` (test hook) yields the diff.
    """
    report = build_report(expected.m1, expected.n)
    diffs = []
    if report.base_fraction != expected.base:
        diffs.append(
            f"base: expected {rat_str(expected.base)}, "
            f"got {rat_str(report.base_fraction)}"
        )
    if report.s_exponent != expected.s_exponent:
        diffs.append(
            f"s exponent: expected {expected.s_exponent}, got {report.s_exponent}"
        )
    if report.count != expected.count:
        diffs.append(f"member count: expected {expected.count}, got {report.count}")
    got_groups = dict(report.groups)
    want_groups = dict(expected.groups)
    for offset in sorted(set(got_groups) | set(want_groups), reverse=True):
        want = want_groups.get(offset)
        got = got_groups.get(offset)
        if want is None:
            diffs.append(f"offset {offset}: unexpected group with members {list(got)}")
        elif got is None:
            diffs.append(f"offset {offset}: missing group, expected {list(want)}")
        elif want != got:
            diffs.append(
                f"offset {offset}: expected members {list(want)}, got {list(got)}"
            )
    return not diffs, diffs
