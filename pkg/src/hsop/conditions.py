"""Necessary divisibility conditions on the degrees of an hsop.

For a binary form of degree ``n`` an hsop has ``n - 2`` elements. The
predicates here are necessary conditions only: a sequence failing them is
never an hsop degree sequence, but passing them proves nothing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, NamedTuple

__all__ = [
    "DegreeSequence",
    "DivisibilityRequirement",
    "Violation",
    "AdmissibilityReport",
    "canonical",
    "parse_sequence",
    "lemma1_congruence",
    "lemma3_requirement",
    "theorem1_requirements",
    "theorem1_counts",
    "theorem1_check",
]

DegreeSequence = tuple[int, ...]


def canonical(seq: Iterable[int]) -> DegreeSequence:
    """Sorted tuple form of a degree multiset."""
    out = tuple(sorted(int(d) for d in seq))
    if any(d < 1 for d in out):
        raise ValueError(f"degrees must be positive: {out}")
    return out


def parse_sequence(text: str) -> DegreeSequence:
    """Parse ``"4,8,12"`` (whitespace tolerated) into a canonical sequence."""
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if not parts:
        raise ValueError("empty degree sequence")
    return canonical(int(p) for p in parts)


class DivisibilityRequirement(NamedTuple):
    """At least ``min_count`` degrees must be divisible by ``modulus``."""

    modulus: int
    min_count: int


class Violation(NamedTuple):
    rule: str
    description: str
    witness: tuple[int, ...] = ()


@dataclass(frozen=True)
class AdmissibilityReport:
    n: int
    degrees: DegreeSequence
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.verdict

    @property
    def rules(self) -> list[str]:
        return [v.rule for v in self.violations]


def lemma1_congruence(n: int, j: int, t: int, d: int) -> bool:
    """Whether ``d*(n - 2j)/2 == 0 (mod t)``, evaluated as ``d*(n-2j) == 0 (mod 2t)``.

    An invariant of degree ``d`` can be nonzero on a form whose only nonzero
    coefficients ``a_i`` have ``i == j (mod t)`` only if this holds.
    """
    if t <= 0:
        raise ValueError("t must be positive")
    return (d * (n - 2 * j)) % (2 * t) == 0


def lemma3_requirement(n: int, t: int) -> DivisibilityRequirement:
    if t <= 1:
        raise ValueError("t must exceed 1")
    if n < 3:
        raise ValueError("n must be at least 3")
    if n % 2:
        j = next(j for j in range(n + 1) if gcd(n - 2 * j, t) == 1)
        return DivisibilityRequirement(2 * t, (n - j) // t)
    half = n // 2
    j = next(j for j in range(half + 1) if gcd(half - j, t) == 1)
    return DivisibilityRequirement(t, (n - j) // t)


def theorem1_requirements(n: int) -> list[DivisibilityRequirement]:
    """Divisibility requirements on hsop degrees, one per modulus, sorted by modulus.

    Requirements sharing a modulus are merged by keeping the larger count;
    zero-count requirements are dropped.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    need: dict[int, int] = {}

    def add(q: int, c: int) -> None:
        if c > 0:
            need[q] = max(need.get(q, 0), c)

    for t in range(2, n):
        add(2 * t if n % 2 else t, (n - 1) // t)
    if n % 2:
        add(2, n - 2)
    elif n % 4 == 2:
        add(2, n // 2)
    return [DivisibilityRequirement(q, c) for q, c in sorted(need.items())]


def theorem1_counts(n: int, seq: Iterable[int]) -> list[tuple[DivisibilityRequirement, int]]:
    """Each requirement with the number of degrees of ``seq`` that meet it."""
    degrees = canonical(seq)
    return [(req, sum(1 for d in degrees if d % req.modulus == 0)) for req in theorem1_requirements(n)]


def theorem1_check(n: int, seq: Iterable[int]) -> AdmissibilityReport:
    degrees = canonical(seq)
    violations = []
    for req, have in theorem1_counts(n, degrees):
        if have < req.min_count:
            violations.append(
                Violation(
                    f"thm1.mod{req.modulus}",
                    f"at least {req.min_count} degrees divisible by {req.modulus}, found {have}",
                    tuple(d for d in degrees if d % req.modulus == 0),
                )
            )
    return AdmissibilityReport(n, degrees, tuple(violations))
