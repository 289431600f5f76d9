"""Classification of hsop degree sequences for binary forms of degree 3..8.

``admissible(n, seq)`` is the exact characterisation of hsop degree
sequences for ``3 <= n <= 8``. A sequence is *minimal* when it is admissible
and no entry ``d`` splits as ``d' + d''`` with both replacement sequences
admissible; ``enumerate_minimal`` finds all of them by a bounded search.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple, Sequence

from hsop.conditions import (
    AdmissibilityReport,
    DegreeSequence,
    Violation,
    canonical,
    theorem1_check,
)
from hsop.errors import LengthMismatch, PreconditionFailed, UnsupportedDegree
from hsop.series import hsop_numerator

log = logging.getLogger(__name__)

__all__ = [
    "SUPPORTED_DEGREES",
    "KNOWN_MINIMAL",
    "Rule",
    "ReductionWitness",
    "ScanReport",
    "rules_for",
    "admissible",
    "is_admissible",
    "find_reduction",
    "is_minimal",
    "enumeration_bounds",
    "enumerate_minimal",
    "enumerate_shard",
    "merge_shards",
    "conjecture_scan",
]

SUPPORTED_DEGREES = range(3, 9)


def _ids(values: Iterable[int]) -> str:
    return "_".join(str(v) for v in values)


_COUNT_WORDS = {1: "one", 2: "two", 3: "three", 4: "four", 5: "five"}


class Rule(NamedTuple):
    """One clause of an admissibility predicate.

    ``kind`` is one of
      * ``"div"``: at least ``count`` entries divisible by ``modulus``;
      * ``"at_most"``: at most ``count`` entries with value in ``values``;
      * ``"forbid"``: ``values`` (a multiset) is not contained in the sequence.
    """

    rule_id: str
    kind: str
    description: str
    modulus: int = 0
    count: int = 0
    values: tuple[int, ...] = ()

    def witness(self, seq: Sequence[int]) -> tuple[int, ...] | None:
        """Entries demonstrating a violation, or ``None`` when the clause holds."""
        if self.kind == "div":
            hits = tuple(d for d in seq if d % self.modulus == 0)
            return hits if len(hits) < self.count else None
        if self.kind == "at_most":
            hits = tuple(d for d in seq if d in self.values)
            return hits if len(hits) > self.count else None
        have = Counter(seq)
        need = Counter(self.values)
        return self.values if all(have[v] >= c for v, c in need.items()) else None


def _div(n: int, q: int, c: int) -> Rule:
    if q == 2 and c == n - 2:
        return Rule(f"n{n}.all_even", "div", "all degrees even", 2, c)
    words = _COUNT_WORDS.get(c, str(c))
    return Rule(f"n{n}.div_by_{q}", "div", f"at least {words} divisible by {q}", q, c)


def _none_in(n: int, values: Sequence[int]) -> Rule:
    vals = tuple(sorted(values))
    return Rule(f"n{n}.none_in_{_ids(vals)}", "at_most", f"no degree in {set(vals)}", count=0, values=vals)


def _no_k_in(n: int, k: int, values: Sequence[int]) -> Rule:
    vals = tuple(sorted(values))
    word = _COUNT_WORDS[k]
    return Rule(f"n{n}.no_{word}_in_{_ids(vals)}", "at_most", f"no {word} degrees in {set(vals)}", count=k - 1, values=vals)


def _forbid(n: int, values: Sequence[int]) -> Rule:
    vals = tuple(sorted(values))
    return Rule(f"n{n}.forbid_{_ids(vals)}", "forbid", f"{vals} is not a sub-multiset", values=vals)


_RULES: dict[int, tuple[Rule, ...]] = {
    3: (_div(3, 4, 1),),
    4: (
        _none_in(4, [1]),
        _div(4, 2, 1),
        _div(4, 3, 1),
    ),
    5: (
        _div(5, 2, 3),
        _none_in(5, [2, 6, 10, 14]),
        _forbid(5, [4, 4]),
        _forbid(5, [4, 22]),
        _div(5, 4, 2),
        _div(5, 6, 1),
        _div(5, 8, 1),
    ),
    6: (
        _none_in(6, [1, 3, 5, 7, 9, 11, 13]),
        _no_k_in(6, 2, [2, 17]),
        _no_k_in(6, 3, [2, 4, 8, 14, 17, 19, 23, 29]),
        _no_k_in(6, 3, [2, 6, 17, 21]),
        _div(6, 2, 3),
        _div(6, 3, 1),
        _div(6, 4, 1),
        _div(6, 5, 1),
    ),
    7: (
        _div(7, 2, 5),
        _none_in(7, [2, 6, 10]),
        _no_k_in(7, 2, [4]),
        _no_k_in(7, 4, [4, 8, 14, 16, 18, 22, 26, 28, 34, 38, 46, 58]),
        _div(7, 4, 3),
        _div(7, 6, 2),
        _div(7, 8, 1),
        _div(7, 10, 1),
        _div(7, 12, 1),
    ),
    8: (
        _none_in(8, [1]),
        _div(8, 2, 3),
        _div(8, 3, 2),
        _div(8, 4, 1),
        _div(8, 5, 1),
        _div(8, 6, 1),
        _div(8, 7, 1),
        *(
            _forbid(8, s)
            for s in ([2, 2], [3, 3], [2, 4, 4], [2, 5, 5], [3, 5, 5], [4, 4, 4], [5, 5, 5], [2, 3, 7, 7])
        ),
        *(_no_k_in(8, 4, s) for s in ([2, 3, 6], [2, 4, 5], [2, 4, 7])),
        *(
            _no_k_in(8, 5, s)
            for s in (
                [2, 3, 4, 5, 11],
                [2, 3, 4, 6, 11],
                [2, 3, 4, 7],
                [2, 3, 4, 8],
                [2, 3, 4, 9],
                [2, 3, 5, 6],
                [2, 3, 6, 7, 11],
            )
        ),
    ),
}

# Minimal sequences as listed in the literature; used as golden data.
KNOWN_MINIMAL: dict[int, frozenset[DegreeSequence]] = {
    3: frozenset({(4,)}),
    4: frozenset({(2, 3)}),
    5: frozenset({(4, 8, 12), (4, 8, 18)}),
    6: frozenset({(2, 4, 6, 10), (2, 4, 6, 15), (2, 4, 10, 15)}),
    7: frozenset(
        {
            (4, 8, 8, 12, 30), (4, 8, 12, 12, 20), (4, 8, 12, 12, 30), (4, 8, 12, 14, 30),
            (4, 8, 12, 18, 20), (4, 8, 12, 18, 30), (4, 12, 12, 12, 40), (4, 12, 12, 14, 40),
            (4, 12, 12, 18, 40), (4, 12, 14, 14, 120), (4, 12, 14, 18, 40), (4, 12, 14, 20, 24),
            (4, 12, 18, 18, 40), (4, 14, 14, 24, 60), (4, 14, 18, 20, 24), (4, 14, 18, 32, 60),
            (4, 18, 18, 20, 24), (4, 18, 18, 32, 60), (8, 12, 12, 14, 20), (8, 12, 14, 14, 60),
            (8, 12, 14, 18, 20), (12, 12, 14, 14, 40), (12, 14, 14, 20, 24),
        }
    ),
    8: frozenset(
        {
            (2, 3, 4, 5, 6, 7), (2, 3, 4, 5, 8, 42), (2, 3, 4, 5, 9, 42), (2, 3, 4, 5, 10, 42),
            (2, 3, 4, 6, 8, 35), (2, 3, 4, 6, 9, 35), (2, 3, 4, 7, 8, 30), (2, 3, 4, 7, 9, 30),
            (2, 3, 4, 8, 9, 210), (2, 3, 5, 6, 9, 28), (2, 3, 5, 6, 10, 28), (2, 3, 5, 9, 12, 14),
            (2, 4, 5, 6, 8, 21),
        }
    ),
}


def _check_degree(n: int) -> None:
    if n not in SUPPORTED_DEGREES:
        raise UnsupportedDegree(f"classification is available for 3 <= n <= 8, not n={n}")


def rules_for(n: int) -> tuple[Rule, ...]:
    _check_degree(n)
    return _RULES[n]


def _prepare(n: int, seq: Iterable[int]) -> DegreeSequence:
    _check_degree(n)
    degrees = canonical(seq)
    if len(degrees) != n - 2:
        raise LengthMismatch(f"n={n} needs {n - 2} degrees, got {len(degrees)}")
    return degrees


def admissible(n: int, seq: Iterable[int]) -> AdmissibilityReport:
    """Check ``seq`` against every clause of the degree-``n`` characterisation."""
    degrees = _prepare(n, seq)
    violations = []
    for rule in _RULES[n]:
        w = rule.witness(degrees)
        if w is not None:
            violations.append(Violation(rule.rule_id, rule.description, w))
    return AdmissibilityReport(n, degrees, tuple(violations))


def _make_predicate(n: int) -> Callable[[Sequence[int]], bool]:
    divs = [(r.modulus, r.count) for r in _RULES[n] if r.kind == "div"]
    at_most = [(frozenset(r.values), r.count) for r in _RULES[n] if r.kind == "at_most"]
    forbids = [tuple(Counter(r.values).items()) for r in _RULES[n] if r.kind == "forbid"]

    def predicate(seq: Sequence[int]) -> bool:
        for q, c in divs:
            k = 0
            for d in seq:
                if d % q == 0:
                    k += 1
            if k < c:
                return False
        for values, c in at_most:
            k = 0
            for d in seq:
                if d in values:
                    k += 1
            if k > c:
                return False
        if forbids:
            have = Counter(seq)
            for pattern in forbids:
                if all(have[v] >= c for v, c in pattern):
                    return False
        return True

    return predicate


_PREDICATES = {n: _make_predicate(n) for n in SUPPORTED_DEGREES}


def is_admissible(n: int, seq: Sequence[int]) -> bool:
    """Boolean fast path of :func:`admissible`; no normalisation or length check."""
    return _PREDICATES[n](seq)


@dataclass(frozen=True)
class ReductionWitness:
    """``degree`` splits as ``left + right`` with both replaced sequences admissible."""

    degree: int
    left: int
    right: int
    left_sequence: DegreeSequence
    right_sequence: DegreeSequence


def find_reduction(n: int, seq: Iterable[int]) -> ReductionWitness | None:
    """First split witness, scanning distinct entries and then ``d'`` upwards."""
    degrees = _prepare(n, seq)
    pred = _PREDICATES[n]
    if not pred(degrees):
        raise PreconditionFailed(f"{degrees} is not admissible for n={n}")
    for pos, d in enumerate(degrees):
        if pos and degrees[pos - 1] == d:
            continue
        rest = degrees[:pos] + degrees[pos + 1 :]
        for a in range(1, d // 2 + 1):
            left = rest + (a,)
            if not pred(left):
                continue
            right = rest + (d - a,)
            if pred(right):
                return ReductionWitness(d, a, d - a, canonical(left), canonical(right))
    return None


def is_minimal(n: int, seq: Iterable[int]) -> bool:
    degrees = _prepare(n, seq)
    if not _PREDICATES[n](degrees):
        return False
    return find_reduction(n, degrees) is None


# ---------------------------------------------------------------------------
# bounded enumeration


def enumeration_bounds(n: int) -> tuple[int, ...]:
    """Upper bound on each entry of a sorted candidate, per position."""
    _check_degree(n)
    if n == 8:
        return (24, 24, 24, 24, 72, 432)
    per_entry = {3: 8, 4: 12, 5: 48, 6: 89, 7: 180}[n]
    return (per_entry,) * (n - 2)


def _n8_placement_ok(seq: Sequence[int]) -> bool:
    """Some ordering has the last entry divisible by 7, one of the last two by 5,
    and the entries within the 24/24/24/24/72/432 box."""
    for last_i, last in enumerate(seq):
        if last % 7 or last > 432:
            continue
        for fifth_i, fifth in enumerate(seq):
            if fifth_i == last_i or fifth > 72:
                continue
            if last % 5 and fifth % 5:
                continue
            if all(d <= 24 for i, d in enumerate(seq) if i not in (last_i, fifth_i)):
                return True
    return False


class _KeyedSearch:
    """Shared machinery for deciding minimality over a bounded region.

    Values up to ``top`` are grouped into keys such that admissibility of a
    sequence depends only on the multiset of keys of its entries.
    """

    def __init__(self, n: int, top: int):
        self.n = n
        self.top = top
        self.pred = _PREDICATES[n]
        rules = _RULES[n]
        special = sorted({v for r in rules if r.kind != "div" for v in r.values})
        moduli = sorted({r.modulus for r in rules if r.kind == "div"})
        self._special = set(special)
        key_of: dict[tuple, int] = {}
        self.key = [0] * (top + 1)
        self.rep: list[int] = []
        self.mask: list[int] = []
        for x in range(1, top + 1):
            sig = (x,) if x in self._special else tuple(x % q == 0 for q in moduli)
            k = key_of.get(sig)
            if k is None:
                k = key_of[sig] = len(self.rep)
                self.rep.append(x)
                self.mask.append(0)
            self.key[x] = k
            self.mask[k] |= 1 << x
        self._tables: dict[tuple[int, ...], tuple[int, int]] = {}

    def tables(self, rest_keys: tuple[int, ...]) -> tuple[int, int]:
        """``(good, sums)`` bitmasks over ``1..top`` for a rest given by sorted keys.

        ``good`` has bit ``x`` when rest + [x] is admissible; ``sums`` has bit
        ``x`` when ``x = a + b`` with ``a, b`` both good.
        """
        hit = self._tables.get(rest_keys)
        if hit is not None:
            return hit
        rest = [self.rep[k] for k in rest_keys]
        good = 0
        for k, x in enumerate(self.rep):
            rest.append(x)
            if self.pred(rest):
                good |= self.mask[k]
            rest.pop()
        sums = 0
        half = self.top // 2
        g = good
        while g:
            low = g & -g
            a = low.bit_length() - 1
            if a > half:
                break
            sums |= good << a
            g ^= low
        full = (1 << (self.top + 1)) - 1
        result = (good, sums & full)
        self._tables[rest_keys] = result
        return result

    def minimal(self, seq: Sequence[int]) -> bool:
        keys = [self.key[d] for d in seq]
        for i, d in enumerate(seq):
            if i and seq[i - 1] == d:
                continue
            rest = tuple(sorted(keys[:i] + keys[i + 1 :]))
            good, sums = self.tables(rest)
            if not (good >> d) & 1 or (sums >> d) & 1:
                return False
        return True


def enumerate_shard(n: int, shard: int = 0, num_shards: int = 1) -> list[DegreeSequence]:
    """Minimal sequences whose smallest entry falls in this shard.

    The candidate smallest entries ``1..bounds[0]`` are dealt round-robin to
    ``num_shards`` shards.
    """
    _check_degree(n)
    if not 0 <= shard < num_shards:
        raise ValueError("need 0 <= shard < num_shards")
    bounds = enumeration_bounds(n)
    r = n - 2
    search = _KeyedSearch(n, bounds[-1])
    rules = _RULES[n]
    divs = [(q.modulus, q.count) for q in rules if q.kind == "div"]
    mono = [q for q in rules if q.kind != "div"]
    special = {v for q in mono for v in q.values}

    found: list[DegreeSequence] = []
    key = search.key

    def last_step(prefix: list[int]) -> None:
        prefix_keys = tuple(sorted(key[d] for d in prefix))
        good, sums = search.tables(prefix_keys)
        lo = prefix[-1] if prefix else 1
        cand = (good & ~sums) >> lo
        x = lo
        while cand:
            if cand & 1:
                seq = (*prefix, x)
                if x <= bounds[-1] and search.minimal(seq):
                    if n != 8 or _n8_placement_ok(seq):
                        found.append(seq)
            cand >>= 1
            x += 1

    # counts[i] = entries of the prefix divisible by divs[i][0]
    counts = [0] * len(divs)

    def extend(prefix: list[int]) -> None:
        depth = len(prefix)
        if depth == r - 1:
            last_step(prefix)
            return
        lo = prefix[-1] if prefix else 1
        remaining = r - depth - 1
        for x in range(lo, bounds[depth] + 1):
            if depth == 0 and (x - 1) % num_shards != shard:
                continue
            hits = [i for i, (q, _) in enumerate(divs) if x % q == 0]
            if any(counts[i] + (i in hits) + remaining < c for i, (_, c) in enumerate(divs)):
                continue
            prefix.append(x)
            # adding a non-special value cannot break an at_most/forbid clause
            if x not in special or all(rule.witness(prefix) is None for rule in mono):
                for i in hits:
                    counts[i] += 1
                extend(prefix)
                for i in hits:
                    counts[i] -= 1
            prefix.pop()

    extend([])
    return sorted(found)


def merge_shards(parts: Iterable[Iterable[Sequence[int]]]) -> list[DegreeSequence]:
    return sorted({canonical(s) for part in parts for s in part})


def enumerate_minimal(n: int, workers: int = 1, shards: int | None = None) -> list[DegreeSequence]:
    """All minimal hsop degree sequences for the binary ``n``-ic, sorted."""
    _check_degree(n)
    shards = shards or workers
    if workers <= 1:
        parts = [enumerate_shard(n, i, shards) for i in range(shards)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(enumerate_shard, [n] * shards, range(shards), [shards] * shards))
    return merge_shards(parts)


# ---------------------------------------------------------------------------
# empirical scan for numerator obstructions


@dataclass
class ScanReport:
    n: int
    lower: int
    upper: int
    checked: int = 0
    obstructions: list[tuple[DegreeSequence, int]] = field(default_factory=list)

    @property
    def flagged(self) -> list[DegreeSequence]:
        return [s for s, _ in self.obstructions]


def conjecture_scan(n: int, lower: int, upper: int) -> ScanReport:
    """Numerators of all divisibility-passing sequences with entries in ``[lower, upper]``.

    A sequence is reported when its numerator has a negative coefficient,
    together with the first offending exponent.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if lower > upper or lower < 1:
        raise ValueError("need 1 <= lower <= upper")
    report = ScanReport(n, lower, upper)
    for seq in itertools.combinations_with_replacement(range(lower, upper + 1), n - 2):
        if not theorem1_check(n, seq).verdict:
            continue
        report.checked += 1
        num = hsop_numerator(n, seq, check=False)
        neg = num.first_negative()
        if neg is not None:
            report.obstructions.append((seq, neg))
    return report
