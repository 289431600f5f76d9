"""Dimension counts for invariants and covariants of binary forms.

The number of covariants of degree ``m`` and order ``a`` of a binary form of
degree ``n`` is given by the Cayley-Sylvester formula

    N(n, m, t) - N(n, m, t - 1),   t = (n*m - a) / 2,

where ``N(n, m, t)`` counts partitions of ``t`` fitting in an ``m x n`` box,
i.e. the coefficient of ``q**t`` in the Gaussian binomial ``[n+m choose n]_q``.
"""
from __future__ import annotations

import threading

__all__ = [
    "gaussian_binomial",
    "ferrers_count",
    "covariant_dim",
    "invariant_dim",
    "vanishing_classified",
    "dimension_table",
]

_box_cache: dict[tuple[int, int], tuple[int, ...]] = {}
_box_lock = threading.Lock()


def gaussian_binomial(w: int, h: int) -> tuple[int, ...]:
    """Coefficients of ``[w+h choose w]_q``, indexed by the power of ``q``.

    Entry ``t`` is the number of partitions of ``t`` into at most ``h`` parts,
    each at most ``w``. Results are cached under the symmetric key.
    """
    if w < 0 or h < 0:
        raise ValueError("box sides must be non-negative")
    w, h = min(w, h), max(w, h)
    key = (w, h)
    cached = _box_cache.get(key)
    if cached is not None:
        return cached

    start = h
    while start > 0 and (w, start) not in _box_cache:
        start -= 1
    coeffs = list(_box_cache.get((w, start), (1,)))
    new_entries = {}
    # [w+k choose w] = [w+k-1 choose w] * (1 - q^(w+k)) / (1 - q^k)
    for k in range(start + 1, h + 1):
        top = w + k
        size = w * k + 1
        prod = coeffs + [0] * (size - len(coeffs))
        for i in range(size - 1, top - 1, -1):
            prod[i] -= prod[i - top]
        for i in range(k, size):
            prod[i] += prod[i - k]
        coeffs = prod
        if w <= k:
            new_entries[(w, k)] = tuple(coeffs)
    with _box_lock:
        _box_cache.update(new_entries)
        _box_cache.setdefault(key, tuple(coeffs))
    return _box_cache[key]


def ferrers_count(n: int, m: int, t: int) -> int:
    """Number of partitions of ``t`` into at most ``m`` parts each at most ``n``.

    Total function: ``t < 0`` or ``t > n*m`` gives 0.
    """
    if n < 0 or m < 0:
        raise ValueError("box sides must be non-negative")
    if t < 0 or t > n * m:
        return 0
    return gaussian_binomial(n, m)[min(t, n * m - t)]


def covariant_dim(n: int, m: int, a: int) -> int:
    """Dimension of the space of covariants of degree ``m`` and order ``a``."""
    if n < 1 or m < 0 or a < 0:
        raise ValueError("need n >= 1, m >= 0, a >= 0")
    twice_t = n * m - a
    if twice_t < 0 or twice_t % 2:
        return 0
    t = twice_t // 2
    return ferrers_count(n, m, t) - ferrers_count(n, m, t - 1)


def invariant_dim(n: int, m: int) -> int:
    """``h^n_m``: dimension of the degree-``m`` invariants of the ``n``-ic."""
    return covariant_dim(n, m, 0)


def vanishing_classified(n: int, m: int) -> bool:
    """True when ``(n, m)`` is one of the listed cases with ``h^n_m = 0``.

    The check is purely by case list; it never computes a dimension.
    """
    if n < 1 or m < 1:
        raise ValueError("need n, m >= 1")
    pair = {n, m}
    if (n * m) % 2:
        return True
    if 1 in pair:
        return True
    if (m == 2 and n % 2) or (n == 2 and m % 2):
        return True
    if (m == 3 and n % 4 == 2) or (n == 3 and m % 4 == 2):
        return True
    if (m == 5 and n in (6, 10, 14)) or (n == 5 and m in (6, 10, 14)):
        return True
    if (m == 6 and n in (7, 9, 11, 13)) or (n == 6 and m in (7, 9, 11, 13)):
        return True
    return pair == {7, 10}


def dimension_table(n_max: int, m_max: int) -> list[list[int]]:
    """Grid of ``h^n_m``; row ``m-1`` holds degrees ``n = 1..n_max``."""
    return [[invariant_dim(n, m) for n in range(1, n_max + 1)] for m in range(1, m_max + 1)]


def format_table_tsv(n_max: int, m_max: int) -> str:
    """The dimension grid as TSV with a header row; zeros are printed as ``.``."""
    lines = ["m\\n\t" + "\t".join(str(n) for n in range(1, n_max + 1))]
    for m, row in enumerate(dimension_table(n_max, m_max), start=1):
        lines.append(str(m) + "\t" + "\t".join(str(v) if v else "." for v in row))
    return "\n".join(lines) + "\n"
