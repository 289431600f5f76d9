"""Poincare series of invariant rings of binary forms and their numerators."""
from __future__ import annotations

import logging
import threading
from typing import Iterable

from hsop import cache
from hsop.combinatorics import gaussian_binomial
from hsop.conditions import canonical, theorem1_check
from hsop.errors import NotPolynomial, PreconditionFailed
from hsop.polynomial import IntPolynomial, TruncatedSeries

log = logging.getLogger(__name__)

__all__ = [
    "poincare_series",
    "dixmier_B",
    "pb_polynomial",
    "hsop_numerator",
    "first_negative",
    "denominator",
    "expand_quotient",
]

#: Extra coefficients beyond ``deg B`` that must vanish in ``P(t) B(t)``.
DEFAULT_WINDOW_MARGIN = 16


def poincare_series(n: int, order: int) -> TruncatedSeries:
    """``sum_m h^n_m t^m`` through ``t**order``."""
    if n < 1 or order < 0:
        raise ValueError("need n >= 1 and order >= 0")
    coeffs = []
    for m in range(order + 1):
        if (n * m) % 2:
            coeffs.append(0)
            continue
        t = n * m // 2
        box = gaussian_binomial(n, m)
        coeffs.append(box[t] - (box[t - 1] if t >= 1 else 0))
    return TruncatedSeries(tuple(coeffs), order)


def dixmier_B(n: int) -> IntPolynomial:
    """Dixmier's polynomial ``B(t)`` for which ``P(t) B(t)`` is a polynomial."""
    if n < 3:
        raise ValueError("B(t) is defined for n >= 3")
    p = IntPolynomial.one()
    if n % 2:
        for i in range(2, n):
            p = p.mul_binomial(2 * i)
        return p
    top = n - 1 if n % 4 == 2 else n - 3
    for i in range(2, top + 1):
        p = p.mul_binomial(i)
    p = p.mul_binomial(1, +1)
    if n % 4 == 0:
        p = p.mul_binomial((n - 2) // 2).mul_binomial(n - 1)
    return p


_pb_cache: dict[tuple[int, int], IntPolynomial] = {}
_pb_lock = threading.Lock()


def pb_polynomial(n: int, margin: int = DEFAULT_WINDOW_MARGIN) -> IntPolynomial:
    """The polynomial ``P(t) B(t)``.

    Computed from the series through ``t**(2*deg B + margin)``; every
    coefficient above ``deg B`` within that range must vanish, otherwise
    :class:`NotPolynomial` is raised.
    """
    key = (n, margin)
    hit = _pb_cache.get(key)
    if hit is not None:
        return hit
    B = dixmier_B(n)
    stored = cache.load(f"pb_n{n}_w{margin}")
    if stored is not None:
        result = IntPolynomial(tuple(stored))
    else:
        window_top = 2 * B.degree + margin
        product = poincare_series(n, window_top) * B
        tail = [e for e in range(B.degree + 1, window_top + 1) if product[e]]
        if tail:
            raise NotPolynomial(f"P(t)B(t) for n={n} has nonzero coefficient at t^{tail[0]}")
        result = IntPolynomial(product.coeffs[: B.degree + 1])
        cache.store(f"pb_n{n}_w{margin}", list(result.coeffs))
    with _pb_lock:
        _pb_cache[key] = result
    return result


def denominator(seq: Iterable[int]) -> IntPolynomial:
    """``prod (1 - t**d)`` over the sequence."""
    p = IntPolynomial.one()
    for d in seq:
        p = p.mul_binomial(d)
    return p


def hsop_numerator(n: int, seq: Iterable[int], *, check: bool = True) -> IntPolynomial:
    """``P(t) * prod(1 - t**d_i)`` as an exact polynomial.

    The sign convention gives constant term +1 (the product ``prod(t**d_i - 1)``
    differs by ``(-1)**len(seq)``).
    """
    degrees = canonical(seq)
    if n < 3:
        raise PreconditionFailed("numerators are defined for n >= 3")
    if check:
        report = theorem1_check(n, degrees)
        if len(degrees) != n - 2 or not report.verdict:
            raise PreconditionFailed(
                f"{degrees} is not a length-{n - 2} sequence meeting the divisibility conditions"
            )
    num = pb_polynomial(n) * denominator(degrees)
    q, r = divmod(num, dixmier_B(n))
    if not r.is_zero():
        raise NotPolynomial(f"P(t)*prod(1-t^d) is not a polynomial for n={n}, degrees {degrees}")
    return q


def first_negative(p: IntPolynomial) -> int | None:
    """Smallest exponent with a negative coefficient, or ``None``."""
    return p.first_negative()


def expand_quotient(numerator: IntPolynomial, seq: Iterable[int], order: int) -> TruncatedSeries:
    """Power series of ``numerator / prod(1 - t**d)`` through ``t**order``."""
    s = numerator.to_series(order)
    for d in seq:
        # 1/(1 - t^d): running sum with stride d
        c = list(s.coeffs)
        for i in range(d, order + 1):
            c[i] += c[i - d]
        s = TruncatedSeries(tuple(c), order)
    return s
