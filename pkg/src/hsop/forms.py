"""Exact binary forms: construction, transvectants, substitutions, nullforms.

A form of degree ``n`` is stored by its plain coefficients ``a_0..a_n`` of

    f = sum_i a_i x^(n-i) y^i

as :class:`fractions.Fraction` values. Order-0 forms (``n == 0``) are scalars.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from hsop.errors import IndexMismatch, LengthMismatch, NotUnimodular, OrderTooHigh, ZeroForm

__all__ = [
    "BinaryForm",
    "make_form",
    "parse_form",
    "product",
    "transvectant",
    "apply_substitution",
    "max_root_multiplicity",
    "is_nullform",
    "lacunary_form",
]

Number = int | Fraction


@dataclass(frozen=True)
class BinaryForm:
    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("degree must be non-negative")
        if len(self.coeffs) != self.n + 1:
            raise LengthMismatch(f"degree {self.n} form needs {self.n + 1} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def value(self) -> Fraction:
        """The scalar of an order-0 form."""
        if self.n:
            raise ValueError(f"form of degree {self.n} is not a scalar")
        return self.coeffs[0]

    def scale(self, c: Number) -> BinaryForm:
        return BinaryForm(self.n, tuple(c * a for a in self.coeffs))

    def __add__(self, other: BinaryForm) -> BinaryForm:
        if other.n != self.n:
            raise ValueError("cannot add forms of different degree")
        return BinaryForm(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: BinaryForm) -> BinaryForm:
        return self + other.scale(-1)

    def __mul__(self, other: BinaryForm) -> BinaryForm:
        return product(self, other)

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "*".join(
                p for p in (_power("x", self.n - i), _power("y", i)) if p
            )
            coef = str(a)
            if mono:
                body = mono if a == 1 else ("-" + mono if a == -1 else f"{coef}*{mono}")
            else:
                body = coef
            terms.append(body)
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def make_form(n: int, coeffs: Iterable[Number], convention: str = "plain") -> BinaryForm:
    """Build a form; ``"binomial"`` multiplies the ``i``-th input by ``C(n, i)``."""
    values = [Fraction(c) for c in coeffs]
    if len(values) != n + 1:
        raise LengthMismatch(f"degree {n} form needs {n + 1} coefficients, got {len(values)}")
    if convention == "binomial":
        values = [comb(n, i) * c for i, c in enumerate(values)]
    elif convention != "plain":
        raise ValueError(f"unknown convention {convention!r}")
    return BinaryForm(n, tuple(values))


def parse_form(text: str, binomial: bool = False) -> BinaryForm:
    """Parse ``"n: c0,c1,...,cn"`` where each coefficient is an integer or ``p/q``."""
    head, sep, body = text.partition(":")
    if not sep:
        raise ValueError("form syntax is 'n: c0,c1,...,cn'")
    n = int(head.strip())
    coeffs = [Fraction(c.strip()) for c in body.split(",") if c.strip()]
    return make_form(n, coeffs, "binomial" if binomial else "plain")


def product(g: BinaryForm, h: BinaryForm) -> BinaryForm:
    out = [Fraction(0)] * (g.n + h.n + 1)
    for i, a in enumerate(g.coeffs):
        if a:
            for j, b in enumerate(h.coeffs):
                if b:
                    out[i + j] += a * b
    return BinaryForm(g.n + h.n, tuple(out))


def _falling(a: int, b: int) -> int:
    if b > a:
        return 0
    return factorial(a) // factorial(a - b)


def _partials(f: BinaryForm, k: int) -> list[list[Fraction]]:
    """``out[i]`` holds the coefficients of d^k f / dx^(k-i) dy^i."""
    m = f.n
    out = []
    for i in range(k + 1):
        row = [Fraction(0)] * (m - k + 1)
        for j, a in enumerate(f.coeffs):
            if a and j >= i and m - j >= k - i:
                row[j - i] = a * _falling(m - j, k - i) * _falling(j, i)
        out.append(row)
    return out


def transvectant(g: BinaryForm, h: BinaryForm, k: int) -> BinaryForm:
    """The ``k``-th transvectant ``(g, h)_k`` with the factorial normalisation

        (m-k)! (n-k)! / (m! n!) * sum_i (-1)^i C(k,i) g_{x^(k-i) y^i} h_{x^i y^(k-i)}.

    With this scaling ``(g, h)_0 = g h``.
    """
    m, n = g.n, h.n
    if k < 0 or k > min(m, n):
        raise OrderTooHigh(f"transvectant index {k} exceeds the orders {m}, {n}")
    dg = _partials(g, k)
    dh = _partials(h, k)
    size = m + n - 2 * k + 1
    out = [Fraction(0)] * size
    for i in range(k + 1):
        w = (-1) ** i * comb(k, i)
        left, right = dg[i], dh[k - i]
        for a, x in enumerate(left):
            if x:
                for b, y in enumerate(right):
                    if y:
                        out[a + b] += w * x * y
    norm = Fraction(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    return BinaryForm(m + n - 2 * k, tuple(norm * c for c in out))


def _linear_power(p: Fraction, q: Fraction, e: int) -> list[Fraction]:
    """Coefficients of ``(p x + q y)^e`` in the ``x^(e-i) y^i`` basis."""
    return [comb(e, i) * p ** (e - i) * q**i for i in range(e + 1)]


def apply_substitution(f: BinaryForm, matrix: Sequence[Sequence[Number]]) -> BinaryForm:
    """``f(a x + b y, c x + d y)`` for ``matrix = [[a, b], [c, d]]`` with determinant 1."""
    (a, b), (c, d) = [[Fraction(v) for v in row] for row in matrix]
    if a * d - b * c != 1:
        raise NotUnimodular(f"determinant is {a * d - b * c}, expected 1")
    n = f.n
    out = [Fraction(0)] * (n + 1)
    for i, coef in enumerate(f.coeffs):
        if not coef:
            continue
        first = _linear_power(a, b, n - i)
        second = _linear_power(c, d, i)
        for r, u in enumerate(first):
            if u:
                for s, v in enumerate(second):
                    out[r + s] += coef * u * v
    return BinaryForm(n, tuple(out))


# univariate helpers over Q; index = power of z


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _deriv(p: list[Fraction]) -> list[Fraction]:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _divmod(p: list[Fraction], q: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    p = list(p)
    if len(p) < len(q):
        return [], _trim(p)
    quot = [Fraction(0)] * (len(p) - len(q) + 1)
    lead = q[-1]
    for s in range(len(quot) - 1, -1, -1):
        c = p[s + len(q) - 1] / lead
        quot[s] = c
        if c:
            for i, v in enumerate(q):
                p[s + i] -= c * v
    return _trim(quot), _trim(p[: len(q) - 1])


def _gcd(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    p, q = _trim(list(p)), _trim(list(q))
    while q:
        p, q = q, _divmod(p, q)[1]
    return [c / p[-1] for c in p] if p else p


def _sub(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    width = max(len(p), len(q))
    return _trim([(p[k] if k < len(p) else 0) - (q[k] if k < len(q) else 0) for k in range(width)])


def _squarefree_exponents(p: list[Fraction]) -> list[int]:
    """Exponents ``i`` for which Yun's decomposition has a nonconstant factor."""
    p = _trim(list(p))
    if len(p) <= 1:
        return []
    dp = _deriv(p)
    a = _gcd(p, dp)
    b = _divmod(p, a)[0]
    d = _sub(_divmod(dp, a)[0], _deriv(b))
    exps = []
    i = 1
    while len(b) > 1:
        a = _gcd(b, d)
        if len(a) > 1:
            exps.append(i)
        b = _divmod(b, a)[0]
        d = _sub(_divmod(d, a)[0], _deriv(b))
        i += 1
    return exps


def max_root_multiplicity(f: BinaryForm) -> int:
    """Largest multiplicity of a projective root of ``f`` over the algebraic closure."""
    if f.is_zero:
        raise ZeroForm("the zero form has no well-defined roots")
    n = f.n
    # y divides f to the order of the first nonzero coefficient
    at_infinity = next(i for i, a in enumerate(f.coeffs) if a)
    dehom = [f.coeffs[n - e] for e in range(n + 1)]  # coefficient of z^e in f(z, 1)
    exps = _squarefree_exponents(dehom)
    return max([at_infinity, *exps])


def is_nullform(f: BinaryForm) -> bool:
    """A root of multiplicity strictly greater than ``n/2``."""
    return 2 * max_root_multiplicity(f) > f.n


def lacunary_form(n: int, j: int, t: int, values: Sequence[Number]) -> BinaryForm:
    """Form whose only possibly nonzero coefficients are ``a_i`` with ``i == j (mod t)``."""
    if t <= 0:
        raise ValueError("t must be positive")
    if not 0 <= j <= n:
        raise ValueError("need 0 <= j <= n")
    slots = [i for i in range(n + 1) if (i - j) % t == 0]
    if len(values) != len(slots):
        raise IndexMismatch(f"expected {len(slots)} values for indices {slots}, got {len(values)}")
    coeffs = [Fraction(0)] * (n + 1)
    for i, v in zip(slots, values):
        coeffs[i] = Fraction(v)
    return BinaryForm(n, tuple(coeffs))
