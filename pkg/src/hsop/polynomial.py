"""Dense integer polynomials and truncated power series in one variable ``t``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from hsop.errors import NotPolynomial

__all__ = ["IntPolynomial", "TruncatedSeries"]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of ``t**i``; stored without trailing
    zeros, so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * exponent + (coeff,))

    @classmethod
    def binomial(cls, exponent: int, sign: int = -1) -> IntPolynomial:
        """``1 + sign * t**exponent``."""
        if exponent == 0:
            return cls((1 + sign,))
        return cls((1,) + (0,) * (exponent - 1) + (sign,))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> IntPolynomial:
        if not terms:
            return cls()
        coeffs = [0] * (max(terms) + 1)
        for e, c in terms.items():
            coeffs[e] += c
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(size)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def mul_binomial(self, exponent: int, sign: int = -1) -> IntPolynomial:
        """Fast multiplication by ``1 + sign * t**exponent``."""
        if exponent == 0:
            return self * (1 + sign)
        out = list(self.coeffs) + [0] * exponent
        for i in range(len(out) - 1, exponent - 1, -1):
            out[i] += sign * out[i - exponent]
        return IntPolynomial(tuple(out))

    def __divmod__(self, other: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Integer long division; requires every step to divide exactly by the leading coefficient."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        lead = dv[-1]
        shift_max = len(rem) - len(dv)
        if shift_max < 0:
            return IntPolynomial(), self
        quot = [0] * (shift_max + 1)
        for s in range(shift_max, -1, -1):
            c = rem[s + len(dv) - 1]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise NotPolynomial("leading coefficient does not divide; quotient is not integral")
            quot[s] = q
            for i, d in enumerate(dv):
                rem[s + i] -= q * d
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem))

    def exact_div(self, other: IntPolynomial) -> IntPolynomial:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise NotPolynomial(f"division leaves remainder of degree {r.degree}")
        return q

    def is_palindromic(self) -> bool:
        c = self.coeffs
        return c == c[::-1]

    def first_negative(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c < 0:
                return i
        return None

    def to_series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def terms(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def __str__(self) -> str:
        return format_terms(self.terms())

    def machine_str(self) -> str:
        """``exponent:coefficient`` pairs, ascending exponents, comma separated."""
        return ",".join(f"{e}:{c}" for e, c in self.terms())


def format_terms(terms: Sequence[tuple[int, int]]) -> str:
    """Render ``[(e, c), ...]`` as ``1 + t + 2*t^4 - t^7``."""
    if not terms:
        return "0"
    parts = []
    for k, (e, c) in enumerate(terms):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = "t" if e == 1 else f"t^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if k == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known exactly up to and including ``t**order``."""

    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be non-negative")
        c = tuple(int(x) for x in self.coeffs[: self.order + 1])
        object.__setattr__(self, "coeffs", c + (0,) * (self.order + 1 - len(c)))

    def __getitem__(self, i: int) -> int:
        if i > self.order:
            raise IndexError(f"coefficient t^{i} is beyond truncation order {self.order}")
        return self.coeffs[i] if i >= 0 else 0

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs, order)

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, IntPolynomial):
            other = other.to_series(self.order)
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (order + 1)
        for i in range(order + 1):
            x = a[i]
            if x:
                for j in range(order + 1 - i):
                    out[i + j] += x * b[j]
        return TruncatedSeries(tuple(out), order)

    def div_polynomial(self, p: IntPolynomial) -> TruncatedSeries:
        """Series quotient ``self / p``; ``p`` must have constant term +1 or -1."""
        c0 = p[0]
        if c0 not in (1, -1):
            raise ValueError("divisor must have unit constant term")
        out = list(self.coeffs)
        pc = p.coeffs
        for i in range(self.order + 1):
            acc = out[i]
            for j in range(1, min(i, len(pc) - 1) + 1):
                acc -= pc[j] * out[i - j]
            out[i] = acc * c0
        return TruncatedSeries(tuple(out), self.order)

    def to_polynomial(self) -> IntPolynomial:
        """Drop the truncation marker; only meaningful when the tail is known to vanish."""
        return IntPolynomial(self.coeffs)

    def __str__(self) -> str:
        return format_terms([(i, c) for i, c in enumerate(self.coeffs) if c]) + f" + O(t^{self.order + 1})"

    def machine_str(self) -> str:
        return ",".join(f"{e}:{c}" for e, c in enumerate(self.coeffs) if c)
