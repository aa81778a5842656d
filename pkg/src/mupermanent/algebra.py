"""Exact scalars, permutations in one-line notation, and polynomials in mu.

Permutations are tuples ``(sigma(1), ..., sigma(n))`` of the labels
``1..n``. Polynomials are dense tuples of :class:`fractions.Fraction`
indexed by the power of mu, trimmed so the zero polynomial is ``()``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "as_fraction",
    "format_rational",
    "validate_permutation",
    "inversions",
    "inverse_permutation",
    "transposition",
    "transposition_inversions",
    "MuPolynomial",
]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact Fraction.

    Floats are rejected: they would silently smuggle rounding in.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(value: Fraction) -> str:
    """``p/q``, or just ``p`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def validate_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    sigma = tuple(sigma)
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {sigma}")
    return sigma


def inversions(sigma: Sequence[int]) -> int:
    """Number of index pairs i < j with sigma(i) > sigma(j).

    >>> inversions((2, 1, 4, 3))
    2
    """
    sigma = validate_permutation(sigma)
    n = len(sigma)
    return sum(
        1 for a in range(n) for b in range(a + 1, n) if sigma[a] > sigma[b]
    )


def inverse_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    sigma = validate_permutation(sigma)
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        inv[s - 1] = i
    return tuple(inv)


def transposition(i: int, j: int, n: int) -> tuple[int, ...]:
    """The permutation of 1..n exchanging i and j."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"labels {i}, {j} outside 1..{n}")
    image = list(range(1, n + 1))
    image[i - 1], image[j - 1] = j, i
    return tuple(image)


def transposition_inversions(i: int, j: int) -> int:
    """Inversion count of the transposition (i j), i < j: always 2(j - i) - 1."""
    if not (1 <= i < j):
        raise ValueError(f"need 1 <= i < j, got i={i}, j={j}")
    return 2 * (j - i) - 1


class MuPolynomial:
    """Univariate polynomial in mu with exact rational coefficients.

    Immutable. ``coefficients[k]`` multiplies ``mu**k``; trailing zeros
    are stripped on construction, so equality is structural.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [as_fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c) -> MuPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, c=1) -> MuPolynomial:
        if power < 0:
            raise ValueError("negative power")
        return cls([0] * power + [c])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, MuPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == MuPolynomial.constant(other)._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"MuPolynomial({[format_rational(c) for c in self._coeffs]})"

    def __str__(self):
        return self.pretty()

    def pretty(self, var: str = "mu") -> str:
        """Human-readable ``c0 + c1*mu + c2*mu^2`` form, zero terms omitted."""
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = format_rational(abs(c))
            if k == 0:
                body = mag
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if abs(c) == 1 else f"{mag}*{power}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def _coerce(self, other) -> MuPolynomial:
        if isinstance(other, MuPolynomial):
            return other
        return MuPolynomial.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return MuPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return MuPolynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MuPolynomial):
            return self.scale(other)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return MuPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return MuPolynomial(out)

    __rmul__ = __mul__

    def scale(self, c) -> MuPolynomial:
        c = as_fraction(c)
        return MuPolynomial(c * x for x in self._coeffs)

    def shift(self, power: int) -> MuPolynomial:
        """Multiply by ``mu**power``."""
        if not self._coeffs:
            return self
        return MuPolynomial((Fraction(0),) * power + self._coeffs)

    def evaluate(self, mu) -> Fraction:
        """Exact Horner evaluation."""
        mu = as_fraction(mu)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * mu + c
        return acc

    __call__ = evaluate

    def derivative(self) -> MuPolynomial:
        return MuPolynomial(k * c for k, c in enumerate(self._coeffs) if k)
