"""Arithmetic in the plane algebras ``a + b*e`` with ``e**2`` in {-1, +1, 0}.

Scalars come from one of two backends.  Exact values are
:class:`fractions.Fraction` (Python ints and ``"p/q"`` strings are promoted on
construction); inexact values are plain floats.  Exact comparisons are
equalities, float comparisons use a relative tolerance that defaults to
``1e-9`` and can be overridden per call (``eps=``) or for a block of code::

    with tolerance(1e-6):
        ...
"""

from __future__ import annotations

import contextlib
import contextvars
import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Union

from .errors import KindMismatch, ZeroDivisor

Scalar = Union[Fraction, float]

DEFAULT_EPS = 1e-9

_eps: contextvars.ContextVar[float] = contextvars.ContextVar("porism_eps", default=DEFAULT_EPS)


def get_eps(eps: float | None = None) -> float:
    """Resolve an explicit tolerance, falling back to the active context."""
    return _eps.get() if eps is None else float(eps)


@contextlib.contextmanager
def tolerance(eps: float) -> Iterator[float]:
    """Temporarily set the default float tolerance."""
    token = _eps.set(float(eps))
    try:
        yield float(eps)
    finally:
        _eps.reset(token)


def scalar(x) -> Scalar:
    """Coerce ``x`` onto a backend: floats stay floats, everything rational becomes a Fraction."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, float):
        return float(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    try:
        return float(x)
    except (TypeError, ValueError):
        raise TypeError(f"cannot interpret {x!r} as a scalar") from None


def is_exact(x) -> bool:
    return isinstance(x, Fraction)


def is_zero(x: Scalar, scale: Scalar = 1, eps: float | None = None) -> bool:
    """Exact zero test on rationals; ``|x| <= eps*scale`` on floats."""
    if isinstance(x, Fraction):
        return x == 0
    return abs(x) <= get_eps(eps) * float(scale)


class AlgebraKind(IntEnum):
    """The three algebras, valued by the square of the imaginary unit."""

    COMPLEX = -1
    HYPERBOLIC = 1
    DUAL = 0

    @property
    def kappa(self) -> int:
        return int(self)

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, name: str | int | AlgebraKind) -> AlgebraKind:
        if isinstance(name, AlgebraKind):
            return name
        if isinstance(name, int):
            return cls(name)
        aliases = {"c": "complex", "d": "hyperbolic", "split-complex": "hyperbolic",
                   "duplex": "hyperbolic", "g": "dual"}
        key = aliases.get(name.lower(), name.lower())
        try:
            return cls[key.upper()]
        except KeyError:
            raise ValueError(f"unknown algebra kind {name!r}") from None


COMPLEX = AlgebraKind.COMPLEX
HYPERBOLIC = AlgebraKind.HYPERBOLIC
DUAL = AlgebraKind.DUAL


@dataclass(frozen=True)
class Duplex:
    """An element ``re + im*e`` of the algebra ``kind``; immutable."""

    re: Scalar
    im: Scalar
    kind: AlgebraKind = COMPLEX

    def __post_init__(self):
        object.__setattr__(self, "re", scalar(self.re))
        object.__setattr__(self, "im", scalar(self.im))
        object.__setattr__(self, "kind", AlgebraKind.parse(self.kind))

    @classmethod
    def real(cls, x, kind=COMPLEX) -> Duplex:
        x = scalar(x)
        return cls(x, x * 0, kind)

    @classmethod
    def unit(cls, kind=COMPLEX, exact: bool = True) -> Duplex:
        """The imaginary unit ``e``."""
        one = Fraction(1) if exact else 1.0
        return cls(one * 0, one, kind)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.re, Fraction) and isinstance(self.im, Fraction)

    def magnitude(self) -> float:
        """Euclidean length of the coordinate vector (not the algebra norm)."""
        return math.hypot(float(self.re), float(self.im))

    def conj(self) -> Duplex:
        return conj(self)

    def norm_sq(self) -> Scalar:
        return norm_sq(self)

    def invert(self, eps: float | None = None) -> Duplex:
        return invert(self, eps)

    def is_invertible(self, eps: float | None = None) -> bool:
        return is_invertible(self, eps)

    def close(self, other: Duplex, eps: float | None = None, scale: float | None = None) -> bool:
        """Equality on rationals; relative closeness on floats."""
        diff = self - other
        if diff.is_exact:
            return diff.re == 0 and diff.im == 0
        if scale is None:
            scale = 1.0 + max(self.magnitude(), other.magnitude())
        return diff.magnitude() <= get_eps(eps) * scale

    def _coerce(self, other) -> Duplex:
        if isinstance(other, Duplex):
            if other.kind != self.kind:
                raise KindMismatch(f"{self.kind.label} vs {other.kind.label}")
            return other
        if isinstance(other, (int, float, Fraction)) and not isinstance(other, bool):
            return Duplex.real(other, self.kind)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Duplex(self.re + other.re, self.im + other.im, self.kind)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Duplex(self.re - other.re, self.im - other.im, self.kind)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return Duplex(-self.re, -self.im, self.kind)

    def __mul__(self, other):
        if isinstance(other, Duplex):
            return mul(self, other)
        if isinstance(other, (int, float, Fraction)) and not isinstance(other, bool):
            k = scalar(other)
            return Duplex(self.re * k, self.im * k, self.kind)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, invert(other))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(other, invert(self))

    def __repr__(self):
        sign = "-" if self.im < 0 else "+"
        return f"Duplex({self.re} {sign} {abs(self.im)}e, {self.kind.label})"


def _same_kind(x: Duplex, y: Duplex) -> AlgebraKind:
    if x.kind != y.kind:
        raise KindMismatch(f"{x.kind.label} vs {y.kind.label}")
    return x.kind


def mul(x: Duplex, y: Duplex) -> Duplex:
    """(a+be)(c+de) = (ac + kappa*bd) + (ad + bc)e."""
    kind = _same_kind(x, y)
    a, b, c, d = x.re, x.im, y.re, y.im
    return Duplex(a * c + kind.kappa * (b * d), a * d + b * c, kind)


def conj(z: Duplex) -> Duplex:
    return Duplex(z.re, -z.im, z.kind)


def norm_sq(z: Duplex) -> Scalar:
    """``z * conj(z)``, always real; negative or zero for some nonzero z outside the complex case."""
    return z.re * z.re - z.kind.kappa * (z.im * z.im)


def is_invertible(z: Duplex, eps: float | None = None) -> bool:
    n = norm_sq(z)
    if isinstance(n, Fraction):
        return n != 0
    return abs(n) > get_eps(eps) * float(z.re * z.re + z.im * z.im)


def invert(z: Duplex, eps: float | None = None) -> Duplex:
    if not is_invertible(z, eps):
        raise ZeroDivisor(f"{z!r} is a zero divisor")
    n = norm_sq(z)
    return Duplex(z.re / n, -z.im / n, z.kind)


def zero(kind=COMPLEX, exact: bool = True) -> Duplex:
    return Duplex.real(Fraction(0) if exact else 0.0, kind)


def one(kind=COMPLEX, exact: bool = True) -> Duplex:
    return Duplex.real(Fraction(1) if exact else 1.0, kind)
