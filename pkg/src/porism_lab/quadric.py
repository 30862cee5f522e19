"""Unit quadrics ``{z : norm_sq(z) = sigma}``, lines, and the incidence predicates used to check them."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import (
    AlgebraKind,
    Duplex,
    Scalar,
    conj,
    get_eps,
    invert,
    is_exact,
    is_zero,
    mul,
    norm_sq,
    scalar,
)
from .errors import CenterPole, InvalidBranch, KindMismatch, NullDirection, OffQuadric, ZeroDivisor


@dataclass(frozen=True)
class QuadricBranch:
    """The "unit sphere" of an algebra.

    ======================  =====================================
    (complex, +1)           unit circle
    (hyperbolic, +1)        hyperbola ``x**2 - y**2 = 1``
    (hyperbolic, -1)        conjugate hyperbola ``x**2 - y**2 = -1``
    (dual, +1)              the parallel lines ``x = +-1``
    ======================  =====================================

    The remaining two combinations have no real points and are rejected.
    """

    kind: AlgebraKind
    sigma: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", AlgebraKind.parse(self.kind))
        if self.sigma not in (1, -1):
            raise InvalidBranch(f"sigma must be +1 or -1, got {self.sigma!r}")
        if self.sigma == -1 and self.kind != AlgebraKind.HYPERBOLIC:
            raise InvalidBranch(f"{self.kind.label} algebra has no real points with norm -1")

    @property
    def name(self) -> str:
        return {
            (AlgebraKind.COMPLEX, 1): "circle",
            (AlgebraKind.HYPERBOLIC, 1): "hyperbola",
            (AlgebraKind.HYPERBOLIC, -1): "conjugate hyperbola",
            (AlgebraKind.DUAL, 1): "parallel lines",
        }[(self.kind, self.sigma)]

    def defect(self, z: Duplex) -> Scalar:
        return norm_sq(z) - self.sigma

    def contains(self, z: Duplex, eps: float | None = None) -> bool:
        if z.kind != self.kind:
            raise KindMismatch(f"{z.kind.label} point on a {self.kind.label} quadric")
        return is_zero(self.defect(z), 1 + float(z.re * z.re + z.im * z.im), eps)

    def require(self, z: Duplex, eps: float | None = None) -> None:
        if not self.contains(z, eps):
            raise OffQuadric(f"{z!r} is not on the {self.name}")

    def point(self, t, sheet: int = 1) -> Duplex:
        return quadric_point(self, t, sheet)


CIRCLE = QuadricBranch(AlgebraKind.COMPLEX, 1)
HYPERBOLA = QuadricBranch(AlgebraKind.HYPERBOLIC, 1)
CONJUGATE_HYPERBOLA = QuadricBranch(AlgebraKind.HYPERBOLIC, -1)
PARALLEL_LINES = QuadricBranch(AlgebraKind.DUAL, 1)


def quadric_point(q: QuadricBranch, t, sheet: int = 1) -> Duplex:
    """A point of ``q`` at parameter ``t``.

    Float ``t`` uses the trigonometric/hyperbolic parameterization (``t`` is
    the angle for the circle).  Exact ``t`` uses rational parameterizations so
    the result sits on the quadric exactly: ``((1-t^2), 2t)/(1+t^2)`` for the
    circle and ``((1+t^2), 2t)/(1-t^2)`` for the hyperbolas, ``|t| < 1``.
    ``sheet`` selects the branch component and is ignored for the circle.
    """
    if sheet not in (1, -1):
        raise InvalidBranch(f"sheet must be +1 or -1, got {sheet!r}")
    t = scalar(t)
    kind = q.kind
    if kind == AlgebraKind.DUAL:
        return Duplex(t * 0 + sheet, t, kind)
    if is_exact(t):
        if kind == AlgebraKind.COMPLEX:
            d = 1 + t * t
            return Duplex((1 - t * t) / d, 2 * t / d, kind)
        if abs(t) >= 1:
            raise ValueError("rational hyperbola parameter must satisfy |t| < 1")
        d = 1 - t * t
        big, small = (1 + t * t) / d, 2 * t / d
    else:
        if kind == AlgebraKind.COMPLEX:
            return Duplex(math.cos(t), math.sin(t), kind)
        big, small = math.cosh(t), math.sinh(t)
    if q.sigma == 1:
        return Duplex(sheet * big, small, kind)
    return Duplex(small, sheet * big, kind)


def cross(p: Duplex, q: Duplex, r: Duplex) -> Scalar:
    """Planar cross product of ``q - p`` and ``r - p``."""
    return (q.re - p.re) * (r.im - p.im) - (q.im - p.im) * (r.re - p.re)


def _dist_sq(a: Duplex, b: Duplex) -> Scalar:
    return (a.re - b.re) ** 2 + (a.im - b.im) ** 2


def normalized_cross(p: Duplex, q: Duplex, r: Duplex) -> float:
    """``|cross| / max pairwise squared distance``; 0 for coincident points."""
    scale = max(_dist_sq(p, q), _dist_sq(q, r), _dist_sq(p, r))
    if scale == 0:
        return 0.0
    return abs(float(cross(p, q, r))) / float(scale)


def collinear(p: Duplex, q: Duplex, r: Duplex, eps: float | None = None) -> bool:
    if not (p.kind == q.kind == r.kind):
        raise KindMismatch("collinearity across algebras")
    c = cross(p, q, r)
    if is_exact(c):
        return c == 0
    scale = max(_dist_sq(p, q), _dist_sq(q, r), _dist_sq(p, r))
    return abs(c) <= get_eps(eps) * float(scale)


class Line:
    """``{base + t*dir : t real}``.

    Equality is geometric: two lines compare equal when they are the same
    point set, whatever base and direction were used to describe them.
    """

    __slots__ = ("base", "dir")

    def __init__(self, base: Duplex, dir: Duplex):
        if base.kind != dir.kind:
            raise KindMismatch("line base and direction from different algebras")
        if dir.re == 0 and dir.im == 0:
            raise ValueError("line direction must be nonzero")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "dir", dir)

    def __setattr__(self, name, value):
        raise AttributeError("Line is immutable")

    @classmethod
    def through(cls, p: Duplex, q: Duplex) -> Line:
        return cls(p, q - p)

    @property
    def kind(self) -> AlgebraKind:
        return self.base.kind

    def at(self, t) -> Duplex:
        return self.base + self.dir * scalar(t)

    def contains(self, z: Duplex, eps: float | None = None) -> bool:
        return collinear(self.base, self.base + self.dir, z, eps)

    def param(self, z: Duplex) -> Scalar:
        """Coordinate ``t`` of the orthogonal projection of ``z`` onto the line."""
        d = self.dir
        w = z - self.base
        return (w.re * d.re + w.im * d.im) / (d.re * d.re + d.im * d.im)

    def __eq__(self, other):
        if not isinstance(other, Line):
            return NotImplemented
        if self.kind != other.kind:
            return False
        zero = self.dir * 0
        parallel = collinear(zero, self.dir, other.dir)
        return parallel and self.contains(other.base)

    __hash__ = None

    def __repr__(self):
        return f"Line(base={self.base!r}, dir={self.dir!r})"


def second_intersection(x: Duplex, p: Duplex, q: QuadricBranch, eps: float | None = None) -> Duplex:
    """The other point where the line through ``x`` and ``p`` meets ``q``.

    Solves ``norm_sq(x + u*d) = sigma`` with ``d = p - x``; ``u = 0`` is the
    known root and the other is ``-2 re(conj(x) d) / norm_sq(d)``.  A tangent
    line returns ``x`` itself.
    """
    q.require(x, eps)
    d = p - x
    if d.re == 0 and d.im == 0:
        raise NullDirection("p coincides with x: the line is undetermined")
    nd = norm_sq(d)
    if is_zero(nd, float(d.re * d.re + d.im * d.im), eps):
        raise NullDirection(f"direction {d!r} has zero norm: the line meets the quadric once")
    u = -2 * mul(conj(x), d).re / nd
    return x + d * u


def invert_point(z: Duplex, center: Duplex, radius) -> Duplex:
    """Inversion in the circle ``|w - center| = radius`` (complex plane only)."""
    if z.kind != AlgebraKind.COMPLEX or center.kind != AlgebraKind.COMPLEX:
        raise KindMismatch("circle inversion is defined on the complex plane only")
    radius = scalar(radius)
    if radius <= 0:
        raise ValueError("inversion radius must be positive")
    w = conj(z - center)
    try:
        return center + mul(Duplex.real(radius * radius, z.kind), invert(w))
    except ZeroDivisor:
        raise CenterPole(f"{z!r} is the inversion center") from None


__all__ = [
    "CIRCLE",
    "CONJUGATE_HYPERBOLA",
    "HYPERBOLA",
    "Line",
    "PARALLEL_LINES",
    "QuadricBranch",
    "collinear",
    "cross",
    "invert_point",
    "normalized_cross",
    "quadric_point",
    "second_intersection",
]
