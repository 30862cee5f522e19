"""Point reversions of a unit quadric and their compositions.

A reversion through ``p`` sends a quadric point ``x`` to the other point where
the line ``xp`` meets the quadric.  It is realized two ways here: as the
Moebius map of a traceless matrix (:func:`apply`) and as a line/quadric
intersection (:func:`apply_oracle`).  The two are independent and the test
suite checks one against the other.

Order convention: a chain is listed in application order, so
``compose_chain([p, q, r])`` is the matrix of "P first, then Q, then R",
i.e. ``M(r) M(q) M(p)``.  ``reduce_three(a, b, c)`` names the ternary product
``abc``, the composite ``A(B(C(x)))`` with ``c`` applied first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Duplex, conj, invert, mul, one
from .errors import DegeneratePoint, EmptyChain, KindMismatch, NotAReversion, NotCollinear
from .matrix import Mat2, as_reversion, mobius_apply, product
from .quadric import QuadricBranch, collinear, second_intersection


@dataclass(frozen=True)
class Reversion:
    point: Duplex
    quadric: QuadricBranch

    def __post_init__(self):
        if self.point.kind != self.quadric.kind:
            raise KindMismatch(f"{self.point.kind.label} point on a {self.quadric.kind.label} quadric")

    @property
    def degenerate(self) -> bool:
        """True when the point lies on the quadric, making the map constant."""
        return self.quadric.contains(self.point)

    def matrix(self) -> Mat2:
        return reversion_matrix(self)

    def __call__(self, x: Duplex, eps: float | None = None) -> Duplex:
        return apply(self, x, eps)


def reversion_matrix(rev: Reversion) -> Mat2:
    p = rev.point
    o = one(p.kind, p.is_exact)
    if rev.quadric.sigma == 1:
        return Mat2(o, -p, conj(p), -o)
    return Mat2(-o, p, conj(p), o)


def apply(rev: Reversion, x: Duplex, eps: float | None = None) -> Duplex:
    rev.quadric.require(x, eps)
    if rev.degenerate:
        return rev.point
    return mobius_apply(reversion_matrix(rev), x, eps)


def apply_oracle(rev: Reversion, x: Duplex, eps: float | None = None) -> Duplex:
    return second_intersection(x, rev.point, rev.quadric, eps)


def _require_off_quadric(points, quadric: QuadricBranch) -> None:
    for p in points:
        if p.kind != quadric.kind:
            raise KindMismatch(f"{p.kind.label} point on a {quadric.kind.label} quadric")
        if quadric.contains(p):
            raise DegeneratePoint(f"{p!r} lies on the {quadric.name}")


def compose_chain(points, quadric: QuadricBranch) -> Mat2:
    """Matrix of the reversions through ``points``, first point applied first."""
    points = list(points)
    if not points:
        raise EmptyChain("a chain needs at least one point")
    _require_off_quadric(points, quadric)
    return product(reversion_matrix(Reversion(p, quadric)) for p in reversed(points))


def reduce_three(a: Duplex, b: Duplex, c: Duplex, quadric: QuadricBranch,
                 eps: float | None = None) -> Duplex:
    """The point ``s`` whose reversion equals ``A o B o C`` (``c`` applied first).

    The composite of three reversions through collinear points is again a
    reversion; ``s`` is read off the product matrix rather than from a closed
    formula.
    """
    if not collinear(a, b, c, eps):
        raise NotCollinear("reduce_three needs collinear points")
    m = compose_chain([c, b, a], quadric)
    form = as_reversion(m, sigma=quadric.sigma, eps=eps)
    if form.sigma != quadric.sigma:
        raise NotAReversion(f"composite has the sigma={form.sigma:+d} shape on a sigma={quadric.sigma:+d} quadric")
    return form.point


def closing_point(points, quadric: QuadricBranch, eps: float | None = None) -> Duplex:
    """The point ``s`` that closes an odd chain: reversions through ``points`` then ``s`` give the identity.

    For ``points = [p1, ..., pk]`` this is the ternary product ``p1 p2 ... pk``,
    evaluated left to right by :func:`reduce_three`.
    """
    points = list(points)
    if len(points) % 2 == 0:
        raise ValueError("closing_point needs an odd number of points")
    if not points:
        raise EmptyChain("closing_point needs at least one point")
    _require_off_quadric(points, quadric)
    s = points[0]
    for i in range(1, len(points), 2):
        s = reduce_three(s, points[i], points[i + 1], quadric, eps)
    return s


def conjugate_pair_residual(p: Duplex, q: Duplex, r: Duplex, s: Duplex,
                            eps: float | None = None) -> Duplex:
    """``(p-q)/(1 - conj(p) q) - (s-r)/(1 - conj(s) r)``.

    Vanishes exactly when the two-step maps "P then Q" and "S then R" agree,
    i.e. when a quadrilateral inscribed in the (sigma=+1) quadric has its
    sides through p, q, r, s in that order.
    """
    left = mul(p - q, invert(1 - mul(conj(p), q), eps))
    right = mul(s - r, invert(1 - mul(conj(s), r), eps))
    return left - right


__all__ = [
    "Reversion",
    "apply",
    "apply_oracle",
    "closing_point",
    "compose_chain",
    "conjugate_pair_residual",
    "reduce_three",
    "reversion_matrix",
]
