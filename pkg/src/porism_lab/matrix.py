"""2x2 matrices over a plane algebra, acting on it as Moebius maps.

Matrices are projective: ``A ~ lam*A`` for any *invertible* ``lam``.  Scaling
by a zero divisor is not an equivalence because it loses information, so the
equivalence used here is stricter than "nonzero multiple" outside the complex
numbers.  Determinants are never normalized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .algebra import (
    AlgebraKind,
    Duplex,
    Scalar,
    conj,
    get_eps,
    invert,
    is_invertible,
    is_zero,
    mul,
    one,
    zero,
)
from .errors import (
    DegenerateMatrix,
    KindMismatch,
    NonInvertibleDenominator,
    NonInvertiblePivot,
    NotAReversion,
    NotPseudoUnitary,
    ZeroDivisor,
)


@dataclass(frozen=True)
class Mat2:
    m11: Duplex
    m12: Duplex
    m21: Duplex
    m22: Duplex

    def __post_init__(self):
        kinds = {e.kind for e in self.entries()}
        if len(kinds) != 1:
            raise KindMismatch("matrix entries from different algebras")
        if all(e.is_exact and e.re == 0 and e.im == 0 for e in self.entries()):
            raise DegenerateMatrix("the zero matrix is not a projective transformation")

    @classmethod
    def identity(cls, kind=AlgebraKind.COMPLEX, exact: bool = True) -> Mat2:
        o, z = one(kind, exact), zero(kind, exact)
        return cls(o, z, z, o)

    @classmethod
    def diag(cls, a: Duplex, d: Duplex) -> Mat2:
        z = a * 0
        return cls(a, z, z, d)

    @property
    def kind(self) -> AlgebraKind:
        return self.m11.kind

    @property
    def is_exact(self) -> bool:
        return all(e.is_exact for e in self.entries())

    def entries(self) -> tuple[Duplex, Duplex, Duplex, Duplex]:
        return (self.m11, self.m12, self.m21, self.m22)

    def trace(self) -> Duplex:
        return self.m11 + self.m22

    def scale(self, lam) -> Mat2:
        return Mat2(*(lam * e for e in self.entries()))

    def conj(self) -> Mat2:
        """Entrywise conjugate (no transpose)."""
        return Mat2(*(conj(e) for e in self.entries()))

    def adjoint(self) -> Mat2:
        """Conjugate transpose."""
        return Mat2(conj(self.m11), conj(self.m21), conj(self.m12), conj(self.m22))

    def __matmul__(self, other: Mat2) -> Mat2:
        return mat_mul(self, other)

    def __call__(self, z: Duplex, eps: float | None = None) -> Duplex:
        return mobius_apply(self, z, eps)


def mat_mul(a: Mat2, b: Mat2) -> Mat2:
    if a.kind != b.kind:
        raise KindMismatch(f"{a.kind.label} vs {b.kind.label}")
    return Mat2(
        mul(a.m11, b.m11) + mul(a.m12, b.m21),
        mul(a.m11, b.m12) + mul(a.m12, b.m22),
        mul(a.m21, b.m11) + mul(a.m22, b.m21),
        mul(a.m21, b.m12) + mul(a.m22, b.m22),
    )


def product(mats) -> Mat2:
    """Left-to-right matrix product of a nonempty iterable."""
    return reduce(mat_mul, mats)


def mobius_apply(m: Mat2, z: Duplex, eps: float | None = None) -> Duplex:
    """``(m11*z + m12) / (m21*z + m22)``."""
    den = mul(m.m21, z) + m.m22
    try:
        inv = invert(den, eps)
    except ZeroDivisor:
        raise NonInvertibleDenominator(f"denominator {den!r} is not invertible") from None
    return mul(mul(m.m11, z) + m.m12, inv)


def _entries_close(xs, ys, eps: float | None) -> bool:
    if all(x.is_exact and y.is_exact for x, y in zip(xs, ys)):
        return all(x == y for x, y in zip(xs, ys))
    scale = max(e.magnitude() for e in (*xs, *ys))
    return all((x - y).magnitude() <= get_eps(eps) * scale for x, y in zip(xs, ys))


def proj_equal(a: Mat2, b: Mat2, eps: float | None = None) -> bool:
    """True iff ``b = lam*a`` for some invertible ``lam``."""
    if a.kind != b.kind:
        raise KindMismatch(f"{a.kind.label} vs {b.kind.label}")
    candidates = [(i, e) for i, e in enumerate(a.entries()) if is_invertible(e, eps)]
    if not candidates:
        # no way to divide out a scale factor: treated as not equal
        return False
    i, pivot = max(candidates, key=lambda c: c[1].magnitude())
    lam = mul(b.entries()[i], invert(pivot, eps))
    if not is_invertible(lam, eps):
        return False
    return _entries_close(b.entries(), [mul(lam, e) for e in a.entries()], eps)


@dataclass(frozen=True)
class ReversionForm:
    """Canonical traceless shape: ``[[1,-s],[s*,-1]]`` (sigma=+1) or ``[[-1,s],[s*,1]]`` (sigma=-1)."""

    point: Duplex
    sigma: int

    def matrix(self) -> Mat2:
        s = self.point
        o = one(s.kind, s.is_exact)
        if self.sigma == 1:
            return Mat2(o, -s, conj(s), -o)
        return Mat2(-o, s, conj(s), o)


def _try_shape(m: Mat2, sigma: int, eps: float | None) -> ReversionForm | None:
    pivot = m.m11 if sigma == 1 else m.m22
    if not is_invertible(pivot, eps):
        return None
    inv = invert(pivot, eps)
    if sigma == 1:
        s = -mul(m.m12, inv)
        diag_ok = mul(m.m22, inv).close(one(m.kind, m.is_exact) * -1, eps)
    else:
        s = mul(m.m12, inv)
        diag_ok = mul(m.m11, inv).close(one(m.kind, m.is_exact) * -1, eps)
    scale = 1.0 + s.magnitude()
    if diag_ok and mul(m.m21, inv).close(conj(s), eps, scale=scale):
        return ReversionForm(s, sigma)
    raise NotAReversion(f"matrix does not have the sigma={sigma:+d} reversion shape")


def as_reversion(m: Mat2, sigma: int | None = None, eps: float | None = None) -> ReversionForm:
    """Recognize ``m`` as a reversion matrix up to scale.

    Tries the ``sigma=+1`` shape first unless ``sigma`` names a preferred
    shape.  The two shapes only coincide for the reversion through 0.
    """
    order = (1, -1) if sigma in (None, 1) else (-1, 1)
    failure = None
    for sg in order:
        try:
            form = _try_shape(m, sg, eps)
        except NotAReversion as exc:
            failure = exc
            continue
        if form is not None:
            return form
    if failure is None:
        raise NonInvertiblePivot("neither diagonal entry is invertible")
    raise failure


def pseudo_unitary_defect(m: Mat2, eps: float | None = None) -> Scalar:
    """Return ``c`` with ``m* J m = c J`` for ``J = diag(1, -1)``."""
    a, b, c, d = m.entries()
    p11 = mul(conj(a), a) - mul(conj(c), c)
    p12 = mul(conj(a), b) - mul(conj(c), d)
    p21 = mul(conj(b), a) - mul(conj(d), c)
    p22 = mul(conj(b), b) - mul(conj(d), d)
    scale = max(1.0, *(e.magnitude() for e in (p11, p12, p21, p22)))
    ok = (
        is_zero(p12.re, scale, eps) and is_zero(p12.im, scale, eps)
        and is_zero(p21.re, scale, eps) and is_zero(p21.im, scale, eps)
        and is_zero(p11.im, scale, eps)
        and is_zero((p11 + p22).re, scale, eps) and is_zero((p11 + p22).im, scale, eps)
    )
    if not ok:
        raise NotPseudoUnitary("m* J m is not a real multiple of J")
    return p11.re


def is_scalar_matrix(m: Mat2, eps: float | None = None) -> bool:
    """True iff ``m`` is projectively the identity."""
    return proj_equal(Mat2.identity(m.kind, m.is_exact), m, eps)


__all__ = [
    "Mat2",
    "ReversionForm",
    "as_reversion",
    "is_scalar_matrix",
    "mat_mul",
    "mobius_apply",
    "product",
    "proj_equal",
    "pseudo_unitary_defect",
]
