"""Closure verification for inscribed polygons through collinear points.

The central object is a chain of reversions whose points lie on one line.
For an even chain, the composite either fixes every quadric point or fixes
none; :func:`porism_check` certifies which, both from the product matrix and
by evaluating the composite on sample points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .algebra import AlgebraKind, Duplex, Scalar, get_eps, is_exact, scalar
from .errors import (
    DegeneratePoint,
    NonInvertibleDenominator,
    NonInvertiblePivot,
    NotAReversion,
    NotCollinear,
    OddChain,
    PoleAtFormulaSingularity,
)
from .matrix import Mat2, is_scalar_matrix, mat_mul, mobius_apply
from .quadric import Line, QuadricBranch, collinear, invert_point, quadric_point
from .reversion import Reversion, apply, closing_point, compose_chain, reduce_three

DEFAULT_SAMPLES = 128


@dataclass(frozen=True)
class Configuration:
    """A quadric, a line, reversion points on the line, and parameters for the sample vertex X."""

    quadric: QuadricBranch
    line: Line
    points: tuple
    samples: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "samples", tuple(scalar(t) for t in self.samples))
        for p in self.points:
            if not self.line.contains(p):
                raise NotCollinear(f"{p!r} is not on the configuration line")
            if self.quadric.contains(p):
                raise DegeneratePoint(f"{p!r} lies on the {self.quadric.name}")

    @property
    def kind(self) -> AlgebraKind:
        return self.quadric.kind

    @property
    def is_exact(self) -> bool:
        parts = [self.line.base, self.line.dir, *self.points]
        return all(p.is_exact for p in parts) and all(is_exact(t) for t in self.samples)

    def sample_params(self) -> list:
        return list(self.samples) if self.samples else default_samples(self.quadric, self.is_exact)


@dataclass(frozen=True)
class PorismVerdict:
    closed: bool
    matrix_identity: bool
    max_residual: Scalar
    witness: Optional[dict] = None
    skipped_samples: list = field(default_factory=list)


def default_samples(quadric: QuadricBranch, exact: bool = False, n: int = DEFAULT_SAMPLES) -> list:
    """Parameters for sampling "every X on the quadric".

    Floats: the angle over [0, 2pi) on the circle, t over [-3, 3] otherwise.
    Rationals: t over [-3, 3] for the circle and the dual lines, and over the
    open interval (-1, 1) for the hyperbolas (rational parameterization).
    """
    if not exact:
        if quadric.kind == AlgebraKind.COMPLEX:
            return [2 * math.pi * k / n for k in range(n)]
        return [-3.0 + 6.0 * k / (n - 1) for k in range(n)] if n > 1 else [0.0]
    if quadric.kind == AlgebraKind.HYPERBOLIC:
        return [Fraction(2 * k + 1 - n, n + 1) for k in range(n)]
    return [Fraction(-3) + Fraction(6 * k, max(n - 1, 1)) for k in range(n)]


def sheets(quadric: QuadricBranch) -> tuple:
    return (1,) if quadric.kind == AlgebraKind.COMPLEX else (1, -1)


def _samples_on(quadric: QuadricBranch, params) -> list:
    return list(_sample_points(quadric, tuple(params)))


@lru_cache(maxsize=32)
def _sample_points(quadric: QuadricBranch, params: tuple) -> tuple:
    # the same default sample set is reused by every check on a branch
    return tuple((t, sh, quadric_point(quadric, t, sh)) for t in params for sh in sheets(quadric))


def _residuals_float(z: Mat2, xs: Sequence[Duplex], eps: float):
    """Vectorized Chebyshev residual |Z(X) - X| per sample; NaN where the denominator is singular."""
    kappa = z.kind.kappa
    xr = np.array([float(x.re) for x in xs])
    xi = np.array([float(x.im) for x in xs])
    a, b, c, d = ((float(e.re), float(e.im)) for e in z.entries())

    def lin(m, n):
        # m*x + n over the algebra
        return (m[0] * xr + kappa * m[1] * xi + n[0], m[0] * xi + m[1] * xr + n[1])

    nr, ni = lin(a, b)
    dr, di = lin(c, d)
    dn = dr * dr - kappa * di * di
    ok = np.abs(dn) > eps * (dr * dr + di * di)
    with np.errstate(divide="ignore", invalid="ignore"):
        # num * conj(den) / norm(den)
        wr = (nr * dr - kappa * ni * di) / dn
        wi = (ni * dr - nr * di) / dn
    res = np.maximum(np.abs(wr - xr), np.abs(wi - xi))
    res[~ok] = np.nan
    return res, np.hypot(xr, xi)


def _verdict(z: Mat2, samples, eps: float | None) -> PorismVerdict:
    eps_v = get_eps(eps)
    identity = is_scalar_matrix(z, eps)
    skipped = []
    worst = None
    all_close = True
    if z.is_exact and all(x.is_exact for _, _, x in samples):
        residuals = []
        for t, sh, x in samples:
            try:
                w = mobius_apply(z, x)
            except NonInvertibleDenominator:
                residuals.append(None)
                continue
            residuals.append(max(abs(w.re - x.re), abs(w.im - x.im)))
        all_close = not any(r for r in residuals if r is not None)
    else:
        res, mags = _residuals_float(z, [x for _, _, x in samples], eps_v)
        residuals = [None if math.isnan(r) else float(r) for r in res]
        for r, m in zip(residuals, mags):
            if r is not None and r > eps_v * (1 + m):
                all_close = False
    for i, r in enumerate(residuals):
        t, sh, _ = samples[i]
        if r is None:
            skipped.append({"t": t, "sheet": sh})
        elif worst is None or r > residuals[worst]:
            worst = i
    if worst is None:
        max_res: Scalar = Fraction(0) if z.is_exact else 0.0
        witness = None
    else:
        max_res = residuals[worst]
        t, sh, _ = samples[worst]
        witness = {"t": t, "sheet": sh, "residual": max_res}
    return PorismVerdict(
        closed=bool(identity and all_close),
        matrix_identity=bool(identity),
        max_residual=max_res,
        witness=witness,
        skipped_samples=skipped,
    )


def check_chain(points, quadric: QuadricBranch, samples=None, eps: float | None = None) -> PorismVerdict:
    """Closure verdict for the reversions through ``points`` (application order)."""
    points = list(points)
    if len(points) < 2 or len(points) % 2:
        raise OddChain(f"closure needs an even number (>= 2) of points, got {len(points)}")
    z = compose_chain(points, quadric)
    if samples is None:
        samples = default_samples(quadric, z.is_exact)
    return _verdict(z, _samples_on(quadric, samples), eps)


def porism_check(cfg: Configuration, eps: float | None = None) -> PorismVerdict:
    return check_chain(cfg.points, cfg.quadric, cfg.sample_params(), eps)


def fourth_point(p: Duplex, q: Duplex, r: Duplex, quadric: QuadricBranch,
                 eps: float | None = None) -> Duplex:
    """The point ``s`` closing every inscribed quadrilateral with sides through r, p, q in that order.

    Equivalently ``s = reduce_three(r, p, q)``: the path
    ``X -> R(X) -> P(R(X)) -> Q(P(R(X))) -> S(...) = X`` closes.
    """
    return reduce_three(r, p, q, quadric, eps)


@dataclass(frozen=True)
class ChainReduction:
    identity: bool
    pair: Optional[tuple] = None


def chain_reduce(points, quadric: QuadricBranch, eps: float | None = None) -> ChainReduction:
    """Collapse an even chain three reversions at a time until two remain.

    The last three applied are merged first.  The result is the identity
    exactly when the two survivors coincide.
    """
    pts = list(points)
    if not pts or len(pts) % 2:
        raise OddChain(f"chain_reduce needs an even number of points, got {len(pts)}")
    while len(pts) > 2:
        s = reduce_three(pts[-1], pts[-2], pts[-3], quadric, eps)
        pts[-3:] = [s]
    a, b = pts
    if a.close(b, eps):
        return ChainReduction(identity=True)
    return ChainReduction(identity=False, pair=(a, b))


def _axis(kind: AlgebraKind, exact: bool) -> Duplex:
    if kind == AlgebraKind.COMPLEX:
        return Duplex.real(Fraction(1) if exact else 1.0, kind)
    return Duplex.unit(kind, exact)


def axis_add(kind, a, b, eps: float | None = None) -> Scalar:
    """Add ``a`` and ``b`` by the quadrilateral construction through 0, a, b on one axis.

    The axis is the real line for the circle and the imaginary line for the
    hyperbola and the dual lines.  The answers are relativistic velocity
    addition, tangent addition and ordinary addition respectively.
    """
    kind = AlgebraKind.parse(kind)
    a, b = scalar(a), scalar(b)
    exact = is_exact(a) and is_exact(b)
    axis = _axis(kind, exact)
    quadric = QuadricBranch(kind, 1)
    origin = axis * 0
    try:
        s = fourth_point(origin, axis * a, axis * b, quadric, eps)
    except (NonInvertiblePivot, NotAReversion) as exc:
        raise PoleAtFormulaSingularity(f"{a} (+) {b} has no finite value") from exc
    return s.re if kind == AlgebraKind.COMPLEX else s.im


def closed_form_add(kind, a, b) -> Scalar:
    """``(a+b)/(1+ab)``, ``(a+b)/(1-ab)`` or ``a+b`` according to ``kind``."""
    kind = AlgebraKind.parse(kind)
    a, b = scalar(a), scalar(b)
    if kind == AlgebraKind.DUAL:
        return a + b
    den = 1 + a * b if kind == AlgebraKind.COMPLEX else 1 - a * b
    if den == 0:
        raise PoleAtFormulaSingularity(f"{a} (+) {b} has no finite value")
    return (a + b) / den


def path_vertices(points, quadric: QuadricBranch, x: Duplex, eps: float | None = None) -> list:
    """Vertices ``X, P1(X), P2(P1(X)), ...`` of the inscribed path, one per point."""
    verts = [x]
    for p in list(points)[:-1]:
        verts.append(apply(Reversion(p, quadric), verts[-1], eps))
    return verts


# -- circle inversion ----------------------------------------------------------


def inversion_matrix(center: Duplex, radius) -> Mat2:
    """Matrix ``A`` with ``invert_point(z) = A . conj(z)`` as a Moebius action."""
    r2 = Duplex.real(scalar(radius) ** 2, center.kind)
    c_bar = center.conj()
    one = Duplex.real(r2.re * 0 + 1, center.kind)
    return Mat2(center, r2 - center * c_bar, one, -c_bar)


def conjugate_by_inversion(z: Mat2, center: Duplex, radius) -> Mat2:
    """Matrix of ``J o Z o J`` for the circle inversion ``J``; acts on the inverted picture."""
    a = inversion_matrix(center, radius)
    return mat_mul(mat_mul(a, z.conj()), a.conj())


def check_inverted(points, quadric: QuadricBranch, center: Duplex, radius, samples=None,
                   eps: float | None = None) -> PorismVerdict:
    """Closure verdict recomputed in the inverted picture.

    The conjugated chain is evaluated on the images of the quadric samples,
    which lie on the image of the quadric rather than on the quadric itself.
    """
    if len(points) < 2 or len(points) % 2:
        raise OddChain(f"closure needs an even number (>= 2) of points, got {len(points)}")
    z = compose_chain(points, quadric)
    zc = conjugate_by_inversion(z, center, radius)
    if samples is None:
        samples = default_samples(quadric, zc.is_exact)
    images = [(t, sh, invert_point(x, center, radius)) for t, sh, x in _samples_on(quadric, samples)]
    return _verdict(zc, images, eps)


@dataclass(frozen=True)
class InvertedConfiguration:
    """Images under a circle inversion, grouped by the object they came from."""

    center: Duplex
    radius: Scalar
    quadric: list
    line: list
    points: list
    vertices: list
    sides: list


def line_params(n: int = 64) -> list:
    """Parameters covering a whole line: ``tan`` of equally spaced angles in (-pi/2, pi/2)."""
    return [math.tan(math.pi * ((k + 0.5) / n - 0.5)) for k in range(n)]


def invert_configuration(cfg: Configuration, center: Duplex, radius, x_samples=None,
                         quadric_samples=None, line_samples=None,
                         side_samples: int = 64) -> InvertedConfiguration:
    """Map every construction point of ``cfg`` through the inversion in ``(center, radius)``."""
    quadric = cfg.quadric
    if quadric_samples is None:
        quadric_samples = default_samples(quadric, False, 64)
    if line_samples is None:
        line_samples = line_params(64)
    if x_samples is None:
        x_samples = cfg.sample_params()

    def inv(z):
        return invert_point(z, center, radius)

    k_img = [inv(quadric_point(quadric, t, sh)) for t in quadric_samples for sh in sheets(quadric)]
    l_img = [inv(cfg.line.at(t)) for t in line_samples]
    chain = list(cfg.points)
    if len(chain) % 2:
        chain.append(closing_point(chain, quadric))
    pts = [inv(p) for p in chain]
    vertices, sides = [], []
    for t in x_samples:
        x = quadric_point(quadric, t, 1)
        try:
            verts = path_vertices(chain, quadric, x)
        except NonInvertibleDenominator:
            continue
        vertices.append([inv(v) for v in verts])
        side_imgs = []
        for i, v in enumerate(verts):
            w = verts[(i + 1) % len(verts)]
            if v.close(w):
                side_imgs.append([])
                continue
            side = Line.through(v, w)
            side_imgs.append([inv(side.at(s)) for s in line_params(side_samples)])
        sides.append(side_imgs)
    return InvertedConfiguration(center, scalar(radius), k_img, l_img, pts, vertices, sides)


def line_through(points) -> Line:
    """A line through the first two distinct points, checking the rest lie on it."""
    pts = list(points)
    base = pts[0]
    for p in pts[1:]:
        if not p.close(base):
            line = Line.through(base, p)
            break
    else:
        raise DegeneratePoint("all points coincide; the line is undetermined")
    for p in pts:
        if not collinear(line.base, line.base + line.dir, p):
            raise NotCollinear(f"{p!r} is not on the line through the other points")
    return line


__all__ = [
    "ChainReduction",
    "Configuration",
    "InvertedConfiguration",
    "PorismVerdict",
    "axis_add",
    "chain_reduce",
    "check_chain",
    "check_inverted",
    "closed_form_add",
    "conjugate_by_inversion",
    "default_samples",
    "fourth_point",
    "invert_configuration",
    "inversion_matrix",
    "line_through",
    "path_vertices",
    "porism_check",
]
