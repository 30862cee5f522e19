"""JSON encoding of duplex values, quadrics, lines, configurations and verdicts.

Rationals travel as ``"p/q"`` strings and floats as JSON numbers, so the
backend survives a round trip.  A document mixing the two is rejected unless
the caller forces the exact backend, which converts every number through its
shortest decimal representation.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import AlgebraKind, Duplex, Scalar
from .errors import MixedBackends, ValidationError
from .matrix import Mat2
from .porism import ChainReduction, Configuration, PorismVerdict, line_through
from .quadric import Line, QuadricBranch


class _Reader:
    """Scalar decoder that remembers which backends it has seen."""

    def __init__(self, exact: bool | None = None):
        self.exact = exact
        self.seen = set()

    def scalar(self, v) -> Scalar:
        if isinstance(v, bool) or not isinstance(v, (int, float, str)):
            raise TypeError(f"expected a number or a 'p/q' string, got {v!r}")
        if isinstance(v, str):
            try:
                x = Fraction(v)
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"malformed rational {v!r}") from None
            self.seen.add("exact")
            return x
        if self.exact:
            return Fraction(repr(float(v)))
        self.seen.add("float")
        if self.exact is None and len(self.seen) > 1:
            raise MixedBackends("document mixes rational strings and float numbers")
        return float(v)

    def check(self):
        if self.exact is None and len(self.seen) > 1:
            raise MixedBackends("document mixes rational strings and float numbers")


def scalar_to_json(x: Scalar):
    if isinstance(x, Fraction):
        return str(x)
    return float(x) + 0.0  # drops the sign of -0.0


def scalar_from_json(v, exact: bool | None = None) -> Scalar:
    return _Reader(exact).scalar(v)


def duplex_to_json(z: Duplex) -> dict:
    return {"re": scalar_to_json(z.re), "im": scalar_to_json(z.im), "kind": z.kind.label}


def _duplex(obj, rd: _Reader, kind=None) -> Duplex:
    if isinstance(obj, (int, float, str)) and not isinstance(obj, bool):
        if kind is None:
            raise ValueError("a bare number needs a known algebra kind")
        x = rd.scalar(obj)
        return Duplex(x, x * 0, kind)
    k = AlgebraKind.parse(obj.get("kind", kind if kind is not None else "complex"))
    if kind is not None and k != AlgebraKind.parse(kind):
        raise ValidationError(f"point of kind {k.label} in a {AlgebraKind.parse(kind).label} document")
    re = rd.scalar(obj["re"])
    im = rd.scalar(obj["im"]) if "im" in obj else re * 0
    return Duplex(re, im, k)


def duplex_from_json(obj, exact: bool | None = None, kind=None) -> Duplex:
    rd = _Reader(exact)
    z = _duplex(obj, rd, kind)
    rd.check()
    return z


def quadric_to_json(q: QuadricBranch) -> dict:
    return {"kind": q.kind.label, "sigma": q.sigma}


def quadric_from_json(obj) -> QuadricBranch:
    return QuadricBranch(AlgebraKind.parse(obj["kind"]), int(obj.get("sigma", 1)))


def line_to_json(line: Line) -> dict:
    return {"base": duplex_to_json(line.base), "dir": duplex_to_json(line.dir)}


def matrix_to_json(m: Mat2) -> dict:
    return {name: duplex_to_json(e) for name, e in zip(("m11", "m12", "m21", "m22"), m.entries())}


def matrix_from_json(obj, exact: bool | None = None) -> Mat2:
    rd = _Reader(exact)
    m = Mat2(*(_duplex(obj[k], rd) for k in ("m11", "m12", "m21", "m22")))
    rd.check()
    return m


def configuration_to_json(cfg: Configuration) -> dict:
    return {
        "quadric": quadric_to_json(cfg.quadric),
        "line": line_to_json(cfg.line),
        "points": [duplex_to_json(p) for p in cfg.points],
        "samples": [scalar_to_json(t) for t in cfg.samples],
    }


def read_points(obj, exact: bool | None = None):
    """Quadric and point list of a (possibly line-less) configuration document."""
    rd = _Reader(exact)
    quadric = quadric_from_json(obj["quadric"])
    points = [_duplex(p, rd, quadric.kind) for p in obj["points"]]
    line = None
    if obj.get("line") is not None:
        line = Line(_duplex(obj["line"]["base"], rd, quadric.kind), _duplex(obj["line"]["dir"], rd, quadric.kind))
    samples = [rd.scalar(t) for t in obj.get("samples", [])]
    rd.check()
    return quadric, line, points, samples


def configuration_from_json(obj, exact: bool | None = None) -> Configuration:
    quadric, line, points, samples = read_points(obj, exact)
    if line is None:
        line = line_through(points)
    return Configuration(quadric, line, points, samples)


def _sample_to_json(s: dict) -> dict:
    out = {"t": scalar_to_json(s["t"]), "sheet": s["sheet"]}
    if "residual" in s:
        out["residual"] = scalar_to_json(s["residual"])
    return out


def verdict_to_json(v: PorismVerdict) -> dict:
    return {
        "closed": v.closed,
        "matrix_identity": v.matrix_identity,
        "max_residual": scalar_to_json(v.max_residual),
        "witness": None if v.witness is None else _sample_to_json(v.witness),
        "skipped_samples": [_sample_to_json(s) for s in v.skipped_samples],
    }


def verdict_from_json(obj) -> PorismVerdict:
    # sample parameters and residuals may come from different backends
    def sc(v):
        return Fraction(v) if isinstance(v, str) else float(v)

    def sample(s):
        out = {"t": sc(s["t"]), "sheet": int(s["sheet"])}
        if "residual" in s:
            out["residual"] = sc(s["residual"])
        return out

    return PorismVerdict(
        closed=bool(obj["closed"]),
        matrix_identity=bool(obj["matrix_identity"]),
        max_residual=sc(obj["max_residual"]),
        witness=None if obj.get("witness") is None else sample(obj["witness"]),
        skipped_samples=[sample(s) for s in obj.get("skipped_samples", [])],
    )


def reduction_to_json(r: ChainReduction) -> dict:
    return {"identity": r.identity, "pair": None if r.pair is None else [duplex_to_json(p) for p in r.pair]}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
