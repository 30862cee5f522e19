"""Deterministic SVG frames of an inscribed polygon sweeping around its quadric.

Coordinates are written with 9 decimals in mathematical orientation except
that ``y`` is negated (SVG's y axis points down).  Elements always appear in
the order quadric, line, path, points, labels, so the output is a pure
function of the configuration, the frame phase and the version.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .algebra import AlgebraKind, Duplex
from .errors import NonInvertibleDenominator
from .porism import Configuration, default_samples, invert_configuration, line_params, path_vertices
from .quadric import Line, QuadricBranch, quadric_point
from .reversion import closing_point

STYLE = {
    "quadric": 'fill="none" stroke="#1f4e79" stroke-width="0.02"',
    "line": 'fill="none" stroke="#7f7f7f" stroke-width="0.015"',
    "path": 'fill="none" stroke="#c0392b" stroke-width="0.02" stroke-linejoin="round"',
    "sides": 'fill="none" stroke="#e59866" stroke-width="0.012"',
    "points": 'fill="#000000"',
    "labels": 'font-family="sans-serif" font-size="0.22" fill="#000000"',
}


@dataclass(frozen=True)
class RenderScene:
    xmin: float
    xmax: float
    ymin: float
    ymax: float
    frame: int = 0


def fmt(v: float) -> str:
    s = f"{float(v):.9f}"
    return "0.000000000" if s == "-0.000000000" else s


def _xy(z: Duplex) -> str:
    return f"{fmt(z.re)},{fmt(-float(z.im))}"


def to_float(cfg: Configuration) -> Configuration:
    def f(z):
        return Duplex(float(z.re), float(z.im), z.kind)

    return Configuration(cfg.quadric, Line(f(cfg.line.base), f(cfg.line.dir)),
                         [f(p) for p in cfg.points], [float(t) for t in cfg.samples])


def _chain(cfg: Configuration) -> list:
    chain = list(cfg.points)
    if len(chain) % 2:
        chain.append(closing_point(chain, cfg.quadric))
    return chain


def _labels(n: int) -> list:
    return list("PQRS") if n == 4 else [f"P{i + 1}" for i in range(n)]


def phase_range(quadric: QuadricBranch) -> tuple:
    """Start and span of the sweep parameter."""
    if quadric.kind == AlgebraKind.COMPLEX:
        return math.pi / 2, 2 * math.pi
    if quadric.kind == AlgebraKind.HYPERBOLIC:
        return -1.5, 3.0
    return -2.0, 4.0


def frame_phase(cfg: Configuration, index: int, frames: int) -> float:
    start, span = phase_range(cfg.quadric)
    if cfg.samples:
        start = float(cfg.samples[0])
    return start + span * index / frames


def _viewport(points, base: float) -> RenderScene:
    xs = [float(p.re) for p in points] + [-base, base]
    ys = [float(p.im) for p in points] + [-base, base]
    pad = 0.1 * max(max(xs) - min(xs), max(ys) - min(ys))
    return RenderScene(min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad)


def _header(vp: RenderScene, title: str) -> list:
    w, h = vp.xmax - vp.xmin, vp.ymax - vp.ymin
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{fmt(vp.xmin)} {fmt(-vp.ymax)} {fmt(w)} {fmt(h)}" '
        f'width="600" height="{int(round(600 * h / w))}">',
        f"<title>{title}</title>",
    ]


def _polyline(points, cls: str, closed: bool = False) -> str:
    tag = "polygon" if closed else "polyline"
    return f'<{tag} class="{cls}" points="{" ".join(_xy(p) for p in points)}"/>'


def _quadric_elements(q: QuadricBranch, vp: RenderScene) -> list:
    if q.kind == AlgebraKind.COMPLEX:
        return ['<circle class="quadric" cx="0.000000000" cy="0.000000000" r="1.000000000"/>']
    if q.kind == AlgebraKind.DUAL:
        return [f'<line class="quadric" x1="{fmt(x)}" y1="{fmt(-vp.ymin)}" x2="{fmt(x)}" y2="{fmt(-vp.ymax)}"/>'
                for x in (1.0, -1.0)]
    reach = max(abs(vp.xmin), abs(vp.xmax), abs(vp.ymin), abs(vp.ymax))
    tmax = math.acosh(max(reach, 1.0)) + 0.1
    ts = [-tmax + 2 * tmax * k / 200 for k in range(201)]
    return [_polyline([quadric_point(q, t, sh) for t in ts], "quadric") for sh in (1, -1)]


def _line_element(line: Line, vp: RenderScene) -> str:
    d = line.dir
    dlen = math.hypot(float(d.re), float(d.im))
    cx, cy = (vp.xmin + vp.xmax) / 2, (vp.ymin + vp.ymax) / 2
    t0 = float(line.param(Duplex(cx, cy, line.kind)))
    half = math.hypot(vp.xmax - vp.xmin, vp.ymax - vp.ymin) / dlen
    a, b = line.at(t0 - half), line.at(t0 + half)
    return (f'<line class="line" x1="{fmt(a.re)}" y1="{fmt(-float(a.im))}" '
            f'x2="{fmt(b.re)}" y2="{fmt(-float(b.im))}"/>')


def _point_elements(points, cls: str = "point") -> list:
    return [f'<circle class="{cls}" cx="{fmt(p.re)}" cy="{fmt(-float(p.im))}" r="0.035"/>' for p in points]


def _label_elements(points, names) -> list:
    return [f'<text x="{fmt(float(p.re) + 0.06)}" y="{fmt(-float(p.im) - 0.06)}">{n}</text>'
            for p, n in zip(points, names)]


def render_svg(cfg: Configuration, phase: float, frame: int = 0) -> str:
    """One frame: the quadric, the line, the inscribed path starting at parameter ``phase``."""
    cfg = to_float(cfg)
    chain = _chain(cfg)
    q = cfg.quadric
    x = quadric_point(q, phase, 1)
    try:
        verts = path_vertices(chain, q, x)
    except NonInvertibleDenominator:
        verts = []
    base = 2.5 if q.kind == AlgebraKind.COMPLEX else 4.0
    vp = _viewport(chain, base)
    vp = RenderScene(vp.xmin, vp.xmax, vp.ymin, vp.ymax, frame)
    out = _header(vp, f"{q.name} porism, frame {frame}")
    out.append(f'<g id="quadric" {STYLE["quadric"]}>')
    out += _quadric_elements(q, vp)
    out.append("</g>")
    out.append(f'<g id="line" {STYLE["line"]}>')
    out.append(_line_element(cfg.line, vp))
    out.append("</g>")
    out.append(f'<g id="path" {STYLE["path"]}>')
    if verts:
        out.append(_polyline(verts, "path", closed=True))
    out.append("</g>")
    out.append(f'<g id="points" {STYLE["points"]}>')
    out += _point_elements(chain)
    out += _point_elements(verts, "vertex")
    out.append("</g>")
    out.append(f'<g id="labels" {STYLE["labels"]}>')
    out += _label_elements(chain, _labels(len(chain)))
    out += _label_elements(verts[:1], ["X"])
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_inverted_svg(cfg: Configuration, center: Duplex, radius: float, phase: float,
                        frame: int = 0) -> str:
    """One frame of the configuration after inversion in the circle ``(center, radius)``.

    The quadric and the line become circles (or lines through the center's
    image); the sides of the polygon become a chain of circles through the
    inversion center.
    """
    cfg = to_float(cfg)
    inv = invert_configuration(cfg, center, radius, x_samples=[phase],
                               quadric_samples=default_samples(cfg.quadric, False, 1024),
                               line_samples=line_params(256), side_samples=256)
    chain = _chain(cfg)
    verts = inv.vertices[0] if inv.vertices else []
    sides = inv.sides[0] if inv.sides else []
    frame_pts = inv.quadric + verts + inv.points + [center]
    vp = _viewport(frame_pts, 0.0)
    reach = 20 * float(radius)
    vp = RenderScene(max(vp.xmin, float(center.re) - reach), min(vp.xmax, float(center.re) + reach),
                     max(vp.ymin, float(center.im) - reach), min(vp.ymax, float(center.im) + reach), frame)
    out = _header(vp, f"inverted {cfg.quadric.name} porism, frame {frame}")
    out.append(f'<g id="quadric" {STYLE["quadric"]}>')
    out.append(_polyline(inv.quadric, "quadric", closed=True))
    out.append("</g>")
    out.append(f'<g id="line" {STYLE["line"]}>')
    out.append(_polyline(inv.line, "line"))
    out.append("</g>")
    out.append(f'<g id="sides" {STYLE["sides"]}>')
    out += [_polyline(s, "side") for s in sides if s]
    out.append("</g>")
    out.append(f'<g id="path" {STYLE["path"]}>')
    if verts:
        out.append(_polyline(verts, "path", closed=True))
    out.append("</g>")
    out.append(f'<g id="points" {STYLE["points"]}>')
    out += _point_elements(inv.points)
    out += _point_elements(verts, "vertex")
    out += _point_elements([center], "center")
    out.append("</g>")
    out.append(f'<g id="labels" {STYLE["labels"]}>')
    out += _label_elements(inv.points, _labels(len(chain)))
    out += _label_elements(verts[:1], ["X"])
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_frames(cfg: Configuration, out_dir, frames: int = 1, invert=None) -> list:
    """Write ``frame-0000.svg`` ... into ``out_dir``; ``invert`` is ``(center, radius)`` or None."""
    if frames < 1:
        raise ValueError("frames must be >= 1")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for k in range(frames):
        phase = frame_phase(cfg, k, frames)
        if invert is None:
            svg = render_svg(cfg, phase, k)
        else:
            svg = render_inverted_svg(cfg, invert[0], invert[1], phase, k)
        path = out / f"frame-{k:04d}.svg"
        path.write_text(svg, encoding="utf-8")
        written.append(path)
    return written
