"""``porism-lab`` command line.

Exit codes: 0 success (or closed), 1 I/O or parse error, 2 validation error,
3 degenerate arithmetic, 4 porism not closed.  Errors are reported as a JSON
object on standard error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import serialize as ser
from .algebra import DEFAULT_EPS, AlgebraKind, Duplex, tolerance
from .errors import DegenerateError, OddChain, PorismError, ValidationError
from .porism import (
    Configuration,
    axis_add,
    chain_reduce,
    closed_form_add,
    fourth_point,
    line_through,
    porism_check,
)
from .quadric import QuadricBranch
from .render import write_frames
from .reversion import closing_point, reduce_three

EXIT_OK, EXIT_IO, EXIT_VALIDATION, EXIT_DEGENERATE, EXIT_OPEN = 0, 1, 2, 3, 4

ORDER_NOTE = ("sides of every inscribed quadrilateral pass through r, p, q, s in that order: "
              "X -> R(X) -> P(R(X)) -> Q(P(R(X))) -> S(...) = X")


class UsageError(Exception):
    pass


def _load(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _emit(obj) -> None:
    sys.stdout.write(ser.dumps(obj) + "\n")


def _exact_flag(args):
    return True if args.exact else None


def cmd_fourth_point(args) -> int:
    quadric, line, points, _ = ser.read_points(_load(args.config), _exact_flag(args))
    if len(points) != 3:
        raise OddChain(f"fourth-point needs exactly three points, got {len(points)}")
    if line is not None:
        Configuration(quadric, line, points)
    p, q, r = points
    s = fourth_point(p, q, r, quadric)
    _emit({"s": ser.duplex_to_json(s), "order": ORDER_NOTE})
    return EXIT_OK


def cmd_check(args) -> int:
    cfg = ser.configuration_from_json(_load(args.config), _exact_flag(args))
    verdict = porism_check(cfg)
    _emit(ser.verdict_to_json(verdict))
    return EXIT_OK if verdict.closed else EXIT_OPEN


def cmd_reduce(args) -> int:
    quadric, line, points, _ = ser.read_points(_load(args.config), _exact_flag(args))
    if line is not None:
        Configuration(quadric, line, points)
    if len(points) == 3:
        _emit({"s": ser.duplex_to_json(reduce_three(*points, quadric))})
    else:
        _emit(ser.reduction_to_json(chain_reduce(points, quadric)))
    return EXIT_OK


def _parse_number(text: str, exact: bool):
    if exact:
        return Fraction(text)
    try:
        return float(text)
    except ValueError:
        return float(Fraction(text))


def cmd_add(args) -> int:
    kind = AlgebraKind.parse(args.kind)
    a, b = _parse_number(args.a, args.exact), _parse_number(args.b, args.exact)
    value = axis_add(kind, a, b)
    closed = closed_form_add(kind, a, b)
    _emit({
        "kind": kind.label,
        "a": ser.scalar_to_json(a),
        "b": ser.scalar_to_json(b),
        "value": ser.scalar_to_json(value),
        "closed_form": ser.scalar_to_json(closed),
        "difference": ser.scalar_to_json(value - closed),
    })
    return EXIT_OK


def _parse_invert(text: str):
    center_txt, _, radius_txt = text.rpartition(",")
    if not center_txt:
        raise UsageError("--invert expects <center>,<radius>, e.g. 1.2+0i,1")
    c = complex(center_txt.replace("i", "j").replace(" ", ""))
    return Duplex(c.real, c.imag), float(radius_txt)


def cmd_render(args) -> int:
    cfg = ser.configuration_from_json(_load(args.config), _exact_flag(args))
    invert = _parse_invert(args.invert) if args.invert else None
    if args.frames < 1:
        raise UsageError("--frames must be >= 1")
    written = write_frames(cfg, args.out, args.frames, invert)
    _emit({"frames": [str(p) for p in written]})
    return EXIT_OK


def random_configuration(rng: random.Random, quadric: QuadricBranch, n_points: int = 4,
                         exact: bool = False) -> Configuration:
    """A random closing configuration: ``n_points - 1`` collinear points and their closing point."""
    def num():
        x = Fraction(rng.randint(-40, 40), 20)
        return x if exact else float(x)

    while True:
        base = Duplex(num(), num(), quadric.kind)
        other = Duplex(num(), num(), quadric.kind)
        if base == other:
            continue
        pts = [base + (other - base) * num() for _ in range(n_points - 1)]
        try:
            pts.append(closing_point(pts, quadric))
            return Configuration(quadric, line_through([base, other]), pts)
        except PorismError:
            continue


def cmd_demo(args) -> int:
    rng = random.Random(args.seed)
    quadric = QuadricBranch(AlgebraKind.parse(args.kind), args.sigma)
    if args.sides < 2 or args.sides % 2:
        raise OddChain("--sides must be an even number >= 2")
    cfg = random_configuration(rng, quadric, args.sides, bool(args.exact))
    verdict = porism_check(cfg)
    _emit({"configuration": ser.configuration_to_json(cfg), "verdict": ser.verdict_to_json(verdict)})
    return EXIT_OK if verdict.closed else EXIT_OPEN


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--exact", action="store_true", help="run everything on the rational backend")
    common.add_argument("--eps", type=float, default=None,
                        help="float tolerance (default: $PORISM_EPS or 1e-9)")

    parser = argparse.ArgumentParser(prog="porism-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fourth-point", parents=[common], help="closing point of a collinear triple")
    p.add_argument("config", help="configuration JSON with three points ('-' for stdin)")
    p.set_defaults(func=cmd_fourth_point)

    p = sub.add_parser("check", parents=[common], help="verify closure of an even chain")
    p.add_argument("config")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reduce", parents=[common], help="collapse a chain three reversions at a time")
    p.add_argument("config")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("add", parents=[common], help="velocity / tangent / plain addition by construction")
    p.add_argument("kind", choices=["complex", "hyperbolic", "dual"])
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("render", parents=[common], help="write SVG frames")
    p.add_argument("config")
    p.add_argument("--frames", type=int, default=1)
    p.add_argument("--out", required=True)
    p.add_argument("--invert", default=None, metavar="CENTER,RADIUS")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("demo", parents=[common], help="random closing configuration and its verdict")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=["complex", "hyperbolic", "dual"], default="complex")
    p.add_argument("--sigma", type=int, choices=[1, -1], default=1)
    p.add_argument("--sides", type=int, default=4)
    p.set_defaults(func=cmd_demo)
    return parser


def _fail(code: int, exc: BaseException) -> int:
    sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        eps = args.eps
        if eps is None:
            env = os.environ.get("PORISM_EPS")
            eps = float(env) if env else DEFAULT_EPS
        with tolerance(eps):
            return args.func(args)
    except ValidationError as exc:
        return _fail(EXIT_VALIDATION, exc)
    except DegenerateError as exc:
        return _fail(EXIT_DEGENERATE, exc)
    except UsageError as exc:
        return _fail(EXIT_VALIDATION, exc)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        return _fail(EXIT_IO, exc)


if __name__ == "__main__":
    sys.exit(main())
