"""
==========================
Polygons with 2n sides
==========================

Pick 2n-1 points on a line, and let the last point be whatever closes the
chain from one starting vertex.  Then the 2n-gon closes from every vertex, on
the circle, both hyperbolas and the dual "parallel lines" alike.

Run:  python demos/polygon_porism.py
"""

import random
from fractions import Fraction

from porism_lab import (
    CIRCLE,
    CONJUGATE_HYPERBOLA,
    HYPERBOLA,
    PARALLEL_LINES,
    Duplex,
    chain_reduce,
    check_chain,
    closing_point,
)
from porism_lab.errors import PorismError

rng = random.Random(12)


def rational():
    return Fraction(rng.randint(-40, 40), 20)


def points_on_a_line(quadric, n):
    base = Duplex(rational(), rational(), quadric.kind)
    step = Duplex(rational(), rational(), quadric.kind)
    return [base + step * rational() for _ in range(n)], step


for quadric in (CIRCLE, HYPERBOLA, CONJUGATE_HYPERBOLA, PARALLEL_LINES):
    for n in (2, 3, 5):
        while True:
            pts, _ = points_on_a_line(quadric, 2 * n - 1)
            try:
                chain = pts + [closing_point(pts, quadric)]
                reduced = chain_reduce(chain, quadric)
                verdict = check_chain(chain, quadric)
                break
            except PorismError:
                continue   # a point landed on the quadric; draw again
        print(f"{quadric.name:20s} {2 * n:2d}-gon  reduces to identity: {reduced.identity}  "
              f"closed: {verdict.closed}  residual {verdict.max_residual}  "
              f"({len(verdict.skipped_samples)} samples skipped)")

# slide the last point a little along the line and the chain opens
pts, step = points_on_a_line(CIRCLE, 5)
chain = pts + [closing_point(pts, CIRCLE) + step * Fraction(1, 100)]
print("perturbed hexagon:", chain_reduce(chain, CIRCLE))
