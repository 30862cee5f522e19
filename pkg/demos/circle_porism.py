"""
=====================
Closing quadrilaterals
=====================

Three points on a line and a unit circle.  Start anywhere on the circle, draw
a chord through R, then through P, then through Q.  The fourth chord, back
to the start, always crosses the line at the same point S.

Run:  python demos/circle_porism.py [out_dir]
"""

import math
import sys
from fractions import Fraction

from porism_lab import CIRCLE, Configuration, Duplex, Line, fourth_point, porism_check
from porism_lab.porism import path_vertices
from porism_lab.render import write_frames

out_dir = sys.argv[1] if len(sys.argv) > 1 else "frames-circle"

# everything on the horizontal line y = -1/5
y = Fraction(-1, 5)
p, q, r = Duplex(Fraction(1, 3), y), Duplex(2, y), Duplex(Fraction(-3, 2), y)
s = fourth_point(p, q, r, CIRCLE)
print("S =", s)   # exact: the rational backend never rounds

chain = [r, p, q, s]   # application order
cfg = Configuration(CIRCLE, Line(r, Duplex(1, 0)), chain)
verdict = porism_check(cfg)
print("closed:", verdict.closed, " max residual:", verdict.max_residual)

# the same thing by hand, in floating point, for a few starting vertices
fchain = [Duplex(float(z.re), float(z.im)) for z in chain]
for k in range(6):
    angle = 2 * math.pi * k / 6 + 0.3
    x = Duplex(math.cos(angle), math.sin(angle))
    verts = path_vertices(fchain, CIRCLE, x)
    last = verts[-1]
    # the side from the last vertex back to x must pass through s
    cross = (x.re - last.re) * (float(s.im) - last.im) - (x.im - last.im) * (float(s.re) - last.re)
    print(f"start angle {angle:5.2f}  vertices {[f'({v.re:+.3f},{v.im:+.3f})' for v in verts]}  "
          f"last side misses S by {abs(cross):.1e}")

# a small animation: the quadrilateral sweeps once around the circle
files = write_frames(cfg, out_dir, frames=24)
print(f"wrote {len(files)} frames to {out_dir}/")
