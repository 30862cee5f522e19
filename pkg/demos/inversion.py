"""
=========================
The porism after inversion
=========================

Invert the whole circle picture in some other circle.  Lines turn into
circles through the inversion center, so the line of points becomes a circle,
each chord becomes a circle, and closing still works.

Run:  python demos/inversion.py [out_dir]
"""

import sys
from fractions import Fraction

from porism_lab import CIRCLE, Configuration, Duplex, Line, check_chain, check_inverted, closing_point, invert_configuration
from porism_lab.render import write_frames

out_dir = sys.argv[1] if len(sys.argv) > 1 else "frames-inverted"

y = Fraction(-1, 5)
pts = [Duplex(Fraction(-3, 2), y), Duplex(Fraction(1, 3), y), Duplex(2, y)]
chain = pts + [closing_point(pts, CIRCLE)]
center, radius = Duplex(Fraction(6, 5), 0), 1

# the verdict is the same whether we look at the original or the inverted picture
print("original:", check_chain(chain, CIRCLE).closed, " inverted:", check_inverted(chain, CIRCLE, center, radius).closed)


def circle_through(a, b, c):
    a, b, c = (complex(z.re, z.im) for z in (a, b, c))
    w = (c - a) / (b - a)
    m = (a - b) * (w - abs(w) ** 2) / (2j * w.imag) - a
    return -m, abs(a + m)


fcfg = Configuration(CIRCLE, Line(Duplex(-1.5, -0.2), Duplex(1.0, 0.0)),
                     [Duplex(float(z.re), float(z.im)) for z in chain])
inv = invert_configuration(fcfg, Duplex(1.2, 0.0), 1.0)
for name, curve in (("image of the unit circle", inv.quadric), ("image of the line", inv.line)):
    c, r = circle_through(curve[0], curve[len(curve) // 3], curve[2 * len(curve) // 3])
    spread = max(abs(abs(complex(z.re, z.im) - c) - r) for z in curve)
    print(f"{name}: center {c:.4f}, radius {r:.4f}, worst deviation {spread:.1e}")

files = write_frames(fcfg, out_dir, frames=12, invert=(Duplex(1.2, 0.0), 1.0))
print(f"wrote {len(files)} frames to {out_dir}/")
