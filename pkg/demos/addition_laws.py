"""
=================================
Three addition laws, one drawing
=================================

Put 0, a and b on an axis and close the quadrilateral through them.  The
fourth point depends on which unit quadric the polygon lives on:

    circle            (a + b) / (1 + ab)   relativistic velocities (c = 1)
    hyperbola         (a + b) / (1 - ab)   tangents
    parallel lines     a + b               plain addition

Run:  python demos/addition_laws.py
"""

import math
from fractions import Fraction

from porism_lab import axis_add, closed_form_add

pairs = [(Fraction(1, 2), Fraction(1, 2)), (Fraction(3, 5), Fraction(4, 5)), (Fraction(-1, 3), Fraction(9, 10))]

for kind in ("complex", "hyperbolic", "dual"):
    print(kind)
    for a, b in pairs:
        built = axis_add(kind, a, b)
        print(f"  {str(a):>5} (+) {str(b):<5} = {str(built):<8} closed form {closed_form_add(kind, a, b)}")

# on floats the hyperbolic law is tan(atan a + atan b)
a, b = 0.35, -0.8
print("tan check:", axis_add("hyperbolic", a, b), math.tan(math.atan(a) + math.atan(b)))

# velocities: rapidities add, so tanh(atanh a + atanh b) is the same law
v, w = 0.6, 0.7
print("rapidity check:", axis_add("complex", v, w), math.tanh(math.atanh(v) + math.atanh(w)))

# repeated boosts never pass the speed of light
u = Fraction(0)
for _ in range(8):
    u = axis_add("complex", u, Fraction(1, 2))
    print(f"  after another 1/2: {u} = {float(u):.6f}")
