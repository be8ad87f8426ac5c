"""
Supersingular pairs
===================

When a1^2 is one of 0, q, 2q, 3q, 4q the normalised Frobenius is a root of
unity, and its maximal degrees form an arithmetic progression (or nothing).
"""

from maxcurves import classify, supersingular_degrees

for q, a1 in [(2, 0), (9, 3), (9, -3), (4, -4), (2, 2), (3, 3)]:
    c = classify(q, a1)
    prog = supersingular_degrees(q, a1)
    print(f"({q}, {a1}): {c}, degrees {prog}, first few {prog.first(3)}")

# Two tiny fields add a degree outside the progression: floor(2 sqrt 2) = 2
print(supersingular_degrees(2, -2))
print(supersingular_degrees(3, -3))
