"""
Angles and continued fractions
==============================

Write a1 = 2 sqrt(q) cos(theta).  A maximal degree n needs n theta/pi to sit
very close to an odd integer, so n shows up as the denominator of an
odd/odd convergent of x = theta/pi.  The angle is enclosed with directed
rounding; its error budget comes from required_eps.
"""

from maxcurves import convergents, frobenius_angle, max_degree, prefilter, required_eps

q, a1 = 2, 1
N = max_degree(q).n_max
angle = frobenius_angle(q, a1, required_eps(q, N))
print(f"x = {float(angle.x):.15f} +- {float(angle.eps):.2e}")

for c in convergents(angle.x, 10**4):
    tag = "odd/odd" if c.odd_odd else ""
    print(f"{c.m:>6d}/{c.n:<6d} {tag}")

# The cheap necessary condition rules out most degrees without computing a_n
print([n for n in range(1, 40) if prefilter(q, a1, n, angle)])
