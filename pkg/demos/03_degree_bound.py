"""
How large can the degree be?
============================

For ordinary pairs a lower bound on linear forms in two logarithms gives an
explicit N_q beyond which no extension is maximal.  The sign of the bounding
function is certified with interval arithmetic at both ends of the bracket.
"""

from maxcurves import bound_fn, max_degree

for q in (2, 3, 10, 100, 1000, 10**4, 10**5, 10**6):
    b = max_degree(q)
    lo, hi = b.bracket
    print(f"q={q:>8d}  n_max={b.n_max:>8d}  f(lo)<0: {bound_fn(q, lo).sign < 0}  f(hi)>0: {bound_fn(q, hi).sign > 0}")
