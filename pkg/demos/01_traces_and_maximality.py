"""
Traces over extension fields and the maximality test
====================================================

A curve over F_q with trace a1 has trace a_n over F_{q^n}, where
a_0 = 2 and a_{n+1} = a1 a_n - q a_{n-1}.  It is maximal over F_{q^n}
when -a_n equals floor(2 sqrt(q)^n), which is an integer square root.
"""

from maxcurves import is_maximal, isqrt, trace_sequence

# The pair (2, 1): traces for the first few degrees
seq = trace_sequence(2, 1, 13)
for n, a in enumerate(seq):
    bound = isqrt(4 * 2**n)
    mark = "maximal" if n and -a == bound else ""
    print(f"n={n:2d}  a_n={a:6d}  floor(2 sqrt(2)^n)={bound:5d}  {mark}")

# Everything stays in exact integers, so large degrees are no problem
print(is_maximal(5, 1, 7), is_maximal(5, 1, 7 * 101))
