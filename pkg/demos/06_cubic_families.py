"""
Degree three
============

For n = 3 only two traces are possible, and a1 = -floor(2 sqrt q) only works
for square q.  Taking q = a1^2 + b with b^2 <= a1 always gives a maximal
triple, and primes a^2 + c^2 with c^4 <= a give infinitely many prime fields.
"""

from maxcurves import cubic_candidates, cubic_prime_family, sector_enumerate, soomro_test

print(sorted(cubic_candidates(17)))
print(soomro_test(2, 1), soomro_test(2, 2))

fam = cubic_prime_family(50)
print(len(fam), [(t.q, t.a1) for t in fam[:8]])

sec = sector_enumerate(200)
print(sum(s.s3 for s in sec), sum(s.s4 for s in sec), sum(s.s5 for s in sec), sum(s.s6 for s in sec))
