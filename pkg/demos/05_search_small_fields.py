"""
All maximal triples for q < 1000
================================

The full pipeline: skip square q, bound the degree, walk the odd/odd
convergents and climb through prime multiples.  Every triple is re-checked
with the exact test.
"""

from collections import Counter

from maxcurves import SearchConfig, enumerate_triples

triples = list(enumerate_triples(SearchConfig(2, 999)))
print(Counter(t.n for t in triples))
print("n = 5:", [(t.q, t.a1) for t in triples if t.n == 5])
print("other:", [(t.q, t.a1, t.n) for t in triples if t.n not in (3, 5)])

# Same thing from the command line:
#   maxcurves search --qmin 2 --qmax 999 --format jsonl --out triples.jsonl
