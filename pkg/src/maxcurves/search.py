"""Finding every maximal degree of an ordinary pair, and range scans.

ordinary_degrees follows the MaximalCurves procedure: an odd maximal degree
n >= 3 (n >= 13 when q = 2) of an ordinary pair has m/n, for some odd m, as
a convergent of any x close enough to theta/pi.  A convergent whose fraction
is reduced still leads to the solution, because if n is maximal then so is
n / gcd(m, n); the prime-multiple recursion climbs back up from there.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .bound import max_degree
from .diophantine import (
    AngleApprox,
    convergents,
    frobenius_angle,
    prefilter,
    prefilter_many,
    required_eps,
)
from .errors import InvalidArgument, InvariantViolation, WrongClassification
from .exact import MaximalTriple, Source, classify, is_maximal, is_square, isqrt
from .primes import odd_primes_upto, prime_powers
from .supersingular import supersingular_degrees

__all__ = [
    "SearchConfig",
    "ordinary_degrees",
    "convergents_to_solutions",
    "enumerate_triples",
    "triples_for_q",
    "Q2_DIRECT",
]

Q2_DIRECT = (3, 5, 7, 9, 11)

# above this many bits in q^n, sharpen the angle before the exact check
_EXACT_BITS = 1 << 14


@dataclass(frozen=True)
class SearchConfig:
    q_min: int
    q_max: int
    include_supersingular: bool = False
    n_floor: int = 2
    parallelism: int = 1

    def __post_init__(self) -> None:
        if not 2 <= self.q_min <= self.q_max:
            raise InvalidArgument(f"need 2 <= q_min <= q_max, got [{self.q_min}, {self.q_max}]")
        if self.n_floor < 1:
            raise InvalidArgument("n_floor must be >= 1")
        if self.parallelism < 1:
            raise InvalidArgument("parallelism must be >= 1")


def _sharpen(q: int, a1: int, n: int) -> AngleApprox:
    """An angle precise enough that prefilter is nearly sharp at degree n."""
    bits = (n * q.bit_length()) // 4 + n.bit_length() + 8
    return frobenius_angle(q, a1, Fraction(1, 1 << bits))


def _is_solution(q: int, a1: int, n: int, angle: AngleApprox) -> bool:
    if not prefilter(q, a1, n, angle):
        return False
    if n * q.bit_length() > _EXACT_BITS and not prefilter(q, a1, n, _sharpen(q, a1, n)):
        return False
    return is_maximal(q, a1, n)


def _climb(q: int, a1: int, N: int, n: int, angle: AngleApprox, seen: set, out: set) -> None:
    if n in seen:
        return
    seen.add(n)
    if not _is_solution(q, a1, n, angle):
        return
    if n > 1:
        out.add(n)
    ps = odd_primes_upto(N // n)
    if ps.size == 0:
        return
    cands = ps * n
    for m in cands[prefilter_many(q, cands, angle)].tolist():
        _climb(q, a1, N, m, angle, seen, out)


def convergents_to_solutions(
    q: int, a1: int, N: int, n: int, angle: Optional[AngleApprox] = None
) -> list[int]:
    """Degrees reported by the recursion started at n: n itself if maximal and
    n > 1, then recursively p*n for odd primes p <= N/n. Stops at non-maximal n."""
    if n < 1 or n > N:
        raise InvalidArgument(f"need 1 <= n <= N, got n={n}, N={N}")
    if angle is None:
        angle = frobenius_angle(q, a1, required_eps(q, max(N, 3)))
    out: set[int] = set()
    _climb(q, a1, N, n, angle, set(), out)
    return sorted(out)


def ordinary_degrees(q: int, a1: int) -> list[int]:
    """All n > 1 with -a_n = floor(2 sqrt(q)^n) for an ordinary pair, ascending."""
    cls = classify(q, a1)
    if cls.supersingular:
        raise WrongClassification(
            f"({q}, {a1}) is supersingular; use supersingular_degrees instead"
        )
    if is_square(q):
        return []
    N = max_degree(q).n_max
    angle = frobenius_angle(q, a1, required_eps(q, N))
    out: set[int] = set()
    if q == 2:
        out.update(n for n in Q2_DIRECT if is_maximal(q, a1, n))
    seen: set[int] = set()
    for c in convergents(angle.x, N):
        if c.odd_odd:
            _climb(q, a1, N, c.n, angle, seen, out)
    return sorted(out)


def triples_for_q(
    q: int, include_supersingular: bool = False, n_floor: int = 2
) -> list[MaximalTriple]:
    """Every triple with this q, ordered by (a1, n)."""
    out: list[MaximalTriple] = []
    square = is_square(q)
    b = isqrt(4 * q)
    for a1 in range(-b, b + 1):
        if classify(q, a1).supersingular:
            if include_supersingular:
                n = supersingular_degrees(q, a1).first_at_least(n_floor)
                if n is not None:
                    out.append(MaximalTriple(q, a1, n, Source.SUPERSINGULAR_PROGRESSION))
            continue
        if square or math.gcd(q, a1) != 1:
            continue
        if n_floor <= 1 and is_maximal(q, a1, 1):
            out.append(MaximalTriple(q, a1, 1, Source.DIRECT_CHECK))
        for n in ordinary_degrees(q, a1):
            if n >= n_floor:
                out.append(MaximalTriple(q, a1, n, Source.ORDINARY_SEARCH))
    return out


def _work(args: tuple[int, bool, int]) -> list[MaximalTriple]:
    return triples_for_q(*args)


def enumerate_triples(cfg: SearchConfig, qs: Optional[Iterable[int]] = None) -> Iterator[MaximalTriple]:
    """Stream triples for all prime powers q in [q_min, q_max], ordered by (q, a1, n).

    The order does not depend on cfg.parallelism.
    """
    if qs is None:
        qs = prime_powers(cfg.q_min, cfg.q_max)
    jobs = [(q, cfg.include_supersingular, cfg.n_floor) for q in qs]
    if cfg.parallelism == 1:
        for job in jobs:
            yield from _work(job)
        return
    with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
        # map preserves input order, so the merge is deterministic
        for batch in pool.map(_work, jobs, chunksize=max(1, len(jobs) // (16 * cfg.parallelism))):
            yield from batch


def verify_triple(t: MaximalTriple) -> MaximalTriple:
    if not is_maximal(t.q, t.a1, t.n):
        raise InvariantViolation(f"emitted triple {t} is not maximal")
    return t
