"""Maximality over cubic extensions.

Since a_3 = a1^3 - 3 q a1, the condition -a_3 = floor(2 sqrt(q)^3) only
leaves two possible traces, and primes p = a^2 + c^2 with c tiny compared
to a supply infinitely many ordinary examples with a1 = a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvalidArgument, InvariantViolation
from .exact import MaximalTriple, Source, is_maximal, isqrt
from .primes import is_prime

__all__ = [
    "DEFAULT_THETA",
    "SectorPrime",
    "cubic_candidates",
    "square_exclusion_check",
    "soomro_test",
    "soomro_triples",
    "sector_enumerate",
    "cubic_prime_family",
]

DEFAULT_THETA = Fraction(119, 1000)


def nearest_sqrt(q: int) -> int:
    """The integer nearest to sqrt(q); exact, never a tie for nonsquare q."""
    return (isqrt(4 * q) + 1) // 2


def cubic_candidates(q: int) -> set[int]:
    """The only traces a1 that can satisfy -a_3 = floor(2 sqrt(q)^3)."""
    if q < 3:
        raise InvalidArgument(f"q must be >= 3, got {q}")
    return {-isqrt(4 * q), nearest_sqrt(q)}


def square_exclusion_check(q: int) -> bool:
    """is_maximal(q, -floor(2 sqrt q), 3); True only happens for square q."""
    if q < 2:
        raise InvalidArgument(f"q must be >= 2, got {q}")
    return is_maximal(q, -isqrt(4 * q), 3)


def soomro_test(a1: int, b: int, relaxed_eps: Optional[Fraction] = None) -> Optional[MaximalTriple]:
    """(a1^2 + b, a1, 3) when b^2 <= a1, which is then guaranteed maximal.

    With relaxed_eps the looser condition b^2 <= (4/3) a1 / (1 + eps) is
    accepted instead.  That version only holds for a1 large enough, so such
    candidates are checked exactly and dropped if they fail.
    """
    if a1 < 2:
        raise InvalidArgument(f"a1 must be >= 2, got {a1}")
    q = a1 * a1 + b
    if b * b <= a1:
        if not is_maximal(q, a1, 3):
            raise InvariantViolation(f"({q}, {a1}, 3) fails although b^2 <= a1")
        return MaximalTriple(q, a1, 3, Source.DIRECT_CHECK)
    if relaxed_eps is not None:
        eps = Fraction(relaxed_eps)
        if not 0 < eps <= Fraction(1, 3):
            raise InvalidArgument("relaxed_eps must lie in (0, 1/3]")
        if 3 * (1 + eps) * b * b <= 4 * a1 and is_maximal(q, a1, 3):
            return MaximalTriple(q, a1, 3, Source.DIRECT_CHECK)
    return None


def soomro_triples(a_max: int) -> list[MaximalTriple]:
    """All triples soomro_test yields for 2 <= a1 <= a_max, ordered by (q, a1)."""
    out = []
    for a1 in range(2, a_max + 1):
        r = isqrt(a1)
        for b in range(-r, r + 1):
            out.append(soomro_test(a1, b))
    return sorted(out, key=lambda t: (t.q, t.a1))


@dataclass(frozen=True)
class SectorPrime:
    """A prime p = a^2 + c^2 and the sector sets it belongs to.

    s3: c^4 <= a.  s4: c < p^theta.  s5: s4 and a >= p^(4 theta).
    s6: s4 and a < p^(4 theta).
    """

    p: int
    a: int
    c: int
    s3: bool
    s4: bool
    s5: bool
    s6: bool

    @property
    def b(self) -> int:
        return self.c * self.c


def _lt_power(base: int, value: int, theta: Fraction) -> bool:
    """base < value^theta, exactly, for theta = u/v > 0."""
    u, v = theta.numerator, theta.denominator
    return base**v < value**u


def sector_enumerate(a_max: int, theta=DEFAULT_THETA) -> list[SectorPrime]:
    """Primes a^2 + c^2 with 0 < a <= a_max lying in S_3 or S_4(theta).

    All comparisons are exact integer ones after raising to the power of
    theta's denominator.
    """
    theta = Fraction(theta) if not isinstance(theta, float) else Fraction(str(theta))
    if a_max < 1:
        raise InvalidArgument(f"a_max must be >= 1, got {a_max}")
    if not 0 < theta < Fraction(1, 8):
        raise InvalidArgument(f"theta must lie in (0, 1/8), got {theta}")
    u, v = theta.numerator, theta.denominator
    out = []
    for a in range(1, a_max + 1):
        c = 0
        while True:
            p = a * a + c * c
            in3 = c**4 <= a
            in4 = _lt_power(c, p, theta)
            if not (in3 or in4):
                break
            if is_prime(p):
                in5 = in4 and a**v >= p ** (4 * u)
                out.append(SectorPrime(p, a, c, in3, in4, in5, in4 and not in5))
            c += 1
    return out


def cubic_prime_family(a_max: int) -> list[MaximalTriple]:
    """(p, a, 3) for every p = a^2 + c^2 in S_3 with a <= a_max, ordered by (p, a)."""
    if a_max < 1:
        raise InvalidArgument(f"a_max must be >= 1, got {a_max}")
    out = []
    for a in range(1, a_max + 1):
        c = 0
        while c**4 <= a:
            p = a * a + c * c
            if is_prime(p):
                if not is_maximal(p, a, 3):
                    raise InvariantViolation(f"({p}, {a}, 3) from S_3 is not maximal")
                out.append(MaximalTriple(p, a, 3, Source.DIRECT_CHECK))
            c += 1
    return sorted(out, key=lambda t: (t.q, t.a1))
