"""Exact integer arithmetic for Frobenius traces.

Everything here works on Python ints, so nothing overflows and nothing is
rounded.  The maximality condition ``-a_n == floor(2 * sqrt(q)**n)`` is
evaluated as ``-trace(q, a1, n) == isqrt(4 * q**n)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidArgument, InvalidPair

__all__ = [
    "Kind",
    "Source",
    "TracePair",
    "Classification",
    "MaximalTriple",
    "isqrt",
    "is_square",
    "check_pair",
    "trace",
    "trace_sequence",
    "is_maximal",
    "classify",
]


class Kind(enum.Enum):
    ORDINARY = "Ordinary"
    SUPERSINGULAR = "Supersingular"


class Source(enum.Enum):
    ORDINARY_SEARCH = "OrdinarySearch"
    SUPERSINGULAR_PROGRESSION = "SupersingularProgression"
    DIRECT_CHECK = "DirectCheck"


def isqrt(N: int) -> int:
    """Return the largest r with r*r <= N."""
    if N < 0:
        raise InvalidArgument(f"isqrt of negative number {N}")
    # math.isqrt is Newton on big ints with an exact final correction.
    return math.isqrt(N)


def is_square(N: int) -> bool:
    if N < 0:
        return False
    r = math.isqrt(N)
    return r * r == N


def check_pair(q: int, a1: int) -> None:
    if q < 2:
        raise InvalidPair(f"q must be >= 2, got {q}")
    if a1 * a1 > 4 * q:
        raise InvalidPair(f"|a1| exceeds 2*sqrt(q): q={q}, a1={a1}")


@dataclass(frozen=True)
class TracePair:
    q: int
    a1: int

    def __post_init__(self) -> None:
        check_pair(self.q, self.a1)


@dataclass(frozen=True)
class Classification:
    kind: Kind
    order: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.kind is Kind.SUPERSINGULAR) != (self.order is not None):
            raise ValueError("order is present iff the pair is supersingular")
        if self.order is not None and self.order not in (1, 2, 3, 4, 6, 8, 12):
            raise ValueError(f"impossible root-of-unity order {self.order}")

    @property
    def supersingular(self) -> bool:
        return self.kind is Kind.SUPERSINGULAR

    def __str__(self) -> str:
        if self.order is None:
            return self.kind.value
        return f"{self.kind.value} order {self.order}"


@dataclass(frozen=True, order=True)
class MaximalTriple:
    q: int
    a1: int
    n: int
    source: Source = Source.ORDINARY_SEARCH

    def verify(self) -> bool:
        return is_maximal(self.q, self.a1, self.n)


def trace(q: int, a1: int, n: int) -> int:
    """Return a_n for the pair (q, a1).

    a_0 = 2, a_1 = a1 and a_{k+1} = a1*a_k - q*a_{k-1}.
    """
    check_pair(q, a1)
    if n < 0:
        raise InvalidArgument(f"degree must be nonnegative, got {n}")
    if n == 0:
        return 2
    prev, cur = 2, a1
    for _ in range(n - 1):
        prev, cur = cur, a1 * cur - q * prev
    return cur


def trace_sequence(q: int, a1: int, n_max: int) -> list[int]:
    """[a_0, a_1, ..., a_{n_max}] in one pass."""
    check_pair(q, a1)
    seq = [2, a1]
    for _ in range(n_max - 1):
        seq.append(a1 * seq[-1] - q * seq[-2])
    return seq[: n_max + 1]


def is_maximal(q: int, a1: int, n: int) -> bool:
    """True iff -a_n == floor(2*sqrt(q)^n), decided in exact integers."""
    if n < 1:
        raise InvalidArgument(f"degree must be positive, got {n}")
    return -trace(q, a1, n) == math.isqrt(4 * q**n)


def classify(q: int, a1: int) -> Classification:
    """Ordinary, or supersingular together with the order of beta = alpha/sqrt(q)."""
    check_pair(q, a1)
    s = a1 * a1
    if s == 0:
        order = 4
    elif s == q:
        order = 6 if a1 > 0 else 3
    elif s == 2 * q:
        order = 8
    elif s == 3 * q:
        order = 12
    elif s == 4 * q:
        order = 1 if a1 > 0 else 2
    else:
        return Classification(Kind.ORDINARY)
    return Classification(Kind.SUPERSINGULAR, order)
