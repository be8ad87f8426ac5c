"""Maximal degrees of supersingular pairs.

When beta = alpha/sqrt(q) is a root of unity of order o, the pair is maximal
over F_{q^n} exactly when beta^n = -1.  That equation has no solution for odd
o, and for even o = 2k its solutions are the odd multiples of k.

The floor can also be hit without beta^n = -1 when q^n is tiny.  Any other
n-th power of beta sits at distance at least 2 sin(pi/12) from -1, so this
needs q^(n/4) < 1/(2 sin(pi/12)), i.e. q^n < 14.  Those few n are checked
exactly; for prime powers the only hits are (2, -2, 1) and (3, -3, 1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import WrongClassification
from .exact import classify, is_maximal

__all__ = ["DegreeProgression", "supersingular_degrees"]


@dataclass(frozen=True)
class DegreeProgression:
    """{n : n = offset (mod modulus)} with modulus = 2*offset (or nothing), plus sporadic small n."""

    offset: Optional[int]
    modulus: Optional[int]
    sporadic: tuple[int, ...] = ()

    @classmethod
    def none(cls) -> "DegreeProgression":
        return cls(None, None)

    def __post_init__(self) -> None:
        if (self.offset is None) != (self.modulus is None):
            raise ValueError("offset and modulus must both be set or both be None")
        if self.offset is not None and (self.offset < 1 or self.modulus != 2 * self.offset):
            raise ValueError(f"bad progression {self.offset} mod {self.modulus}")
        if list(self.sporadic) != sorted(set(self.sporadic)) or any(n < 1 for n in self.sporadic):
            raise ValueError("sporadic degrees must be increasing positive integers")
        if any(n in self._progression() for n in self.sporadic):
            raise ValueError("sporadic degrees must lie outside the progression")

    def _progression(self) -> "DegreeProgression":
        return DegreeProgression(self.offset, self.modulus) if self.sporadic else self

    @property
    def empty(self) -> bool:
        return self.offset is None and not self.sporadic

    def __contains__(self, n: int) -> bool:
        if n in self.sporadic:
            return True
        return self.offset is not None and n >= 1 and n % self.modulus == self.offset

    def __iter__(self) -> Iterator[int]:
        # sporadic degrees are all below the progression offset
        yield from self.sporadic
        if self.offset is None:
            return
        n = self.offset
        while True:
            yield n
            n += self.modulus

    def first(self, count: int) -> list[int]:
        return list(itertools.islice(self, count))

    def first_at_least(self, n_floor: int) -> Optional[int]:
        for n in self.sporadic:
            if n >= n_floor:
                return n
        if self.offset is None:
            return None
        if n_floor <= self.offset:
            return self.offset
        steps = -(-(n_floor - self.offset) // self.modulus)
        return self.offset + steps * self.modulus

    def __str__(self) -> str:
        parts = [f"n = {n}" for n in self.sporadic]
        if self.offset is not None:
            parts.append(f"n = {self.offset} (mod {self.modulus})")
        return " or ".join(parts) or "none"


def supersingular_degrees(q: int, a1: int) -> DegreeProgression:
    cls = classify(q, a1)
    if not cls.supersingular:
        raise WrongClassification(
            f"({q}, {a1}) is ordinary; use search.ordinary_degrees instead"
        )
    order = cls.order
    offset, modulus = (None, None) if order % 2 else (order // 2, order)
    base = DegreeProgression(offset, modulus)
    sporadic = []
    n = 1
    while q**n < 14:
        if n not in base and is_maximal(q, a1, n):
            sporadic.append(n)
        n += 1
    return DegreeProgression(offset, modulus, tuple(sporadic))
