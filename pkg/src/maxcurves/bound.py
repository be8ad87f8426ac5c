"""Explicit upper bound on the degree n for ordinary pairs.

The linear-forms-in-two-logarithms estimate gives

    f(q, n) = n/4 log q - 8.87 (10.98 pi + 1/2 log q) (2 log n + 3.27)^2 - log(pi/3)

and every maximal degree of an ordinary pair over F_q satisfies n < N_q, the
unique zero of f(q, .) above 8007.  Signs of f are certified with interval
arithmetic (mpmath.iv); the bisection itself runs on plain mpf values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from mpmath import iv, mp, mpf

from .errors import InvalidArgument, PrecisionExhausted

__all__ = ["BoundValue", "DegreeBound", "bound_fn", "max_degree", "START"]

# Below this point f(q, .) is negative for every q >= 1.
START = 8008
_FLOOR = 8007

_DPS = 40
_MAX_DPS = 320


@dataclass(frozen=True)
class BoundValue:
    """f(q, n) as a midpoint and a certified absolute error."""

    value: mpf
    error: mpf

    @property
    def sign(self) -> int:
        """+1 or -1 when certified, 0 when the enclosure contains zero."""
        if self.error < abs(self.value):
            return 1 if self.value > 0 else -1
        return 0


@dataclass(frozen=True)
class DegreeBound:
    q: int
    n_max: int
    bracket: tuple[int, int]

    @property
    def floor_nq(self) -> int:
        return self.bracket[0]


def _f_interval(q, n):
    q = iv.mpf(q)
    n = iv.mpf(n)
    lq = iv.log(q)
    c1 = iv.mpf("8.87")
    c2 = iv.mpf("10.98")
    c3 = iv.mpf("3.27")
    return n / 4 * lq - c1 * (c2 * iv.pi + lq / 2) * (2 * iv.log(n) + c3) ** 2 - iv.log(iv.pi / 3)


def bound_fn(q: int, n, dps: int = _DPS) -> BoundValue:
    """Evaluate f(q, n) with a rigorous error bound (at least 30 digits)."""
    if q < 2:
        raise InvalidArgument(f"q must be >= 2, got {q}")
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    dps = max(dps, 30)
    saved = iv.dps
    iv.dps = dps
    try:
        enc = _f_interval(q, n)
        prec = iv.prec
    finally:
        iv.dps = saved
    with mp.workprec(prec + 8):
        # conversions exact at this precision; error rounded outward
        lo, hi = mpf(enc.a), mpf(enc.b)
        mid = (lo + hi) / 2
        err = max(mp.fsub(hi, mid, rounding="u"), mp.fsub(mid, lo, rounding="u"))
    return BoundValue(mid, err)


def _certified_sign(q: int, n: int) -> int:
    dps = _DPS
    while dps <= _MAX_DPS:
        s = bound_fn(q, n, dps).sign
        if s:
            return s
        dps *= 2
    raise PrecisionExhausted(f"cannot certify the sign of f({q}, {n})")


def _f_mp(q: int, n: int) -> mpf:
    lq = mp.log(q)
    return (
        mpf(n) / 4 * lq
        - mpf("8.87") * (mpf("10.98") * mp.pi + lq / 2) * (2 * mp.log(n) + mpf("3.27")) ** 2
        - mp.log(mp.pi / 3)
    )


@lru_cache(maxsize=None)
def max_degree(q: int) -> DegreeBound:
    """Integer bracket (lo, hi = lo + 1) with f(q, lo) < 0 < f(q, hi).

    n_max = hi = ceil(N_q) is the inclusive search ceiling; lo = floor(N_q).
    """
    if q < 2:
        raise InvalidArgument(f"q must be >= 2, got {q}")
    lo = START
    with mp.workdps(_DPS):
        if _f_mp(q, lo) >= 0:
            lo = _FLOOR
        step = lo
        hi = lo + step
        while _f_mp(q, hi) <= 0:
            lo, step = hi, 2 * step
            hi = lo + step
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if _f_mp(q, mid) < 0:
                lo = mid
            else:
                hi = mid
    # the bisection ran uncertified; confirm both endpoints rigorously
    if _certified_sign(q, lo) != -1 or _certified_sign(q, hi) != 1:
        raise PrecisionExhausted(f"bracket ({lo}, {hi}) for q={q} failed certification")
    return DegreeBound(q, hi, (lo, hi))

