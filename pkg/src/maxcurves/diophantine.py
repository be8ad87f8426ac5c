"""Certified angle approximations, continued fractions and the cheap prefilter.

Write a1 = 2 sqrt(q) cos(theta) with theta in [0, pi] and x = theta/pi.  A
maximal degree n of an ordinary pair forces |m + n x| < (1/3) q^(-n/4) for
some odd m, so the candidate degrees are denominators of odd/odd convergents
of x.  All error bounds below come from MPFR's correctly rounded operations
under directed rounding; the 50-digit mpmath path is an independent reference.
"""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction

import gmpy2
import numpy as np
from gmpy2 import mpfr, mpq

from .errors import InsufficientPrecision, InvalidArgument
from .exact import check_pair

__all__ = [
    "AngleApprox",
    "Convergent",
    "required_eps",
    "frobenius_angle",
    "reference_angle",
    "convergents",
    "prefilter",
    "prefilter_many",
    "nearest_odd",
]

GUARD_BITS = 70  # a bit over 20 decimal digits
_MAX_PREC = 1 << 24


@dataclass(frozen=True)
class AngleApprox:
    """A rational x with |x - theta/pi| <= eps, certified."""

    x: Fraction
    eps: Fraction
    q: int
    a1: int

    def __post_init__(self) -> None:
        if not 0 <= self.x <= 1:
            raise ValueError(f"x out of [0, 1]: {self.x}")
        if self.eps <= 0:
            raise ValueError("eps must be positive")

    @property
    def prec(self) -> int:
        """Bits of x actually carried."""
        return self.x.denominator.bit_length()


@dataclass(frozen=True)
class Convergent:
    m: int
    n: int

    @property
    def odd_odd(self) -> bool:
        return bool(self.m & 1 and self.n & 1)

    def __str__(self) -> str:
        return f"{self.m}/{self.n}"


def _fourth_root_floor(num: int, scale_bits: int) -> Fraction:
    """A rational lower bound on num**(1/4), exact to scale_bits bits."""
    r = math.isqrt(math.isqrt(num << (4 * scale_bits)))
    return Fraction(r, 1 << scale_bits)


@lru_cache(maxsize=4096)
def required_eps(q: int, N: int) -> Fraction:
    """Largest angle error that still lets every maximal n <= N show up as a convergent.

    (1/(2N^2)) * (1 - (2/3) * k / q^(k/4)) with k = 13 for q = 2 and k = 3
    otherwise; the irrational factor is rounded down.
    """
    if q < 2:
        raise InvalidArgument(f"q must be >= 2, got {q}")
    if N < 3:
        raise InvalidArgument(f"N must be >= 3, got {N}")
    k = 13 if q == 2 else 3
    root = _fourth_root_floor(q**k, 64)
    factor = 1 - Fraction(2 * k, 3) / root
    return factor / (2 * N * N)


def _enclose(q: int, a1: int, prec: int) -> tuple[mpfr, mpfr]:
    """Lower and upper bounds on arccos(a1 / (2 sqrt q)) / pi."""
    c2 = mpq(a1 * a1, 4 * q)
    with gmpy2.context(gmpy2.get_context(), precision=prec, round=gmpy2.RoundDown):
        s_lo = gmpy2.sqrt(mpfr(c2))
        pi_lo = gmpy2.const_pi()
    with gmpy2.context(gmpy2.get_context(), precision=prec, round=gmpy2.RoundUp):
        s_hi = gmpy2.sqrt(mpfr(c2))
        pi_hi = gmpy2.const_pi()
    # negation rounds to the context precision, so it must run at prec too
    with gmpy2.context(gmpy2.get_context(), precision=prec):
        if a1 >= 0:
            c_lo, c_hi = s_lo, min(s_hi, mpfr(1))
        else:
            c_lo, c_hi = max(-s_hi, mpfr(-1)), -s_lo
    # arccos is decreasing
    with gmpy2.context(gmpy2.get_context(), precision=prec, round=gmpy2.RoundDown):
        x_lo = gmpy2.acos(c_hi) / pi_hi
    with gmpy2.context(gmpy2.get_context(), precision=prec, round=gmpy2.RoundUp):
        x_hi = gmpy2.acos(c_lo) / pi_lo
    return x_lo, x_hi


def frobenius_angle(q: int, a1: int, eps_target) -> AngleApprox:
    """x ~ theta/pi with |x - theta/pi| <= eps <= eps_target, certified."""
    check_pair(q, a1)
    eps_target = Fraction(eps_target)
    if eps_target <= 0:
        raise InvalidArgument("eps_target must be positive")
    bits = eps_target.denominator.bit_length() - eps_target.numerator.bit_length() + 1
    prec = max(64, bits + GUARD_BITS)
    while prec <= _MAX_PREC:
        lo, hi = _enclose(q, a1, prec)
        lo, hi = max(lo, mpfr(0)), min(hi, mpfr(1))
        (m_lo, e_lo), (m_hi, e_hi) = lo.as_mantissa_exp(), hi.as_mantissa_exp()
        m_lo, e_lo, m_hi, e_hi = int(m_lo), int(e_lo), int(m_hi), int(e_hi)
        e = min(e_lo if m_lo else 0, e_hi if m_hi else 0, -prec) - 1
        L, H = m_lo << (e_lo - e), m_hi << (e_hi - e)
        # x = (L + H) / 2 * 2^e and the half-width is (H - L) / 2 * 2^e, all exact
        den = 1 << (1 - e)
        half = Fraction(max(H - L, 1), den)
        if half <= eps_target:
            return AngleApprox(Fraction(L + H, den), half, q, a1)
        prec *= 2
    raise InsufficientPrecision(f"could not reach eps={float(eps_target):.3g}")


def reference_angle(q: int, a1: int, dps: int = 50):
    """theta/pi as an mpmath mpf at `dps` digits. Audit path only."""
    from mpmath import mp

    check_pair(q, a1)
    with mp.workdps(dps + 10):
        v = mp.acos(mp.mpf(a1) / (2 * mp.sqrt(q))) / mp.pi
    with mp.workdps(dps):
        return +v


def convergents(x, N: int) -> list[Convergent]:
    """Convergents m/n of the finite continued fraction of x, with n <= N.

    Denominators strictly increase; when two convergents share denominator 1
    only the closer one, 1/1, is kept.
    """
    x = Fraction(x)
    if N < 1:
        raise InvalidArgument(f"N must be >= 1, got {N}")
    num, den = x.numerator, x.denominator
    h0, h1 = 0, 1  # h_{k-2}, h_{k-1}
    k0, k1 = 1, 0
    out: list[Convergent] = []
    while den:
        a, r = divmod(num, den)
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        if k1 > N:
            break
        if out and out[-1].n == k1:
            # x > 1/2 gives [0; 1, ...]: 1/1 is closer than 0/1
            out.pop()
        out.append(Convergent(h1, k1))
        num, den = den, r
    return out


def nearest_odd(t: Fraction) -> int:
    """An odd integer closest to t."""
    return 2 * math.floor(t / 2) + 1


def _threshold_scaled(q: int, n: int, D: int) -> int:
    """An integer >= D * (1/3) q^(-n/4)."""
    # q^(-n/4) <= 2^(-(bitlen(q)-1) n / 4), which already makes D * thr < 1
    if (q.bit_length() - 1) * n >= 4 * D.bit_length():
        return 1
    with gmpy2.context(gmpy2.get_context(), precision=64, round=gmpy2.RoundUp):
        t = gmpy2.mpfr(q) ** gmpy2.mpfr(mpq(-n, 4)) / 3 * D
    return int(gmpy2.ceil(t))


def prefilter(q: int, a1: int, n: int, angle: AngleApprox) -> bool:
    """False only when no odd m can satisfy |m + n theta/pi| < (1/3) q^(-n/4).

    A False answer therefore proves that (q, a1) is not maximal over F_{q^n}.
    The margin added to the threshold is n*eps plus one unit of x's
    denominator.
    """
    if n < 1:
        raise InvalidArgument(f"n must be positive, got {n}")
    X, D = angle.x.numerator, angle.x.denominator
    # refine the grid when x has a short denominator (x = 1/2, say)
    shift = max(0, angle.eps.denominator.bit_length() - angle.eps.numerator.bit_length() + 8 - D.bit_length())
    X, D = X << shift, D << shift
    E = -((-angle.eps.numerator * D) // angle.eps.denominator)  # ceil(eps * D)
    if 6 * n * E >= D:
        raise InsufficientPrecision(
            f"angle eps {float(angle.eps):.3g} too coarse for n={n}; recompute with smaller eps"
        )
    # everything below is scaled by D
    nX = n * X
    m = 2 * ((-nX) // (2 * D)) + 1
    dist = abs(m * D + nX)
    slack = n * E + 1
    # float shortcut; int / int is correctly rounded
    thr_f = math.exp(-n * math.log(q) / 4) / 3
    if dist / D > (thr_f * (1 + 1e-6) + 1e-300) + slack / D * (1 + 1e-12):
        return False
    return dist < _threshold_scaled(q, n, D) + slack


def prefilter_many(q: int, ns: np.ndarray, angle: AngleApprox) -> np.ndarray:
    """Vectorised, float64 version of prefilter: a mask of degrees that survive.

    Conservative by construction: the margin covers the float rounding of x,
    of n*x and of the threshold, so a False entry is as good as prefilter's.
    """
    ns = np.asarray(ns, dtype=np.int64)
    if ns.size == 0:
        return np.zeros(0, dtype=bool)
    if int(ns.max()) >= 1 << 52:
        raise InvalidArgument("degrees must stay below 2**52 for the float path")
    nf = ns.astype(np.float64)
    xf = float(angle.x)
    eps = float(angle.eps) * (1 + 1e-12) + 2.0**-52
    prod = nf * xf
    # distance from n x to the nearest odd integer (the same as for -n x)
    r = np.remainder(prod + 1.0, 2.0)
    dist = np.minimum(r, 2.0 - r)
    with np.errstate(under="ignore"):
        thr = np.exp(-nf * (math.log(q) / 4)) / 3
    # 2^-29 covers the rounding of prod + 1.0 for n < 2^22; larger n gets more
    margin = nf * eps + np.maximum(nf, 2.0**22) * 2.0**-51 + thr * 1e-6
    return dist < thr + margin
