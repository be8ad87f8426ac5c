from fractions import Fraction

import pytest

from maxcurves.cubic import (
    DEFAULT_THETA,
    cubic_candidates,
    cubic_prime_family,
    nearest_sqrt,
    sector_enumerate,
    soomro_test,
    soomro_triples,
    square_exclusion_check,
)
from maxcurves.errors import InvalidArgument
from maxcurves.exact import MaximalTriple, Source, is_maximal, isqrt, is_square
from maxcurves.primes import is_prime, prime_powers

from oracles import TABLE3, hasse_range


class TestCandidates:
    @pytest.mark.parametrize("q,expected", [(17, {-8, 4}), (9, {-6, 3}), (3, {-3, 2})])
    def test_examples(self, q, expected):
        assert cubic_candidates(q) == expected

    def test_small_q(self):
        with pytest.raises(InvalidArgument):
            cubic_candidates(2)

    def test_nearest_sqrt(self):
        for q in range(1, 3000):
            r = nearest_sqrt(q)
            assert abs(r * r - q) <= min(abs((r - 1) ** 2 - q), abs((r + 1) ** 2 - q))

    def test_completeness(self):
        for q in prime_powers(3, 5000):
            if is_square(q):
                continue
            cands = cubic_candidates(q)
            for a1 in hasse_range(q):
                if is_maximal(q, a1, 3):
                    assert a1 in cands, (q, a1)


class TestSquareExclusion:
    def test_examples(self):
        assert square_exclusion_check(4) is True
        assert square_exclusion_check(5) is False
        assert square_exclusion_check(2) is False

    def test_sweep(self):
        for q in range(2, 5001):
            if square_exclusion_check(q):
                assert isqrt(q) ** 2 == q, q


class TestSoomro:
    def test_examples(self):
        assert soomro_test(2, 1) == MaximalTriple(5, 2, 3, Source.DIRECT_CHECK)
        assert soomro_test(3, -1) == MaximalTriple(8, 3, 3, Source.DIRECT_CHECK)
        assert soomro_test(2, 2) is None

    def test_a1_too_small(self):
        with pytest.raises(InvalidArgument):
            soomro_test(1, 0)

    def test_relaxed(self):
        # b^2 = 4 > a1 = 3, and 3 * (1 + 1/100) * 4 > 4 * 3, so still rejected
        assert soomro_test(3, 2, relaxed_eps=Fraction(1, 100)) is None
        # b = 11 fails b^2 <= a1 = 100 but meets 3 * (1 + 1/100) * 121 <= 400
        assert soomro_test(100, 11) is None
        t = soomro_test(100, 11, relaxed_eps=Fraction(1, 100))
        assert t == MaximalTriple(10011, 100, 3, Source.DIRECT_CHECK) and is_maximal(10011, 100, 3)
        with pytest.raises(InvalidArgument):
            soomro_test(100, 11, relaxed_eps=Fraction(1, 2))

    def test_relaxed_results_are_maximal(self):
        for a1 in range(2, 400):
            for b in range(-2 * isqrt(a1) - 2, 2 * isqrt(a1) + 3):
                t = soomro_test(a1, b, relaxed_eps=Fraction(1, 10))
                if t is not None:
                    assert is_maximal(t.q, t.a1, 3)

    def test_triples(self):
        ts = soomro_triples(10)
        assert ts == sorted(ts, key=lambda t: (t.q, t.a1))
        assert len(ts) == sum(2 * isqrt(a) + 1 for a in range(2, 11))
        assert all(is_maximal(t.q, t.a1, 3) for t in ts)


class TestSector:
    def test_examples(self):
        s = sector_enumerate(10)
        by = {(x.p, x.a, x.c): x for x in s}
        assert by[(17, 4, 1)].s3 and by[(37, 6, 1)].s3
        assert not any(x.a == 5 for x in s)

    def test_theta_range(self):
        with pytest.raises(InvalidArgument):
            sector_enumerate(10, Fraction(1, 8))
        with pytest.raises(InvalidArgument):
            sector_enumerate(0)

    def test_partition_and_subset(self):
        for theta in (DEFAULT_THETA, Fraction(1, 10), Fraction(1, 20), 0.05):
            s = sector_enumerate(3000, theta)
            for x in s:
                assert x.p == x.a**2 + x.c**2 and is_prime(x.p)
                assert x.s3 or x.s4
                if x.s5:
                    assert x.s3
                if x.s4:
                    assert x.s5 != x.s6
                else:
                    assert not x.s5 and not x.s6

    def test_complete_for_s3(self):
        s = {(x.p, x.a, x.c) for x in sector_enumerate(300) if x.s3}
        brute = {
            (a * a + c * c, a, c)
            for a in range(1, 301)
            for c in range(0, 6)
            if c**4 <= a and is_prime(a * a + c * c)
        }
        assert s == brute


class TestFamily:
    def test_examples(self):
        fam = {(t.q, t.a1) for t in cubic_prime_family(10)}
        assert {(17, 4), (37, 6)} <= fam
        assert [(t.q, t.a1, t.n) for t in cubic_prime_family(1)] == [(2, 1, 3)]

    def test_monotone_and_maximal(self):
        prev = 0
        for a_max in (1, 5, 50, 500):
            fam = cubic_prime_family(a_max)
            assert len(fam) >= prev
            prev = len(fam)
            assert all(is_maximal(t.q, t.a1, 3) for t in fam)

    def test_table3_cross_coverage(self):
        fam = {(t.q, t.a1) for t in cubic_prime_family(40)}
        hit = 0
        for q, a1 in TABLE3:
            b = q - a1 * a1
            if is_prime(q) and b >= 0 and is_square(b) and b * b <= a1:
                hit += 1
                assert (q, a1) in fam
        assert hit >= 10
