import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from maxcurves.errors import InvalidArgument, InvalidPair
from maxcurves.exact import (
    Classification,
    Kind,
    MaximalTriple,
    TracePair,
    classify,
    is_maximal,
    isqrt,
    trace,
    trace_sequence,
)

from oracles import beta_gap, hasse_range, isqrt_linear, is_supersingular, trace_binomial


@st.composite
def pairs(draw, q_max=400):
    q = draw(st.integers(2, q_max))
    b = math.isqrt(4 * q)
    return q, draw(st.integers(-b, b))


class TestIsqrt:
    def test_zero(self):
        assert isqrt(0) == 0

    def test_small(self):
        assert isqrt(32) == 5

    def test_for_triple_5_1_7(self):
        N = 4 * 5**7
        assert isqrt(N) == isqrt_linear(N) == 559

    def test_negative(self):
        with pytest.raises(InvalidArgument):
            isqrt(-1)

    @given(st.integers(0, 10**60))
    def test_postcondition(self, N):
        r = isqrt(N)
        assert r * r <= N < (r + 1) ** 2


class TestTrace:
    def test_examples(self):
        assert trace(2, 1, 3) == -5
        assert trace(7, 3, 0) == 2
        assert trace(2, -1, 5) == -11

    def test_invalid_pair(self):
        with pytest.raises(InvalidPair):
            trace(2, 3, 1)
        with pytest.raises(InvalidPair):
            TracePair(1, 0)

    @given(pairs(), st.integers(0, 60))
    def test_matches_binomial_expansion(self, pair, n):
        q, a1 = pair
        assert trace(q, a1, n) == trace_binomial(q, a1, n)

    @given(pairs(), st.integers(1, 80))
    def test_sequence_agrees(self, pair, n):
        q, a1 = pair
        assert trace_sequence(q, a1, n) == [trace(q, a1, k) for k in range(n + 1)]

    @settings(max_examples=60)
    @given(pairs(q_max=60))
    def test_hasse(self, pair):
        q, a1 = pair
        for n, a in enumerate(trace_sequence(q, a1, 200)):
            assert a * a <= 4 * q**n


class TestIsMaximal:
    @pytest.mark.parametrize("q,a1,n", [(2, 1, 3), (5, 1, 7), (2, 1, 13), (3, 2, 3)])
    def test_known_triples(self, q, a1, n):
        assert is_maximal(q, a1, n)

    def test_not_maximal(self):
        assert not is_maximal(2, 1, 2)

    def test_n_positive(self):
        with pytest.raises(InvalidArgument):
            is_maximal(2, 1, 0)

    def test_floor_identity(self):
        with mp.workdps(50):
            for q in range(2, 40):
                for n in range(1, 40):
                    r = isqrt(4 * q**n)
                    v = 2 * mp.sqrt(mpf(q) ** n)
                    assert r <= v < r + 1

    def test_translation_lemma(self):
        """Exact test agrees with |beta^n + 1| < q^(-n/4) at 60 digits."""
        for q in range(2, 51):
            for a1 in hasse_range(q):
                for n in range(1, 51):
                    lhs, rhs = beta_gap(q, a1, n)
                    if abs(lhs - rhs) < mpf(10) ** -45:
                        # equality |beta^n + 1| = q^(-n/4) means a_n + 2 sqrt(q)^n = 1 exactly
                        r = isqrt(4 * q**n)
                        assert r * r == 4 * q**n and trace(q, a1, n) + r == 1
                        assert not is_maximal(q, a1, n)
                        continue
                    assert (lhs < rhs) == is_maximal(q, a1, n), (q, a1, n)

    def test_ordinary_parity_and_squares(self):
        for q in range(2, 51):
            square = math.isqrt(q) ** 2 == q
            for a1 in hasse_range(q):
                if classify(q, a1).supersingular:
                    continue
                for n in range(1, 51):
                    if n % 2 == 0 or square:
                        assert not is_maximal(q, a1, n), (q, a1, n)

    def test_triple_verify(self):
        assert MaximalTriple(2, 1, 13).verify()
        assert not MaximalTriple(2, 1, 11).verify()


class TestClassify:
    def test_examples(self):
        assert classify(2, 0) == Classification(Kind.SUPERSINGULAR, 4)
        assert classify(9, 3) == Classification(Kind.SUPERSINGULAR, 6)
        assert classify(2, 1) == Classification(Kind.ORDINARY)
        assert classify(2, 2) == Classification(Kind.SUPERSINGULAR, 8)

    @pytest.mark.parametrize(
        "q,a1,order",
        [(9, 6, 1), (9, -6, 2), (9, -3, 3), (5, 0, 4), (9, 3, 6), (8, -4, 8), (3, 3, 12), (3, -3, 12)],
    )
    def test_orders(self, q, a1, order):
        assert classify(q, a1).order == order

    def test_orders_against_beta_powers(self):
        """The order really is the multiplicative order of beta."""
        with mp.workdps(40):
            for q in (2, 3, 4, 5, 8, 9, 12, 16, 25, 27, 48):
                for a1 in hasse_range(q):
                    c = classify(q, a1)
                    if not c.supersingular:
                        continue
                    beta = mp.mpc(a1, mp.sqrt(4 * q - a1 * a1)) / (2 * mp.sqrt(q))
                    order = next(k for k in range(1, 25) if abs(beta**k - 1) < mpf(10) ** -30)
                    assert order == c.order, (q, a1)

    @given(pairs(q_max=10**6))
    def test_kind_matches_definition(self, pair):
        q, a1 = pair
        assert classify(q, a1).supersingular == is_supersingular(q, a1)
        assert classify(q, a1).kind == classify(q, -a1).kind

    def test_bad_classification(self):
        with pytest.raises(ValueError):
            Classification(Kind.ORDINARY, 4)
        with pytest.raises(ValueError):
            Classification(Kind.SUPERSINGULAR, 5)
