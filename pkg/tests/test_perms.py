import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given

from chanspace.channel import Ranking
from chanspace.errors import DimensionMismatch, IndexOutOfRange, TooLarge
from chanspace.oracle import oracle_s_pair
from chanspace.perms import (
    AgreementCount,
    agreement_probability,
    compose,
    decoding_distance,
    f,
    f_values,
    inversions,
    inverse,
    kendall_tau,
    s_pair,
    s_single,
    transposition,
    transposition_delta,
)

from conftest import ranking_pairs, rankings

inv = Ranking.from_inv
ident = Ranking.identity


def count_agreements(sigma, phi):
    """Independent count: decode each subset by min rank, with itertools."""
    n = sigma.n
    total = 0
    for k in range(1, n + 1):
        for code in itertools.combinations(range(1, n + 1), k):
            a = min(code, key=lambda i: sigma.inv[i - 1])
            b = min(code, key=lambda i: phi.inv[i - 1])
            total += a == b
    return total


def perms(n):
    return [Ranking(p) for p in itertools.permutations(range(1, n + 1))]


class TestF:
    def test_identity(self):
        assert f_values(ident(4)) == [3, 2, 1, 0]

    @pytest.mark.parametrize("n", range(2, 9))
    def test_transposition(self, n):
        for r in range(1, n):
            assert f(transposition(n, r), r) == n - r - 1

    def test_hand_example(self):
        assert f_values(inv((1, 3, 2))) == [2, 0, 0]

    def test_range(self):
        with pytest.raises(IndexOutOfRange):
            f(ident(3), 0)
        with pytest.raises(IndexOutOfRange):
            f(ident(3), 4)


class TestS:
    @pytest.mark.parametrize("n", [1, 2, 5, 10, 70])
    def test_identity(self, n):
        assert s_single(ident(n)).value == 2**n - 1

    def test_swap_first_two(self):
        assert s_single(inv((2, 1, 3))) == 5

    def test_reversal(self):
        assert s_single(inv((3, 2, 1))) == 3

    def test_pair_rank_columns(self):
        assert s_pair(inv((2, 3, 1)), inv((3, 2, 1))) == 6

    def test_pair_self(self):
        s = inv((4, 1, 3, 2))
        assert s_pair(s, s) == 15

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            s_pair(ident(2), ident(3))

    def test_formula_limit(self):
        with pytest.raises(TooLarge):
            s_single(ident(4097))

    def test_big_exact(self):
        # exact integers well past 64 bits
        assert s_single(ident(200)).value == 2**200 - 1

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_against_itertools_count(self, n):
        for a, b in itertools.product(perms(n), repeat=2):
            assert s_pair(a, b).value == count_agreements(a, b)

    def test_three_cycle(self):
        c = compose(Ranking((2, 1, 3)), Ranking((3, 2, 1)))
        assert c.perm == (3, 1, 2)
        assert s_single(c) == 4 == oracle_s_pair(ident(3), c)


def test_agreement_count_bounds():
    with pytest.raises(ValueError):
        AgreementCount(2, 3)
    with pytest.raises(ValueError):
        AgreementCount(8, 3)


class TestProbability:
    def test_self(self):
        assert agreement_probability(inv((2, 1, 3)), inv((2, 1, 3))) == 1
        assert decoding_distance(inv((2, 1, 3)), inv((2, 1, 3))) == 0

    def test_n2(self):
        assert agreement_probability(ident(2), inv((2, 1))) == Fraction(2, 3)
        assert decoding_distance(ident(2), inv((2, 1))) == Fraction(1, 3)

    def test_n3(self):
        assert agreement_probability(ident(3), inv((2, 1, 3))) == Fraction(5, 7)
        assert decoding_distance(ident(3), inv((3, 2, 1))) == Fraction(4, 7)


class TestTransposition:
    def test_identity_r1(self):
        assert transposition_delta(ident(3), 1) == -2
        assert s_single(transposition(3, 1)) == 5

    @pytest.mark.parametrize("n,r", [(3, 1), (4, 2), (6, 5)])
    def test_involution(self, n, r):
        t = transposition(n, r)
        forward = transposition_delta(ident(n), r)
        back = transposition_delta(t, r)
        assert back == -forward
        assert s_single(t @ t) == s_single(ident(n))

    def test_exhaustive_n4(self):
        for sigma in perms(4):
            for r in (1, 2, 3):
                direct = s_single(transposition(4, r) @ sigma).value - s_single(sigma).value
                assert transposition_delta(sigma, r) == direct

    def test_range(self):
        with pytest.raises(IndexOutOfRange):
            transposition_delta(ident(3), 3)


class TestKendall:
    def test_basic(self):
        assert kendall_tau(ident(3), ident(3)) == 0
        assert kendall_tau(ident(3), inv((3, 2, 1))) == 3
        assert kendall_tau(ident(3), transposition(3, 2)) == 1

    def test_inversions(self):
        assert inversions([]) == 0
        assert inversions([3, 1, 2]) == 2
        rng = random.Random(3)
        for _ in range(50):
            xs = rng.sample(range(30), 12)
            brute = sum(1 for i in range(12) for j in range(i + 1, 12) if xs[i] > xs[j])
            assert inversions(xs) == brute


def test_group_ops():
    s = inv((3, 1, 4, 2))
    assert compose(ident(4), s) == s
    assert inverse(inverse(s)) == s
    assert compose(s, inverse(s)) == ident(4)


@given(ranking_pairs(1, 9))
def test_symmetry(pair):
    a, b = pair
    assert s_pair(a, b) == s_pair(b, a)
    assert s_single(a) == s_single(a.inverse())
    assert decoding_distance(a, b) == decoding_distance(b, a)


@given(ranking_pairs(1, 9))
def test_bounds_and_indiscernibles(pair):
    a, b = pair
    s = s_pair(a, b).value
    assert a.n <= s <= 2**a.n - 1
    assert (s == 2**a.n - 1) == (a == b)
    assert (decoding_distance(a, b) == 0) == (a == b)


@given(ranking_pairs(2, 9))
def test_left_invariance(pair):
    a, b = pair
    for t in (transposition(a.n, 1), a, b.inverse()):
        assert s_pair(t @ a, t @ b) == s_pair(a, b)


@given(rankings(2, 10))
def test_kendall_recurrence(sigma):
    n = sigma.n
    for r in range(1, n):
        step = kendall_tau(ident(n), transposition(n, r) @ sigma) - kendall_tau(ident(n), sigma)
        assert step == (1 if sigma.inv[r - 1] < sigma.inv[r] else -1)


@given(rankings(2, 10))
def test_transposition_delta_property(sigma):
    for r in range(1, sigma.n):
        t = transposition(sigma.n, r)
        assert transposition_delta(sigma, r) == s_single(t @ sigma).value - s_single(sigma).value


@given(ranking_pairs(1, 10))
def test_formula_matches_oracle(pair):
    a, b = pair
    assert s_pair(a, b) == oracle_s_pair(a, b)
