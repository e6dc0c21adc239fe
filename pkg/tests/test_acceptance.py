"""Exit criteria. Each test is one criterion with its time budget; the
terminal summary prints one PASS/FAIL line per criterion."""

import io
import itertools
import json
import math
import time
from contextlib import redirect_stdout
from fractions import Fraction

import pytest

from chanspace import fixtures
from chanspace.channel import (
    Ranking,
    cone_dimension,
    decoding_equivalent,
    enumerate_weak_orders,
    fubini,
    is_stable,
    weak_order_matrix,
)
from chanspace.cli import main
from chanspace.metrics import radial_agreement_probability
from chanspace.oracle import chunk_rng, monte_carlo_radial, oracle_equivalent, oracle_radial_probability, oracle_s_pair
from chanspace.perms import f, kendall_tau, s_pair, s_single, transposition, transposition_delta
from chanspace.verify import mix_with_uniform, random_channel, random_ranking, random_stable_channel

pytestmark = pytest.mark.acceptance


def perms(n):
    return [Ranking(p) for p in itertools.permutations(range(1, n + 1))]


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def test_ac01_example1_weak_order_matrix():
    weak_order_matrix([[1]])  # import and first-call warm-up
    with Timer() as t:
        wom = weak_order_matrix(fixtures.RANK_MATRIX_EXAMPLE)
    assert wom.rows() == [[1, 3, 2], [1, 1, 3], [2, 2, 1]]
    assert t.elapsed < 1e-3


def test_ac02_cone_census():
    with Timer() as t:
        dims = [cone_dimension(w) for w in enumerate_weak_orders(3)]
        assert len(dims) == 13
        assert (dims.count(3), dims.count(2), dims.count(1)) == (6, 6, 1)
        for n, total in zip(range(1, 6), (1, 3, 13, 75, 541)):
            orders = enumerate_weak_orders(n)
            assert len(orders) == len(set(orders)) == total == fubini(n)
            assert sum(1 for w in orders if cone_dimension(w) == n) == math.factorial(n)
    assert t.elapsed < 1.0


def test_ac03_formula_matches_oracle():
    with Timer() as t:
        s4 = perms(4)
        pairs = list(itertools.product(s4, repeat=2))
        assert len(pairs) == 576
        for a, b in pairs:
            assert s_pair(a, b) == oracle_s_pair(a, b)
        rng = chunk_rng(20240, 0)
        for _ in range(200):
            n = int(rng.integers(5, 13))
            a, b = random_ranking(rng, n), random_ranking(rng, n)
            assert s_pair(a, b) == oracle_s_pair(a, b)
    assert t.elapsed < 10


def test_ac04_left_invariance_and_symmetry():
    with Timer() as t:
        s4 = perms(4)
        table = {(a, b): s_pair(a, b).value for a in s4 for b in s4}
        for tau, a, b in itertools.product(s4, repeat=3):
            assert table[(tau @ a, tau @ b)] == table[(a, b)]
        for n in range(1, 5):
            for psi in perms(n):
                assert s_single(psi) == s_single(psi.inverse())
    assert t.elapsed < 10


def test_ac05_transposition_theorem():
    with Timer() as t:
        branches = {"lower": 0, "raise": 0}
        for n in range(2, 6):
            for sigma in perms(n):
                for r in range(1, n):
                    tau = transposition(n, r)
                    direct = s_single(tau @ sigma).value - s_single(sigma).value
                    delta = transposition_delta(sigma, r)
                    assert delta == direct
                    if sigma.inv[r - 1] < sigma.inv[r]:
                        assert delta == -(2 ** (f(sigma, r) - 1))
                        branches["lower"] += 1
                    else:
                        assert delta == 2 ** f(sigma, r + 1)
                        branches["raise"] += 1
        assert branches["lower"] > 0 and branches["raise"] > 0
        for n in range(2, 13):
            for r in range(1, n):
                assert f(transposition(n, r), r) == n - r - 1
    assert t.elapsed < 10


def test_ac06_radial_closed_form_vs_enumeration():
    with Timer() as t:
        rng = chunk_rng(606, 0)
        for _ in range(100):
            n, m = int(rng.integers(2, 9)), int(rng.integers(2, 7))
            p, q = random_stable_channel(rng, n, m), random_stable_channel(rng, n, m)
            closed = radial_agreement_probability(p, q).probability
            assert isinstance(closed, Fraction)
            assert closed == oracle_radial_probability(p, q)
    assert t.elapsed < 60


def test_ac07_worked_example():
    P, Q, R = fixtures.P, fixtures.Q, fixtures.R
    assert weak_order_matrix(Q) == fixtures.ORDER_Q
    assert weak_order_matrix(R) == fixtures.ORDER_R
    rq = radial_agreement_probability(P, Q)
    rr = radial_agreement_probability(P, R)
    # published ordering
    assert rq.distance < rr.distance
    # enumerated values, pinned
    assert rq.per_column_s == (7, 7, 6) and rq.distance == Fraction(1, 21)
    assert rr.per_column_s == (5, 7, 7) and rr.distance == Fraction(2, 21)
    assert oracle_radial_probability(P, Q) == rq.probability
    assert oracle_radial_probability(P, R) == rr.probability
    # the report documents the discrepancy with the printed figures
    buf = io.StringIO()
    with redirect_stdout(buf):
        assert main(["verify", "--suite", "example6"]) == 0
    table = json.loads(buf.getvalue())["checks"][0]["info"]["table"]
    published = {row["quantity"]: row for row in table}
    assert published["radial per_column_s P->Q"]["published"] == "[7, 7, 4]"
    assert published["radial per_column_s P->R"]["published"] == "[5, 7, 4]"
    assert not published["radial distance P->Q"]["match"]


def test_ac08_monte_carlo_consistency():
    with Timer() as t:
        rng = chunk_rng(808, 0)
        for k in range(20):
            p, q = random_stable_channel(rng, 4, 4), random_stable_channel(rng, 4, 4)
            exact = float(radial_agreement_probability(p, q).probability)
            mc = monte_carlo_radial(p, q, 100_000, seed=808 + k)
            assert abs(mc.estimate - exact) <= 4 * mc.stderr
        outputs = []
        for _ in range(2):
            buf = io.StringIO()
            with redirect_stdout(buf):
                assert main(["--seed", "808", "verify", "--suite", "montecarlo"]) == 0
            outputs.append(buf.getvalue().encode())
        assert outputs[0] == outputs[1]
    assert t.elapsed < 30


def test_ac09_kendall_recurrence():
    with Timer() as t:
        for n in range(2, 7):
            ident = Ranking.identity(n)
            for sigma in perms(n):
                base = kendall_tau(ident, sigma)
                for r in range(1, n):
                    step = kendall_tau(ident, transposition(n, r) @ sigma) - base
                    assert step == (1 if sigma.inv[r - 1] < sigma.inv[r] else -1)
    assert t.elapsed < 5


def test_ac10_equivalence_oracle():
    with Timer() as t:
        rng = chunk_rng(1010, 0)
        seen = {"equivalent": 0, "different": 0, "unstable": 0}
        for k in range(100):
            n, m = int(rng.integers(1, 5)), int(rng.integers(1, 4))
            p = random_channel(rng, n, m, max_weight=2)
            if k % 2 == 0:
                q = mix_with_uniform(p, Fraction(int(rng.integers(1, 10)), 10))
            else:
                q = random_channel(rng, n, m, max_weight=2)
            brute = oracle_equivalent(p, q)
            assert decoding_equivalent(p, q) == brute
            seen["equivalent" if brute else "different"] += 1
            seen["unstable"] += not (is_stable(p) and is_stable(q))
        assert all(seen.values())
    assert t.elapsed < 10
