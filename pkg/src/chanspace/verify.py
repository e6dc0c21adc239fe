"""Verification campaigns: closed forms against the brute-force oracle.

Each check returns a JSON-ready dict
``{"check": name, "instances": k, "failures": [...], "seed": s}``; a few
add an ``"info"`` field.  Informational checks never count as failures.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

from . import fixtures
from .channel import (
    Channel,
    Ranking,
    cone_dimension,
    decoding_equivalent,
    enumerate_weak_orders,
    fubini,
    is_stable,
    weak_order_matrix,
)
from .metrics import global_decoding_distance, radial_agreement_probability
from .oracle import (
    RNG_ALGORITHM,
    chunk_rng,
    monte_carlo_radial,
    oracle_equivalent,
    oracle_global_agreement,
    oracle_radial_probability,
    oracle_s_pair,
)
from .perms import (
    decoding_distance,
    f,
    kendall_tau,
    s_pair,
    s_single,
    transposition,
    transposition_delta,
)


def all_rankings(n: int):
    return [Ranking(p) for p in itertools.permutations(range(1, n + 1))]


def random_ranking(rng: np.random.Generator, n: int) -> Ranking:
    return Ranking(tuple(int(v) + 1 for v in rng.permutation(n)))


def random_channel(rng: np.random.Generator, n: int, m: int, max_weight: int = 1000) -> Channel:
    """Exact rational channel from integer weights in [0, max_weight]; ties possible."""
    rows = []
    while len(rows) < n:
        w = [int(v) for v in rng.integers(0, max_weight + 1, size=m)]
        total = sum(w)
        if total:
            rows.append([Fraction(v, total) for v in w])
    return Channel(tuple(tuple(r) for r in rows))


def random_stable_channel(rng: np.random.Generator, n: int, m: int) -> Channel:
    if m == 1 and n > 1:
        # a single column is all ones
        raise ValueError("no stable channel has one output and several inputs")
    while True:
        ch = random_channel(rng, n, m, max_weight=10**6)
        if is_stable(ch):
            return ch


def mix_with_uniform(ch: Channel, lam: Fraction) -> Channel:
    """lam * ch + (1 - lam) * (all entries 1/m): same cone, different entries."""
    c = (1 - lam) / ch.m
    return Channel(tuple(tuple(lam * v + c for v in row) for row in ch.entries))


def _result(name, instances, failures, seed=None, **extra):
    out = {"check": name, "instances": instances, "failures": failures, "seed": seed}
    out.update(extra)
    return out


def check_cones(seed=None):
    failures, instances = [], 0
    expected = {1: 1, 2: 3, 3: 13, 4: 75, 5: 541}
    for n, total in expected.items():
        orders = enumerate_weak_orders(n)
        instances += 1
        if len(orders) != total or len(set(orders)) != total or fubini(n) != total:
            failures.append({"n": n, "count": len(orders), "fubini": fubini(n)})
        strict = sum(1 for w in orders if cone_dimension(w) == n)
        if strict != math.factorial(n):
            failures.append({"n": n, "full_dimensional": strict})
    by_dim = {}
    for w in enumerate_weak_orders(3):
        by_dim[cone_dimension(w)] = by_dim.get(cone_dimension(w), 0) + 1
    if by_dim != {3: 6, 2: 6, 1: 1}:
        failures.append({"n": 3, "by_dimension": by_dim})
    return _result("cones", instances, failures, seed, info={"n3_by_dimension": by_dim})


def check_perm_formula(seed=0, random_pairs=200):
    failures, instances = [], 0
    for n in range(1, 5):
        perms = all_rankings(n)
        for a, b in itertools.product(perms, repeat=2):
            instances += 1
            if s_pair(a, b) != oracle_s_pair(a, b):
                failures.append({"sigma": list(a.perm), "phi": list(b.perm)})
    rng = chunk_rng(seed, 0)
    for _ in range(random_pairs):
        n = int(rng.integers(5, 13))
        a, b = random_ranking(rng, n), random_ranking(rng, n)
        instances += 1
        if s_pair(a, b) != oracle_s_pair(a, b):
            failures.append({"sigma": list(a.perm), "phi": list(b.perm)})
    return _result("perm_formula", instances, failures, seed)


def check_invariance(seed=None):
    failures, instances = [], 0
    perms = all_rankings(4)
    table = {(a, b): s_pair(a, b).value for a in perms for b in perms}
    for t, a, b in itertools.product(perms, repeat=3):
        instances += 1
        if table[(t @ a, t @ b)] != table[(a, b)]:
            failures.append({"tau": list(t.perm), "sigma": list(a.perm), "phi": list(b.perm)})
    for n in range(1, 5):
        for psi in all_rankings(n):
            instances += 1
            if s_single(psi) != s_single(psi.inverse()):
                failures.append({"psi": list(psi.perm)})
    return _result("left_invariance_symmetry", instances, failures, seed)


def check_transposition(seed=None):
    failures, instances = [], 0
    for n in range(2, 6):
        for sigma in all_rankings(n):
            for r in range(1, n):
                instances += 1
                direct = s_single(transposition(n, r) @ sigma).value - s_single(sigma).value
                if transposition_delta(sigma, r) != direct:
                    failures.append({"sigma": list(sigma.perm), "r": r, "direct": direct})
    for n in range(2, 13):
        for r in range(1, n):
            instances += 1
            if f(transposition(n, r), r) != n - r - 1:
                failures.append({"n": n, "r": r, "f_r": f(transposition(n, r), r)})
    return _result("transposition", instances, failures, seed)


def check_kendall(seed=None):
    failures, instances = [], 0
    for n in range(2, 7):
        ident = Ranking.identity(n)
        for sigma in all_rankings(n):
            base = kendall_tau(ident, sigma)
            for r in range(1, n):
                instances += 1
                step = kendall_tau(ident, transposition(n, r) @ sigma) - base
                want = 1 if sigma.inv[r - 1] < sigma.inv[r] else -1
                if step != want:
                    failures.append({"sigma": list(sigma.perm), "r": r, "step": step})
    return _result("kendall_recurrence", instances, failures, seed)


def check_radial(seed=0, instances=100):
    failures = []
    rng = chunk_rng(seed, 1)
    for _ in range(instances):
        n, m = int(rng.integers(2, 9)), int(rng.integers(2, 7))
        p, q = random_stable_channel(rng, n, m), random_stable_channel(rng, n, m)
        closed = radial_agreement_probability(p, q).probability
        brute = oracle_radial_probability(p, q)
        if closed != brute:
            failures.append({"n": n, "m": m, "closed": str(closed), "oracle": str(brute)})
    return _result("radial_closed_form", instances, failures, seed)


def check_global(seed=0, instances=50):
    failures = []
    rng = chunk_rng(seed, 2)
    for _ in range(instances):
        n, m = int(rng.integers(2, 7)), int(rng.integers(2, 5))
        p, q = random_stable_channel(rng, n, m), random_stable_channel(rng, n, m)
        d = global_decoding_distance(p, q)
        brute = 1 - Fraction(oracle_global_agreement(p, q).value, 2**n - 1)
        if d != brute:
            failures.append({"n": n, "m": m, "rankings": str(d), "oracle": str(brute)})
    return _result("global_distance", instances, failures, seed)


def check_monte_carlo(seed=0, pairs=20, samples=100_000, n=4, m=4, workers=1):
    failures, runs = [], []
    rng = chunk_rng(seed, 3)
    for k in range(pairs):
        p, q = random_stable_channel(rng, n, m), random_stable_channel(rng, n, m)
        exact = radial_agreement_probability(p, q).probability
        mc = monte_carlo_radial(p, q, samples, (seed + k) % 2**64, workers=workers)
        z = abs(mc.estimate - float(exact)) / mc.stderr if mc.stderr else (
            0.0 if mc.estimate == float(exact) else math.inf)
        runs.append({"exact": str(exact), "estimate": mc.estimate, "stderr": mc.stderr, "z": z})
        if z > 4:
            failures.append(runs[-1])
    return _result("monte_carlo", pairs, failures, seed, info={"samples": samples, "rng": RNG_ALGORITHM, "runs": runs})


def check_equivalence(seed=0, instances=100):
    failures = []
    rng = chunk_rng(seed, 4)
    outcomes = {"equivalent": 0, "different": 0, "unstable": 0}
    for k in range(instances):
        n, m = int(rng.integers(1, 5)), int(rng.integers(1, 4))
        p = random_channel(rng, n, m, max_weight=2)
        if k % 2 == 0:
            q = mix_with_uniform(p, Fraction(int(rng.integers(1, 10)), 10))
        else:
            q = random_channel(rng, n, m, max_weight=2)
        fast, brute = decoding_equivalent(p, q), oracle_equivalent(p, q)
        outcomes["equivalent" if brute else "different"] += 1
        outcomes["unstable"] += (not is_stable(p)) + (not is_stable(q))
        if fast != brute:
            failures.append({"P": weak_order_matrix(p).to_json(), "Q": weak_order_matrix(q).to_json()})
    return _result("equivalence_oracle", instances, failures, seed, info=outcomes)


def check_triangle(seed=None, max_n=4):
    """Survey of the triangle inequality for the permutation decoding distance."""
    info = {}
    instances = 0
    for n in range(1, max_n + 1):
        perms = all_rankings(n)
        d = {(a, b): decoding_distance(a, b) for a in perms for b in perms}
        violations = 0
        for a, b, c in itertools.product(perms, repeat=3):
            instances += 1
            if d[(a, c)] > d[(a, b)] + d[(b, c)]:
                violations += 1
        info[str(n)] = {"triples": len(perms) ** 3, "violations": violations}
    return _result("triangle_survey", instances, [], seed, informational=True, info=info)


def check_example6(seed=None):
    """Published figures for the 3x3 worked example next to enumerated ones."""
    pub = fixtures.PUBLISHED
    rows, failures = [], []
    radial = {}
    for name, ch in (("Q", fixtures.Q), ("R", fixtures.R)):
        rep = radial_agreement_probability(fixtures.P, ch)
        brute = oracle_radial_probability(fixtures.P, ch)
        if brute != rep.probability:
            failures.append({"radial": name, "closed": str(rep.probability), "oracle": str(brute)})
        radial[name] = rep
        for key in ("per_column_s", "probability", "distance"):
            ours = list(rep.per_column_s) if key == "per_column_s" else getattr(rep, key)
            theirs = pub["radial"][name][key]
            rows.append({
                "quantity": f"radial {key} P->{name}",
                "published": str(theirs),
                "enumerated": str(ours),
                "match": ours == theirs,
            })
    if not radial["Q"].distance < radial["R"].distance:
        failures.append({"ordering": "d^P(Q) < d^P(R) does not hold"})
    if weak_order_matrix(fixtures.Q) != fixtures.ORDER_Q or weak_order_matrix(fixtures.R) != fixtures.ORDER_R:
        failures.append({"fixtures": "Q or R does not realise the printed weak-order matrix"})
    chans = {"Q": fixtures.Q, "P": fixtures.P, "R": fixtures.R}
    for pair, theirs in pub["global"].items():
        ours = global_decoding_distance(chans[pair[0]], chans[pair[1]])
        rows.append({
            "quantity": f"global distance {pair[0]},{pair[1]}",
            "published": str(theirs),
            "enumerated": str(ours),
            "match": ours == theirs,
        })
    discrepancies = sum(not r["match"] for r in rows)
    return _result("example6", 1, failures, seed, info={"table": rows, "discrepancies": discrepancies})


SUITES = {
    "cones": check_cones,
    "perm": check_perm_formula,
    "invariance": check_invariance,
    "transposition": check_transposition,
    "kendall": check_kendall,
    "radial": check_radial,
    "global": check_global,
    "montecarlo": check_monte_carlo,
    "equivalence": check_equivalence,
    "triangle": check_triangle,
    "example6": check_example6,
}


def run_suites(names=None, seed=0, workers=1) -> dict:
    names = list(SUITES) if not names or names == ["all"] else names
    checks = []
    for name in names:
        fn = SUITES[name]
        if fn is check_monte_carlo:
            checks.append(fn(seed, workers=workers))
        else:
            checks.append(fn(seed))
    failed = [c["check"] for c in checks if c["failures"] and not c.get("informational")]
    return {"seed": seed, "rng": RNG_ALGORITHM, "checks": checks, "failed": failed, "ok": not failed}
