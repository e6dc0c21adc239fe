"""Does the permutation decoding distance satisfy the triangle inequality?

Exhaustive for small n, sampled above that.
"""

import argparse
import itertools

from chanspace.oracle import chunk_rng
from chanspace.perms import decoding_distance
from chanspace.verify import all_rankings, random_ranking


def exhaustive(n):
    perms = all_rankings(n)
    d = {(a, b): decoding_distance(a, b) for a in perms for b in perms}
    bad = sum(d[a, c] > d[a, b] + d[b, c] for a, b, c in itertools.product(perms, repeat=3))
    return len(perms) ** 3, bad


def sampled(n, triples, seed):
    rng = chunk_rng(seed, n)
    bad = 0
    for _ in range(triples):
        a, b, c = (random_ranking(rng, n) for _ in range(3))
        bad += decoding_distance(a, c) > decoding_distance(a, b) + decoding_distance(b, c)
    return triples, bad


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-exhaustive", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--triples", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        if n <= args.max_exhaustive:
            total, bad = exhaustive(n)
            how = "exhaustive"
        else:
            total, bad = sampled(n, args.triples, args.seed)
            how = "sampled"
        print(f"n={n:2d} {how:10s} triples={total:8d} violations={bad}")


if __name__ == "__main__":
    main()
