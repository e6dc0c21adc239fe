"""Brute-force ground truth.

Everything here works from the definitions: decode each code by taking the
argmax of the raw column over its members, and count.  Nothing in this
module uses rankings, f-statistics or the closed forms it is meant to check.

Codes are subsets of {1..n}.  Internally they are bit masks (bit i-1 set when
input i is a codeword) enumerated in increasing integer order.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

import numpy as np

from .channel import Channel, Ranking
from .errors import (
    BadPrior,
    DimensionMismatch,
    EmptyCode,
    TooLarge,
    UnstableChannel,
    ZeroSamples,
)
from .perms import AgreementCount

ORACLE_LIMIT = 20
RNG_ALGORITHM = "numpy.Philox4x64-10/SeedSequence(seed,spawn_key=(chunk,))"
MC_CHUNK = 10_000


@dataclass(frozen=True)
class Code:
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if not self.members:
            raise EmptyCode()
        if min(self.members) < 1:
            raise ValueError("codewords are 1-based input indices")

    @classmethod
    def from_mask(cls, mask: int) -> "Code":
        return cls(frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1))

    @property
    def mask(self) -> int:
        return sum(1 << (i - 1) for i in self.members)


@dataclass(frozen=True)
class DecodeResult:
    winners: frozenset


def all_codes(n: int) -> Iterator[Code]:
    for mask in range(1, 1 << n):
        yield Code.from_mask(mask)


def _winners(column: Sequence, mask: int) -> int:
    """Argmax set of ``column`` over the codewords in ``mask``, as a mask."""
    best, win = None, 0
    i = 0
    while mask:
        if mask & 1:
            v = column[i]
            if best is None or v > best:
                best, win = v, 1 << i
            elif v == best:
                win |= 1 << i
        mask >>= 1
        i += 1
    return win


def ml_decode(column: Sequence, code: Code) -> DecodeResult:
    """All codewords maximising the received column's likelihood."""
    if not isinstance(code, Code):
        code = Code(code)
    if max(code.members) > len(column):
        raise ValueError(f"code {sorted(code.members)} exceeds column length {len(column)}")
    return DecodeResult(Code.from_mask(_winners(column, code.mask)).members)


def _check_n(n: int, limit: int = ORACLE_LIMIT):
    if n > limit:
        raise TooLarge(n, limit)


def _likelihoods(sigma: Ranking) -> list[int]:
    # ranks turned into scores, so the most likely input has the largest value
    return [sigma.n + 1 - r for r in sigma.inv]


def oracle_s_pair(sigma: Ranking, phi: Ranking) -> AgreementCount:
    """Count codes on which both rankings decode to the same codeword."""
    if sigma.n != phi.n:
        raise DimensionMismatch(sigma.n, phi.n)
    n = sigma.n
    _check_n(n)
    a, b = _likelihoods(sigma), _likelihoods(phi)
    count = sum(1 for mask in range(1, 1 << n) if _winners(a, mask) == _winners(b, mask))
    return AgreementCount(count, n)


def _check_pair(p: Channel, q: Channel, stable: bool = True):
    if p.shape != q.shape:
        raise DimensionMismatch(p.shape, q.shape)
    _check_n(p.n)
    if stable:
        for which, ch in (("P", p), ("Q", q)):
            for j, col in enumerate(ch.columns(), 1):
                if len(set(col)) != len(col):
                    raise UnstableChannel(which, j)


def _output_weights(p: Channel, prior):
    n = p.n
    if prior is None:
        prior = [Fraction(1, n)] * n
    if len(prior) != n:
        raise BadPrior(f"prior has {len(prior)} entries, channel has {n} inputs")
    return [sum(p.entries[x][y] * prior[x] for x in range(n)) for y in range(p.m)]


def oracle_radial_probability(p: Channel, q: Channel, prior: Optional[Sequence] = None):
    """Pr over (code, output) that P's and Q's decoders agree, by full enumeration."""
    _check_pair(p, q)
    weights = _output_weights(p, prior)
    total = 0
    for pc, qc, w in zip(p.columns(), q.columns(), weights):
        agree = sum(1 for mask in range(1, 1 << p.n) if _winners(pc, mask) == _winners(qc, mask))
        total += agree * w
    prob = total / (2**p.n - 1)
    return Fraction(prob) if isinstance(prob, int) else prob


def oracle_global_agreement(p: Channel, q: Channel) -> AgreementCount:
    """Codes on which the decoders agree for every output simultaneously."""
    _check_pair(p, q)
    pcols, qcols = p.columns(), q.columns()
    count = 0
    for mask in range(1, 1 << p.n):
        if all(_winners(a, mask) == _winners(b, mask) for a, b in zip(pcols, qcols)):
            count += 1
    return AgreementCount(count, p.n)


def oracle_equivalent(p: Channel, q: Channel) -> bool:
    """Same decoder sets for every code and every output; ties allowed."""
    _check_pair(p, q, stable=False)
    for a, b in zip(p.columns(), q.columns()):
        for mask in range(1, 1 << p.n):
            if _winners(a, mask) != _winners(b, mask):
                return False
    return True


# Monte Carlo


@dataclass(frozen=True)
class MonteCarloResult:
    estimate: float
    stderr: float
    hits: int
    samples: int
    seed: int
    rng: str = RNG_ALGORITHM

    def to_json(self) -> dict:
        return {
            "estimate": self.estimate,
            "stderr": self.stderr,
            "hits": self.hits,
            "samples": self.samples,
            "seed": self.seed,
            "rng": self.rng,
        }


def chunk_rng(seed: int, chunk: int) -> np.random.Generator:
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(chunk,))))


def sample_codes(n: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform draws from the nonempty subsets of n inputs, as masks."""
    return rng.integers(1, 1 << n, size=size, dtype=np.int64)


def _winner_table(column: Sequence) -> np.ndarray:
    n = len(column)
    table = np.zeros(1 << n, dtype=np.int64)
    for mask in range(1, 1 << n):
        table[mask] = _winners(column, mask)
    return table


def monte_carlo_radial(
    p: Channel,
    q: Channel,
    samples: int,
    seed: int,
    prior: Optional[Sequence] = None,
    workers: int = 1,
) -> MonteCarloResult:
    """Estimate the radial agreement probability by sampling (code, output).

    Samples are split into fixed chunks of ``MC_CHUNK`` draws, each with its
    own sub-stream, so the result does not depend on ``workers``.
    """
    _check_pair(p, q)
    if samples <= 0:
        raise ZeroSamples()
    weights = np.array([float(w) for w in _output_weights(p, prior)])
    weights /= weights.sum()
    tp = np.stack([_winner_table(c) for c in p.columns()])
    tq = np.stack([_winner_table(c) for c in q.columns()])

    sizes = [MC_CHUNK] * (samples // MC_CHUNK)
    if samples % MC_CHUNK:
        sizes.append(samples % MC_CHUNK)

    def run(k: int) -> int:
        rng = chunk_rng(seed, k)
        masks = sample_codes(p.n, sizes[k], rng)
        outs = rng.choice(p.m, size=sizes[k], p=weights)
        return int(np.count_nonzero(tp[outs, masks] == tq[outs, masks]))

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            hits = sum(pool.map(run, range(len(sizes))))
    else:
        hits = sum(map(run, range(len(sizes))))
    est = hits / samples
    return MonteCarloResult(est, math.sqrt(est * (1 - est) / samples), hits, samples, seed)
