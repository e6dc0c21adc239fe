"""Decoding distances between stable channels.

The radial distance d^P(Q) assumes P is the true channel: a code is drawn
uniformly among the 2^n - 1 nonempty subsets of inputs, an output is drawn
from P's output distribution, and we ask whether the ML decoders of P and Q
for that output pick the same codeword.  Only column rankings of Q matter,
while P enters through both its rankings and its column masses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .channel import CONVENTION, Channel, Ranking, column_ranking, unstable_columns
from .errors import BadPrior, DimensionMismatch, TooLarge, UnstableChannel
from .perms import s_pair

GLOBAL_LIMIT = 20


@dataclass(frozen=True)
class AgreementReport:
    per_column_s: tuple[int, ...]
    column_norms: tuple
    probability: Fraction
    distance: Fraction
    prior: str = "uniform"

    def to_json(self) -> dict:
        return {
            "per_column_s": list(self.per_column_s),
            "column_norms": [_frac_str(v) for v in self.column_norms],
            "probability": _frac_str(self.probability),
            "distance": _frac_str(self.distance),
            "convention": CONVENTION,
            "prior": self.prior,
        }


def _frac_str(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return repr(v)


def check_same_shape(p: Channel, q: Channel):
    if p.shape != q.shape:
        raise DimensionMismatch(p.shape, q.shape)


def require_stable(ch: Channel, which: str, eps: float = 0):
    bad = unstable_columns(ch, eps)
    if bad:
        raise UnstableChannel(which, bad[0])


def column_rankings(ch: Channel, eps: float = 0) -> list[Ranking]:
    return [column_ranking(ch, j, eps) for j in range(1, ch.m + 1)]


def resolve_prior(n: int, prior: Optional[Sequence] = None) -> list:
    """The input distribution as a list; None means uniform over n inputs."""
    if prior is None:
        return [Fraction(1, n)] * n
    prior = [v if isinstance(v, (Fraction, float)) else Fraction(v) for v in prior]
    if len(prior) != n:
        raise BadPrior(f"prior has {len(prior)} entries, channel has {n} inputs")
    if any(v < 0 for v in prior):
        raise BadPrior("prior has a negative entry")
    total = sum(prior)
    exact = all(isinstance(v, Fraction) for v in prior)
    if (exact and total != 1) or (not exact and abs(total - 1) > 1e-9):
        raise BadPrior(f"prior sums to {total}")
    return prior


def output_distribution(p: Channel, prior: Optional[Sequence] = None) -> list:
    """Pr(output j) = sum_i p[i][j] * prior[i]."""
    prior = resolve_prior(p.n, prior)
    return [sum(row[j] * w for row, w in zip(p.entries, prior)) for j in range(p.m)]


def column_norms(p: Channel) -> list:
    return [sum(col) for col in p.columns()]


def radial_agreement_probability(
    p: Channel, q: Channel, prior: Optional[Sequence] = None, eps: float = 0
) -> AgreementReport:
    """Closed form for Pr(P and Q decode alike), P being the true channel.

    Under a uniform prior this is sum_i S(sigma_i, phi_i) |P_i|_1 / (n (2^n - 1)).
    An explicit prior replaces |P_i|_1 / n by the output probability of column i.
    """
    check_same_shape(p, q)
    require_stable(p, "P", eps)
    require_stable(q, "Q", eps)
    n = p.n
    svals = [s_pair(a, b).value for a, b in zip(column_rankings(p, eps), column_rankings(q, eps))]
    norms = column_norms(p)
    if prior is None:
        prob = sum(s * w for s, w in zip(svals, norms)) / (n * (2**n - 1))
        label = "uniform"
    else:
        out = output_distribution(p, prior)
        prob = sum(s * w for s, w in zip(svals, out)) / (2**n - 1)
        label = "explicit"
    if isinstance(prob, int):
        prob = Fraction(prob)
    return AgreementReport(tuple(svals), tuple(norms), prob, 1 - prob, label)


def radial_decoding_distance(
    p: Channel, q: Channel, prior: Optional[Sequence] = None, eps: float = 0
):
    return radial_agreement_probability(p, q, prior, eps).distance


def _top_tables(rankings: list[Ranking]) -> list[list[int]]:
    """For each ranking, the best-ranked member of every code mask."""
    n = rankings[0].n
    tables = []
    for sigma in rankings:
        inv = sigma.inv
        top = [0] * (1 << n)
        for mask in range(1, 1 << n):
            low = (mask & -mask).bit_length() - 1
            rest = mask & (mask - 1)
            top[mask] = low if rest == 0 or inv[low] < inv[top[rest]] else top[rest]
        tables.append(top)
    return tables


def global_agreement_count(p: Channel, q: Channel, eps: float = 0) -> int:
    """Codes on which the full decoders of P and Q agree on every output."""
    check_same_shape(p, q)
    require_stable(p, "P", eps)
    require_stable(q, "Q", eps)
    if p.n > GLOBAL_LIMIT:
        raise TooLarge(p.n, GLOBAL_LIMIT)
    tp = _top_tables(column_rankings(p, eps))
    tq = _top_tables(column_rankings(q, eps))
    count = 0
    for mask in range(1, 1 << p.n):
        if all(a[mask] == b[mask] for a, b in zip(tp, tq)):
            count += 1
    return count


def global_decoding_distance(p: Channel, q: Channel, eps: float = 0) -> Fraction:
    """Unrefined distance: 1 - Pr(decoders agree on all outputs), by enumeration."""
    return 1 - Fraction(global_agreement_count(p, q, eps), 2**p.n - 1)
