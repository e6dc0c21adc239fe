"""Channels, weak orders and decoding cones.

A channel is an n x m row-stochastic matrix, entry (i, j) being the
probability of receiving output j when input i is sent.  Maximum likelihood
decoding only looks at the order of the entries inside a column, so a
channel's decoding behaviour is captured by its weak-order matrix: each
column replaced by its dense ranking, rank 1 for the largest entry.

Input and output indices in the public API are 1-based.  Ties are decided
by an ``eps`` argument: 0 means exact comparison (the default, and the only
sensible choice for rational entries); a positive value merges entries that
lie within ``eps`` of the largest entry of their block.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NegativeEntry,
    ParseError,
    RowSumViolation,
    TooLarge,
    UnstableColumn,
)

Number = Union[Fraction, float]

CONVENTION = "rank1=most-likely"
WEAK_ORDER_LIMIT = 6
DEFAULT_TOLERANCE = 1e-9


def as_number(x) -> Number:
    """Coerce a raw entry to the canonical numeric type.

    Integers, Fractions and strings ("5/8", "0.25") become Fractions;
    floats stay floats.
    """
    if isinstance(x, bool):
        raise ParseError(f"boolean is not a probability: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ParseError(f"non-finite entry {x!r}")
        return x
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"cannot parse entry {x!r}") from None
    raise ParseError(f"unsupported entry type {type(x).__name__}")


def _check_eps(eps):
    if eps < 0:
        raise ValueError(f"eps must be non-negative, got {eps}")


@dataclass(frozen=True)
class Channel:
    entries: tuple[tuple[Number, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def m(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n, self.m)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, Fraction) for row in self.entries for v in row)

    def column(self, j: int) -> tuple[Number, ...]:
        """Column ``j`` (1-based)."""
        if not 1 <= j <= self.m:
            raise IndexOutOfRange(j, 1, self.m)
        return tuple(row[j - 1] for row in self.entries)

    def columns(self) -> list[tuple[Number, ...]]:
        return [tuple(col) for col in zip(*self.entries)]

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)


def _as_grid(raw) -> tuple[tuple[Number, ...], ...]:
    if isinstance(raw, Channel):
        return raw.entries
    rows = [tuple(as_number(v) for v in row) for row in raw]
    if not rows or not rows[0]:
        raise ParseError("channel grid is empty")
    width = len(rows[0])
    for i, row in enumerate(rows, 1):
        if len(row) != width:
            raise ParseError(f"row {i} has {len(row)} entries, expected {width}")
    return tuple(rows)


def validate_channel(raw, tolerance: float = DEFAULT_TOLERANCE, normalize: bool = False) -> Channel:
    """Build a Channel from a rectangular grid.

    Rows with only rational entries must sum to exactly 1; rows containing a
    float may be off by at most ``tolerance``.  With ``normalize`` every row
    is divided by its sum instead.
    """
    grid = _as_grid(raw)
    rows = []
    for i, row in enumerate(grid, 1):
        for j, v in enumerate(row, 1):
            if v < 0:
                raise NegativeEntry(i, j, v)
        total = sum(row)
        exact = all(isinstance(v, Fraction) for v in row)
        if normalize:
            if total == 0:
                raise RowSumViolation(i, total)
            row = tuple(v / total for v in row)
        elif exact and total != 1:
            raise RowSumViolation(i, total)
        elif not exact and abs(total - 1) > tolerance:
            raise RowSumViolation(i, total)
        rows.append(row)
    return Channel(tuple(rows))


@dataclass(frozen=True)
class WeakOrder:
    """Dense ranking of n inputs; equal ranks are ties, rank 1 is most likely."""

    ranks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))
        if not self.ranks:
            raise ValueError("a weak order needs at least one element")
        used = set(self.ranks)
        if used != set(range(1, len(used) + 1)):
            raise ValueError(f"ranks {self.ranks} are not dense")

    @classmethod
    def from_blocks(cls, blocks: Sequence[Iterable[int]]) -> "WeakOrder":
        """Build from an ordered partition of {1..n}, most likely block first."""
        rank_of = {}
        for r, block in enumerate(blocks, 1):
            for i in block:
                if i in rank_of:
                    raise ValueError(f"input {i} appears in two blocks")
                rank_of[i] = r
        n = len(rank_of)
        if set(rank_of) != set(range(1, n + 1)):
            raise ValueError("blocks do not cover {1..n}")
        return cls(tuple(rank_of[i] for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.ranks)

    @property
    def n_blocks(self) -> int:
        return max(self.ranks)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.n_blocks)]
        for i, r in enumerate(self.ranks, 1):
            out[r - 1].append(i)
        return tuple(tuple(b) for b in out)

    @property
    def is_strict(self) -> bool:
        return self.n_blocks == self.n

    def __str__(self):
        return " < ".join("~".join(str(i) for i in b) for b in self.blocks)


@dataclass(frozen=True)
class WeakOrderMatrix:
    columns: tuple[WeakOrder, ...]

    @property
    def n(self) -> int:
        return self.columns[0].n

    @property
    def m(self) -> int:
        return len(self.columns)

    def rows(self) -> list[list[int]]:
        """Row-major rank matrix, as printed in the literature."""
        return [[c.ranks[i] for c in self.columns] for i in range(self.n)]

    def to_json(self) -> dict:
        return {"columns": [list(c.ranks) for c in self.columns]}

    @classmethod
    def from_json(cls, obj: dict) -> "WeakOrderMatrix":
        return cls(tuple(WeakOrder(tuple(c)) for c in obj["columns"]))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "WeakOrderMatrix":
        return cls(tuple(WeakOrder(tuple(col)) for col in zip(*rows)))


@dataclass(frozen=True)
class Ranking:
    """A strict order on inputs, i.e. a full-dimensional decoding cone.

    ``perm`` is one-line notation: ``perm[k-1]`` is the input of rank k.
    ``inv`` is its inverse: ``inv[i-1]`` is the rank of input i.
    Composition ``a @ b`` is the map k -> a(b(k)).
    """

    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(v) for v in self.perm))
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{len(self.perm)}")

    @classmethod
    def identity(cls, n: int) -> "Ranking":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_inv(cls, inv: Sequence[int]) -> "Ranking":
        perm = [0] * len(inv)
        for i, r in enumerate(inv, 1):
            if not 1 <= r <= len(inv) or perm[r - 1]:
                raise ValueError(f"{tuple(inv)} is not a permutation")
            perm[r - 1] = i
        return cls(tuple(perm))

    @classmethod
    def from_weak_order(cls, w: WeakOrder) -> "Ranking":
        if not w.is_strict:
            raise ValueError(f"weak order {w} has ties")
        return cls.from_inv(w.ranks)

    @property
    def n(self) -> int:
        return len(self.perm)

    @cached_property
    def inv(self) -> tuple[int, ...]:
        out = [0] * self.n
        for k, i in enumerate(self.perm, 1):
            out[i - 1] = k
        return tuple(out)

    def __call__(self, k: int) -> int:
        return self.perm[k - 1]

    def __matmul__(self, other: "Ranking") -> "Ranking":
        if other.n != self.n:
            raise DimensionMismatch(self.n, other.n)
        return Ranking(tuple(self.perm[k - 1] for k in other.perm))

    def inverse(self) -> "Ranking":
        return Ranking(self.inv)

    def to_weak_order(self) -> WeakOrder:
        return WeakOrder(self.inv)

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "inv": list(self.inv), "convention": CONVENTION}

    def __str__(self):
        return ",".join(map(str, self.perm))


def weak_order_column(values: Sequence[Number], eps: float = 0) -> WeakOrder:
    """Dense descending ranking of ``values``; tied values share a rank."""
    _check_eps(eps)
    if not values:
        raise ValueError("empty column")
    order = sorted(range(len(values)), key=lambda i: values[i], reverse=True)
    ranks = [0] * len(values)
    rank, top = 0, None
    for i in order:
        v = values[i]
        if top is None or top - v > eps:
            rank += 1
            top = v
        ranks[i] = rank
    return WeakOrder(tuple(ranks))


def weak_order_matrix(ch, eps: float = 0) -> WeakOrderMatrix:
    """Column-wise weak orders of a channel or of any non-negative grid."""
    grid = _as_grid(ch)
    return WeakOrderMatrix(tuple(weak_order_column(col, eps) for col in zip(*grid)))


def decoding_equivalent(p, q, eps: float = 0) -> bool:
    gp, gq = _as_grid(p), _as_grid(q)
    if (len(gp), len(gp[0])) != (len(gq), len(gq[0])):
        raise DimensionMismatch((len(gp), len(gp[0])), (len(gq), len(gq[0])))
    return weak_order_matrix(gp, eps) == weak_order_matrix(gq, eps)


def unstable_columns(ch, eps: float = 0) -> list[int]:
    """1-based indices of the columns that contain a tie."""
    wom = weak_order_matrix(ch, eps)
    return [j for j, w in enumerate(wom.columns, 1) if not w.is_strict]


def is_stable(ch, eps: float = 0) -> bool:
    return not unstable_columns(ch, eps)


def column_ranking(ch, j: int, eps: float = 0) -> Ranking:
    """Ranking of the inputs by their probability in output column ``j``."""
    grid = _as_grid(ch)
    if not 1 <= j <= len(grid[0]):
        raise IndexOutOfRange(j, 1, len(grid[0]))
    w = weak_order_column([row[j - 1] for row in grid], eps)
    if not w.is_strict:
        raise UnstableColumn(j)
    return Ranking.from_inv(w.ranks)


def enumerate_weak_orders(n: int, limit: int = WEAK_ORDER_LIMIT) -> list[WeakOrder]:
    """All weak orders on n elements, sorted by rank vector."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > limit:
        raise TooLarge(n, limit)

    def partitions(rest):
        # ordered set partitions: pick the most likely block, recurse on the rest
        if not rest:
            yield []
            return
        for size in range(1, len(rest) + 1):
            for block in itertools.combinations(rest, size):
                left = tuple(i for i in rest if i not in block)
                for tail in partitions(left):
                    yield [block] + tail

    out = [WeakOrder.from_blocks(b) for b in partitions(tuple(range(1, n + 1)))]
    return sorted(out, key=lambda w: w.ranks)


def cone_dimension(w: WeakOrder) -> int:
    return w.n_blocks


def fubini(n: int) -> int:
    """Ordered Bell number, by the recurrence a(n) = sum_k C(n,k) a(n-k)."""
    a = [1]
    for k in range(1, n + 1):
        a.append(sum(math.comb(k, j) * a[k - j] for j in range(1, k + 1)))
    return a[n]
