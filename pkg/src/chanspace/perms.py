"""Agreement counts and distances between rankings.

For rankings sigma and phi of n inputs, ``S(sigma, phi)`` is the number of
nonempty codes on which the two ML decoders pick the same codeword.  It
reduces to a single-argument count ``S(phi^-1 o sigma)`` computed in closed
form from the f-statistics below; all counts are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .channel import Ranking
from .errors import DimensionMismatch, IndexOutOfRange, TooLarge

FORMULA_LIMIT = 4096


@dataclass(frozen=True)
class AgreementCount:
    value: int
    n: int

    def __post_init__(self):
        if not self.n <= self.value <= 2**self.n - 1:
            raise ValueError(f"agreement count {self.value} outside [{self.n}, 2^{self.n}-1]")

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, AgreementCount):
            return (self.value, self.n) == (other.value, other.n)
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.n))


def _same_n(a: Ranking, b: Ranking):
    if a.n != b.n:
        raise DimensionMismatch(a.n, b.n)


def compose(a: Ranking, b: Ranking) -> Ranking:
    return a @ b


def inverse(a: Ranking) -> Ranking:
    return a.inverse()


def transposition(n: int, r: int) -> Ranking:
    """The adjacent transposition (r, r+1) in S_n."""
    if not 1 <= r <= n - 1:
        raise IndexOutOfRange(r, 1, n - 1)
    perm = list(range(1, n + 1))
    perm[r - 1], perm[r] = perm[r], perm[r - 1]
    return Ranking(tuple(perm))


def f(sigma: Ranking, i: int) -> int:
    """Number of later inputs j > i that sigma ranks no better than i."""
    n = sigma.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(i, 1, n)
    inv = sigma.inv
    ri = inv[i - 1]
    return sum(1 for j in range(i, n) if ri <= inv[j])


def f_values(sigma: Ranking) -> list[int]:
    return [f(sigma, i) for i in range(1, sigma.n + 1)]


def s_single(sigma: Ranking) -> AgreementCount:
    """Codes on which sigma decodes like the identity: sum_i 2^f_i."""
    if sigma.n > FORMULA_LIMIT:
        raise TooLarge(sigma.n, FORMULA_LIMIT)
    return AgreementCount(sum(1 << fi for fi in f_values(sigma)), sigma.n)


def s_pair(sigma: Ranking, phi: Ranking) -> AgreementCount:
    _same_n(sigma, phi)
    return s_single(phi.inverse() @ sigma)


def agreement_probability(sigma: Ranking, phi: Ranking) -> Fraction:
    s = s_pair(sigma, phi)
    return Fraction(s.value, 2**sigma.n - 1)


def decoding_distance(sigma: Ranking, phi: Ranking) -> Fraction:
    return 1 - agreement_probability(sigma, phi)


def transposition_delta(sigma: Ranking, r: int) -> int:
    """S(tau_r o sigma) - S(sigma) for tau_r = (r, r+1), without recounting."""
    n = sigma.n
    if not 1 <= r <= n - 1:
        raise IndexOutOfRange(r, 1, n - 1)
    inv = sigma.inv
    if inv[r - 1] < inv[r]:
        # f_r >= 1 here because j = r+1 is counted
        return -(1 << (f(sigma, r) - 1))
    return 1 << f(sigma, r + 1)


def inversions(seq) -> int:
    """Inversion count by merge sort."""
    seq = list(seq)

    def sort(a):
        if len(a) <= 1:
            return a, 0
        mid = len(a) // 2
        left, x = sort(a[:mid])
        right, y = sort(a[mid:])
        merged, count, i, j = [], x + y, 0, 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                count += len(left) - i
                j += 1
        merged += left[i:] + right[j:]
        return merged, count

    return sort(seq)[1]


def kendall_tau(sigma: Ranking, phi: Ranking) -> int:
    _same_n(sigma, phi)
    return inversions((phi.inverse() @ sigma).perm)
