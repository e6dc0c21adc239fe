"""Worked-example channels and their published figures.

The 3x3 example: P is a doubly stochastic channel; Q and R are concrete
channels realising the two printed weak-order matrices.  Any other channel
in the same cones gives the same radial distances from P.

The published per-column agreement counts for this example do not survive
exhaustive enumeration (R's third column has the same ranking as P's, so
its count must be 2^3 - 1 = 7).  ``PUBLISHED`` keeps the printed figures
for comparison reports; tests pin the enumerated values.
"""

from fractions import Fraction

from .channel import WeakOrderMatrix, validate_channel

RANK_MATRIX_EXAMPLE = [[9, 2, 1], [9, 7, 0], [8, 6, 8]]
RANK_MATRIX_EXPECTED = [[1, 3, 2], [1, 1, 3], [2, 2, 1]]

P = validate_channel([["5/8", "1/8", "2/8"], ["2/8", "5/8", "1/8"], ["1/8", "2/8", "5/8"]])
Q = validate_channel([["5/8", "1/8", "2/8"], ["2/8", "3/8", "3/8"], ["1/8", "2/8", "5/8"]])
R = validate_channel([["3/8", "1/8", "4/8"], ["4/8", "3/8", "1/8"], ["1/8", "2/8", "5/8"]])

ORDER_Q = WeakOrderMatrix.from_rows([[1, 3, 3], [2, 1, 2], [3, 2, 1]])
ORDER_R = WeakOrderMatrix.from_rows([[2, 3, 2], [1, 1, 3], [3, 2, 1]])

PUBLISHED = {
    "radial": {
        "Q": {"per_column_s": [7, 7, 4], "probability": Fraction(6, 7), "distance": Fraction(1, 7)},
        "R": {"per_column_s": [5, 7, 4], "probability": Fraction(16, 21), "distance": Fraction(5, 21)},
    },
    # unrefined distances for the triple (Q, P, R) in that order of naming
    "global": {"QP": Fraction(4, 7), "QR": Fraction(4, 7), "PR": Fraction(4, 7)},
}
