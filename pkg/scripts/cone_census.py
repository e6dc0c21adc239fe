"""Decoding cones of R^n by dimension, with the Fubini total."""

import sys
from collections import Counter

from chanspace.channel import cone_dimension, enumerate_weak_orders, fubini

for n in range(1, int(sys.argv[1]) + 1 if len(sys.argv) > 1 else 7):
    dims = Counter(cone_dimension(w) for w in enumerate_weak_orders(n))
    row = "  ".join(f"dim{d}={dims[d]}" for d in range(n, 0, -1))
    print(f"n={n}  total={sum(dims.values())} (fubini {fubini(n)})  {row}")
