"""
Cosine, Jaccard, and Dice
=========================

The three measures on small vectors: worked numbers, the exact
relationship between Dice and Jaccard, and the ordering J <= D <= C that
holds for any nonnegative vectors.

Run from the repository root:

    python3 demos/03_measures.py
"""

import numpy as np

from synsim import cosine, dice, dot, jaccard

x = {"oil": 1.0, "price": 2.0, "export": 3.0}
y = {"oil": 4.0, "price": 5.0, "export": 6.0}

print("x =", x)
print("y =", y)
print(f"\ndot(x, y) = 1*4 + 2*5 + 3*6 = {dot(x, y):.0f}")
print(f"cosine  = {cosine(x, y):.6f}")
print(f"jaccard = {jaccard(x, y):.6f}")
print(f"dice    = {dice(x, y):.6f}")

# Dice is a deterministic function of Jaccard: D = 2J / (1 + J).
j = jaccard(x, y)
print(f"\n2J/(1+J) = {2 * j / (1 + j):.6f}  (equals the Dice value above)")

# Identical vectors score 1 under every measure; disjoint supports score 0.
print("\nboundary cases:")
print(f"  sim(v, v):        cosine={cosine(x, x):.1f} "
      f"jaccard={jaccard(x, x):.1f} dice={dice(x, x):.1f}")
disjoint = {"wheat": 1.0}
print(f"  disjoint support: cosine={cosine(x, disjoint):.1f} "
      f"jaccard={jaccard(x, disjoint):.1f} dice={dice(x, disjoint):.1f}")
zero = {}
print(f"  zero vector:      cosine={cosine(x, zero):.1f} (0 by convention)")

# The ordering J <= D <= C on random nonnegative vectors.
rng = np.random.default_rng(3)
print("\nrandom nonnegative pairs (J <= D <= C):")
for _ in range(5):
    dim = int(rng.integers(2, 8))
    terms = [f"t{i}" for i in range(dim)]
    u = dict(zip(terms, rng.uniform(0, 3, size=dim)))
    v = dict(zip(terms, rng.uniform(0, 3, size=dim)))
    c, jj, d = cosine(u, v), jaccard(u, v), dice(u, v)
    print(f"  J={jj:.4f} <= D={d:.4f} <= C={c:.4f}")
