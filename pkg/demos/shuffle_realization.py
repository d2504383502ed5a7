"""Realize the positive half of a rank-two algebra inside the quantum shuffle algebra.

Run: python3 demos/shuffle_realization.py [TYPE]
"""

import sys

from mpqg.borel import Borel, words_of_degree
from mpqg.cartan import CartanDatum, degrees_of_height

kind = sys.argv[1] if len(sys.argv) > 1 else "B2"
B = Borel(CartanDatum.of_type(kind))
S = B.shuffle_algebra
print(f"type {kind}, Cartan matrix {B.P.A}")

print("\nImage of e1 e2 under the shuffle embedding:")
print(" ", B.gamma_embed(B.e(0, 1)))

print("\nThe same image from iterated right derivations agrees:",
      B.gamma_embed(B.e(0, 1)) == B.gamma_by_derivatives(B.e(0, 1)))

for i, j in [(0, 1), (1, 0)]:
    u = B.serre_element(i, j)
    print(f"\nSerre element u_{i + 1}{j + 1} has {len(u.terms)} words;"
          f" its shuffle sum vanishes: {S.serre_shuffle(i, j).is_zero()}")

print("\nGraded dimensions: words vs Gram rank vs rank of the shuffle image")
for h in range(1, 5):
    for beta in degrees_of_height(h, 2):
        print(f"  {beta}: {len(words_of_degree(beta)):3d} words, Gram rank {B.gram(beta).rank},"
              f" image rank {B.gamma_rank(beta)}")
