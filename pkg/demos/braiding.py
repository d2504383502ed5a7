"""Build highest-weight modules, a Casimir and the braiding, then check the braid relation.

Run: python3 demos/braiding.py
"""

from mpqg.cartan import CartanDatum
from mpqg.repmod import (SYMBOLIC, backend_for, decompose, g_value,
                         highest_weight_module, intertwiner_check, qybe_check, tensor)

A1, A2 = CartanDatum.of_type("A1"), CartanDatum.of_type("A2")

for m in range(4):
    M = highest_weight_module(A1, (m,))
    print(f"A1 L({m}): dim {M.dim}, Casimir scalar {g_value(A1, M.P, A1.weight((m,)))}")

parts = decompose(tensor(highest_weight_module(A1, (2,)), highest_weight_module(A1, (3,))))
print("\nL(2) (x) L(3) =", " + ".join(f"L({p.highest[0]})" for p in parts),
      " dims", [p.dim for p in parts])

L1, L2 = highest_weight_module(A1, (1,)), highest_weight_module(A1, (2,))
print("\nbraiding L(1) (x) L(2) -> L(2) (x) L(1) commutes with the action:",
      intertwiner_check(L1, L2, SYMBOLIC) == [])
print("braid relation on L(1)^3, symbolic:", qybe_check(L1, L1, L1, SYMBOLIC))

L = highest_weight_module(A2, (1, 0))
b = backend_for([L], seed=0)
point = ", ".join(f"{k}={x}" for k, x in sorted(b.assignment.items()))
print(f"braid relation on A2 L(w1)^3, specialized at {point}:", qybe_check(L, L, L, b))
