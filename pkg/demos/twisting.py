"""Twist the double by the toral 2-cocycle and look at the Serre relations that result.

Run: python3 demos/twisting.py
"""

from mpqg.cartan import CartanDatum
from mpqg.twist import Twist

for kind in ["A2", "B2"]:
    tw = Twist(CartanDatum.of_type(kind))
    D = tw.D
    print(f"== {kind}")
    print("  sigma(K1, K2) =", tw.sigma(D.K(0), D.K(1)))
    print("  cocycle identity at depth 2:", tw.cocycle_check(2).ok)
    suite = tw.relation_suite()
    print(f"  {sum(r.ok for r in suite)} of {len(suite)} twisted relations hold")
    for r in suite:
        if r.name.startswith("serre"):
            print(f"  {r.name}: twisted Serre sum = {r.details['prefactor']} * original")
    print("  antipode, conjugation in Doi order:", tw.antipode_check("doi").ok)
    print("  antipode, conjugation swapped:     ", tw.antipode_check("swapped").ok)
