"""Expand a bipartite Krawtchouk pair over GF(13), then contract it back.

    python3 demos/krawtchouk_walkthrough.py
"""

from leonardpairs import documents
from leonardpairs.exactfield import PrimeField
from leonardpairs.flatbip import bipartite_contraction, flat_part
from leonardpairs.nearbip import classify_near_bipartite, expansions_krawtchouk
from leonardpairs.params import realize_matrices, tdd_from_parameter_array
from leonardpairs.primary import TypeII, parameter_array_from_primary_data

F = PrimeField(13)
d = 3

# bipartite starting point: delta = h = h* = tau = 0
b = TypeII(F, 0, 2, 0, 0, 2, 0, 0)
B = realize_matrices(tdd_from_parameter_array(parameter_array_from_primary_data(b, d)))
print("B =", B.A)

for e in expansions_krawtchouk(b, d, delta=0, mu=4):
    print(f"\ntau = {e.primary.tau} ({e.tau_sign})")
    print("  array:", documents.render(e.array))
    print("  A    =", e.pair.A)
    print("  flat part diagonal:", [str(v) for v in flat_part(e.pair).F.diagonal()])
    con = bipartite_contraction(e.pair)
    print("  A - F recovers B:", con.pair == B)
    c = classify_near_bipartite(e.array)
    print("  classification:", c.reasons, "x of contraction:", [str(v) for v in c.contraction_tdd.x])
