"""Dual q-Krawtchouk pairs over GF(17): when does A - F stay Leonard?

The contraction has distinct eigenvalues exactly when q^(2i) != -1 for
1 <= i <= d-1.  Here we sweep q for d = 3 and compare with the matrix route.

    python3 demos/reinforcement.py
"""

from leonardpairs.errors import PrimaryDataInvalid
from leonardpairs.exactfield import PrimeField
from leonardpairs.flatbip import bipartite_contraction
from leonardpairs.matrixcore import ExactMatrix, spectrum
from leonardpairs.params import realize_matrices, tdd_from_parameter_array
from leonardpairs.primary import TypeI, is_reinforced_q, parameter_array_from_primary_data

F = PrimeField(17)
d = 3

print(" q  reinforced  repeated-root  contraction")
for q in range(2, 16):
    # -mu h = -2 = 15 = 7^2 is a square, so the contraction's eigenvalues lie in GF(17)
    pd = TypeI(F, q, 0, 1, 2, 0, 0, 1, 0)
    try:
        p = parameter_array_from_primary_data(pd, d)
    except PrimaryDataInvalid:
        print(f"{q:2d}  (q not admissible for d={d})")
        continue
    P = realize_matrices(tdd_from_parameter_array(p))
    B = P.A - ExactMatrix.diag(F, P.A.diagonal())
    try:
        con = "Leonard" if bipartite_contraction(P) else "none"
    except Exception as exc:
        con = type(exc).__name__
    print(f"{q:2d}  {str(is_reinforced_q(F(q), d)):10s}  {str(spectrum(B).repeated_root):13s}  {con}")
