"""Exhaustive d = 1 and d = 2 sweeps over a small field.

    python3 demos/census_tour.py [p]
"""

import sys

from leonardpairs.census import census_d1, census_d2
from leonardpairs.exactfield import PrimeField

p = int(sys.argv[1]) if len(sys.argv) > 1 else 5
F = PrimeField(p)
for fn in (census_d1, census_d2):
    res = fn(F)
    print(f"{fn.__name__}: {res.summary()}  ({res.seconds:.1f}s, {res.counts})")
