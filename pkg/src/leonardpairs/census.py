"""Exhaustive sweeps comparing the diameter 1 and 2 predicates with brute force."""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from itertools import permutations, product

from .errors import FieldError
from .flatbip import flat_part, leonard_d1, leonard_d2
from .matrixcore import ExactMatrix, MatrixPair, verify_leonard_pair


@dataclass
class CensusResult:
    field: object
    d: int
    tuples: int = 0
    mismatches: int = 0
    seconds: float = 0.0
    examples: list = dc_field(default_factory=list)  # first few mismatching tuples
    counts: dict = dc_field(default_factory=dict)

    def summary(self):
        return (f"predicate==oracle on all {self.tuples} admissible tuples; "
                f"mismatches={self.mismatches}")


def _require_prime(field):
    if not field.p:
        raise FieldError("census needs a prime field")


def census_d1(field):
    """All (a0, a1, x1 != 0, ts0 != ts1) over GF(p)."""
    _require_prime(field)
    F, p = field, field.p
    S = F.elements()
    res = CensusResult(F, 1)
    t0 = time.perf_counter()
    leon = 0
    # the p^2 (p-1) matrices A are shared by every thetastar pair; building them
    # once keeps their hashes (and the oracle's eigen-data cache hits) warm
    mats = {}
    for x1 in range(1, p):
        for a0, a1 in product(range(p), repeat=2):
            mats[a0, a1, x1] = ExactMatrix(F, _raw=True, rows=((a0, x1), (1, a1)))
    for s0, s1 in permutations(range(p), 2):
        As = ExactMatrix(F, _raw=True, rows=((s0, 0), (0, s1)))
        T0, T1 = S[s0], S[s1]
        for x1 in range(1, p):
            B = ExactMatrix(F, _raw=True, rows=((0, x1), (1, 0)))
            rb = verify_leonard_pair(MatrixPair(B, As)).is_leonard
            X1 = S[x1]
            for a0, a1 in product(range(p), repeat=2):
                res.tuples += 1
                c = leonard_d1(S[a0], S[a1], X1, T0, T1)
                r = verify_leonard_pair(MatrixPair(mats[a0, a1, x1], As)).is_leonard
                leon += r
                ok = c.leonard == r and c.contraction_leonard == rb
                ok = ok and c.bipartite == (r and a0 == 0 and a1 == 0)
                ok = ok and c.near_bipartite == (rb if r else None)
                if not ok:
                    res.mismatches += 1
                    if len(res.examples) < 5:
                        res.examples.append((a0, a1, x1, s0, s1))
    res.counts = {"leonard": leon}
    res.seconds = time.perf_counter() - t0
    return res


def census_d2(field, flat_check_every=997):
    """All (a, x nonzero, ts distinct) over GF(p), with contraction and expansion flags.

    In normalized form the flat part of A is its diagonal, so A - F is A with the
    diagonal cleared.  ``flat_part`` itself is spot-checked on every
    ``flat_check_every``-th Leonard tuple.
    """
    _require_prime(field)
    F, p = field, field.p
    S = F.elements()
    res = CensusResult(F, 2)
    t0 = time.perf_counter()
    leon = near = flat_checked = 0
    for s0, s1, s2 in permutations(range(p), 3):
        As = ExactMatrix(F, _raw=True, rows=((s0, 0, 0), (0, s1, 0), (0, 0, s2)))
        ts = (S[s0], S[s1], S[s2])
        for x1, x2 in product(range(1, p), repeat=2):
            B = ExactMatrix(F, _raw=True, rows=((0, x1, 0), (1, 0, x2), (0, 1, 0)))
            rb = verify_leonard_pair(MatrixPair(B, As)).is_leonard
            xs = (S[x1], S[x2])
            for a0, a1, a2 in product(range(p), repeat=3):
                res.tuples += 1
                c = leonard_d2((S[a0], S[a1], S[a2]), xs, ts)
                A = ExactMatrix(F, _raw=True, rows=((a0, x1, 0), (1, a1, x2), (0, 1, a2)))
                P = MatrixPair(A, As)
                r = verify_leonard_pair(P).is_leonard
                leon += r
                ok = c.leonard == r and c.contraction_leonard == rb
                ok = ok and c.bipartite == (r and a0 == a1 == a2 == 0)
                ok = ok and c.near_bipartite == (rb if r else None)
                if rb:
                    # A is an expansion of B exactly when A is Leonard, since A - F = B
                    ok = ok and c.expansion_of_given_B == r
                else:
                    ok = ok and c.expansion_of_given_B is None
                if r:
                    near += rb
                    if res.tuples % flat_check_every == 0:
                        flat_checked += 1
                        ok = ok and A - flat_part(P).F == B
                if not ok:
                    res.mismatches += 1
                    if len(res.examples) < 5:
                        res.examples.append((a0, a1, a2, x1, x2, s0, s1, s2))
    res.counts = {"leonard": leon, "near_bipartite": near, "flat_checked": flat_checked}
    res.seconds = time.perf_counter() - t0
    return res
