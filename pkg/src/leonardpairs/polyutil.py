"""Raw-value polynomial helpers.

Polynomials are lists of raw field values, highest degree first.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, reduce

import mpmath


def strip(f):
    i = 0
    while i < len(f) - 1 and f[i] == 0:
        i += 1
    return list(f[i:])


def evaluate(field, f, x):
    p = field.p
    acc = field.raw_zero
    if p:
        for c in f:
            acc = (acc * x + c) % p
    else:
        for c in f:
            acc = acc * x + c
    return acc


def derivative(field, f):
    n = len(f) - 1
    out = [field.norm(c * (n - k)) for k, c in enumerate(f[:-1])]
    return strip(out) if out else [field.raw_zero]


def divmod_poly(field, f, g):
    g = strip(g)
    if len(g) == 1 and g[0] == 0:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    inv = field.raw_inv(g[0])
    q = []
    while len(f) >= len(g):
        c = field.norm(f[0] * inv)
        q.append(c)
        for k in range(len(g)):
            f[k] = field.norm(f[k] - c * g[k])
        f.pop(0)
    return (q or [field.raw_zero]), strip(f or [field.raw_zero])


def gcd_poly(field, f, g):
    f, g = strip(f), strip(g)
    while not (len(g) == 1 and g[0] == 0):
        _, r = divmod_poly(field, f, g)
        f, g = g, r
    inv = field.raw_inv(f[0])
    return [field.norm(c * inv) for c in f]


def synthetic_divide(field, f, r):
    """Divide by (x - r); return (quotient, remainder)."""
    out = []
    acc = field.raw_zero
    for c in f:
        acc = field.norm(acc * r + c)
        out.append(acc)
    return out[:-1], out[-1]


def has_repeated_root(field, f):
    """True when gcd(f, f') is nonconstant (repeated root over the closure)."""
    if len(f) <= 2:
        return False
    df = derivative(field, f)
    if len(df) == 1 and df[0] == 0:
        return True
    return len(gcd_poly(field, f, df)) > 1


def _candidate_roots_gfp(field, f):
    p = field.p
    return [r for r in range(p) if evaluate(field, f, r) == 0]


def _to_primitive_int(f):
    den = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in f), 1)
    ints = [int(c * den) for c in f]
    g = reduce(math.gcd, (abs(c) for c in ints if c), 0) or 1
    return [c // g for c in ints]


@lru_cache(maxsize=4096)
def _rational_candidates(coeffs, quick=False):
    """Candidate rational roots of a squarefree integer polynomial.

    Numerical roots are only used as hints; every candidate is confirmed
    exactly by the caller.  ``quick`` uses a modest working precision, which
    suffices whenever it already accounts for every root.
    """
    lead = abs(coeffs[0])
    bits = max(abs(c) for c in coeffs).bit_length() + lead.bit_length()
    dps = 30 + (2 * bits) // 3 + 4 * len(coeffs)
    if quick:
        dps = min(dps, 30 + lead.bit_length())
    found = set()
    with mpmath.workdps(dps):
        try:
            roots = mpmath.polyroots(list(coeffs), maxsteps=400, extraprec=4 * dps)
        except mpmath.libmp.NoConvergence:
            roots = mpmath.polyroots(list(coeffs), maxsteps=4000, extraprec=16 * dps)
        for z in roots:
            re = mpmath.re(z)
            if abs(mpmath.im(z)) > mpmath.mpf(10) ** (-(dps // 3)) * (1 + abs(re)):
                continue
            s = mpmath.nstr(re, dps, strip_zeros=False, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
            try:
                approx = Fraction(s)
            except ValueError:
                continue
            found.add(approx.limit_denominator(lead))
    return tuple(found)


def roots_with_multiplicity(field, f):
    """Roots of f lying in the field, as {raw root: multiplicity}."""
    f = strip(f)
    if len(f) == 1:
        return {}
    if field.p:
        cands = _candidate_roots_gfp(field, f)
    else:
        cands = []
        g = list(f)
        if g[-1] == 0:
            cands.append(Fraction(0))
        while len(g) > 1 and g[-1] == 0:
            g.pop()
        if len(g) > 1:
            df = derivative(field, g)
            sq = g
            if len(g) > 2:
                h = gcd_poly(field, g, df)
                if len(h) > 1:
                    sq, _ = divmod_poly(field, g, h)
            if len(sq) == 2:
                cands.append(-sq[1] / sq[0])
            elif len(sq) > 2:
                key = tuple(_to_primitive_int(sq))
                quick = [r for r in _rational_candidates(key, True) if evaluate(field, sq, r) == 0]
                if len(set(quick)) == len(sq) - 1:
                    cands.extend(quick)
                else:
                    cands.extend(_rational_candidates(key))
    out = {}
    for r in cands:
        g = f
        m = 0
        while len(g) > 1:
            q, rem = synthetic_divide(field, g, r)
            if rem != 0:
                break
            m += 1
            g = q
        if m:
            out[r] = m
    return out


def poly_from_roots(field, roots):
    f = [field.raw_one]
    for r in roots:
        g = f + [field.raw_zero]
        for k in range(1, len(g)):
            g[k] = field.norm(g[k] - r * f[k - 1])
        f = g
    return f
