"""Deterministic random generators for primary data and parameter arrays."""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import LeonardError
from .params import ParameterArray, validate_parameter_array
from .primary import (
    TypeI,
    TypeII,
    TypeIIIPlus,
    parameter_array_from_primary_data,
    primary_data_violations,
)

MAX_TRIES = 10_000

FAMILIES = ("krawtchouk", "dualq", "essbip-I", "essbip-II", "essbip-III+",
            "type-I", "type-II", "type-III+")


class SamplingError(LeonardError):
    pass


def random_scalar(rng, field, nonzero=False, bound=6):
    """Uniform residue for GF(p); a small integer or fraction for the rationals."""
    while True:
        if field.p:
            v = field(rng.randrange(field.p))
        else:
            num = rng.randint(-bound, bound)
            den = rng.choice((1, 1, 1, 2, 3))
            v = field(Fraction(num, den))
        if not (nonzero and v.is_zero()):
            return v


def _draw(rng, field, family, d, q):
    r = lambda nz=False: random_scalar(rng, field, nz)
    if family == "krawtchouk":
        return TypeII(field, r(), r(True), 0, r(), r(True), 0, r())
    if family == "dualq":
        ms, hs = (0, r(True)) if rng.random() < 0.5 else (r(True), 0)
        return TypeI(field, q, r(), r(True), r(True), r(), ms, hs, 0)
    if family == "essbip-I":
        mu = r(True)
        return TypeI(field, q, r(), mu, -mu, r(), r(), r(), 0)
    if family == "essbip-II":
        return TypeII(field, r(), r(True), 0, r(), r(), r(), 0)
    if family == "essbip-III+":
        return TypeIIIPlus(field, r(), 0, r(True), r(), r(), r(True), 0)
    if family == "type-I":
        return TypeI(field, q, r(), r(), r(), r(), r(), r(), r())
    if family == "type-II":
        return TypeII(field, r(), r(), r(), r(), r(), r(), r())
    if family == "type-III+":
        return TypeIIIPlus(field, r(), r(), r(True), r(), r(), r(True), r())
    raise SamplingError(f"unknown family {family!r}")


def sample_primary(family, d, field, rng, q=2):
    """One valid primary datum of the family, by rejection."""
    if family in ("essbip-III+", "type-III+") and d % 2:
        raise SamplingError("type III+ needs even d")
    q = field(q)
    for _ in range(MAX_TRIES):
        pd = _draw(rng, field, family, d, q)
        if not primary_data_violations(pd, d):
            return pd
    raise SamplingError(f"no valid {family} sample for d={d} over {field} after {MAX_TRIES} tries")


def sample_primary_list(family, d, field, count, seed, q=2):
    rng = random.Random(seed)
    return [sample_primary(family, d, field, rng, q) for _ in range(count)]


def _recurrence(start, beta, d):
    s = list(start)
    while len(s) < d + 1:
        i = len(s) - 1
        # s_{i-2} - s_{i+1} = (beta + 1)(s_{i-1} - s_i)
        s.append(s[i - 2] - (beta + 1) * (s[i - 1] - s[i]))
    return s[: d + 1]


def sample_array_with_beta(beta, d, field, rng):
    """A valid parameter array with fundamental constant beta (d >= 3).

    theta and thetastar follow the three-term recurrence; varphi_1 is free and
    the remaining split values are forced by the validity conditions.
    """
    beta = field(beta)
    for _ in range(MAX_TRIES):
        th = _recurrence([random_scalar(rng, field) for _ in range(3)], beta, d)
        ts = _recurrence([random_scalar(rng, field) for _ in range(3)], beta, d)
        if len(set(th)) != d + 1 or len(set(ts)) != d + 1:
            continue
        vp1 = random_scalar(rng, field, nonzero=True)
        denom = th[0] - th[d]
        ph1 = vp1 + (ts[1] - ts[0]) * (th[0] - th[d])
        ph, vp = [], []
        for i in range(1, d + 1):
            s = sum(((th[l] - th[d - l]) / denom for l in range(i)), field.zero)
            ph.append(vp1 * s + (ts[i] - ts[0]) * (th[i - 1] - th[d]))
            vp.append(ph1 * s + (ts[i] - ts[0]) * (th[d - i + 1] - th[0]))
        p = ParameterArray(field, th, ts, ph, vp)
        if validate_parameter_array(p).valid:
            return p
    raise SamplingError(f"no valid array with beta={beta} for d={d} over {field}")


def sample_array(family, d, field, rng, q=2):
    if family == "type-III-":
        if d % 2 == 0:
            raise SamplingError("type III- needs odd d")
        return sample_array_with_beta(-2, d, field, rng)
    return parameter_array_from_primary_data(sample_primary(family, d, field, rng, q), d)
