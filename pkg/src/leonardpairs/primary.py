"""Types I, II, III+ and III-, primary data, special types, and the phi*varphi product tests."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace

from .errors import (
    DualMismatch,
    InconsistentArray,
    NoQInField,
    PrimaryDataInvalid,
    RatioNotConstant,
    TypeMismatch,
)
from .exactfield import FieldDescriptor, FieldScalar, sort_scalars, square_roots
from .params import ParameterArray, fundamental_ratio

TYPE_I, TYPE_II, TYPE_IIIP, TYPE_IIIM = "I", "II", "III+", "III-"


@dataclass(frozen=True)
class FundamentalType:
    tag: str
    beta: FieldScalar


class _PD:
    def __post_init__(self):
        for f in fields(self):
            if f.name != "field":
                object.__setattr__(self, f.name, self.field(getattr(self, f.name)))

    def values(self):
        return tuple(getattr(self, f.name) for f in fields(self) if f.name != "field")


@dataclass(frozen=True)
class TypeI(_PD):
    field: FieldDescriptor
    q: FieldScalar
    delta: FieldScalar
    mu: FieldScalar
    h: FieldScalar
    delta_star: FieldScalar
    mu_star: FieldScalar
    h_star: FieldScalar
    tau: FieldScalar

    tag = TYPE_I

    def dual_block(self):
        return (self.q, self.delta_star, self.mu_star, self.h_star)


@dataclass(frozen=True)
class TypeII(_PD):
    field: FieldDescriptor
    delta: FieldScalar
    mu: FieldScalar
    h: FieldScalar
    delta_star: FieldScalar
    mu_star: FieldScalar
    h_star: FieldScalar
    tau: FieldScalar

    tag = TYPE_II

    def dual_block(self):
        return (self.delta_star, self.mu_star, self.h_star)


@dataclass(frozen=True)
class TypeIIIPlus(_PD):
    field: FieldDescriptor
    delta: FieldScalar
    s: FieldScalar
    h: FieldScalar
    delta_star: FieldScalar
    s_star: FieldScalar
    h_star: FieldScalar
    tau: FieldScalar

    tag = TYPE_IIIP

    def dual_block(self):
        return (self.delta_star, self.s_star, self.h_star)


@dataclass(frozen=True)
class SpecialTypeFlags:
    dual_q_krawtchouk: bool = False
    krawtchouk: bool = False
    reinforced: bool = False
    bipartite: bool = False
    essentially_bipartite: bool = False


# type detection

def fundamental_type(p):
    if p.d < 3:
        raise RatioNotConstant("the type is defined for diameter at least 3")
    r = fundamental_ratio(p.theta)
    rs = fundamental_ratio(p.thetastar)
    if r is None or rs is None or r != rs:
        raise RatioNotConstant("theta ratios are not constant")
    beta = r - 1
    if beta == 2:
        tag = TYPE_II
    elif beta == -2:
        tag = TYPE_IIIP if p.d % 2 == 0 else TYPE_IIIM
    else:
        tag = TYPE_I
    return FundamentalType(tag, beta)


def q_from_beta(beta, field=None):
    """All q in the field with q^2 + q^-2 = beta, ascending."""
    field = field or beta.field
    beta = field(beta)
    out = set()
    for r in square_roots(beta * beta - 4):
        z = (beta + r) / 2
        out.update(square_roots(z))
    return sort_scalars(q for q in out if not q.is_zero() and q ** 4 != 1)


# construction from primary data

def _typeI_factor(q, d, i):
    return (q ** i - q ** (-i)) * (q ** (d - i + 1) - q ** (i - d - 1))


def primary_data_violations(pd, d):
    """Violated inequalities; an empty list means the data is valid for diameter d."""
    F = pd.field
    bad = []
    if pd.tag == TYPE_I:
        q, mu, h, ms, hs, tau = pd.q, pd.mu, pd.h, pd.mu_star, pd.h_star, pd.tau
        if q.is_zero() or q ** 4 == 1:
            return ["q must be nonzero with q^4 != 1"]
        for i in range(1, d + 1):
            if q ** (2 * i) == 1:
                bad.append(f"q^(2i) = 1 at i={i}")
        for i in range(1 - d, d):
            if mu == h * q ** (2 * i):
                bad.append(f"mu = h q^(2i) at i={i}")
            if ms == hs * q ** (2 * i):
                bad.append(f"mu* = h* q^(2i) at i={i}")
        for i in range(1, d + 1):
            a, b = q ** (2 * i - d - 1), q ** (d - 2 * i + 1)
            if tau == mu * ms * a + h * hs * b:
                bad.append(f"tau = mu mu* q^(2i-d-1) + h h* q^(d-2i+1) at i={i}")
            if tau == h * ms * a + mu * hs * b:
                bad.append(f"tau = h mu* q^(2i-d-1) + mu h* q^(d-2i+1) at i={i}")
    elif pd.tag == TYPE_II:
        if F.p and F.p <= d:
            return [f"characteristic {F.p} is not greater than d={d}"]
        mu, h, ms, hs, tau = pd.mu, pd.h, pd.mu_star, pd.h_star, pd.tau
        for i in range(1 - d, d):
            if mu == h * i:
                bad.append(f"mu = h i at i={i}")
            if ms == hs * i:
                bad.append(f"mu* = h* i at i={i}")
        half = F(1) / 2
        for i in range(1, d + 1):
            c = F(i) - F(d + 1) / 2
            e = hh = h * hs * (i - 1) * (d - i)
            if tau == mu * ms * half - (h * ms + mu * hs) * c - hh:
                bad.append(f"tau = mu mu*/2 - (h mu* + mu h*)(i-(d+1)/2) - h h*(i-1)(d-i) at i={i}")
            if tau == -mu * ms * half - (h * ms - mu * hs) * c - e:
                bad.append(f"tau = -mu mu*/2 - (h mu* - mu h*)(i-(d+1)/2) - h h*(i-1)(d-i) at i={i}")
    elif pd.tag == TYPE_IIIP:
        if d % 2:
            return ["type III+ needs even d"]
        if F.p and 2 * F.p <= d:
            return [f"characteristic {F.p} is not greater than d/2={d // 2}"]
        s, h, ss, hs, tau = pd.s, pd.h, pd.s_star, pd.h_star, pd.tau
        if h.is_zero():
            bad.append("h = 0")
        if hs.is_zero():
            bad.append("h* = 0")
        for i in range(1 - d, d):
            if i % 2:
                if 2 * s == h * i:
                    bad.append(f"2s = i h at i={i}")
                if 2 * ss == hs * i:
                    bad.append(f"2s* = i h* at i={i}")
        for i in range(1, d + 1):
            c = F(i) - F(d + 1) / 2
            u = s * hs + ss * h + h * hs * c
            v = s * hs - ss * h - h * hs * c
            sign = 1 if i % 2 == 0 else -1
            if tau == u * sign:
                bad.append(f"tau = +-(s h* + s* h + h h*(i-(d+1)/2)) at i={i}")
            if tau == v * sign:
                bad.append(f"tau = +-(s h* - s* h - h h*(i-(d+1)/2)) at i={i}")
    else:
        raise TypeMismatch(f"unknown primary data tag {pd.tag}")
    return bad


def _arrays_unchecked(pd, d):
    F = pd.field
    if pd.tag == TYPE_I:
        q = pd.q
        th = [pd.delta + pd.mu * q ** (2 * i - d) + pd.h * q ** (d - 2 * i) for i in range(d + 1)]
        ts = [pd.delta_star + pd.mu_star * q ** (2 * i - d) + pd.h_star * q ** (d - 2 * i)
              for i in range(d + 1)]
        ph, vp = [], []
        for i in range(1, d + 1):
            c = _typeI_factor(q, d, i)
            a, b = q ** (2 * i - d - 1), q ** (d - 2 * i + 1)
            ph.append(c * (pd.tau - pd.mu * pd.mu_star * a - pd.h * pd.h_star * b))
            vp.append(c * (pd.tau - pd.h * pd.mu_star * a - pd.mu * pd.h_star * b))
    elif pd.tag == TYPE_II:
        half_d = F(d) / 2
        th = [pd.delta + pd.mu * (i - half_d) + pd.h * i * (d - i) for i in range(d + 1)]
        ts = [pd.delta_star + pd.mu_star * (i - half_d) + pd.h_star * i * (d - i) for i in range(d + 1)]
        ph, vp = [], []
        mu, h, ms, hs, tau = pd.mu, pd.h, pd.mu_star, pd.h_star, pd.tau
        for i in range(1, d + 1):
            c = F(i) - F(d + 1) / 2
            e = h * hs * (i - 1) * (d - i)
            ph.append(F(i * (d - i + 1)) * (tau - mu * ms / 2 + (h * ms + mu * hs) * c + e))
            vp.append(F(i * (d - i + 1)) * (tau + mu * ms / 2 + (h * ms - mu * hs) * c + e))
    else:
        half_d = F(d) / 2
        s, h, ss, hs, tau = pd.s, pd.h, pd.s_star, pd.h_star, pd.tau

        def alt(base, sv, hv, i):
            if i % 2 == 0:
                return base + sv + hv * (i - half_d)
            return base - sv - hv * (i - half_d)

        th = [alt(pd.delta, s, h, i) for i in range(d + 1)]
        ts = [alt(pd.delta_star, ss, hs, i) for i in range(d + 1)]
        ph, vp = [], []
        for i in range(1, d + 1):
            c = F(i) - F(d + 1) / 2
            if i % 2 == 0:
                ph.append(F(i) * (tau - s * hs - ss * h - h * hs * c))
                vp.append(F(i) * (tau - s * hs + ss * h + h * hs * c))
            else:
                ph.append(F(d - i + 1) * (tau + s * hs + ss * h + h * hs * c))
                vp.append(F(d - i + 1) * (tau + s * hs - ss * h - h * hs * c))
    return ParameterArray(F, th, ts, ph, vp)


def parameter_array_from_primary_data(pd, d):
    bad = primary_data_violations(pd, d)
    if bad:
        raise PrimaryDataInvalid(bad)
    return _arrays_unchecked(pd, d)


# extraction

def _solve3(rows, rhs):
    """Solve a 3x3 linear system over a field; None if singular."""
    M = [list(r) + [b] for r, b in zip(rows, rhs)]
    n = 3
    for c in range(n):
        piv = next((r for r in range(c, n) if not M[r][c].is_zero()), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        t = M[c][c].inverse()
        M[c] = [v * t for v in M[c]]
        for r in range(n):
            if r != c and not M[r][c].is_zero():
                u = M[r][c]
                M[r] = [a - u * b for a, b in zip(M[r], M[c])]
    return [M[r][n] for r in range(n)]


def _basis_rows(tag, F, d, q=None):
    rows = []
    for i in range(3):
        if tag == TYPE_I:
            rows.append([F.one, q ** (2 * i - d), q ** (d - 2 * i)])
        elif tag == TYPE_II:
            rows.append([F.one, F(i) - F(d) / 2, F(i * (d - i))])
        else:
            sign = 1 if i % 2 == 0 else -1
            rows.append([F.one, F(sign), (F(i) - F(d) / 2) * sign])
    return rows


def primary_data_from_parameter_array(p, q_choice=None):
    F, d = p.field, p.d
    ft = fundamental_type(p)
    if ft.tag == TYPE_IIIM:
        raise InconsistentArray("type III- arrays have no primary data")
    q = None
    if ft.tag == TYPE_I:
        qs = q_from_beta(ft.beta, F)
        if q_choice is not None:
            q = F(q_choice)
            if q not in qs:
                raise InconsistentArray(f"q={q} does not satisfy q^2 + q^-2 = beta")
        elif not qs:
            raise NoQInField(f"no q in {F} with q^2 + q^-2 = {ft.beta}")
        else:
            q = qs[0]
    if ft.tag == TYPE_II and F.p and F.p <= d:
        raise InconsistentArray("type II needs characteristic 0 or greater than d")
    rows = _basis_rows(ft.tag, F, d, q)
    sol = _solve3(rows, p.theta[:3])
    sol_s = _solve3(rows, p.thetastar[:3])
    if sol is None or sol_s is None:
        raise InconsistentArray("singular system for the theta coefficients")
    delta, m, h = sol
    ds, ms, hs = sol_s
    phi_1 = p.phi1[0]
    try:
        if ft.tag == TYPE_I:
            c = _typeI_factor(q, d, 1)
            tau = phi_1 / c + m * ms * q ** (1 - d) + h * hs * q ** (d - 1)
            pd = TypeI(F, q, delta, m, h, ds, ms, hs, tau)
        elif ft.tag == TYPE_II:
            c1 = F(1) - F(d + 1) / 2
            tau = phi_1 / d + m * ms / 2 - (h * ms + m * hs) * c1
            pd = TypeII(F, delta, m, h, ds, ms, hs, tau)
        else:
            c1 = F(1) - F(d + 1) / 2
            tau = phi_1 / d - m * hs - ms * h - h * hs * c1
            pd = TypeIIIPlus(F, delta, m, h, ds, ms, hs, tau)
    except ZeroDivisionError as exc:
        raise InconsistentArray(f"cannot solve for tau: {exc}") from exc
    if _arrays_unchecked(pd, d) != p:
        raise InconsistentArray("array does not match the recovered primary data")
    return pd


def primary_data_relatives(pd):
    """Primary data of the four relatives, in the order of parameter_array_relatives."""
    if pd.tag == TYPE_I:
        return (
            pd,
            replace(pd, mu_star=pd.h_star, h_star=pd.mu_star),
            replace(pd, mu=pd.h, h=pd.mu),
            replace(pd, mu=pd.h, h=pd.mu, mu_star=pd.h_star, h_star=pd.mu_star),
        )
    if pd.tag == TYPE_II:
        return (
            pd,
            replace(pd, mu_star=-pd.mu_star),
            replace(pd, mu=-pd.mu),
            replace(pd, mu=-pd.mu, mu_star=-pd.mu_star),
        )
    return (
        pd,
        replace(pd, h_star=-pd.h_star),
        replace(pd, h=-pd.h),
        replace(pd, h=-pd.h, h_star=-pd.h_star),
    )


# special types

def is_reinforced_q(q, d):
    return all(q ** (2 * i) != -1 for i in range(1, d))


def special_type_flags(pd, d):
    if pd.tag == TYPE_I:
        dq = (pd.mu_star * pd.h_star).is_zero() and pd.tau.is_zero()
        ess = (pd.mu + pd.h).is_zero() and pd.tau.is_zero()
        return SpecialTypeFlags(
            dual_q_krawtchouk=dq,
            reinforced=dq and is_reinforced_q(pd.q, d),
            essentially_bipartite=ess,
            bipartite=ess and pd.delta.is_zero(),
        )
    if pd.tag == TYPE_II:
        ess = pd.h.is_zero() and pd.tau.is_zero()
        return SpecialTypeFlags(
            krawtchouk=pd.h.is_zero() and pd.h_star.is_zero(),
            essentially_bipartite=ess,
            bipartite=ess and pd.delta.is_zero(),
        )
    ess = pd.s.is_zero() and pd.tau.is_zero()
    return SpecialTypeFlags(essentially_bipartite=ess, bipartite=ess and pd.delta.is_zero())


def thetastar_ratio(p):
    """Common value of (ts_{i-1} - ts_i)/(ts_i - ts_{i+1}), or None."""
    ts = p.thetastar
    vals = {(ts[i - 1] - ts[i]) / (ts[i] - ts[i + 1]) for i in range(1, p.d)}
    return vals.pop() if len(vals) == 1 else None


def is_dual_q_krawtchouk_array(p):
    """Array-level test: type I, constant thetastar ratio, constant phi/varphi."""
    try:
        if fundamental_type(p).tag != TYPE_I:
            return False
    except RatioNotConstant:
        return False
    if thetastar_ratio(p) is None:
        return False
    return len({u / v for u, v in zip(p.phi1, p.phi2)}) == 1


def is_reinforced_array(p):
    """For a dual q-Krawtchouk array the thetastar ratio is q^2 or q^-2, so
    q^(2i) = -1 can be tested on its powers without q itself."""
    z = thetastar_ratio(p)
    return all(z ** i != -1 for i in range(1, p.d))


def is_krawtchouk_array(p):
    try:
        if fundamental_type(p).tag != TYPE_II:
            return False
    except RatioNotConstant:
        return False
    d = p.d
    dt = {p.theta[i] - p.theta[i - 1] for i in range(1, d + 1)}
    dts = {p.thetastar[i] - p.thetastar[i - 1] for i in range(1, d + 1)}
    return len(dt) == 1 and len(dts) == 1


def type2_dual_q_conditions(pd):
    """The type II analogue of the dual q-Krawtchouk conditions: mu h = 0 and h* = 0.

    This is not the Krawtchouk condition and is not used by the classifier.
    """
    return (pd.mu * pd.h).is_zero() and pd.h_star.is_zero()


# product equality

def phi_products_equal(pd1, pd2, d):
    """phi_i varphi_i agree for the arrays of two primary data sharing the dual block."""
    if pd1.tag != pd2.tag:
        raise TypeMismatch(f"{pd1.tag} vs {pd2.tag}")
    if pd1.dual_block() != pd2.dual_block():
        raise DualMismatch("primary data do not share the same dual parameters")
    if pd1.tag == TYPE_I:
        a, b = pd1, pd2
        ms_hs = a.mu_star * a.h_star
        return (
            a.mu * a.h == b.mu * b.h
            and a.tau * (a.mu + a.h) == b.tau * (b.mu + b.h)
            and a.tau ** 2 + (a.mu + a.h) ** 2 * ms_hs == b.tau ** 2 + (b.mu + b.h) ** 2 * ms_hs
        )
    if pd1.tag == TYPE_II:
        a, b = pd1, pd2
        hs = a.h_star
        k = a.mu_star ** 2 + (d - 1) ** 2 * hs ** 2
        return (
            a.h ** 2 == b.h ** 2
            and 2 * a.h * a.tau + a.mu ** 2 * hs == 2 * b.h * b.tau + b.mu ** 2 * hs
            and 4 * a.tau ** 2 - a.mu ** 2 * k == 4 * b.tau ** 2 - b.mu ** 2 * k
        )
    a, b = pd1, pd2
    hs = a.h_star
    return (
        a.h ** 2 == b.h ** 2
        and (a.tau + a.s * hs) ** 2 == (b.tau + b.s * hs) ** 2
        and (a.tau - a.s * hs) ** 2 == (b.tau - b.s * hs) ** 2
    )
