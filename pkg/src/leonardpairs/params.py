"""Parameter arrays, TD/D sequences, their conversions and matrix realization."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import LengthMismatch, NotLeonard, NotSplitOverField, ZeroScale
from .exactfield import FieldDescriptor, FieldScalar
from .matrixcore import ExactMatrix, MatrixPair, verify_leonard_pair


def _coerce(field, seq):
    return tuple(field(v) for v in seq)


@dataclass(frozen=True)
class ParameterArray:
    """(theta; thetastar; phi1; phi2) over a field.  Validity is checked separately."""

    field: FieldDescriptor
    theta: tuple
    thetastar: tuple
    phi1: tuple
    phi2: tuple

    def __post_init__(self):
        f = self.field
        for name in ("theta", "thetastar", "phi1", "phi2"):
            object.__setattr__(self, name, _coerce(f, getattr(self, name)))
        n = len(self.theta)
        if n < 2:
            raise LengthMismatch("diameter must be at least 1")
        if len(self.thetastar) != n or len(self.phi1) != n - 1 or len(self.phi2) != n - 1:
            raise LengthMismatch(
                f"lengths {len(self.theta)}, {len(self.thetastar)}, {len(self.phi1)}, {len(self.phi2)}"
            )

    @property
    def d(self):
        return len(self.theta) - 1

    def phi(self, i):
        """First split sequence, 1-based."""
        return self.phi1[i - 1]

    def varphi(self, i):
        """Second split sequence, 1-based."""
        return self.phi2[i - 1]


@dataclass(frozen=True)
class TddSequence:
    """(a; x; thetastar) with x_i nonzero and thetastar distinct."""

    field: FieldDescriptor
    a: tuple
    x: tuple
    thetastar: tuple

    def __post_init__(self):
        f = self.field
        for name in ("a", "x", "thetastar"):
            object.__setattr__(self, name, _coerce(f, getattr(self, name)))
        n = len(self.a)
        if n < 2 or len(self.x) != n - 1 or len(self.thetastar) != n:
            raise LengthMismatch(f"lengths {len(self.a)}, {len(self.x)}, {len(self.thetastar)}")
        if any(v.is_zero() for v in self.x):
            raise ValueError("x_i must be nonzero")
        if len(set(self.thetastar)) != n:
            raise ValueError("thetastar values must be distinct")

    @property
    def d(self):
        return len(self.a) - 1


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple = ()
    beta: Optional[FieldScalar] = None

    def __bool__(self):
        return self.valid


class SplitPolynomials:
    """Evaluate tau*_i and eta*_i for a fixed thetastar sequence."""

    def __init__(self, thetastar):
        self.ts = tuple(thetastar)
        self.d = len(self.ts) - 1

    def tau(self, i, lam):
        out = lam.field.one
        for k in range(i):
            out = out * (lam - self.ts[k])
        return out

    def eta(self, i, lam):
        out = lam.field.one
        for k in range(i):
            out = out * (lam - self.ts[self.d - k])
        return out


def _ratio(seq, i):
    return (seq[i - 2] - seq[i + 1]) / (seq[i - 1] - seq[i])


def fundamental_ratio(seq):
    """Common value of (s_{i-2} - s_{i+1})/(s_{i-1} - s_i), or None if not constant."""
    d = len(seq) - 1
    vals = {_ratio(seq, i) for i in range(2, d)}
    return vals.pop() if len(vals) == 1 else None


def validate_parameter_array(p):
    th, ts, ph, vp = p.theta, p.thetastar, p.phi1, p.phi2
    d = p.d
    bad = []
    if len(set(th)) != d + 1 or len(set(ts)) != d + 1:
        bad.append("(i) theta or thetastar values not distinct")
    if any(v.is_zero() for v in ph + vp):
        bad.append("(ii) some phi_i or varphi_i is zero")
    beta = None
    if not bad:
        denom = th[0] - th[d]
        for i in range(1, d + 1):
            s = sum(((th[l] - th[d - l]) / denom for l in range(i)), p.field.zero)
            if ph[i - 1] != vp[0] * s + (ts[i] - ts[0]) * (th[i - 1] - th[d]):
                bad.append(f"(iii) fails at i={i}")
                break
        for i in range(1, d + 1):
            s = sum(((th[l] - th[d - l]) / denom for l in range(i)), p.field.zero)
            if vp[i - 1] != ph[0] * s + (ts[i] - ts[0]) * (th[d - i + 1] - th[0]):
                bad.append(f"(iv) fails at i={i}")
                break
        if d >= 3:
            r = fundamental_ratio(th)
            rs = fundamental_ratio(ts)
            if r is None or rs is None or r != rs:
                bad.append("(v) ratios not equal and independent of i")
            else:
                beta = r - 1
    return ValidationReport(not bad, tuple(bad), beta)


def parameter_array_relatives(p):
    rev = lambda s: tuple(reversed(s))
    return (
        p,
        ParameterArray(p.field, p.theta, rev(p.thetastar), rev(p.phi2), rev(p.phi1)),
        ParameterArray(p.field, rev(p.theta), p.thetastar, p.phi2, p.phi1),
        ParameterArray(p.field, rev(p.theta), rev(p.thetastar), rev(p.phi1), rev(p.phi2)),
    )


def affine_transform(p, xi, zeta, xis, zetas):
    f = p.field
    xi, zeta, xis, zetas = f(xi), f(zeta), f(xis), f(zetas)
    if xi.is_zero() or xis.is_zero():
        raise ZeroScale("scale factors must be nonzero")
    s = xi * xis
    return ParameterArray(
        f,
        [xi * t + zeta for t in p.theta],
        [xis * t + zetas for t in p.thetastar],
        [s * v for v in p.phi1],
        [s * v for v in p.phi2],
    )


def tdd_from_parameter_array(p):
    th, ts, ph, vp, d = p.theta, p.thetastar, p.phi1, p.phi2, p.d
    sp = SplitPolynomials(ts)
    a = [th[0] + ph[0] / (ts[0] - ts[1])]
    for i in range(1, d):
        a.append(th[i] + ph[i - 1] / (ts[i] - ts[i - 1]) + ph[i] / (ts[i] - ts[i + 1]))
    a.append(th[d] + ph[d - 1] / (ts[d] - ts[d - 1]))
    x = []
    for i in range(1, d + 1):
        num = ph[i - 1] * vp[i - 1] * sp.tau(i - 1, ts[i - 1]) * sp.eta(d - i, ts[i])
        den = sp.tau(i, ts[i]) * sp.eta(d - i + 1, ts[i - 1])
        x.append(num / den)
    return TddSequence(p.field, a, x, ts)


def _array_for_order(t, th):
    """Solve the TD/D equations for phi, varphi given a theta ordering."""
    ts, a, x, d = t.thetastar, t.a, t.x, t.d
    ph = [(a[0] - th[0]) * (ts[0] - ts[1])]
    for i in range(1, d):
        ph.append((a[i] - th[i] - ph[i - 1] / (ts[i] - ts[i - 1])) * (ts[i] - ts[i + 1]))
    if any(v.is_zero() for v in ph):
        return None
    sp = SplitPolynomials(ts)
    vp = []
    for i in range(1, d + 1):
        num = x[i - 1] * sp.tau(i, ts[i]) * sp.eta(d - i + 1, ts[i - 1])
        den = ph[i - 1] * sp.tau(i - 1, ts[i - 1]) * sp.eta(d - i, ts[i])
        vp.append(num / den)
    p = ParameterArray(t.field, th, ts, ph, vp)
    if not validate_parameter_array(p).valid or tdd_from_parameter_array(p) != t:
        return None
    return p


def parameter_arrays_from_tdd(t):
    """The parameter arrays corresponding to t, smaller canonical theta_0 first."""
    P = realize_matrices(t)
    rep = verify_leonard_pair(P)
    if rep.status == "NotSplitOverField":
        raise NotSplitOverField(rep.reason)
    if not rep.is_leonard:
        raise NotLeonard(rep.reason)
    out = []
    for order in rep.theta_orders:
        p = _array_for_order(t, order)
        if p is not None:
            out.append(p)
    if not out:
        raise NotLeonard("no theta ordering is consistent with the TD/D sequence")
    out.sort(key=lambda p: p.theta[0].value)
    return out


def realize_matrices(t):
    A = ExactMatrix.tridiagonal(t.field, t.a, [1] * t.d, t.x)
    return MatrixPair(A, ExactMatrix.diag(t.field, t.thetastar))


def tdd_affine(t, xi, zeta, xis, zetas):
    f = t.field
    xi, zeta, xis, zetas = f(xi), f(zeta), f(xis), f(zetas)
    if xi.is_zero() or xis.is_zero():
        raise ZeroScale("scale factors must be nonzero")
    return TddSequence(
        f,
        [xi * v + zeta for v in t.a],
        [xi * xi * v for v in t.x],
        [xis * v + zetas for v in t.thetastar],
    )


def tdd_reversal(t):
    return TddSequence(t.field, tuple(reversed(t.a)), tuple(reversed(t.x)), tuple(reversed(t.thetastar)))
