"""Flat part, bipartite predicates, bipartite contraction, and the diameter 1 and 2 cases."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotLeonard, NotSplitOverField, ThetaStarMismatch
from .exactfield import FieldScalar, _raw_square_roots, square_roots, sort_scalars
from .matrixcore import (
    ExactMatrix,
    MatrixPair,
    primitive_idempotents,
    trace_data,
    verify_leonard_pair,
)
from .params import ParameterArray, TddSequence, parameter_arrays_from_tdd


@dataclass(frozen=True)
class FlatPart:
    F: ExactMatrix
    a_common: Optional[FieldScalar] = None


@dataclass(frozen=True)
class BipartiteStatus:
    bipartite: bool
    essentially_bipartite: bool
    near_bipartite: Optional[bool] = None  # None means not decided here
    alpha: Optional[FieldScalar] = None


@dataclass(frozen=True)
class Contraction:
    pair: MatrixPair
    array: ParameterArray
    tdd: TddSequence


def _check_astar(P):
    rep = verify_leonard_pair(P)
    if rep.status == "NotSplitOverField":
        raise NotSplitOverField(rep.reason)
    if not rep.is_leonard:
        raise NotLeonard(rep.reason)
    return rep


def flat_part(P):
    """F = sum_i E*_i A E*_i."""
    rep = _check_astar(P)
    field = P.field
    if P.Astar.is_diagonal():
        F = ExactMatrix.diag(field, P.A.diagonal())
    else:
        F = ExactMatrix.zeros(field, P.A.n)
        for E in primitive_idempotents(P.Astar, rep.thetastar_orders[0]):
            F = F + E @ P.A @ E
    common = None
    diag = F.diagonal()
    if F.is_diagonal() and len(set(diag)) == 1:
        common = diag[0]
    return FlatPart(F, common)


def bipartite_status(obj):
    if isinstance(obj, TddSequence):
        a = obj.a
        ess = len(set(a)) == 1
        bip = all(v.is_zero() for v in a)
        return BipartiteStatus(bip, ess, True if ess else None, a[0] if ess else None)
    p = obj
    d = p.d
    sums = {p.theta[i] + p.theta[d - i] for i in range(d + 1)}
    split_ok = all((u + v).is_zero() for u, v in zip(p.phi1, p.phi2))
    ess = len(sums) == 1 and split_ok
    bip = ess and sums == {p.field.zero}
    alpha = (p.theta[0] + p.theta[d]) / 2 if ess else None
    return BipartiteStatus(bip, ess, True if ess else None, alpha)


def bipartite_contraction(P, thetastar_order=None):
    """(B, A*) with B = A - F when it is a Leonard pair, else None.

    Raises NotSplitOverField when B is multiplicity-free over the closure but its
    eigenvalues are not in the field.  A repeated root gives None.
    """
    rep = _check_astar(P)
    B = P.A - flat_part(P).F
    Q = MatrixPair(B, P.Astar)
    rep2 = verify_leonard_pair(Q)
    if rep2.status == "NotSplitOverField":
        raise NotSplitOverField(
            "the eigenvalues of A - F are distinct but not in the field", matrix=B, repeated=False
        )
    if not rep2.is_leonard:
        return None
    if thetastar_order is not None:
        order = tuple(P.field(t) for t in thetastar_order)
    else:
        order = rep.thetastar_orders[0]
        diag = tuple(P.Astar.diagonal()) if P.Astar.is_diagonal() else None
        if diag in rep.thetastar_orders:
            order = diag
    a, x = trace_data(Q, order, rep2)
    t = TddSequence(P.field, a, x, order)
    return Contraction(Q, parameter_arrays_from_tdd(t)[0], t)


def contraction_condition(p, b):
    """phi_i varphi_i agree termwise with those of the bipartite array b."""
    if p.thetastar != b.thetastar:
        raise ThetaStarMismatch("arrays have different thetastar sequences")
    return all(u * v == s * t for u, v, s, t in zip(p.phi1, p.phi2, b.phi1, b.phi2))


@dataclass(frozen=True)
class Classification1:
    leonard: bool
    closed_field_form: bool  # the conditions without the in-field root check
    eigenvalues: tuple  # in-field eigenvalues of A (empty if not in field)
    bipartite: bool  # the given pair is a bipartite Leonard pair
    contraction_leonard: bool  # B, A* is a Leonard pair (B = A with zero diagonal)
    near_bipartite: Optional[bool]  # None when the pair is not Leonard
    reason: str = ""


def _quadratic_roots(s, p):
    """In-field roots of lam^2 - s lam + p, or None."""
    rs = square_roots(s * s - 4 * p)
    if not rs:
        return None
    return tuple(sort_scalars({(s + r) / 2 for r in rs}))


def leonard_d1(a0, a1, x1, ths0, ths1):
    F = a0.field
    raw = F.raw
    a0, a1, x1, t0, t1 = raw(a0), raw(a1), raw(x1), raw(ths0), raw(ths1)
    nm = F.norm
    base = x1 != 0 and t0 != t1
    disc = nm((a0 - a1) * (a0 - a1) + 4 * x1)  # (theta_0 - theta_1)^2
    closed = base and disc != 0
    rs = _raw_square_roots(F, disc)
    roots = None
    if rs:
        half = F.raw_inv(F.norm(2))
        roots = tuple(FieldScalar(F, v) for v in sorted({nm((a0 + a1 + r) * half) for r in rs}))
    leonard = closed and roots is not None
    b_leonard = base and bool(_raw_square_roots(F, x1))
    if not base:
        reason = "x_1 = 0 or thetastar not distinct"
    elif not closed:
        reason = "repeated eigenvalue"
    elif roots is None:
        reason = "NotSplit: eigenvalues not in the field"
    else:
        reason = ""
    return Classification1(
        leonard,
        closed,
        roots or (),
        leonard and a0 == 0 and a1 == 0,
        b_leonard,
        (b_leonard if leonard else None),
        reason,
    )


@dataclass(frozen=True)
class Classification2:
    leonard: bool
    closed_field_form: bool
    eigenvalues: tuple  # theta_0, theta_1, theta_2 in a standard ordering, if in field
    bipartite: bool
    contraction_leonard: bool
    near_bipartite: Optional[bool]
    expansion_of_given_B: Optional[bool]  # None when B, A* is not Leonard
    conditions: dict


def leonard_d2(a, x, ths):
    F = a[0].field
    raw, nm, inv = F.raw, F.norm, F.raw_inv
    a0, a1, a2 = (raw(v) for v in a)
    x1, x2 = (raw(v) for v in x)
    t0, t1, t2 = (raw(v) for v in ths)
    cond = {}
    distinct = t0 != t1 and t0 != t2 and t1 != t2 and x1 != 0 and x2 != 0
    cond["distinct"] = distinct
    if not distinct:
        return Classification2(False, False, (), False, False, None, None, cond)
    i21, i01, i02 = inv(t2 - t1), inv(t0 - t1), inv(t0 - t2)
    i20 = nm(-i02)
    d02 = nm(a0 - a2)
    S = nm(a0 * (t0 - t1) + a1 * (t2 - t0) + a2 * (t1 - t2))
    lhs = nm(x1 * i21 + x2 * i01)
    cond["equat"] = lhs == nm(d02 * i02 * i02 * S)
    n1 = nm(x1 * i21 * i21 + x2 * i01 * i01 + d02 * d02 * i02 * i02)
    half = inv(nm(2))
    n2 = nm(x1 * i21 - x2 * i01 + d02 * d02 * half * i20 + S * S * half * i20 * i20 * i20)
    cond["nonzero1"] = n1 != 0
    cond["nonzero2"] = n2 != 0
    closed = cond["equat"] and cond["nonzero1"] and cond["nonzero2"]
    eig = ()
    if closed:
        th1 = nm((a0 * (t0 - t1) + a2 * (t1 - t2)) * i02)
        s = nm((a0 * (t1 - t2) + a1 * (t0 - t2) + a2 * (t0 - t1)) * i02)
        rs = _raw_square_roots(F, nm(2 * (t2 - t0) * n2))  # (theta_0 - theta_2)^2
        if rs:
            r = rs[-1]
            eig = tuple(FieldScalar(F, v) for v in (nm((s + r) * half), th1, nm((s - r) * half)))
    leonard = bool(eig)
    # B is A with its diagonal set to zero
    cond["d2cond"] = nm(x1 * inv(t1 - t2)) == nm(x2 * i01)
    b_leonard = cond["d2cond"] and bool(_raw_square_roots(F, nm(x1 + x2)))
    near = (b_leonard if leonard else None)
    expansion = None
    if b_leonard:
        aux4 = nm(a0 * (t0 - t1) + a2 * (t1 - t2) + a1 * (t2 - t0))
        cond["aux4"] = aux4 == 0
        xs = nm(x1 + x2)
        if a0 == a2:
            ok = nm((a0 - a1) * (a0 - a1) + 4 * xs) != 0
        else:
            ok = (aux4 == 0
                  and nm(d02 * d02 + 4 * xs) != 0
                  and nm(d02 * d02 + xs * xs * xs * inv(nm(x1 * x2))) != 0)
        cond["expansion_closed"] = ok
        expansion = ok and leonard
    bip = leonard and a0 == 0 and a1 == 0 and a2 == 0
    return Classification2(leonard, closed, eig, bip, b_leonard, near, expansion, cond)
