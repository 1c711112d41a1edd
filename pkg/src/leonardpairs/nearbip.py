"""Near-bipartite classification, contractions of the two special types, and expansions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    InconsistentArray,
    MuForbidden,
    MuPrimeNotInField,
    MuZero,
    NoQInField,
    NotDualQKrawtchouk,
    NotKrawtchouk,
    NotSplitOverField,
    NoTauInField,
)
from .exactfield import square_roots
from .flatbip import bipartite_contraction, bipartite_status, flat_part, leonard_d1, leonard_d2
from .matrixcore import ExactMatrix, MatrixPair, _nullspace, commutator
from .params import (
    ParameterArray,
    TddSequence,
    realize_matrices,
    tdd_from_parameter_array,
)
from .primary import (
    TYPE_I,
    TYPE_II,
    TypeI,
    TypeII,
    fundamental_type,
    is_dual_q_krawtchouk_array,
    is_reinforced_array,
    is_krawtchouk_array,
    parameter_array_from_primary_data,
    primary_data_from_parameter_array,
    special_type_flags,
)

ESSENTIALLY_BIPARTITE = "EssentiallyBipartite"
REINFORCED_DUAL_Q_KRAWTCHOUK = "ReinforcedDualQKrawtchouk"
KRAWTCHOUK = "Krawtchouk"


@dataclass(frozen=True)
class NearBipartiteClassification:
    near_bipartite: bool
    reasons: tuple = ()
    contraction: Optional[ParameterArray] = None
    contraction_tdd: Optional[TddSequence] = None
    in_field: bool = True  # contraction eigenvalues lie in the field
    matrix_route: str = ""  # "Leonard", "NotLeonard" or "NotSplitOverField"
    consistent: bool = True  # formula route and matrix route agree
    closure_relation: Optional[bool] = None  # set when A - F does not split over the field
    notes: tuple = ()
    low_diameter: object = None  # Classification1/2 for d <= 2


@dataclass(frozen=True)
class Expansion:
    primary: object
    array: ParameterArray
    pair: MatrixPair
    tau_sign: str = "+"


def structure_K(field, q, d):
    q = field(q)
    return ExactMatrix.diag(field, [q ** (2 * i - d) for i in range(d + 1)])


def structure_H(field, d):
    return ExactMatrix.diag(field, [field(2 * i - d) for i in range(d + 1)])


def is_reinforced_fast(pd, d):
    """Over the rationals q is not a root of unity unless q = +-1, which type I excludes."""
    if pd.field.is_rational:
        return True
    return special_type_flags(pd, d).reinforced


def _zero_diag_tdd(t):
    return TddSequence(t.field, [t.field.zero] * (t.d + 1), t.x, t.thetastar)


# contractions

def contract_dual_q_krawtchouk(pd, d):
    if pd.tag != TYPE_I or not special_type_flags(pd, d).dual_q_krawtchouk:
        raise NotDualQKrawtchouk("primary data is not of dual q-Krawtchouk type")
    if not special_type_flags(pd, d).reinforced:
        return None
    roots = square_roots(-pd.mu * pd.h)
    if not roots:
        t = tdd_from_parameter_array(parameter_array_from_primary_data(pd, d))
        raise MuPrimeNotInField(f"-mu h = {-pd.mu * pd.h} has no square root in {pd.field}",
                                fallback=_zero_diag_tdd(t))
    m = roots[-1]
    b = TypeI(pd.field, pd.q, 0, m, -m, pd.delta_star, pd.mu_star, pd.h_star, 0)
    return parameter_array_from_primary_data(b, d)


def contract_krawtchouk(pd, d):
    if pd.tag != TYPE_II or not special_type_flags(pd, d).krawtchouk:
        raise NotKrawtchouk("primary data is not of Krawtchouk type")
    sq = pd.mu ** 2 - 4 * pd.tau ** 2 / pd.mu_star ** 2
    roots = square_roots(sq)
    if not roots:
        t = tdd_from_parameter_array(parameter_array_from_primary_data(pd, d))
        raise MuPrimeNotInField(f"mu'^2 = {sq} has no square root in {pd.field}",
                                fallback=_zero_diag_tdd(t))
    m = roots[-1]
    b = TypeII(pd.field, 0, m, 0, pd.delta_star, pd.mu_star, 0, 0)
    return parameter_array_from_primary_data(b, d)


# closure-level necessary condition

def tridiagonal_relation(B, Astar, beta):
    """Scalars (gamma, rho) with
    [B, B^2 A* - beta B A* B + A* B^2 - gamma (B A* + A* B) - rho A*] = 0, or None.

    Every Leonard pair with fundamental constant beta satisfies this for some
    gamma, rho in the algebraic closure.  The relation is linear in (gamma, rho)
    with coefficients over the base field, so solvability does not depend on the
    field extension and a None result rules out a Leonard pair over any extension.
    """
    F = B.field
    beta = F(beta)
    BB = B @ B
    M0 = commutator(B, BB @ Astar - (B @ Astar @ B) * beta + Astar @ BB)
    M1 = commutator(B, B @ Astar + Astar @ B)
    M2 = commutator(B, Astar)
    cols = [M0.rows, M1.rows, M2.rows]
    n = B.n
    rows = [[c[i][j] for c in cols] for i in range(n) for j in range(n)]
    for v in _nullspace(F, rows):
        if v[0] != 0:
            t = F.raw_inv(v[0])
            return F(F.norm(-v[1] * t)), F(F.norm(-v[2] * t))
    return None


# classification

def _matrix_route(p):
    P = realize_matrices(tdd_from_parameter_array(p))
    try:
        c = bipartite_contraction(P, p.thetastar)
    except NotSplitOverField as exc:
        return "NotSplitOverField", exc.matrix
    if c is None:
        return "NotLeonard", None
    return "Leonard", c


def _classify_low(p):
    t = tdd_from_parameter_array(p)
    if p.d == 1:
        c = leonard_d1(t.a[0], t.a[1], t.x[0], *t.thetastar)
    else:
        c = leonard_d2(t.a, t.x, t.thetastar)
    route, con = _matrix_route(p)
    if route != "Leonard":
        con = None
    near = bool(c.near_bipartite)
    consistent = (route == "Leonard") == near
    return NearBipartiteClassification(
        near_bipartite=near,
        reasons=(ESSENTIALLY_BIPARTITE,) if bipartite_status(p).essentially_bipartite else (),
        contraction=con.array if con else None,
        contraction_tdd=con.tdd if con else None,
        in_field=route != "NotSplitOverField",
        matrix_route=route,
        consistent=consistent,
        low_diameter=c,
    )


def classify_near_bipartite(p):
    if p.d <= 2:
        return _classify_low(p)
    d = p.d
    notes = []
    reasons = []
    status = bipartite_status(p)
    if status.essentially_bipartite:
        reasons.append(ESSENTIALLY_BIPARTITE)
    tag = fundamental_type(p).tag
    pd = None
    if tag in (TYPE_I, TYPE_II):
        try:
            pd = primary_data_from_parameter_array(p)
        except NoQInField:
            notes.append("NoQInField")
    if tag == TYPE_I:
        if pd is not None:
            fl = special_type_flags(pd, d)
            dq, reinforced = fl.dual_q_krawtchouk, fl.reinforced
        else:
            # array-level tests need no q
            dq = is_dual_q_krawtchouk_array(p)
            reinforced = dq and is_reinforced_array(p)
        if dq and reinforced:
            reasons.append(REINFORCED_DUAL_Q_KRAWTCHOUK)
    elif tag == TYPE_II and is_krawtchouk_array(p):
        reasons.append(KRAWTCHOUK)

    # formula-route contraction
    formula = None
    fallback = None
    if status.essentially_bipartite:
        a = status.alpha
        formula = ParameterArray(p.field, [t - a for t in p.theta], p.thetastar, p.phi1, p.phi2)
    elif pd is not None and reasons:
        try:
            if REINFORCED_DUAL_Q_KRAWTCHOUK in reasons:
                formula = contract_dual_q_krawtchouk(pd, d)
            else:
                formula = contract_krawtchouk(pd, d)
        except MuPrimeNotInField as exc:
            notes.append("MuPrimeNotInField")
            fallback = exc.fallback

    route, con = _matrix_route(p)
    near = bool(reasons)
    in_field = route != "NotSplitOverField"
    relation = None
    if not in_field:
        B, con = con, None
        Astar = ExactMatrix.diag(p.field, p.thetastar)
        relation = tridiagonal_relation(B, Astar, fundamental_type(p).beta) is not None
    if near:
        consistent = route == "Leonard" or relation is True
    else:
        consistent = route == "NotLeonard" or relation is False
    contraction = formula if formula is not None else (con.array if con else None)
    if contraction is not None:
        ctdd = tdd_from_parameter_array(contraction)
    elif con is not None:
        ctdd = con.tdd
    else:
        ctdd = fallback
    if near and ctdd is None and route == "NotSplitOverField":
        # A - F is still defined; its TD/D data is A's with the diagonal cleared
        ctdd = _zero_diag_tdd(tdd_from_parameter_array(p))
        notes.append("MuPrimeNotInField")
    if con is not None and ctdd is not None and con.tdd != ctdd:
        consistent = False
    if fallback is not None and fallback != _zero_diag_tdd(tdd_from_parameter_array(p)):
        consistent = False
    return NearBipartiteClassification(
        near_bipartite=near,
        reasons=tuple(reasons),
        contraction=contraction,
        contraction_tdd=ctdd if near else None,
        in_field=in_field,
        matrix_route=route,
        consistent=consistent,
        closure_relation=relation,
        notes=tuple(dict.fromkeys(notes)),
    )


# expansions

def _check_flat(pair, B):
    if pair.A - flat_part(pair).F != B:
        raise InconsistentArray("A - F does not recover B")


def expansions_dual_q_krawtchouk(b, d, delta, mu):
    F = b.field
    ok = (
        b.tag == TYPE_I
        and b.delta.is_zero()
        and (b.mu + b.h).is_zero()
        and (b.mu_star * b.h_star).is_zero()
        and b.tau.is_zero()
    )
    if not ok:
        raise NotDualQKrawtchouk("expected bipartite dual q-Krawtchouk primary data")
    delta, mu = F(delta), F(mu)
    if mu.is_zero():
        raise MuZero("mu must be nonzero")
    q, m = b.q, b.mu
    for i in range(1 - d, d):
        # mu = +-sqrt(-1) m q^i  <=>  mu^2 = -m^2 q^(2i)
        if mu * mu == -(m * m) * q ** (2 * i):
            raise MuForbidden(f"mu = +-sqrt(-1) mu' q^i at i={i}", i)
    h = m * b.h / mu
    pd = TypeI(F, q, delta, mu, h, b.delta_star, b.mu_star, b.h_star, 0)
    array = parameter_array_from_primary_data(pd, d)
    B = realize_matrices(tdd_from_parameter_array(parameter_array_from_primary_data(b, d)))
    K = structure_K(F, q, d)
    if b.mu_star.is_zero():
        A = B.A + K * (mu + h) + ExactMatrix.identity(F, d + 1) * delta
    else:
        A = B.A + K.inverse() * (mu + h) + ExactMatrix.identity(F, d + 1) * delta
    pair = MatrixPair(A, B.Astar)
    if realize_matrices(tdd_from_parameter_array(array)) != pair:
        raise InconsistentArray("expansion matrix does not match its parameter array")
    _check_flat(pair, B.A)
    return Expansion(pd, array, pair)


def tau_sign(x):
    """'+' for the canonical positive representative, '-' otherwise; zero counts as '+'."""
    F = x.field
    if F.p:
        return "+" if x.value <= (F.p - 1) // 2 else "-"
    return "+" if x.value >= 0 else "-"


def expansions_krawtchouk(b, d, delta, mu, sign=None):
    """Expansions of a bipartite Krawtchouk pair, one per square root tau (0, 1 or 2)."""
    F = b.field
    ok = (
        b.tag == TYPE_II
        and b.delta.is_zero()
        and b.h.is_zero()
        and b.h_star.is_zero()
        and b.tau.is_zero()
    )
    if not ok:
        raise NotKrawtchouk("expected bipartite Krawtchouk primary data")
    delta, mu = F(delta), F(mu)
    if mu.is_zero():
        raise MuZero("mu must be nonzero")
    rhs = (mu * mu - b.mu * b.mu) * b.mu_star ** 2 / 4
    taus = square_roots(rhs)
    if not taus:
        raise NoTauInField(f"4 tau^2 = {4 * rhs} has no solution in {F}")
    Bp = realize_matrices(tdd_from_parameter_array(parameter_array_from_primary_data(b, d)))
    H = structure_H(F, d)
    out = []
    for tau in sorted(taus, key=lambda t: (tau_sign(t) != "+", t.value)):
        s = tau_sign(tau)
        if sign is not None and s != sign:
            continue
        pd = TypeII(F, delta, mu, 0, b.delta_star, b.mu_star, 0, tau)
        array = parameter_array_from_primary_data(pd, d)
        A = Bp.A + H * (tau / b.mu_star) + ExactMatrix.identity(F, d + 1) * delta
        pair = MatrixPair(A, Bp.Astar)
        if realize_matrices(tdd_from_parameter_array(array)) != pair:
            raise InconsistentArray("expansion matrix does not match its parameter array")
        _check_flat(pair, Bp.A)
        out.append(Expansion(pd, array, pair, s))
    return out
