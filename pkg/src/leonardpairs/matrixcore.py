"""Dense exact matrices, spectra, primitive idempotents and the Leonard pair oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import polyutil
from .errors import (
    DimensionMismatch,
    DuplicateEigenvalue,
    EigenvalueNotInField,
    FieldMismatch,
    NotStandardOrdering,
)
from .exactfield import FieldScalar


class ExactMatrix:
    """Immutable square matrix over a single field.

    Entries are stored as raw values; indexing returns FieldScalar.
    """

    __slots__ = ("field", "n", "rows", "_hash", "_isdiag")

    def __init__(self, field, rows, _raw=False):
        if not _raw:
            rows = tuple(tuple(field.raw(v) for v in row) for row in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix must be square")
        self.field = field
        self.n = n
        self.rows = rows
        self._hash = None
        self._isdiag = None

    # constructors

    @classmethod
    def _from_raw(cls, field, rows):
        return cls(field, tuple(tuple(r) for r in rows), _raw=True)

    @classmethod
    def zeros(cls, field, n):
        z = field.raw_zero
        return cls._from_raw(field, [[z] * n for _ in range(n)])

    @classmethod
    def identity(cls, field, n):
        return cls.diag(field, [1] * n)

    @classmethod
    def diag(cls, field, values):
        vals = [field.raw(v) for v in values]
        n = len(vals)
        z = field.raw_zero
        return cls._from_raw(field, [[vals[i] if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def tridiagonal(cls, field, diagonal, sub, sup):
        n = len(diagonal)
        if len(sub) != n - 1 or len(sup) != n - 1:
            raise DimensionMismatch("off-diagonals must have length n-1")
        z = field.raw_zero
        rows = [[z] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = field.raw(diagonal[i])
        for i in range(n - 1):
            rows[i + 1][i] = field.raw(sub[i])
            rows[i][i + 1] = field.raw(sup[i])
        return cls._from_raw(field, rows)

    # access

    def __getitem__(self, ij):
        i, j = ij
        return FieldScalar(self.field, self.rows[i][j])

    def entries(self):
        return [[FieldScalar(self.field, v) for v in row] for row in self.rows]

    def diagonal(self):
        return [FieldScalar(self.field, self.rows[i][i]) for i in range(self.n)]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.p, self.rows))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.rows)
        return f"ExactMatrix({self.field}, [{body}])"

    # arithmetic

    def _check(self, other):
        if not isinstance(other, ExactMatrix):
            raise TypeError("expected ExactMatrix")
        if other.field != self.field:
            raise FieldMismatch("matrices over different fields")
        if other.n != self.n:
            raise DimensionMismatch(f"{self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        nm = self.field.norm
        return ExactMatrix._from_raw(
            self.field, [[nm(a + b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        self._check(other)
        nm = self.field.norm
        return ExactMatrix._from_raw(
            self.field, [[nm(a - b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        nm = self.field.norm
        return ExactMatrix._from_raw(self.field, [[nm(-a) for a in r] for r in self.rows])

    def scale(self, c):
        c = self.field.raw(c)
        nm = self.field.norm
        return ExactMatrix._from_raw(self.field, [[nm(c * a) for a in r] for r in self.rows])

    def __mul__(self, c):
        if isinstance(c, ExactMatrix):
            return self @ c
        return self.scale(c)

    __rmul__ = scale

    def __matmul__(self, other):
        self._check(other)
        return ExactMatrix._from_raw(self.field, _matmul(self.field, self.rows, other.rows))

    def trace(self):
        return FieldScalar(self.field, self.field.norm(sum(self.rows[i][i] for i in range(self.n))))

    def transpose(self):
        return ExactMatrix._from_raw(self.field, list(zip(*self.rows)))

    def is_zero(self):
        return all(v == 0 for r in self.rows for v in r)

    def is_diagonal(self):
        if self._isdiag is None:
            rows, n = self.rows, self.n
            self._isdiag = all(rows[i][j] == 0 for i in range(n) for j in range(n) if i != j)
        return self._isdiag

    def is_irreducible_tridiagonal(self):
        n = self.n
        for i in range(n):
            for j in range(n):
                v = self.rows[i][j]
                if abs(i - j) == 1:
                    if v == 0:
                        return False
                elif abs(i - j) > 1 and v != 0:
                    return False
        return True

    def inverse(self):
        return ExactMatrix._from_raw(self.field, _inverse(self.field, self.rows))


@dataclass(frozen=True)
class MatrixPair:
    A: ExactMatrix
    Astar: ExactMatrix

    def __post_init__(self):
        if self.A.field != self.Astar.field:
            raise FieldMismatch("A and A* over different fields")
        if self.A.n != self.Astar.n:
            raise DimensionMismatch(f"dim A = {self.A.n}, dim A* = {self.Astar.n}")

    @property
    def field(self):
        return self.A.field

    @property
    def d(self):
        return self.A.n - 1


@dataclass(frozen=True)
class SpectrumReport:
    split: bool
    eigenvalues: tuple  # with multiplicity, ascending canonical order
    multiplicity_free: bool
    repeated_root: bool  # repeated root over the closure (gcd(f, f') nontrivial)

    def distinct(self):
        out = []
        for e in self.eigenvalues:
            if not out or out[-1] != e:
                out.append(e)
        return tuple(out)


@dataclass(frozen=True)
class VerificationReport:
    status: str  # "LeonardPair", "NotLeonard" or "NotSplitOverField"
    reason: str = ""
    theta_orders: tuple = ()  # the standard orderings of the eigenvalues of A
    thetastar_orders: tuple = ()  # the standard orderings of the eigenvalues of A*

    @property
    def is_leonard(self):
        return self.status == "LeonardPair"


# raw kernels

def _matmul(field, X, Y):
    p = field.p
    cols = list(zip(*Y))
    if p:
        return [[sum(a * b for a, b in zip(r, c)) % p for c in cols] for r in X]
    # clear denominators so the inner products run on ints
    dx = _lcm_den(X)
    dy = _lcm_den(cols)
    Xi = [[int(a * dx) for a in r] for r in X]
    Ci = [[int(b * dy) for b in c] for c in cols]
    D = dx * dy
    return [[Fraction(sum(a * b for a, b in zip(r, c)), D) for c in Ci] for r in Xi]


def _lcm_den(rows):
    m = 1
    for r in rows:
        for v in r:
            d = v.denominator
            if d != 1 and m % d:
                m = m * d // math.gcd(m, d)
    return m


def _inverse(field, rows):
    n = len(rows)
    nm, inv = field.norm, field.raw_inv
    one, zero = field.raw_one, field.raw_zero
    M = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        t = inv(M[c][c])
        M[c] = [nm(v * t) for v in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                u = M[r][c]
                M[r] = [nm(a - u * b) for a, b in zip(M[r], M[c])]
    return [row[n:] for row in M]


def _nullspace(field, rows):
    """Basis of the right nullspace; each free variable set to 1 in turn."""
    n = len(rows)
    m = len(rows[0]) if rows else 0
    nm, inv = field.norm, field.raw_inv
    M = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        t = inv(M[r][c])
        M[r] = [nm(v * t) for v in M[r]]
        for i in range(n):
            if i != r and M[i][c] != 0:
                u = M[i][c]
                M[i] = [nm(a - u * b) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for f in free:
        v = [field.raw_zero] * m
        v[f] = field.raw_one
        for i, c in enumerate(pivots):
            v[c] = nm(-M[i][f])
        basis.append(v)
    return basis


def _char_poly_raw(field, rows):
    """Characteristic polynomial via Hessenberg reduction, highest degree first."""
    n = len(rows)
    nm, inv = field.norm, field.raw_inv
    H = [list(r) for r in rows]
    for m in range(1, n - 1):
        i = next((i for i in range(m, n) if H[i][m - 1] != 0), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for row in H:
                row[i], row[m] = row[m], row[i]
        t = inv(H[m][m - 1])
        for i in range(m + 1, n):
            u = nm(H[i][m - 1] * t)
            if u != 0:
                H[i] = [nm(a - u * b) for a, b in zip(H[i], H[m])]
                for row in H:
                    row[m] = nm(row[m] + u * row[i])
    # p_k stored lowest degree first
    polys = [[field.raw_one]]
    for m in range(n):
        nxt = [field.raw_zero] + polys[m]
        for k in range(len(polys[m])):
            nxt[k] = nm(nxt[k] - H[m][m] * polys[m][k])
        t = field.raw_one
        for i in range(1, m + 1):
            t = nm(t * H[m - i + 1][m - i])
            c = nm(t * H[m - i][m])
            if c != 0:
                for k, v in enumerate(polys[m - i]):
                    nxt[k] = nm(nxt[k] - c * v)
        polys.append(nxt)
    return list(reversed(polys[n]))


@lru_cache(maxsize=1 << 15)
def _spectrum_cached(M):
    field = M.field
    f = _char_poly_raw(field, M.rows)
    roots = polyutil.roots_with_multiplicity(field, f)
    split = sum(roots.values()) == M.n
    vals = []
    for r in sorted(roots):
        vals.extend([FieldScalar(field, r)] * roots[r])
    repeated = any(m > 1 for m in roots.values()) or polyutil.has_repeated_root(field, f)
    return SpectrumReport(split, tuple(vals), split and not repeated, repeated)


def char_poly(M):
    """Monic characteristic polynomial det(lambda I - M), highest degree first."""
    return [FieldScalar(M.field, c) for c in _char_poly_raw(M.field, M.rows)]


def spectrum(M):
    return _spectrum_cached(M)


def primitive_idempotents(M, eigenvalues):
    """E_i = prod_{j != i} (M - t_j I)/(t_i - t_j) for the given ordering."""
    field = M.field
    ev = [field(t) for t in eigenvalues]
    if len(set(ev)) != len(ev):
        raise DuplicateEigenvalue("eigenvalues must be distinct")
    if len(ev) != M.n:
        raise EigenvalueNotInField(f"expected {M.n} eigenvalues, got {len(ev)}")
    sp = spectrum(M)
    if not sp.multiplicity_free or set(sp.eigenvalues) != set(ev):
        raise EigenvalueNotInField("given values are not the in-field spectrum of M")
    I = ExactMatrix.identity(field, M.n)
    out = []
    for i, ti in enumerate(ev):
        E = I
        for j, tj in enumerate(ev):
            if j != i:
                E = E @ (M - I.scale(tj)).scale((ti - tj).inverse())
        out.append(E)
    return out


def commutator(A, B):
    return A @ B - B @ A


@lru_cache(maxsize=1 << 15)
def _eigen_data(M):
    """(status, eigenvalues, P, P^{-1}, eigenvalue scalars) with P's columns eigenvectors."""
    sp = spectrum(M)
    if sp.repeated_root:
        return ("NotLeonard", None, None, None, None)
    if not sp.split:
        return ("NotSplitOverField", None, None, None, None)
    field = M.field
    ev = [e.value for e in sp.eigenvalues]
    sc = list(sp.eigenvalues)
    if M.is_diagonal():
        diag = [M.rows[i][i] for i in range(M.n)]
        perm = tuple(diag.index(t) for t in ev)
        return ("ok", ev, perm, None, sc)
    nm = field.norm
    cols = []
    for t in ev:
        shifted = [[nm(v - t) if i == j else v for j, v in enumerate(r)] for i, r in enumerate(M.rows)]
        basis = _nullspace(field, shifted)
        cols.append(basis[0])
    P = [list(r) for r in zip(*cols)]
    return ("ok", ev, P, _inverse(field, P), sc)


def _represent(field, X, Y):
    """Matrix of Y in the eigenbasis of X (assumes eigen data ok)."""
    _, ev, P, Pinv, _ = _eigen_data(X)
    if Pinv is None:
        perm = P
        return [[Y.rows[a][b] for b in perm] for a in perm]
    if Y.is_diagonal():
        # entries sum_k Pinv[i][k] y_k P[k][j], without forming Pinv Y
        # plain loops: these matrices are tiny and genexpr overhead dominates
        rows = Y.rows
        n = Y.n
        p = field.p
        if n == 2:
            (u0, u1), (u2, u3) = Pinv
            (v0, v1), (v2, v3) = P
            y0, y1 = rows[0][0], rows[1][1]
            u0, u1, u2, u3 = u0 * y0, u1 * y1, u2 * y0, u3 * y1
            out = [[u0 * v0 + u1 * v2, u0 * v1 + u1 * v3], [u2 * v0 + u3 * v2, u2 * v1 + u3 * v3]]
            return [[out[0][0] % p, out[0][1] % p], [out[1][0] % p, out[1][1] % p]] if p else out
        out = []
        for r in Pinv:
            ry = [r[k] * rows[k][k] for k in range(n)]
            row = []
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc += ry[k] * P[k][j]
                row.append(acc % p if p else acc)
            out.append(row)
        return out
    return _matmul(field, Pinv, _matmul(field, Y.rows, P))


def _path_orders(R):
    """Orderings making R irreducible tridiagonal (0 or 2 of them)."""
    n = len(R)
    if n == 1:
        return [(0,)]
    if n == 2:
        return [(0, 1), (1, 0)] if R[0][1] != 0 and R[1][0] != 0 else []
    adj = [[j for j, v in enumerate(row) if v != 0 and j != i] for i, row in enumerate(R)]
    ends = []
    for i, nb in enumerate(adj):
        if len(nb) > 2:
            return []
        for j in nb:
            if R[j][i] == 0:
                return []
        if len(nb) == 1:
            ends.append(i)
    if len(ends) != 2:
        return []
    order = [ends[0]]
    prev = -1
    while len(order) < n:
        cur = order[-1]
        nxt = [k for k in adj[cur] if k != prev]
        if not nxt:
            return []
        prev = cur
        order.append(nxt[0])
    return [tuple(order), tuple(reversed(order))]


def _orders_for(field, X, Y, label):
    status, ev, _, _, sc = _eigen_data(X)
    if status == "NotLeonard":
        return "NotLeonard", f"{label} is not multiplicity-free", None
    if status == "NotSplitOverField":
        return "NotSplitOverField", f"eigenvalues of {label} do not lie in the field", None
    R = _represent(field, X, Y)
    orders = _path_orders(R)
    if not orders:
        other = "A" if label == "A*" else "A*"
        return "NotLeonard", f"{other} is not irreducible tridiagonal in any eigenbasis of {label}", None
    o0 = tuple([sc[k] for k in orders[0]])
    return "ok", "", (o0, o0[::-1])


def verify_leonard_pair(P):
    """Brute-force check of the Leonard pair conditions in both directions."""
    field = P.field
    status, reason, ts_orders = _orders_for(field, P.Astar, P.A, "A*")
    if status != "ok":
        return VerificationReport(status, reason)
    status, reason, t_orders = _orders_for(field, P.A, P.Astar, "A")
    if status != "ok":
        return VerificationReport(status, reason)
    return VerificationReport("LeonardPair", "", t_orders, ts_orders)


def trace_data(P, thetastar_order, report=None):
    """a_i = tr(A E*_i), x_i = tr(E*_i A E*_{i-1} A) for a standard ordering."""
    field = P.field
    order = tuple(field(t) for t in thetastar_order)
    report = report or verify_leonard_pair(P)
    if not report.is_leonard:
        raise NotStandardOrdering(f"pair is not a Leonard pair: {report.reason}")
    if order not in report.thetastar_orders:
        raise NotStandardOrdering("not a standard ordering of the eigenvalues of A*")
    nm = field.norm
    A = P.A
    if P.Astar.is_diagonal():
        diag = [P.Astar.rows[i][i] for i in range(P.Astar.n)]
        idx = [diag.index(t.value) for t in order]
        a = [FieldScalar(field, A.rows[k][k]) for k in idx]
        x = [FieldScalar(field, nm(A.rows[idx[i]][idx[i - 1]] * A.rows[idx[i - 1]][idx[i]]))
             for i in range(1, len(idx))]
        return a, x
    E = primitive_idempotents(P.Astar, order)
    a = [(A @ Ei).trace() for Ei in E]
    x = [(E[i] @ A @ E[i - 1] @ A).trace() for i in range(1, len(E))]
    return a, x
