import random
from fractions import Fraction

import pytest
import sympy

from conftest import GF7, GF13, Q, e1, e2
from leonardpairs.errors import DuplicateEigenvalue, EigenvalueNotInField, NotStandardOrdering
from leonardpairs.matrixcore import (
    ExactMatrix,
    MatrixPair,
    char_poly,
    commutator,
    primitive_idempotents,
    spectrum,
    trace_data,
    verify_leonard_pair,
)
from leonardpairs.params import realize_matrices, tdd_from_parameter_array


def sympy_char_poly(M):
    lam = sympy.Symbol("lam")
    S = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in M.rows])
    return [Fraction(int(c.p), int(c.q)) for c in S.charpoly(lam).all_coeffs()]


def test_char_poly_examples():
    assert char_poly(ExactMatrix.identity(Q, 2)) == [1, -2, 1]
    B = ExactMatrix(Q, [[0, 1], [1, 0]])
    assert char_poly(B) == [1, 0, -1]


def test_char_poly_d2_cubic():
    a0, a1, a2, x1, x2 = 2, -1, 5, 3, 7
    M = ExactMatrix.tridiagonal(Q, [a0, a1, a2], [1, 1], [x1, x2])
    # expand det(lam I - M) along the tridiagonal recurrence
    c2 = -(a0 + a1 + a2)
    c1 = a0 * a1 + a0 * a2 + a1 * a2 - x1 - x2
    c0 = -(a0 * a1 * a2) + a2 * x1 + a0 * x2
    assert char_poly(M) == [1, c2, c1, c0]


def test_char_poly_against_sympy():
    rng = random.Random(5)
    for n in range(1, 7):
        for _ in range(5):
            rows = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
            M = ExactMatrix(Q, rows)
            assert [c.value for c in char_poly(M)] == sympy_char_poly(M)


def test_char_poly_mod_p_against_sympy():
    rng = random.Random(6)
    for n in range(1, 6):
        rows = [[rng.randrange(13) for _ in range(n)] for _ in range(n)]
        M = ExactMatrix(GF13, rows)
        expect = [c % 13 for c in sympy_char_poly(ExactMatrix(Q, rows))]
        assert [c.value for c in char_poly(M)] == [int(c) for c in expect]


def test_spectrum_examples():
    s = spectrum(ExactMatrix.diag(Q, [1, 2, 3]))
    assert s.split and s.multiplicity_free and s.eigenvalues == (Q(1), Q(2), Q(3))
    s = spectrum(ExactMatrix(Q, [[0, 1], [1, 0]]))
    assert s.split and set(s.eigenvalues) == {Q(1), Q(-1)}
    s = spectrum(ExactMatrix(Q, [[0, 1], [1, 1]]))  # companion of l^2 - l - 1
    assert not s.split and not s.repeated_root


def test_spectrum_repeated():
    s = spectrum(ExactMatrix(Q, [[1, 1], [0, 1]]))
    assert s.split and not s.multiplicity_free and s.repeated_root


def test_idempotents():
    E = primitive_idempotents(ExactMatrix.diag(Q, [5, 7]), [5, 7])
    assert E == [ExactMatrix.diag(Q, [1, 0]), ExactMatrix.diag(Q, [0, 1])]
    h = Fraction(1, 2)
    E = primitive_idempotents(ExactMatrix(Q, [[0, 1], [1, 0]]), [1, -1])
    assert E[0] == ExactMatrix(Q, [[h, h], [h, h]])
    assert E[1] == ExactMatrix(Q, [[h, -h], [-h, h]])
    with pytest.raises(DuplicateEigenvalue):
        primitive_idempotents(ExactMatrix.diag(Q, [1, 1]), [1, 1])
    with pytest.raises(EigenvalueNotInField):
        primitive_idempotents(ExactMatrix.diag(Q, [1, 2]), [1, 3])


def test_idempotents_sum_to_identity():
    P = realize_matrices(tdd_from_parameter_array(e1()))
    rep = verify_leonard_pair(P)
    E = primitive_idempotents(P.A, rep.theta_orders[0])
    total = E[0]
    for Ei in E[1:]:
        total = total + Ei
    assert total == ExactMatrix.identity(Q, 4)
    for i, Ei in enumerate(E):
        assert Ei @ Ei == Ei
        assert P.A @ Ei == Ei * rep.theta_orders[0][i]


def test_verify_e1():
    A = ExactMatrix.tridiagonal(Q, [0, 0, 0, 0], [1, 1, 1], [3, 4, 3])
    P = MatrixPair(A, ExactMatrix.diag(Q, [-3, -1, 1, 3]))
    rep = verify_leonard_pair(P)
    assert rep.is_leonard
    assert set(rep.theta_orders) == {(Q(-3), Q(-1), Q(1), Q(3)), (Q(3), Q(1), Q(-1), Q(-3))}


def test_verify_diagonal_pair():
    P = MatrixPair(ExactMatrix.diag(Q, [1, 2]), ExactMatrix.diag(Q, [3, 4]))
    assert verify_leonard_pair(P).status == "NotLeonard"


def test_verify_not_split_then_split():
    P = MatrixPair(ExactMatrix.tridiagonal(Q, [3, 1], [1], [1]), ExactMatrix.diag(Q, [0, 1]))
    assert verify_leonard_pair(P).status == "NotSplitOverField"
    P7 = MatrixPair(ExactMatrix.tridiagonal(GF7, [3, 1], [1], [1]), ExactMatrix.diag(GF7, [0, 1]))
    rep = verify_leonard_pair(P7)
    assert rep.is_leonard
    assert set(rep.theta_orders[0]) == {GF7(5), GF7(6)}


def test_trace_data_examples():
    for p, a, x in [(e1(), [0, 0, 0, 0], [3, 4, 3]), (e2(), [12, 4, 9, 1], [3, 4, 3])]:
        P = realize_matrices(tdd_from_parameter_array(p))
        F = p.field
        assert trace_data(P, p.thetastar) == ([F(v) for v in a], [F(v) for v in x])
        ra, rx = trace_data(P, tuple(reversed(p.thetastar)))
        assert ra == [F(v) for v in reversed(a)] and rx == [F(v) for v in reversed(x)]


def test_trace_data_nonstandard():
    P = realize_matrices(tdd_from_parameter_array(e1()))
    with pytest.raises(NotStandardOrdering):
        trace_data(P, [-1, -3, 1, 3])


def test_trace_data_basis_free():
    """Conjugating both matrices by an invertible S leaves the trace data unchanged."""
    P = realize_matrices(tdd_from_parameter_array(e2()))
    S = ExactMatrix(GF13, [[1, 2, 0, 1], [0, 1, 3, 0], [4, 0, 1, 0], [0, 0, 5, 1]])
    Si = S.inverse()
    P2 = MatrixPair(Si @ P.A @ S, Si @ P.Astar @ S)
    assert not P2.Astar.is_diagonal()
    assert trace_data(P2, e2().thetastar) == trace_data(P, e2().thetastar)


def test_commutator():
    M = ExactMatrix(Q, [[1, 2], [3, 4]])
    assert commutator(ExactMatrix.identity(Q, 2), M).is_zero()
    assert commutator(ExactMatrix.diag(Q, [1, 2]), ExactMatrix(Q, [[0, 1], [1, 0]])) == \
        ExactMatrix(Q, [[0, -1], [1, 0]])


def test_matrix_arithmetic():
    M = ExactMatrix(Q, [[1, 2], [3, 4]])
    assert M @ M.inverse() == ExactMatrix.identity(Q, 2)
    assert M.trace() == 5
    assert M.transpose() == ExactMatrix(Q, [[1, 3], [2, 4]])
    assert (M - M).is_zero()
    assert M * 2 == M + M
