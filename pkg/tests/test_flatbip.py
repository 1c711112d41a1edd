import pytest

from conftest import GF7, GF13, GF17, Q, e1, e2
from leonardpairs.errors import ThetaStarMismatch
from leonardpairs.exactfield import FieldScalar
from leonardpairs.flatbip import (
    bipartite_contraction,
    bipartite_status,
    contraction_condition,
    flat_part,
    leonard_d1,
    leonard_d2,
)
from leonardpairs.matrixcore import ExactMatrix, MatrixPair, char_poly, commutator
from leonardpairs.params import (
    TddSequence,
    affine_transform,
    realize_matrices,
    tdd_affine,
    tdd_from_parameter_array,
)
from leonardpairs.polyutil import has_repeated_root
from leonardpairs.primary import TypeI, parameter_array_from_primary_data


def pair(p):
    return realize_matrices(tdd_from_parameter_array(p))


def test_flat_part():
    assert flat_part(pair(e2())).F == ExactMatrix.diag(GF13, [12, 4, 9, 1])
    assert flat_part(pair(e1())).F.is_zero()
    P = pair(e1())
    shifted = MatrixPair(P.A + ExactMatrix.identity(Q, 4) * 5, P.Astar)
    fp = flat_part(shifted)
    assert fp.F == ExactMatrix.identity(Q, 4) * 5 and fp.a_common == 5


def test_flat_part_commutes_with_astar():
    P = pair(e2())
    assert commutator(flat_part(P).F, P.Astar).is_zero()


def test_flat_part_non_diagonal_basis():
    P = pair(e2())
    S = ExactMatrix(GF13, [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [2, 0, 0, 1]])
    Si = S.inverse()
    P2 = MatrixPair(Si @ P.A @ S, Si @ P.Astar @ S)
    assert flat_part(P2).F == Si @ flat_part(P).F @ S


def test_bipartite_status():
    s = bipartite_status(e1())
    assert s.bipartite and s.essentially_bipartite and s.near_bipartite
    t = tdd_affine(tdd_from_parameter_array(e1()), 1, 5, 1, 0)
    s = bipartite_status(t)
    assert s.essentially_bipartite and not s.bipartite and s.alpha == 5
    s = bipartite_status(affine_transform(e1(), 1, 5, 1, 0))
    assert s.essentially_bipartite and not s.bipartite and s.alpha == 5
    s = bipartite_status(e2())
    assert not s.bipartite and not s.essentially_bipartite


def test_contraction_e2():
    c = bipartite_contraction(pair(e2()))
    B = realize_matrices(TddSequence(GF13, [0, 0, 0, 0], [3, 4, 3], e2().thetastar))
    assert c.pair == B
    assert commutator(pair(e2()).A, pair(e2()).Astar) == commutator(c.pair.A, c.pair.Astar)
    assert bipartite_status(c.array).bipartite


def test_contraction_e1_is_itself():
    P = pair(e1())
    assert bipartite_contraction(P).pair == P


def test_contraction_e4_none():
    pd = TypeI(GF17, 2, 0, 1, 3, 0, 0, 1, 0)
    P = pair(parameter_array_from_primary_data(pd, 3))
    B = P.A - flat_part(P).F
    assert has_repeated_root(GF17, [c.value for c in char_poly(B)])
    assert bipartite_contraction(P) is None


def test_contraction_condition():
    c = bipartite_contraction(pair(e2()))
    assert contraction_condition(e2(), c.array)
    assert contraction_condition(e1(), e1())
    with pytest.raises(ThetaStarMismatch):
        contraction_condition(e2(), e1())
    other = affine_transform(e1(), 2, 0, 1, 0)
    assert not contraction_condition(other, e1())


def test_affine_covariance():
    P = pair(e2())
    I = ExactMatrix.identity(GF13, 4)
    P2 = MatrixPair(P.A * 3 + I * 2, P.Astar * 5 + I * 7)
    B = bipartite_contraction(P).pair.A
    assert bipartite_contraction(P2).pair.A == B * 3


def test_d1_examples():
    c = leonard_d1(Q(0), Q(0), Q(1), Q(0), Q(1))
    assert c.leonard and c.bipartite
    c = leonard_d1(Q(3), Q(1), Q(1), Q(0), Q(1))
    assert not c.leonard and c.closed_field_form and "NotSplit" in c.reason
    c = leonard_d1(GF7(3), GF7(1), GF7(1), GF7(0), GF7(1))
    assert c.leonard and set(c.eigenvalues) == {GF7(5), GF7(6)}
    c = leonard_d1(Q(1), Q(-1), Q(-1), Q(0), Q(1))
    assert not c.leonard and not c.closed_field_form
    assert c.near_bipartite is None


def test_d2_bipartite():
    args = ((GF7(0),) * 3, (GF7(1), GF7(1)), (GF7(0), GF7(1), GF7(2)))
    c = leonard_d2(*args)
    assert c.leonard and c.bipartite and c.conditions["d2cond"]
    # over the rationals the eigenvalues +-sqrt(2) are missing
    c = leonard_d2((Q(0),) * 3, (Q(1), Q(1)), (Q(0), Q(1), Q(2)))
    assert c.closed_field_form and not c.leonard


def test_d2_expansions():
    xs, ts = (GF7(1), GF7(1)), (GF7(0), GF7(1), GF7(2))
    c = leonard_d2((GF7(1),) * 3, xs, ts)
    assert c.contraction_leonard and c.expansion_of_given_B
    c = leonard_d2((GF7(1), GF7(0), GF7(2)), xs, ts)
    assert c.contraction_leonard and c.conditions["aux4"] is False and c.expansion_of_given_B is False
