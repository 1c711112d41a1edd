import pytest

from conftest import GF13, Q, e1, e2
from leonardpairs.errors import LengthMismatch, ZeroScale
from leonardpairs.matrixcore import primitive_idempotents, trace_data, verify_leonard_pair
from leonardpairs.params import (
    ParameterArray,
    TddSequence,
    affine_transform,
    parameter_array_relatives,
    parameter_arrays_from_tdd,
    realize_matrices,
    tdd_affine,
    tdd_from_parameter_array,
    tdd_reversal,
    validate_parameter_array,
)


def test_validate_e1():
    rep = validate_parameter_array(e1())
    assert rep.valid and rep.beta == 2


def test_validate_violations():
    p = e1()
    bad = ParameterArray(Q, p.theta, p.thetastar, [-6, 0, -6], p.phi2)
    rep = validate_parameter_array(bad)
    assert not rep.valid and rep.violations[0].startswith("(ii)")
    bad = ParameterArray(Q, [-1, -1, 1, 3], p.thetastar, p.phi1, p.phi2)
    assert validate_parameter_array(bad).violations[0].startswith("(i)")


def test_lengths():
    with pytest.raises(LengthMismatch):
        ParameterArray(Q, [1, 2, 3], [1, 2], [1, 1], [1, 1])
    with pytest.raises(LengthMismatch):
        ParameterArray(Q, [1], [1], [], [])


def test_relatives_e1():
    rels = parameter_array_relatives(e1())
    assert rels[1] == ParameterArray(Q, [-3, -1, 1, 3], [3, 1, -1, -3], [6, 8, 6], [-6, -8, -6])
    for r in rels:
        assert validate_parameter_array(r).valid
    for r in rels:
        assert parameter_array_relatives(r)[0] == r
    # each non-trivial map is an involution
    for k in (1, 2, 3):
        assert parameter_array_relatives(rels[k])[k] == e1()


def test_affine():
    p = e1()
    assert affine_transform(p, 1, 0, 1, 0) == p
    t = affine_transform(p, 2, 1, 1, 0)
    assert t.theta == tuple(Q(v) for v in (-5, -1, 3, 7))
    assert t.phi1 == tuple(Q(v) for v in (-12, -16, -12))
    with pytest.raises(ZeroScale):
        affine_transform(p, 0, 1, 1, 0)


def test_affine_composition():
    p = e2()
    a = affine_transform(affine_transform(p, 2, 3, 5, 1), 7, 4, 3, 2)
    b = affine_transform(p, 14, 7 * 3 + 4, 15, 3 * 1 + 2)
    assert a == b


def test_tdd_examples():
    t = tdd_from_parameter_array(e1())
    assert t.a == (Q(0),) * 4 and t.x == (Q(3), Q(4), Q(3))
    t2 = tdd_from_parameter_array(e2())
    assert t2.a == tuple(GF13(v) for v in (12, 4, 9, 1)) and t2.x == tuple(GF13(v) for v in (3, 4, 3))
    for p, t in ((e1(), t), (e2(), t2)):
        assert sum(p.theta, p.field.zero) == sum(t.a, p.field.zero)


def test_arrays_from_tdd():
    t = TddSequence(Q, [0, 0, 0, 0], [3, 4, 3], [-3, -1, 1, 3])
    arrays = parameter_arrays_from_tdd(t)
    assert len(arrays) == 2
    assert e1() in arrays
    assert any(a.theta == tuple(reversed(e1().theta)) for a in arrays)
    arrays = parameter_arrays_from_tdd(tdd_from_parameter_array(e2()))
    assert e2() in arrays and len(arrays) == 2


def test_theta_reversal_gives_same_tdd():
    for p in (e1(), e2()):
        assert tdd_from_parameter_array(parameter_array_relatives(p)[2]) == tdd_from_parameter_array(p)


def test_tdd_rejects_zero_x():
    with pytest.raises(ValueError):
        TddSequence(Q, [0, 0], [0], [1, 2])
    with pytest.raises(ValueError):
        TddSequence(Q, [0, 0], [1], [1, 1])


def test_realize():
    P = realize_matrices(tdd_from_parameter_array(e1()))
    assert verify_leonard_pair(P).is_leonard
    E = primitive_idempotents(P.Astar, e1().thetastar)
    for i, Ei in enumerate(E):
        assert all(Ei[(r, c)] == (1 if r == c == i else 0) for r in range(4) for c in range(4))


def test_trace_data_matches():
    for p in (e1(), e2()):
        t = tdd_from_parameter_array(p)
        a, x = trace_data(realize_matrices(t), p.thetastar)
        assert tuple(a) == t.a and tuple(x) == t.x


def test_tdd_affine():
    t = tdd_from_parameter_array(e1())
    assert tdd_affine(t, 1, 5, 1, 0).a == (Q(5),) * 4
    assert tdd_affine(t, 2, 0, 1, 0).x == (Q(12), Q(16), Q(12))
    assert tdd_affine(t, 1, 0, 1, 0) == t


def test_tdd_commutes_with_affine():
    p = e2()
    coeffs = (3, 2, 5, 7)
    assert tdd_from_parameter_array(affine_transform(p, *coeffs)) == \
        tdd_affine(tdd_from_parameter_array(p), *coeffs)


def test_reversal():
    t = tdd_from_parameter_array(e2())
    arrays = parameter_arrays_from_tdd(tdd_reversal(t))
    assert parameter_array_relatives(e2())[1] in arrays or parameter_array_relatives(e2())[3] in arrays
