import json
import subprocess
import sys

import pytest

from conftest import GF13, Q, e1, e2
from leonardpairs import documents
from leonardpairs.cli import main
from leonardpairs.documents import DocumentError
from leonardpairs.params import realize_matrices, tdd_from_parameter_array, validate_parameter_array
from leonardpairs.primary import TypeI, TypeII, TypeIIIPlus, parameter_array_from_primary_data, special_type_flags
from leonardpairs.sampling import FAMILIES


def write(tmp_path, value, name="doc.json", d=None):
    path = tmp_path / name
    path.write_text(documents.render(value, d))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.splitlines(), out.err


def test_validate_e1(tmp_path, capsys):
    code, out, _ = run(capsys, "validate", write(tmp_path, e1()))
    assert code == 0 and out == ["Valid; beta=2; type=II"]


def test_validate_invalid(tmp_path, capsys):
    p = e1()
    bad = documents.to_obj(p)
    bad["payload"]["phi1"][0] = "-5"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 2 and out[0].startswith("Invalid;")


def test_classify_e2(tmp_path, capsys):
    code, out, _ = run(capsys, "classify", write(tmp_path, e2()))
    assert code == 0
    assert out[0] == "near-bipartite; reasons=[Krawtchouk]; contraction written to stdout"
    con = documents.parse(out[1])
    assert con.kind == "parameter_array"
    assert validate_parameter_array(con.value).valid


def test_tdd_and_array(tmp_path, capsys):
    code, out, _ = run(capsys, "tdd", write(tmp_path, e2()))
    assert code == 0
    t = documents.parse(out[0]).value
    assert t == tdd_from_parameter_array(e2())
    code, out, _ = run(capsys, "array", write(tmp_path, t, "t.json"))
    assert code == 0
    assert e2() in [documents.parse(line).value for line in out]


def test_realize_verify_flat(tmp_path, capsys):
    path = write(tmp_path, e1())
    code, out, _ = run(capsys, "realize", path)
    assert code == 0
    assert documents.parse(out[0]).value == realize_matrices(tdd_from_parameter_array(e1()))
    code, out, _ = run(capsys, "verify", path)
    assert code == 0 and out[0].startswith("LeonardPair;")
    code, out, _ = run(capsys, "flat", path)
    assert code == 0 and out[1].startswith("bipartite=True")


def test_contract(tmp_path, capsys):
    code, out, _ = run(capsys, "contract", write(tmp_path, e2()))
    assert code == 0
    assert out[0] == "matrix route: A - F, A* is a Leonard pair"
    assert out[1].startswith("formula route: near_bipartite=True")


def test_expand_krawtchouk(tmp_path, capsys):
    b = TypeII(GF13, 0, 2, 0, 0, 2, 0, 0)
    path = write(tmp_path, b, d=3)
    code, out, _ = run(capsys, "expand", path, "--delta", "0", "--mu", "4")
    assert code == 0
    assert out[0] == "expansion tau=5 (+)" and out[4] == "expansion tau=8 (-)"
    assert documents.parse(out[2]).value == e2()
    code, out, _ = run(capsys, "expand", path, "--delta", "0", "--mu", "4", "--tau-sign", "-")
    assert len(out) == 4
    code, _, err = run(capsys, "expand", path, "--delta", "0", "--mu", "5")
    assert code == 2 and "NoTauInField" in err


def test_expand_dual_q(tmp_path, capsys):
    b = TypeI(Q, 2, 0, 1, -1, 0, 0, 1, 0)
    code, out, _ = run(capsys, "expand", write(tmp_path, b, d=3), "--delta", "0", "--mu", "2")
    assert code == 0
    assert documents.parse(out[1]).value.h == Q("-1/2")


def test_malformed_inputs(tmp_path, capsys):
    path = tmp_path / "x.json"
    path.write_text("{not json")
    assert run(capsys, "validate", str(path))[0] == 1
    path.write_text(json.dumps({"field": "Q", "d": 1, "kind": "tdd",
                                "payload": {"a": [0, 0], "x": ["1"], "thetastar": ["0", "1"]}}))
    assert run(capsys, "validate", str(path))[0] == 1
    path.write_text(json.dumps({"field": "p=6", "d": 1, "kind": "tdd", "payload": {}}))
    assert run(capsys, "validate", str(path))[0] == 1
    assert run(capsys, "validate", str(tmp_path / "missing.json"))[0] == 1
    assert run(capsys, "no-such-command")[0] == 1
    assert run(capsys, "sample", "--family", "krawtchouk", "--d", "3", "--field", "p=4")[0] == 1


def test_invalid_primary_data_is_domain_error(tmp_path, capsys):
    code, _, err = run(capsys, "tdd", write(tmp_path, TypeII(Q, 0, 0, 0, 0, 2, 0, 0), d=3))
    assert code == 2 and "PrimaryDataInvalid" in err


@pytest.mark.parametrize("value,d", [
    (e1(), None),
    (e2(), None),
    (tdd_from_parameter_array(e2()), None),
    (realize_matrices(tdd_from_parameter_array(e1())), None),
    (TypeI(Q, "1/2", 0, 1, -1, 0, 0, 1, 0), 3),
    (TypeIIIPlus(Q, 0, 0, 2, 0, 1, 3, 0), 4),
])
def test_document_round_trip(value, d):
    text = documents.render(value, d)
    doc = documents.parse(text)
    assert doc.value == value
    assert documents.render(doc.value, doc.d) == text


def test_scalar_encoding_rejects_numbers():
    obj = documents.to_obj(e1())
    obj["payload"]["theta"][0] = -3
    with pytest.raises(DocumentError):
        documents.from_obj(obj)


FLAG = {"krawtchouk": "krawtchouk", "dualq": "dual_q_krawtchouk",
        "essbip-I": "essentially_bipartite", "essbip-II": "essentially_bipartite",
        "essbip-III+": "essentially_bipartite"}


@pytest.mark.parametrize("family", FAMILIES)
def test_sample_is_deterministic_and_valid(capsys, family):
    d = 4 if family.endswith("III+") else 3
    argv = ["sample", "--family", family, "--d", str(d), "--field", "p=13", "--count", "5", "--seed", "7"]
    code, first, _ = run(capsys, *argv)
    assert code == 0 and len(first) == 5
    _, second, _ = run(capsys, *argv)
    assert first == second
    for line in first:
        doc = documents.parse(line)
        p = parameter_array_from_primary_data(doc.value, d)
        assert validate_parameter_array(p).valid
        if family in FLAG:
            assert getattr(special_type_flags(doc.value, d), FLAG[family])


def test_sample_impossible_family_is_domain_error(capsys):
    # every square in GF(13) has order dividing 6, so q^(2i) = -1 for some i <= 3
    code, out, err = run(capsys, "sample", "--family", "essbip-I", "--d", "4", "--field", "p=13")
    assert code == 2 and "SamplingError" in err


def test_census_d1_small(capsys):
    code, out, _ = run(capsys, "census-d1", "--field", "p=5")
    assert code == 0
    assert out[0] == f"predicate==oracle on all {5 * 5 * 4 * 5 * 4} admissible tuples; mismatches=0"


def test_census_d2_tiny(capsys):
    code, out, _ = run(capsys, "census-d2", "--field", "p=3")
    assert code == 0
    assert out[0] == f"predicate==oracle on all {27 * 4 * 6} admissible tuples; mismatches=0"


def test_census_needs_prime(capsys):
    assert run(capsys, "census-d1", "--field", "Q")[0] == 1


def test_module_entry_point(tmp_path):
    path = write(tmp_path, e1())
    res = subprocess.run([sys.executable, "-m", "leonardpairs", "validate", path],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "Valid; beta=2; type=II"
