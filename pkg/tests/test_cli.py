import json
import subprocess
import sys

import pytest

from toricwedge import SimplicialComplex, simplex_boundary, simplicial_wedge
from toricwedge.cli import complex_from_json, complex_to_json, main, matrix_from_json, matrix_to_json


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


TWO = {"vertices": [1, 2], "maximal_faces": [[1], [2]]}
LAM = {"rows": 1, "cols": 2, "data": [[1, -1]]}


def test_wedge_cp2(capsys, files):
    out = run_json(capsys, "wedge", "--complex", files("two.json", TWO), "--j", "1,2")
    K = complex_from_json(out)
    assert K == simplex_boundary(3, [(1, 1), (2, 1), (2, 2)])


def test_check_regular_cp2(capsys, files):
    cp2 = run_json(capsys, "wedge", "--complex", files("two.json", TWO), "--j", "1,2")
    lam = run_json(capsys, "charmat-j", "--lambda", files("lam.json", LAM), "--j", "1,2")
    assert lam["data"] == [[1, 0, -1], [0, 1, -1]]
    assert lam["column_labels"] == [[2, 2], [1, 1], [2, 1]]
    out = run_json(capsys, "check-regular", "--complex", files("cp2.json", cp2),
                   "--lambda", files("cp2_lambda.json", lam), "--mode", "vertices")
    assert out == {"ok": True}


def test_check_regular_failure(capsys, files):
    out = run_json(capsys, "check-regular", "--complex", files("two.json", TWO),
                   "--lambda", files("bad.json", {"rows": 1, "cols": 2, "data": [[2, -1]]}))
    assert out == {"ok": False, "failures": [{"face": [1], "value": [2]}]}


def test_transform(capsys):
    assert run_json(capsys, "transform", "--m", "2", "--n", "1", "--j", "1,2") == \
        {"d": 3, "n": 2, "coker": 1}
    assert run_json(capsys, "transform", "--m", "2", "--n", "1", "--j", "1,3",
                    "--part-dims", "0,1") == {"d": 4, "n": 2, "coker": 2}


def test_nerve(capsys, files):
    square = {"dimension": 2, "facets": ["a", "b", "c", "d"],
              "vertices": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]]}
    out = run_json(capsys, "nerve", "--polytope", files("sq.json", square))
    assert out == {"vertices": ["a", "b", "c", "d"],
                   "maximal_faces": [["a", "b"], ["a", "d"], ["b", "c"], ["c", "d"]]}


def test_compose(capsys, files):
    p1 = files("p1.json", {"vertices": [1], "maximal_faces": []})
    p2 = files("p2.json", {"vertices": [1, 2], "maximal_faces": [[1], [2]]})
    out = run_json(capsys, "compose", "--complex", files("two.json", TWO), "--part", p1, "--part", p2)
    assert complex_from_json(out) == simplicial_wedge(SimplicialComplex([1, 2], [[1], [2]]), (1, 2))


def test_mnf_and_inverse(capsys, files):
    c4 = {"vertices": [1, 2, 3, 4], "maximal_faces": [[1, 2], [2, 3], [3, 4], [1, 4]]}
    out = run_json(capsys, "mnf", "--complex", files("c4.json", c4))
    assert out["minimal_non_faces"] == [[1, 3], [2, 4]]
    back = run_json(capsys, "mnf", "--inverse", "--complex", files("mnf.json", out))
    assert complex_from_json(back) == complex_from_json(c4)


def test_kernel(capsys, files):
    out = run_json(capsys, "kernel", "--matrix",
                   files("m.json", {"rows": 2, "cols": 3, "data": [[1, 0, -1], [0, 1, -1]]}))
    assert out == {"rank": 2, "kernel": {"ambient": 3, "rank": 1, "basis": [[1, 1, 1]]}}


def test_charmat_jn_and_q_test(capsys, files):
    p0 = files("p0.json", {"rows": 0, "cols": 1, "data": []})
    lam = files("lam.json", LAM)
    out = run_json(capsys, "charmat-jn", "--lambda", lam, "--part", p0, "--part", lam)
    assert out["data"] == [[1, 0, -1], [0, 1, -1]]
    q = run_json(capsys, "q-test", "--lambda", lam, "--part", p0, "--part", lam)
    assert q["summary"] == "Z"
    assert q["kernel"] == [{"vector": [1, 1, 1], "class": "InZSpan"}]
    assert q["q"]["basis"] == [[0, 1, 0], [1, 0, 1]]


def test_betti_commands(capsys, files):
    c4 = files("c4.json", {"vertices": [1, 2, 3, 4], "maximal_faces": [[1, 2], [2, 3], [3, 4], [1, 4]]})
    assert run_json(capsys, "betti-zk", "--complex", c4) == \
        {"ranks": {"0": 1, "3": 2, "6": 1}, "torsion": {}}
    assert run_json(capsys, "betti-toric", "--complex", c4) == \
        {"ranks": {"0": 1, "2": 2, "4": 1}, "torsion": {}}
    assert "warning" in run_json(capsys, "betti-toric", "--complex", c4, "--non-polytopal")
    assert run_json(capsys, "homology", "--complex", c4) == {"ranks": {"1": 1}, "torsion": {}}


def test_presentation(capsys, files):
    tri = files("t.json", {"vertices": [1, 2, 3], "maximal_faces": [[1, 2], [2, 3], [1, 3]]})
    lam = files("l.json", {"rows": 2, "cols": 3, "data": [[1, 0, -1], [0, 1, -1]]})
    out = run_json(capsys, "presentation", "--complex", tri, "--lambda", lam)
    assert out == {"generators": [1, 2, 3], "monomial_relations": [[1, 2, 3]],
                   "linear_relations": [[1, 0, -1], [0, 1, -1]]}
    code, text, _ = run(capsys, "presentation", "--complex", tri, "--lambda", lam, "--text")
    assert code == 0 and text.startswith("Z[v1, v2, v3]")


def test_output_file(capsys, files, tmp_path):
    dest = tmp_path / "out.json"
    code, out, _ = run(capsys, "-o", str(dest), "homology", "--complex", files("two.json", TWO))
    assert code == 0 and out == ""
    assert json.loads(dest.read_text()) == {"ranks": {"0": 1}, "torsion": {}}


def test_canonical_serialization(capsys, files):
    code, out, _ = run(capsys, "kernel", "--matrix", files("m.json", LAM))
    assert out.strip() == json.dumps(json.loads(out), sort_keys=True)


class TestErrors:
    def error(self, capsys, *argv):
        code, out, err = run(capsys, *argv)
        return code, json.loads(err)

    def test_unknown_command(self, capsys):
        code, err = self.error(capsys, "frobnicate")
        assert code == 2 and err["error"] == "usage_error"

    def test_missing_argument(self, capsys):
        code, err = self.error(capsys, "wedge", "--j", "1")
        assert code == 2 and err["error"] == "usage_error"

    def test_domain_error(self, capsys, files):
        code, err = self.error(capsys, "wedge", "--complex", files("two.json", TWO), "--j", "1")
        assert code == 1 and err["error"] == "input_error"

    def test_schema_error(self, capsys, files):
        code, err = self.error(capsys, "homology", "--complex", files("bad.json", {"vertices": [1]}))
        assert code == 1 and err["error"] == "schema_error"

    def test_bad_json(self, capsys, tmp_path):
        p = tmp_path / "x.json"
        p.write_text("{not json")
        code, err = self.error(capsys, "homology", "--complex", str(p))
        assert code == 1 and err["error"] == "schema_error"

    def test_missing_file(self, capsys, tmp_path):
        code, err = self.error(capsys, "homology", "--complex", str(tmp_path / "nope.json"))
        assert code == 1 and err["error"] == "file_error"

    def test_overflow(self, capsys, files):
        big = {"rows": 2, "cols": 2, "data": [[2 ** 62, 3], [5, 2 ** 62]]}
        code, err = self.error(capsys, "kernel", "--matrix", files("big.json", big))
        assert code == 1 and err["error"] == "overflow"

    def test_resource_limit(self, capsys, files):
        K = complex_to_json(simplex_boundary(6))
        code, err = self.error(capsys, "betti-zk", "--complex", files("k.json", K),
                               "--max-vertices", "4")
        assert code == 1 and err["error"] == "resource_limit"


@pytest.mark.parametrize("K", [
    simplex_boundary(1, ["g"]),
    simplex_boundary(3),
    simplicial_wedge(simplex_boundary(2), (2, 3)),
    SimplicialComplex(["x", "y", "z"], [["x", "y"]]),
])
def test_complex_round_trip(K):
    again = complex_from_json(json.loads(json.dumps(complex_to_json(K))))
    assert again == K and again.vertices == K.vertices


def test_matrix_round_trip():
    from toricwedge import CharacteristicMatrix, build_lambda_J

    L = build_lambda_J(CharacteristicMatrix.from_rows([[1, 0, -1], [0, 1, -1]]), (2, 1, 3))
    obj = json.loads(json.dumps(matrix_to_json(L.matrix, L.column_labels)))
    M = matrix_from_json(obj)
    assert M.data == L.matrix.data and M.column_labels == L.column_labels


def test_module_entry_point(tmp_path):
    p = tmp_path / "two.json"
    p.write_text(json.dumps(TWO))
    proc = subprocess.run([sys.executable, "-m", "toricwedge", "homology", "--complex", str(p)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"ranks": {"0": 1}, "torsion": {}}
