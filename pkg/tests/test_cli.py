import json
import subprocess
import sys

import pytest

from dintegrals.cli import main, run_corpus
from dintegrals.core import FiniteSemiring, validate_semiring
from dintegrals.corpus import builtin
from dintegrals.integrals import law_names
from dintegrals.matrix import canonical_derivation


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def b2_file(tmp_path):
    path = tmp_path / "b2.json"
    builtin("B2").save(path)
    return str(path)


def test_validate_ok(capsys, b2_file):
    code, out, _ = run(capsys, "validate", b2_file)
    assert code == 0
    assert json.loads(out) == {"passed": True, "violations": [], "semiring": "B2"}


def test_validate_broken_distributivity(capsys, tmp_path):
    s = FiniteSemiring.from_ops(3, max, lambda x, y: (x * y) % 3, 0, 1, "broken")
    path = tmp_path / "broken.json"
    s.save(path)
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 1
    doc = json.loads(out)
    axioms = {v["axiom"]: v["witness"] for v in doc["violations"]}
    assert axioms["left_distributive"] == list(validate_semiring(s).by_axiom()["left_distributive"])


def test_validate_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate", str(tmp_path / "nope.json"))
    assert code == 2 and "nope.json" in err


def test_validate_malformed(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"order": 2, "zero": 0, "one": 1, "add": [[0, 1]], "mul": [[0, 0], [0, 1]]}')
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2 and "rows" in err
    path.write_text("not json")
    assert run(capsys, "validate", str(path))[0] == 2


@pytest.mark.parametrize("name,count", [("B2", 2), ("Z2", 1), ("T1", 1), ("C3", 3)])
def test_derivation_counts(capsys, name, count):
    code, out, _ = run(capsys, "derivations", name)
    assert code == 0 and json.loads(out)["count"] == count


def test_derivations_listing(capsys):
    code, out, _ = run(capsys, "derivations", "C3", "--limit", "2")
    doc = json.loads(out)
    assert doc["derivations"] == [[0, 0, 0], [0, 1, 1]] and doc["count"] == 3
    code, out, _ = run(capsys, "derivations", "B2", "--pretty")
    assert out.splitlines() == ["0: [0, 0]", "1: [0, 1]", "count: 2"]


def test_derivations_capacity(capsys):
    code, _, err = run(capsys, "derivations", "M(Z3)", "--cap", "4")
    assert code == 3 and "cap" in err


def test_integrals(capsys):
    code, out, _ = run(capsys, "integrals", "B2", "--derivation", "0,1")
    doc = json.loads(out)
    assert code == 0
    assert doc["integrals"] == {"0": [0], "1": [1]}
    assert doc["constants"] == [0] and doc["integrables"] == [0, 1]
    code, out, _ = run(capsys, "integrals", "B2", "--derivation", "0", "--pretty")
    assert out.splitlines() == ["I(0) = {0, 1}", "I(1) = ∅", "Const = {0, 1}", "Int = {0}"]


def test_integrals_matrix_extension(capsys):
    d = canonical_derivation(builtin("B2"))
    code, out, _ = run(capsys, "integrals", "M(B2)", "--derivation", json.dumps(list(d.map)))
    doc = json.loads(out)
    # (x,y) at 2x+y: Int = {(0,0),(0,1)}, Const = {(0,0),(1,0)}
    assert doc["integrables"] == [0, 1]
    assert doc["constants"] == [0, 2]
    assert doc["integrals"]["1"] == [1, 3]


def test_integrals_invalid_map(capsys):
    code, out, _ = run(capsys, "integrals", "Z2", "--derivation", "0,1")
    assert code == 1
    assert json.loads(out) == {"error": "invalid derivation", "identity": "leibniz", "witness": [1, 1]}
    assert run(capsys, "integrals", "Z2", "--derivation", "7")[0] == 2
    assert run(capsys, "integrals", "Z2", "--derivation", "0,1,1")[0] == 2


def test_laws(capsys):
    code, out, _ = run(capsys, "laws", "M(Z3)", "--derivation", "1")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0
    assert [x["law"] for x in lines] == law_names()
    assert all(x["passed"] for x in lines)


def test_thm2_b2(capsys):
    code, out, _ = run(capsys, "thm2", "B2", "--derivation", "1")
    doc = json.loads(out)
    assert code == 0 and doc["closure"] and doc["members"] == ["∅", "[0]", "[1]"]
    assert doc["axioms"]["passed"]
    code, out, _ = run(capsys, "thm2", "B2", "--derivation", "1", "--pretty")
    assert "⊕" in out and "⊙" in out and "axioms: passed" in out


def test_thm2_matrix(capsys):
    d = canonical_derivation(builtin("Z2"))
    code, out, _ = run(capsys, "thm2", "M(Z2)", "--derivation", ",".join(map(str, d.map)))
    assert code == 0 and json.loads(out)["axioms"]["passed"]


def test_thm2_refusal(capsys):
    code, out, _ = run(capsys, "thm2", "M(Z2)", "--derivation", "0,3,0,3")
    assert code == 4
    assert json.loads(out) == {"closure": False, "witness": [3, 3]}


def test_matrix_command(capsys, b2_file, tmp_path):
    code, out, _ = run(capsys, "matrix", b2_file)
    assert code == 0
    ext = FiniteSemiring.loads(out)
    assert ext == builtin("M(B2)") and ext.name == "M(B2)"
    target = tmp_path / "m.json"
    assert run(capsys, "matrix", "Z2", "-o", str(target))[0] == 0
    assert FiniteSemiring.load(target) == builtin("M(Z2)")


def test_poly_commands(capsys):
    code, out, _ = run(capsys, "poly", "int", "--char", "0", "0 1")
    assert code == 0 and json.loads(out)["text"] == "1/2 x^2 + C, C ∈ F"
    code, out, _ = run(capsys, "poly", "int", "--char", "3", "0 0 1")
    assert code == 5 and json.loads(out)["index"] == 2
    code, out, _ = run(capsys, "poly", "closure", "--char", "3")
    assert code == 0 and json.loads(out)["text"] == "fails: witness x · x^1"
    code, out, _ = run(capsys, "poly", "closure", "--char", "2", "--pretty")
    assert out.strip() == "holds"
    code, out, _ = run(capsys, "poly", "diff", "1 2 3", "--pretty")
    assert out.strip() == "6 x + 2"
    assert run(capsys, "poly", "diff", "--char", "4", "1")[0] == 2
    assert run(capsys, "poly", "closure", "--char", "7", "--bound", "3")[0] == 2


def test_corpus(capsys):
    code, out, _ = run(capsys, "corpus", "--all")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and not doc["failures"] and not doc["uncovered"]
    assert set(doc["laws"]) == set(law_names())


def test_corpus_subsets(capsys):
    assert run(capsys, "corpus", "--only")[0] == 1
    result = run_corpus([])
    assert result["pairs"] == 0 and set(result["uncovered"]) == set(law_names())
    assert run(capsys, "corpus", "--only", "B2", "C3")[0] == 0
    assert run(capsys, "corpus", "--only", "nonsense")[0] == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "corpus")
    second = run(capsys, "corpus")
    assert first == second
    assert run(capsys, "thm2", "M(C3)", "--derivation", "5") == run(capsys, "thm2", "M(C3)", "--derivation", "5")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dintegrals", "derivations", "B2"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 2
