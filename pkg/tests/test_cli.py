import json
import subprocess
import sys
from pathlib import Path

import pytest

from golden_cases import CASES
from valmat.cli import main
from valmat.gallery import exceptional_example, lambda_example
from valmat.io import (dumps, load_json, matroid_from_json, matroid_to_json, multi_from_json,
                       parse_subset_key)
from valmat.errors import FormatError

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(autouse=True)
def at_root(monkeypatch):
    monkeypatch.chdir(ROOT)


@pytest.mark.parametrize("name,argv,code", CASES, ids=[c[0] for c in CASES])
def test_golden_output(name, argv, code, capsys):
    assert main(argv) == code
    out = capsys.readouterr().out
    expected = (ROOT / "golden" / "expected" / f"{name}.txt").read_text(encoding="utf-8")
    assert out == expected


def test_output_is_byte_deterministic():
    cmd = [sys.executable, "-m", "valmat", "--json", "poly", "golden/exceptional.json", "--edges"]
    a = subprocess.run(cmd, capture_output=True, cwd=ROOT, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, cwd=ROOT, check=True).stdout
    assert a == b


def test_golden_inputs_match_gallery():
    assert matroid_from_json(load_json("golden/exceptional.json")) == exceptional_example()
    assert matroid_from_json(load_json("golden/lambda1.json")) == lambda_example(1)


def test_lambda1_reports_D2_prime_witness(capsys):
    assert main(["check", "golden/lambda1.json", "--axioms", "D"]) == 1
    assert "D2' A={4} witness=[2, 3] i=0" in capsys.readouterr().out


def test_malformed_key_exits_2(tmp_path, capsys):
    data = matroid_to_json(exceptional_example())
    data["modules"]["2,1"] = data["modules"].pop("1,2")
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    assert main(["check", str(path)]) == 2
    assert "strictly increasing" in capsys.readouterr().err


def test_missing_subset_and_bad_json(tmp_path):
    data = matroid_to_json(exceptional_example())
    del data["modules"]["1"]
    path = tmp_path / "missing.json"
    path.write_text(json.dumps(data))
    assert main(["check", str(path)]) == 2
    path.write_text("{not json")
    assert main(["check", str(path)]) == 2
    assert main(["check", str(tmp_path / "absent.json")]) == 2


def test_non_matroid_exits_1_for_poly(tmp_path):
    path = tmp_path / "lam.json"
    path.write_text(dumps(matroid_to_json(lambda_example(1))))
    assert main(["poly", str(path)]) == 1


def test_usage_errors():
    assert main([]) == 2
    assert main(["param", "pi"]) == 2
    assert main(["check", "golden/exceptional.json", "--axioms", "x"]) == 2


def test_threads_variable(monkeypatch):
    monkeypatch.setenv("VALMAT_THREADS", "many")
    assert main(["param", "word", "--r", "1", "--n", "2", "--k", "0", "--l", "0"]) == 2
    monkeypatch.setenv("VALMAT_THREADS", "4")
    assert main(["param", "word", "--r", "1", "--n", "2", "--k", "0", "--l", "0"]) == 0


def test_output_file_roundtrip(tmp_path):
    out = tmp_path / "dual.json"
    assert main(["dual", "golden/exceptional.json", "-o", str(out)]) == 0
    again = tmp_path / "dual2.json"
    assert main(["dual", str(out), "-o", str(again)]) == 0
    assert matroid_from_json(load_json(str(again))) == exceptional_example()


def test_multi_prime_roundtrip(tmp_path):
    out = tmp_path / "multi.json"
    assert main(["realize", "golden/two-primes.json", "--primes", "2,3", "-o", str(out)]) == 0
    MZ = multi_from_json(load_json(str(out)))
    assert MZ.primes == (2, 3)
    assert main(["poly", str(out), "--verify-directions"]) == 1


def test_subset_keys():
    assert parse_subset_key("", 3) == 0
    assert parse_subset_key("1,3", 3) == 0b101
    for bad in ("3,1", "1,1", "0", "4", "a"):
        with pytest.raises(FormatError):
            parse_subset_key(bad, 3)


def test_labels_survive_roundtrip():
    M = exceptional_example().relabel([5, 9])
    data = matroid_to_json(M)
    assert data["labels"] == [5, 9]
    assert matroid_from_json(json.loads(dumps(data))) == M
