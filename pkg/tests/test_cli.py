import json
from pathlib import Path

import pytest

from freenil2.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestElementCommands:
    def test_mul(self, capsys):
        code, out, _ = run(capsys, "mul", "--rank", "2", "x2", "x1")
        assert code == 0 and out.strip() == "x1*x2*[x1,x2]^-1"

    def test_inv(self, capsys):
        code, out, _ = run(capsys, "inv", "--rank", "2", "x1*x2")
        assert code == 0 and out.strip() == "x1^-1*x2^-1*[x1,x2]^-1"

    def test_comm_trivial(self, capsys):
        code, out, _ = run(capsys, "comm", "--rank", "2", "x1", "x1")
        assert code == 0 and out.strip() == "1"

    def test_eval_normalizes(self, capsys):
        code, out, _ = run(capsys, "eval", "--rank", "3", "x2*x1*[x3,x2]")
        assert code == 0 and out.strip() == "x1*x2*[x1,x2]^-1*[x2,x3]^-1"

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "eval", "--rank", "2", "x1*")
        assert code == 2 and "error" in err

    def test_rank_error_exit_code(self, capsys):
        code, _, err = run(capsys, "eval", "--rank", "2", "x5")
        assert code == 2 and "x5" in err


class TestAutomorphismCommands:
    def theta(self):
        return json.dumps({"rank": 2, "images": ["x1^-1", "x2^-1"]})

    def test_apply(self, capsys):
        # the image of the normal form (1,1;0) is (-1,-1;0)
        code, out, _ = run(capsys, "apply", self.theta(), "x1*x2")
        assert code == 0 and out.strip() == "x1^-1*x2^-1"
        # while the word x2^-1 x1^-1 collects to (-1,-1;-1)
        code, out, _ = run(capsys, "eval", "--rank", "2", "x2^-1*x1^-1")
        assert code == 0 and out.strip() == "x1^-1*x2^-1*[x1,x2]^-1"

    def test_compose_and_invert(self, capsys):
        shear = json.dumps({"rank": 2, "images": ["x1*x2", "x2"]})
        code, out, _ = run(capsys, "invert-aut", shear)
        assert code == 0
        doc = json.loads(out)
        code, out, _ = run(capsys, "compose", shear, json.dumps(doc))
        assert code == 0
        assert json.loads(out) == {"rank": 2, "images": ["x1", "x2"]}

    def test_classify(self, capsys):
        code, out, _ = run(capsys, "classify", self.theta())
        assert code == 0 and out.strip() == "SymmetryModIA"

    def test_classify_json(self, capsys):
        code, out, _ = run(capsys, "classify", "--json", self.theta())
        assert code == 0 and json.loads(out) == {"kind": "SymmetryModIA"}

    def test_canon(self, capsys):
        code, out, _ = run(capsys, "canon", "[[2,1],[-3,-2]]")
        assert code == 0 and "type (p, m, s) = (0, 0, 1)" in out

    def test_canon_json(self, capsys):
        code, out, _ = run(capsys, "canon", "--json", "[[-1,0],[2,1]]")
        assert code == 0
        doc = json.loads(out)
        assert doc["type"] == {"fixed": 1, "negated": 1, "swapped": 0}

    def test_is_inner_negative(self, capsys):
        alpha = json.dumps({"rank": 3, "images": ["x1*[x2,x3]", "x2", "x3"]})
        code, out, _ = run(capsys, "is-inner", alpha)
        assert code == 0 and out.strip() == "not inner"

    def test_is_inner_positive(self, capsys):
        alpha = json.dumps({"rank": 2, "images": ["x1", "x2*[x1,x2]"]})
        code, out, _ = run(capsys, "is-inner", "--json", alpha)
        assert code == 0
        doc = json.loads(out)
        assert doc["inner"] is True and doc["witness"] == "x1"

    def test_split_ia(self, capsys):
        alpha = json.dumps({"rank": 3, "images": ["x1", "x2*[x2,x3]*[x1,x2]", "x3"]})
        code, out, _ = run(capsys, "split-ia", "--generator", "1", alpha)
        assert code == 0
        doc = json.loads(out)
        assert doc["plus"]["images"] == ["x1", "x2*[x2,x3]", "x3"]
        assert doc["minus"]["images"] == ["x1", "x2*[x1,x2]", "x3"]

    def test_decode(self, capsys):
        tau = json.dumps({"rank": 2, "images": ["x1", "x2*[x1,x2]"]})
        tau2 = json.dumps({"rank": 2, "images": ["x1*[x1,x2]^-1", "x2"]})
        theta = self.theta()
        basis = f"[{tau}, {tau2}]"
        code, out, _ = run(capsys, "decode", "--tau", tau, "--theta", theta,
                           "--basis-set", basis)
        assert code == 0 and out.strip() == "x1"

    def test_invalid_document_exit_code(self, capsys):
        bad = json.dumps({"rank": 2, "images": ["x1", "x1"]})
        code, _, err = run(capsys, "classify", bad)
        assert code == 2 and "error" in err

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "theta.json"
        path.write_text(self.theta())
        code, out, _ = run(capsys, "classify", str(path))
        assert code == 0 and out.strip() == "SymmetryModIA"


class TestVerifyCommand:
    def test_small_run_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--rank-min", "2", "--rank-max", "2",
                           "--trials", "2", "--seed", "7")
        assert code == 0
        assert "result: PASS" in out

    def test_json_matches_golden(self, capsys):
        code, out, _ = run(capsys, "verify", "--rank-min", "2", "--rank-max", "2",
                           "--trials", "2", "--seed", "7", "--json")
        assert code == 0
        golden = json.loads((DATA / "golden_verify_r2_t2_s7.json").read_text())
        assert json.loads(out) == golden

    def test_deterministic_rerun(self, capsys):
        _, first, _ = run(capsys, "verify", "--rank-min", "2", "--rank-max", "3",
                          "--trials", "1", "--seed", "5", "--json")
        _, second, _ = run(capsys, "verify", "--rank-min", "2", "--rank-max", "3",
                           "--trials", "1", "--seed", "5", "--json")
        assert first == second

    def test_usage_error_exit_code(self, capsys):
        code, _, _ = run(capsys, "verify", "--rank-min", "9", "--rank-max", "9")
        assert code == 2

    def test_report_schema(self, capsys):
        _, out, _ = run(capsys, "verify", "--rank-min", "2", "--rank-max", "2",
                        "--trials", "1", "--seed", "0", "--json")
        doc = json.loads(out)
        assert set(doc) == {"suite_version", "rank_min", "rank_max", "trials",
                            "seed", "all_passed", "checks"}
        for check in doc["checks"]:
            assert set(check) == {"name", "status", "trials", "counterexample"}
            assert check["status"] in {"pass", "fail", "skipped"}


def test_usage_without_command_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
