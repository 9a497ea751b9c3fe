import json
import os
import subprocess

import pytest

CLI = os.environ.get("ORBITKIT_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="ORBITKIT_CLI not set")


def run(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("ORBITKIT_SEED", None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [CLI, *args], capture_output=True, text=True, env=env, timeout=300
    )
    return proc


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def algebra_a4():
    return {
        "n": 2,
        "entries": [
            {"i": 1, "j": 1, "k": 1, "value": "1"},
            {"i": 1, "j": 2, "k": 2, "value": "1"},
            {"i": 2, "j": 1, "k": 2, "value": "1"},
        ],
    }


def algebra_f2(s):
    return {
        "n": 2,
        "entries": [
            {"i": 1, "j": 1, "k": 1, "value": "1"},
            {"i": 1, "j": 2, "k": 2, "value": "1"},
            {"i": 2, "j": 1, "k": 2, "value": "1"},
            {"i": 2, "j": 2, "k": 1, "value": str(s)},
        ],
    }


def family_diag_1_t():
    return {
        "n": 2,
        "mat": {
            "rows": 2,
            "cols": 2,
            "entries": [
                ["1", "0"],
                ["0", {"num": ["0", "1"], "den": ["1"]}],
            ],
        },
    }


def test_catalog_pass_and_determinism():
    a = run("catalog", "f3:1")
    b = run("catalog", "f3:1")
    assert a.returncode == 0
    assert a.stdout == b.stdout  # byte-for-byte deterministic
    rep = json.loads(a.stdout)
    assert rep["command"] == "catalog"
    assert rep["results"]["trace_form"]["gram"][0] == ["3", "1", "1"]


def test_catalog_unknown_name_is_input_error():
    p = run("catalog", "a9")
    assert p.returncode == 2
    err = json.loads(p.stdout)
    assert err["error"]["code"] == "unknown_name"


def test_usage_error():
    p = run("qf")
    assert p.returncode == 2
    assert json.loads(p.stdout)["error"]["code"] == "usage"


def test_trace_form_file(tmp_path):
    path = write(tmp_path, "alg.json", algebra_f2(3))
    p = run("trace-form", path)
    assert p.returncode == 0
    rep = json.loads(p.stdout)
    assert rep["results"]["trace_form"]["gram"] == [["2", "0"], ["0", "6"]]
    assert rep["results"]["rank"] == 2


def test_trace_form_malformed_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    p = run("trace-form", str(path))
    assert p.returncode == 2
    assert json.loads(p.stdout)["error"]["code"] == "parse_error"


def test_contract_certificate_pass_and_fail(tmp_path):
    alg = write(tmp_path, "f2.json", algebra_f2(5))
    fam = write(tmp_path, "fam.json", family_diag_1_t())
    target = write(tmp_path, "a4.json", algebra_a4())
    p = run("contract", alg, fam, "--target", target)
    assert p.returncode == 0
    rep = json.loads(p.stdout)
    verdicts = {v["check"]: v["status"] for v in rep["verdicts"]}
    assert verdicts["certificate"] == "PASS"
    assert verdicts["trace-functoriality"] == "PASS"
    assert rep["results"]["amenable"] is True

    wrong = write(
        tmp_path,
        "a5.json",
        {"n": 2, "entries": [{"i": 1, "j": 1, "k": 1, "value": "1"}]},
    )
    p2 = run("contract", alg, fam, "--target", wrong)
    assert p2.returncode == 1
    rep2 = json.loads(p2.stdout)
    verdicts2 = {v["check"]: v["status"] for v in rep2["verdicts"]}
    assert verdicts2["certificate"] == "FAIL"


def test_qf_represents_exit_codes(tmp_path):
    q = write(tmp_path, "q.json", {"n": 2, "gram": [["1", "0"], ["0", "1"]]})
    yes = write(tmp_path, "yes.json", {"n": 2, "gram": [["2", "0"], ["0", "0"]]})
    no = write(tmp_path, "no.json", {"n": 2, "gram": [["3", "0"], ["0", "0"]]})
    p = run("qf", "represents", q, yes)
    assert p.returncode == 0
    rep = json.loads(p.stdout)
    assert rep["verdicts"][0]["status"] == "PASS"
    assert "witness" in rep["results"]

    p2 = run("qf", "represents", q, no, "--height", "10")
    assert p2.returncode == 1
    rep2 = json.loads(p2.stdout)
    assert rep2["verdicts"][0]["status"] == "FAIL"
    assert rep2["inputs"]["height"] == 10


def test_qf_diagonalize_over_qt(tmp_path):
    t = {"num": ["0", "1"], "den": ["1"]}
    t3 = {"num": ["0", "0", "0", "1"], "den": ["1"]}
    form = write(tmp_path, "form.json", {"n": 2, "gram": [[t, t], [t, t3]]})
    p = run("qf", "diagonalize", form, "--over", "qt")
    assert p.returncode == 0
    rep = json.loads(p.stdout)
    blocks = rep["results"]["decomposition"]["blocks"]
    assert len(blocks) == 1
    assert blocks[0]["exponent"] == 1
    assert blocks[0]["units"] == ["1", {"num": ["-1", "0", "1"], "den": ["1"]}]
    verdicts = {v["check"]: v["status"] for v in rep["verdicts"]}
    assert verdicts["congruence-identity"] == "PASS"


def test_qf_limit_not_amenable_is_precondition_error(tmp_path):
    q = write(tmp_path, "q.json", {"n": 2, "gram": [["1", "0"], ["0", "1"]]})
    fam = write(
        tmp_path,
        "fam.json",
        {
            "n": 2,
            "mat": {
                "rows": 2,
                "cols": 2,
                "entries": [["1", {"num": ["1"], "den": ["0", "1"]}], ["0", "1"]],
            },
        },
    )
    p = run("qf", "limit", q, fam)
    assert p.returncode == 2
    assert json.loads(p.stdout)["error"]["code"] == "not_amenable"


def test_degen_check_blocked_and_inconclusive(tmp_path):
    a5 = write(
        tmp_path, "a5.json", {"n": 2, "entries": [{"i": 1, "j": 1, "k": 1, "value": "1"}]}
    )
    f2 = write(tmp_path, "f2.json", algebra_f2(2))
    p = run("degen", "check", a5, f2)
    assert p.returncode == 1  # rank obstruction: blocked
    rep = json.loads(p.stdout)
    assert rep["verdicts"][0]["check"] == "rank-condition"
    assert rep["verdicts"][0]["status"] == "FAIL"

    p2 = run("degen", "check", f2, a5)
    assert p2.returncode == 0
    rep2 = json.loads(p2.stdout)
    assert rep2["verdicts"][0]["status"] == "INCONCLUSIVE"


def test_degen_check_witness_obstruction(tmp_path):
    # l111*l212 - l112*l211 vanishes on the a5 orbit but not at a4
    a5 = write(
        tmp_path, "a5.json", {"n": 2, "entries": [{"i": 1, "j": 1, "k": 1, "value": "1"}]}
    )
    a4 = write(tmp_path, "a4.json", algebra_a4())
    witness = write(
        tmp_path,
        "p.json",
        [
            {"coeff": "1", "monomial": [[1, 1, 1], [2, 1, 2]]},
            {"coeff": "-1", "monomial": [[1, 1, 2], [2, 1, 1]]},
        ],
    )
    p = run("degen", "check", a5, a4, "--witness", witness, "--samples", "50")
    assert p.returncode == 1
    rep = json.loads(p.stdout)
    verdicts = {v["check"]: v["status"] for v in rep["verdicts"]}
    assert verdicts["witness-obstruction"] == "FAIL"
    assert rep["results"]["vanishing"]["all_zero"] is True
    assert rep["results"]["witness_value_at_target"] == "1"


def test_seed_env_and_flag_agree(tmp_path):
    a4 = write(tmp_path, "a4.json", algebra_a4())
    a0 = write(tmp_path, "a0.json", {"n": 2, "entries": []})
    witness = write(
        tmp_path, "p.json", [{"coeff": "1", "monomial": [[1, 1, 1]]}]
    )
    args = ["degen", "check", a4, a0, "--witness", witness]
    by_flag = run(*args, "--seed", "7")
    by_env = run(*args, env_extra={"ORBITKIT_SEED": "7"})
    assert by_flag.stdout == by_env.stdout
    assert json.loads(by_flag.stdout)["inputs"]["seed"] == 7

    bad = run(*args, env_extra={"ORBITKIT_SEED": "not-a-number"})
    assert bad.returncode == 2


def test_pretty_mode_parses_to_the_same_report():
    plain = run("catalog", "a4")
    pretty = run("--pretty", "catalog", "a4")
    assert plain.returncode == 0
    assert pretty.returncode == 0
    assert plain.stdout != pretty.stdout
    assert json.loads(plain.stdout) == json.loads(pretty.stdout)


def test_emitted_output_reparses_as_input(tmp_path):
    # feed the limit of a contraction back in as a quadratic form input
    q = write(tmp_path, "q.json", {"n": 2, "gram": [["1", "0"], ["0", "1"]]})
    fam = write(tmp_path, "fam.json", family_diag_1_t())
    p = run("qf", "limit", q, fam)
    assert p.returncode == 0
    limit = json.loads(p.stdout)["results"]["limit"]
    path = write(tmp_path, "limit.json", limit)
    p2 = run("qf", "diagonalize", path)
    assert p2.returncode == 0
    rep = json.loads(p2.stdout)
    assert rep["results"]["rank"] == 1
