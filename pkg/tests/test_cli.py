import json
import subprocess
import sys

import pytest

from skewhook import config
from skewhook.cli import main, render_table
from skewhook.errors import GuardError, ValidationError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_count_syt_example(capsys):
    r = run_json(capsys, "count-syt", "--lambda", "2,2,2,1", "--mu", "1,1", "--method", "nhlf")
    assert r["f"] == "9" and r["summands"] == 3
    assert r["inputs"] == {"lambda": [2, 2, 2, 1], "mu": [1, 1]}


@pytest.mark.parametrize("method,summands", [("oo", 6), ("brute", 9), ("jt", 8)])
def test_count_syt_methods(capsys, method, summands):
    r = run_json(capsys, "count-syt", "--lambda", "2,2,2,1", "--mu", "1,1", "--method", method)
    assert r["f"] == "9" and r["summands"] == summands


def test_excited_count_example(capsys):
    assert run_json(capsys, "excited", "count", "--lambda", "4,4,4,2", "--mu", "3,1")["count"] == "7"


def test_excited_list(capsys):
    r = run_json(capsys, "excited", "list", "--lambda", "2,2,2,1", "--mu", "1,1")
    assert sorted(d["a"] for d in r["diagrams"]) == [4, 6, 8]
    assert all(len(d["cells"]) == 2 for d in r["diagrams"])


def test_pleasant_count_example(capsys):
    assert run_json(capsys, "pleasant", "count", "--lambda", "4,4,4", "--mu", "2")["count"] == "2816"


@pytest.mark.parametrize("method", ["formula", "shadow", "excited", "brute"])
def test_pleasant_count_methods(capsys, method):
    r = run_json(capsys, "pleasant", "count", "--lambda", "2,2", "--mu", "1", "--method", method)
    assert r["count"] == "12"


def test_pleasant_list(capsys):
    r = run_json(capsys, "pleasant", "list", "--lambda", "2,2", "--mu", "1")
    assert len(r["diagrams"]) == 12 and [] in r["diagrams"]


def test_hg_apply_invert_round_trip(capsys):
    pi = [[0, 1, 3, 4], [1, 3, 5, 6], [3, 6, 7], [3]]
    r = run_json(capsys, "hg", "apply", "--tableau", json.dumps(pi))
    assert r["array"] == [[0, 2, 1, 1], [1, 1, 1, 2], [2, 1, 1], [0]]
    assert r["weight"] == "42"
    back = run_json(capsys, "hg", "invert", "--array", json.dumps(r["array"]))
    assert back["tableau"] == pi


def test_hg_skew(capsys):
    r = run_json(capsys, "hg", "apply", "--tableau", "[[null,1],[0,2]]", "--mu", "1")
    back = run_json(capsys, "hg", "invert", "--array", json.dumps(r["array"]), "--mu", "1")
    assert back["tableau"] == [[None, 1], [0, 2]]


def test_rsk(capsys):
    r = run_json(capsys, "rsk", "--matrix", "[[1,2,0],[1,1,1]]")
    assert r["insertion"] == [[1, 1, 2, 2, 3], [2]]
    assert r["shape"] == [5, 1]


def test_qseries_kinds(capsys):
    base = ("--lambda", "2,2", "--mu", "1", "--deg", "6")
    ssyt = run_json(capsys, "qseries", "ssyt", *base)["series"]
    assert ssyt == run_json(capsys, "qseries", "ssyt", *base, "--method", "brute")["series"]
    rpp = run_json(capsys, "qseries", "rpp", *base, "--method", "pleasant")["series"]
    assert rpp == run_json(capsys, "qseries", "rpp", *base, "--method", "brute")["series"]
    tr = run_json(capsys, "qseries", "trace-rpp", *base)["series"]
    assert tr == run_json(capsys, "qseries", "trace-rpp", *base, "--method", "brute")["series"]
    ts = run_json(capsys, "qseries", "trace-ssyt", *base)["series"]
    assert ts == run_json(capsys, "qseries", "trace-ssyt", *base, "--method", "brute")["series"]
    assert ssyt["N"] == 6 and all(isinstance(c, str) for c in ssyt["coeffs"])


def test_qseries_jt_numerator(capsys):
    r = run_json(capsys, "qseries", "jt", "--lambda", "2,2,2,1", "--mu", "1,1", "--deg", "10")
    assert r["numerator"]["coeffs"] == ["0", "0", "0", "0", "1", "1", "2", "2", "2", "1", "0"]
    assert r["nonzero_terms"] == 8


def test_qseries_bad_method(capsys):
    code, _, err = run(capsys, "qseries", "jt", "--lambda", "2", "--method", "brute")
    assert code == 3 and json.loads(err)["error"]["category"] == "validation"


def test_bounded(capsys):
    base = ("--lambda", "3,3,2", "--mu", "2,1", "--m", "3", "--deg", "10")
    a = run_json(capsys, "bounded", *base)
    b = run_json(capsys, "bounded", *base, "--method", "brute")
    assert a["series"] == b["series"]
    code, _, err = run(capsys, "bounded", "--lambda", "2,2", "--m", "2")
    assert code == 3


def test_oo(capsys):
    r = run_json(capsys, "oo", "--lambda", "2,2,2,1", "--mu", "1,1")
    assert r == {"f": "9", "summands": 6, "weight_sum": "27", "inputs": {"lambda": [2, 2, 2, 1], "mu": [1, 1]}}


def test_verify_small_suite(capsys):
    r = run_json(capsys, "verify", "--suite", "factorial", "--max-cells", "4")
    assert r["suites"][0]["status"] == "ok"
    assert "elapsed" not in r["suites"][0]
    r = run_json(capsys, "verify", "--suite", "pleasant", "--max-cells", "4", "--timing")
    assert "elapsed" in r["suites"][0]


def test_bench(capsys):
    r = run_json(capsys, "bench", "--shape", "2,2,2,1/1,1", "--shape", "4,3,1/1")
    rows = {(row["shape"], row["method"]): row for row in r["rows"]}
    ex = "(2,2,2,1)/(1,1)"
    assert rows[(ex, "nhlf")]["summands"] == 3 and rows[(ex, "oo")]["summands"] == 6
    assert {row["result"] for row in r["rows"] if row["shape"] == ex} == {"9"}
    # lambda/(1): diagonal cells vs rows
    assert rows[("(4,3,1)/(1)", "nhlf")]["summands"] == 2
    assert rows[("(4,3,1)/(1)", "oo")]["summands"] == 3


def test_bench_empty(capsys):
    code, out, _ = run(capsys, "bench")
    assert code == 0 and json.loads(out) == {"rows": []}
    code, out, _ = run(capsys, "bench", "--format", "table")
    assert code == 0 and out == ""


def test_bench_mismatch_is_invariant_violation(capsys, monkeypatch):
    import skewhook.cli as cli

    real = cli.count_syt
    monkeypatch.setattr(cli, "count_syt", lambda s, m: (real(s, m)[0] + (m == "oo"), 1))
    code, _, err = run(capsys, "bench", "--shape", "2,1")
    assert code == 5 and json.loads(err)["error"]["category"] == "invariant-violation"


def test_validation_error_names_row(capsys):
    code, out, err = run(capsys, "count-syt", "--lambda", "2,1", "--mu", "1,2")
    assert code == 3 and out == ""
    e = json.loads(err)["error"]
    assert e["category"] == "validation" and "row 2" in e["message"]


def test_bad_partition_text(capsys):
    code, _, err = run(capsys, "count-syt", "--lambda", "2,x")
    assert code == 3
    code, _, _ = run(capsys, "count-syt", "--lambda", "1,2")
    assert code == 3


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "count-syt")[0] == 2
    assert run(capsys, "count-syt", "--lambda", "2", "--method", "nope")[0] == 2
    assert run(capsys, "hg", "apply")[0] == 2


def test_guard_error_reports_guard(capsys):
    code, _, err = run(capsys, "pleasant", "list", "--lambda", "5,5,5,5", "--guard", "pleasant_cells=10")
    assert code == 4
    e = json.loads(err)["error"]
    assert e["category"] == "guard" and e["guard"] == "pleasant_cells" and e["limit"] == 10 and e["size"] == 20
    # the override does not leak into later calls
    assert config.get_guard("pleasant_cells") == config.DEFAULT_GUARDS["pleasant_cells"]


def test_guard_env_var(capsys, monkeypatch):
    monkeypatch.setenv(config.ENV_VAR, "series_degree=5")
    code, _, err = run(capsys, "qseries", "ssyt", "--lambda", "2", "--deg", "6")
    assert code == 4 and json.loads(err)["error"]["guard"] == "series_degree"
    monkeypatch.setenv(config.ENV_VAR, "bogus=1")
    assert run(capsys, "count-syt", "--lambda", "2")[0] == 3


def test_negative_degree(capsys):
    assert run(capsys, "qseries", "ssyt", "--lambda", "2", "--deg", "-1")[0] == 3


def test_determinism(capsys):
    argv = ("excited", "list", "--lambda", "4,4,4,2", "--mu", "3,1")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]
    argv = ("bench", "--shape", "3,3/1")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_table_format(capsys):
    code, out, _ = run(capsys, "count-syt", "--lambda", "2,2,2,1", "--mu", "1,1", "--format", "table")
    assert code == 0 and "f: 9" in out.splitlines()
    text = render_table({"rows": [{"a": "1", "bb": 22}, {"a": "333", "bb": 4}]})
    assert text.splitlines() == ["a    bb", "1    22", "333  4"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "skewhook", "count-syt", "--lambda", "2,2", "--mu", "1"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["f"] == "2"


# ------------------------------------------------------------ config


def test_guard_overrides_context():
    with config.guard_overrides(syt_enum=3):
        assert config.get_guard("syt_enum") == 3
        with pytest.raises(GuardError) as e:
            config.check_guard("syt_enum", 4)
        assert (e.value.guard, e.value.limit, e.value.size) == ("syt_enum", 3, 4)
    assert config.get_guard("syt_enum") == config.DEFAULT_GUARDS["syt_enum"]


def test_guard_parsing():
    with config.guard_overrides():
        config.apply_overrides("syt_enum=5, maj_cells=7")
        assert config.get_guard("syt_enum") == 5 and config.get_guard("maj_cells") == 7
    for bad in ("syt_enum", "nope=1", "syt_enum=x"):
        with pytest.raises(ValidationError):
            config.apply_overrides(bad)
    with pytest.raises(ValidationError):
        config.set_guard("nope", 1)
