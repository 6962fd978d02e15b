import io
import json
import math

import pytest

from egfasym.cli import main, parse_orders
from egfasym.series import egf_coefficients
from egfasym.oeis import bundled_fixture

A143405 = ["--m", "1", "--b", "2", "--d", "1", "--r", "-1", "--s", "0"]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_coeffs_csv():
    code, out, _ = run("coeffs", *A143405, "--terms", "2")
    assert code == 0
    assert out.splitlines() == ["n,value", "0,1", "1,1", "2,4"]


def test_coeffs_terms_zero():
    code, out, _ = run("coeffs", "--m", "1/3", "--b", "3", "--d", "1", "--r", "1", "--s", "-4/3", "--terms", "0")
    assert code == 0 and out.splitlines() == ["n,value", "0,1"]


def test_coeffs_order_violation():
    code, out, err = run("coeffs", "--m", "1", "--b", "1", "--d", "1", "--r", "1", "--terms", "3")
    assert code == 2 and "OrderViolation" in err and out == ""


def test_coeffs_jsonl_and_table():
    _, out, _ = run("coeffs", "--oeis", "A002872", "--terms", "3", "--out", "jsonl")
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[3] == {"n": 3, "value": "31"}
    _, out, _ = run("coeffs", "--oeis", "A002872", "--terms", "1", "--out", "table")
    assert out.splitlines() == ["0\t1", "1\t2"]


def test_coeffs_float_mode():
    code, out, _ = run("coeffs", *A143405, "--terms", "3", "--float", "--digits", "20")
    assert code == 0
    assert out.splitlines()[-1] == "3,17.000000000000000000"


def test_asymp_simplified_close_to_exact():
    code, out, _ = run("asymp", *A143405, "--formula", "simplified", "--n", "1000")
    assert code == 0
    header, row = out.splitlines()
    assert header == "n,formula,z,log10_value,value"
    fields = row.split(",")
    assert fields[0] == "1000" and fields[1] == "simplified"
    exact = egf_coefficients(bundled_params("A143405"), 1000).values[1000].numerator
    assert float(fields[3]) > 0
    assert abs(float(fields[3]) / math.log10(exact) - 1) < 0.01


def bundled_params(anum):
    from egfasym.families import lookup

    return lookup(anum)


def test_asymp_regime_gate():
    code, _, err = run("asymp", "--m", "1", "--b", "3", "--d", "2", "--r", "1", "--formula", "simplified", "--n", "10")
    assert code == 2 and "full-only" in err


@pytest.mark.parametrize("b, d", [("3", "2"), ("2", "1"), ("3", "1"), ("5/2", "1")])
def test_asymp_full_total(b, d):
    code, out, err = run("asymp", "--m", "1", "--b", b, "--d", d, "--r", "-1/2", "--formula", "full", "--n", "50", "--n", "60", "--out", "jsonl")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["n"] for r in rows] == [50, 60]
    if b == "5/2":
        assert "outside the worked examples" in err


def test_asymp_hayman_reports_z():
    code, out, _ = run("asymp", "--oeis", "A002874", "--formula", "hayman", "--n", "100", "--out", "jsonl")
    row = json.loads(out)
    assert code == 0 and row["formula"] == "hayman" and float(row["z"]) > 0


def test_parse_orders():
    assert parse_orders("10:100:10") == list(range(10, 101, 10))
    assert parse_orders("5,7") == [5, 7]
    assert parse_orders("3:5") == [3, 4, 5]


def test_bad_orders_usage_error():
    code, _, err = run("verify", "--oeis", "A143405", "--offline", "--orders", "a:b")
    assert code == 2


def test_missing_params():
    code, _, err = run("coeffs", "--terms", "3")
    assert code == 2
    code, _, err = run("coeffs", "--m", "1", "--terms", "3")
    assert code == 2


def test_unmapped_sequence():
    code, _, err = run("coeffs", "--oeis", "A036074", "--terms", "3")
    assert code == 2 and "not tabulated" in err


def test_verify_offline_fixture():
    code, out, _ = run("verify", "--oeis", "A143405", "--offline", "--terms", "300", "--orders", "10,20")
    assert code == 0
    assert "matched 301/301" in out
    table = [line.split("\t") for line in out.splitlines() if not line.startswith("#")]
    assert [int(o) for o, _ in table] == [10, 20]
    for _, v in table:
        assert len(v.replace(".", "")) == 40
        assert 1.0 < float(v) < 1.05


def test_verify_a002874_below_one():
    code, out, _ = run("verify", "--oeis", "A002874", "--offline", "--terms", "400", "--orders", "5,10,20")
    assert code == 0
    vals = [float(line.split("\t")[1]) for line in out.splitlines() if not line.startswith("#")]
    assert all(v < 1 for v in vals)
    assert vals == sorted(vals)


def test_verify_unreachable_host_falls_back(tmp_path, monkeypatch):
    import egfasym.oeis as oeis

    monkeypatch.setattr(oeis.time, "sleep", lambda s: None)
    monkeypatch.setenv("OEIS_BASE_URL", "http://127.0.0.1:9")
    code, out, err = run("verify", "--oeis", "A002872", "--cache-dir", str(tmp_path), "--terms", "200", "--orders", "10")
    assert code == 0 and "using bundled fixture" in err and "matched 201/201" in out


def test_verify_warm_cache_offline(tmp_path, monkeypatch):
    cache = tmp_path / "bfiles"
    cache.mkdir()
    (cache / "b355291.txt").write_text(bundled_fixture("A355291").serialize())
    monkeypatch.setenv("OEIS_BASE_URL", "http://127.0.0.1:9")
    code, out, err = run("verify", "--oeis", "A355291", "--cache-dir", str(tmp_path), "--terms", "100", "--orders", "10")
    assert code == 0 and err == "" and "cache/network" in out


def test_verify_mismatch_exit_3(tmp_path):
    entries = list(bundled_fixture("A143405").entries[:60])
    entries[7] = (7, entries[7][1] + 1)
    path = tmp_path / "b143405.txt"
    path.write_text("".join(f"{i} {v}\n" for i, v in entries))
    code, out, _ = run("verify", *A143405, "--bfile", str(path), "--terms", "50", "--orders", "5")
    assert code == 3 and "MISMATCH at index 7" in out


def test_verify_simplified_rejected_for_full_only(tmp_path):
    path = tmp_path / "b.txt"
    path.write_text("0 1\n")
    code, _, err = run("verify", "--m", "1", "--b", "3", "--d", "2", "--r", "1", "--bfile", str(path), "--formula", "simplified")
    assert code == 2 and "FullFormulaRequired" in err and "full-only" in err


def test_verify_is_deterministic():
    args = ("verify", "--oeis", "A355291", "--offline", "--terms", "120", "--orders", "5,10")
    assert run(*args) == run(*args)


def test_help_documents_columns(capsys):
    assert main(["coeffs", "--help"]) == 0
    assert "n,value" in capsys.readouterr().out
