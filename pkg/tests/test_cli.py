import json

import pytest

from higgsdt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_text(capsys):
    code, out, _ = run(capsys, "compute", "--genus", "0", "--ell", "1",
                       "--rmax", "2")
    assert code == 0
    assert "curve: genus 0, twist degree 1, twisted mode" in out
    assert "rank 1" in out and "rank 2" in out
    assert "invariant      -1" in out
    assert "volume (d=1)" in out


def test_compute_json_schema(capsys):
    code, out, _ = run(capsys, "compute", "--genus", "0", "--ell", "1",
                       "--rmax", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == 1
    assert payload["params"] == {"genus": 0, "ell": 1, "mode": "twisted",
                                 "rmax": 2}
    assert [e["r"] for e in payload["results"]] == [1, 2]
    for entry in payload["results"]:
        assert set(entry) == {"r", "idt", "idt_t1", "omega", "volume"}
        assert set(entry["omega"]) == {"sign", "half_power_exponent", "poly"}
        assert entry["volume"] is not None
    assert payload["results"][0]["idt"] == [["1", "-1"]]


def test_compute_json_canonical(capsys):
    code, out, _ = run(capsys, "compute", "--genus", "1", "--canonical",
                       "--rmax", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["params"]["mode"] == "canonical"
    assert payload["params"]["ell"] == 0
    entry = payload["results"][0]
    assert entry["volume"] is None
    assert "A" in entry


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "--genus", "0", "--ell", "2",
                       "--rmax", "1", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "r,field,monomial,coefficient"
    assert all(ln.startswith("1,") for ln in lines[1:])
    assert "1,idt,1,1" in lines  # rank-1 invariant is +1 for even twist


def test_compute_latex(capsys):
    code, out, _ = run(capsys, "compute", "--genus", "1", "--ell", "1",
                       "--rmax", "1", "--format", "latex")
    assert code == 0
    assert "\\alpha_{1}" in out


def test_compute_empty_table(capsys):
    code, out, _ = run(capsys, "compute", "--genus", "0", "--ell", "1",
                       "--rmax", "0")
    assert code == 0
    assert "(empty table: rmax = 0)" in out


def test_compute_output_is_stable(capsys):
    _, first, _ = run(capsys, "compute", "--genus", "1", "--ell", "1",
                      "--rmax", "2", "--format", "json")
    _, second, _ = run(capsys, "compute", "--genus", "1", "--ell", "1",
                       "--rmax", "2", "--format", "json")
    assert first == second


def test_compute_usage_errors(capsys):
    for argv in (["compute", "--genus", "1"],
                 ["compute", "--genus", "0", "--canonical"],
                 ["compute", "--genus", "2", "--canonical", "--ell", "3"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
        capsys.readouterr()


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    assert "partitions" in out and "oracle" in out


def test_verify_subset(capsys):
    code, out, err = run(capsys, "verify", "--suite", "partitions",
                         "--suite", "explog")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") >= 2
    assert "0 failed" in err


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_oracle_match(capsys):
    code, out, _ = run(capsys, "oracle-p1", "--rank", "1", "--deg", "0",
                       "--ell", "1", "--q", "2")
    assert code == 0
    assert "MATCH" in out and "MISMATCH" not in out


def test_oracle_rejects_bad_field(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["oracle-p1", "--rank", "1", "--deg", "0", "--ell", "1",
              "--q", "6"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_specialize_by_trace(capsys):
    code, out, _ = run(capsys, "specialize", "--q0", "2", "--trace", "0",
                       "--ell", "1", "--rmax", "2")
    assert code == 0
    assert "point counts [3, 9, 9]" in out
    assert "rank 1 value at t = 1: -3" in out
    assert "rank 2 value at t = 1:" in out


def test_specialize_by_eigenvalue(capsys):
    code, out, _ = run(capsys, "specialize", "--q0", "4", "--weil", "2j",
                       "--ell", "1", "--rmax", "1")
    assert code == 0
    assert "rank 1 value at t = 1: -5" in out


def test_specialize_canonical_counts_points(capsys):
    code, out, _ = run(capsys, "specialize", "--q0", "2", "--trace", "1",
                       "--canonical", "--rmax", "2")
    assert code == 0
    assert "rank 1 value at t = 1: 2" in out
    assert "rank 2 value at t = 1: 2" in out


def test_specialize_needs_curve_data(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["specialize", "--q0", "2"])
    assert exc.value.code == 2
    capsys.readouterr()
