import json

from ap3lattice import verify
from ap3lattice.formulas import verify_all as verify_all_from_formulas


def test_small_run_all_pass():
    reports = verify.verify_all(4, budget=300)
    assert reports and all(r.status == "pass" for r in reports)
    names = {(r.quantity, r.n): r for r in reports}
    assert names[("f_ideals", 4)].enumerated == 8
    assert names[("sigma_Mn", 4)].enumerated == 2
    assert names[("g_Kn", 4)].enumerated == 3
    assert verify.exit_status(reports) == 0


def test_degenerate_sizes():
    reports = verify.verify_all(2, budget=300)
    got = {r.quantity: r.enumerated for r in reports}
    assert got["f_ideals"] == 1 and got["sigma_ideals"] == 0 and got["g_Kn"] == 1
    assert verify.exit_status(reports) == 0


def test_zero_budget_skips():
    reports = verify.verify_all(3, budget=0)
    assert reports and all(r.status == "skipped" for r in reports)
    assert verify.exit_status(reports) == 3


def test_fail_is_reported(monkeypatch):
    monkeypatch.setattr(verify.formulas, "g_closed", lambda n: -1)
    reports = verify.verify_all(3, budget=300, only=["g_Kn"])
    assert {r.status for r in reports} == {"fail"}
    assert verify.exit_status(reports) == 1


def test_parallel_output_is_identical():
    only = ["f_ideals", "F_Kn", "theta_iso", "Un_e"]
    serial = verify.verify_all(7, budget=300, jobs=1, only=only)
    parallel = verify.verify_all(7, budget=300, jobs=3, only=only)
    assert verify.format_jsonl(serial) == verify.format_jsonl(parallel)


def test_formats():
    reports = verify.verify_all(4, budget=300, only=["F_Kn_parts", "F_Mn"])
    for line in verify.format_jsonl(reports).splitlines():
        row = json.loads(line)
        assert set(row) == {"quantity", "n", "closed", "enumerated", "status"}
    table = verify.format_table(reports)
    assert table.splitlines()[0].split()[:3] == ["quantity", "n", "status"]
    assert table.endswith("0 failed, 0 skipped")


def test_scope_and_entry_point():
    run, beyond = verify.plan(8)
    assert ("JPn_Mn", 7) in run and ("JPn_Mn", 8) in beyond
    assert [r.quantity for r in verify_all_from_formulas(2, budget=60)][0] == "f_ideals"
