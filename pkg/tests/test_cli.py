import json
import os
import subprocess
import sys

from revcode import cli, oracle

REP3 = "n=3 k=1\n111\n"

COUNT_N3_BOTH = """\
report=count
n=3
contains_one=false
mode=both
entry t=0 s=1 paper=5 verified=5
entry t=0 s=2 paper=1 verified=1
entry t=1 s=0 paper=4 verified=4
entry t=1 s=1 paper=4 verified=1 discrepancy=true
total paper=14 verified=11
zero_code=excluded
discrepancies=(1,1)
"""

ENUM_N3_SEMISIMPLE = (
    "n=3 k=1\n010\n"
    "\nn=3 k=1\n101\n"
    "\nn=3 k=1\n111\n"
    "\nn=3 k=1\n1a1\n"
    "\nn=3 k=1\n1b1\n"
)

VERIFY_N3 = """\
report=verify
n=3
plain_oracle_total=11
plain_enumerator_total=11
plain_counter_total=11
contains_one_oracle_total=3
contains_one_enumerator_total=3
contains_one_counter_total=3
cells_checked=8
mismatches=0
result=PASS
"""

DISTANCE_REP3 = """\
report=distance
n=3 k=1 t=0 s=1
d_min=3
d_socle_hat=1
bound_socle=3
bound_case=SOC_NOT_IN_I
bound_singleton=3
tighter_than_singleton=false
subset_of_i=false
"""

DNA_REP3 = """\
report=dna
n=3 k=1
is_reversible=true
is_reversible_complementary=true
reverse_margin=3
reverse_complement_margin=0
self_reverse_min=0
strands=4
"""


def run_cli(*args: str, env_extra: dict | None = None) -> subprocess.CompletedProcess:
    env = os.environ.copy()
    env.pop("REVCODE_CEILING", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "revcode", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_count_table_text():
    proc = run_cli("count", "--n", "3")
    assert proc.returncode == 0
    assert proc.stdout == COUNT_N3_BOTH


def test_count_single_cell():
    proc = run_cli("count", "--n", "3", "--t", "1", "--s", "1")
    assert proc.returncode == 0
    assert "entry t=1 s=1 paper=4 verified=1 discrepancy=true" in proc.stdout
    assert "total paper=4 verified=1" in proc.stdout
    assert "entry t=0" not in proc.stdout


def test_count_cell_flags_must_pair():
    proc = run_cli("count", "--n", "3", "--t", "1")
    assert proc.returncode == 2


def test_count_json_uses_decimal_strings():
    proc = run_cli("count", "--n", "3", "--json")
    payload = json.loads(proc.stdout)
    assert payload["totals"] == {"paper": "14", "verified": "11"}
    assert payload["discrepancies"] == [[1, 1]]
    cell = [e for e in payload["entries"] if (e["t"], e["s"]) == (1, 1)][0]
    assert cell["counts"] == {"paper": "4", "verified": "1"}
    assert cell["discrepancy"] is True


def test_count_iso_types_headline():
    proc = run_cli(
        "count", "--n", "9", "--contains-one", "--mode", "verified", "--iso-types"
    )
    assert proc.returncode == 0
    assert proc.stdout.rstrip("\n").splitlines()[-1] == "iso_types=15"


def test_enumerate_semisimple_records():
    proc = run_cli("enumerate", "--n", "3", "--t", "0", "--s", "1")
    assert proc.returncode == 0
    assert proc.stdout == ENUM_N3_SEMISIMPLE


def test_enumerate_limit_is_prefix():
    full = run_cli("enumerate", "--n", "3", "--t", "0", "--s", "1").stdout
    two = run_cli("enumerate", "--n", "3", "--t", "0", "--s", "1", "--limit", "2")
    assert two.stdout == "n=3 k=1\n010\n\nn=3 k=1\n101\n"
    assert full.startswith(two.stdout)


def test_enumerate_reruns_byte_identical():
    args = ("enumerate", "--n", "4", "--t", "1", "--s", "1")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.count("n=4 k=3") == 5


def test_enumerate_generator_format_spans_same_codes():
    from revcode.codefile import parse_code

    matrix = run_cli("enumerate", "--n", "4", "--t", "1", "--s", "1").stdout
    gener = run_cli(
        "enumerate", "--n", "4", "--t", "1", "--s", "1", "--format", "generator"
    ).stdout
    canon = [parse_code(rec + "\n") for rec in matrix.strip("\n").split("\n\n")]
    structured = [parse_code(rec + "\n") for rec in gener.strip("\n").split("\n\n")]
    assert structured == canon


def test_enumerate_dna_format():
    proc = run_cli(
        "enumerate", "--n", "3", "--t", "0", "--s", "1",
        "--contains-one", "--format", "dna",
    )
    assert proc.stdout == "AAA\nTTT\nCCC\nGGG\n"


def test_distance_from_file(tmp_path):
    path = tmp_path / "rep3.code"
    path.write_text(REP3, encoding="ascii")
    proc = run_cli("distance", "--in", str(path))
    assert proc.returncode == 0
    assert proc.stdout == DISTANCE_REP3


def test_distance_type_sweep_and_json():
    proc = run_cli("distance", "--n", "3", "--t", "0", "--s", "1", "--json")
    assert proc.returncode == 0
    reports = json.loads(proc.stdout)["reports"]
    assert len(reports) == 5
    assert all(r["bound_singleton"] == 3 for r in reports)


def test_distance_needs_source():
    proc = run_cli("distance", "--n", "3")
    assert proc.returncode == 2
    assert "error:" in proc.stderr


def test_verify_passes():
    proc = run_cli("verify", "--n", "3")
    assert proc.returncode == 0
    assert proc.stdout == VERIFY_N3


def test_verify_json_payload():
    proc = run_cli("verify", "--n", "2", "--json")
    payload = json.loads(proc.stdout)
    assert payload["result"] == "PASS"
    assert payload["filters"]["plain"]["oracle"] == 2
    assert payload["filters"]["contains_one"]["oracle"] == 2


def test_verify_reports_forced_mismatch(monkeypatch, capsys):
    real = oracle.oracle_count_table

    def doctored(n, contains_one):
        table = real(n, contains_one)
        table.entries[0].counts["oracle"] += 1
        return table

    monkeypatch.setattr(oracle, "oracle_count_table", doctored)
    rc = cli.main(["verify", "--n", "2"])
    out = capsys.readouterr().out
    assert rc == 1
    assert "result=FAIL" in out
    assert "mismatch filter=plain" in out


def test_dna_report_and_export(tmp_path):
    path = tmp_path / "rep3.code"
    path.write_text(REP3, encoding="ascii")
    report = run_cli("dna", "--in", str(path))
    assert report.returncode == 0
    assert report.stdout == DNA_REP3
    export = run_cli("dna", "--in", str(path), "--export")
    assert export.stdout == "AAA\nTTT\nCCC\nGGG\n"
    as_json = run_cli("dna", "--in", str(path), "--json")
    assert json.loads(as_json.stdout)["reverse_margin"] == 3


def test_output_flag_writes_file(tmp_path):
    target = tmp_path / "table.txt"
    proc = run_cli("count", "--n", "3", "--output", str(target))
    assert proc.returncode == 0
    assert proc.stdout == ""
    assert target.read_text(encoding="ascii") == COUNT_N3_BOTH


def test_usage_errors_exit_2(tmp_path):
    assert run_cli("count", "--n", "0").returncode == 2
    assert run_cli("distance", "--in", str(tmp_path / "missing.code")).returncode == 2
    assert run_cli().returncode == 2
    bad = run_cli("enumerate", "--n", "3", "--t", "0", "--s", "1",
                  env_extra={"REVCODE_CEILING": "abc"})
    assert bad.returncode == 2


def test_ceiling_guard_exits_3(tmp_path):
    proc = run_cli("enumerate", "--n", "3", "--t", "0", "--s", "1",
                   env_extra={"REVCODE_CEILING": "3"})
    assert proc.returncode == 3
    assert "error:" in proc.stderr
    path = tmp_path / "rep3.code"
    path.write_text(REP3, encoding="ascii")
    sweep = run_cli("dna", "--in", str(path), env_extra={"REVCODE_CEILING": "3"})
    assert sweep.returncode == 3
