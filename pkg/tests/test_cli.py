import io
import json
import pathlib

from starsemi import ModelSpec, INVOLUTION, POE, check_all, search_counterexample
from starsemi.cli import run
from starsemi.fileformat import load_structure, serialize_structure
from starsemi.structure import validate_structure

STRUCTURES = pathlib.Path(__file__).resolve().parent.parent / "structures"


def run_cli(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_validate_example2_exit_zero():
    code, out = run_cli("validate", str(STRUCTURES / "example2.txt"))
    assert code == 0
    assert "po-semigroup" in out and "involution" in out


def test_validate_expect_missing_tier_exit_one():
    code, out = run_cli("validate", str(STRUCTURES / "example2.txt"), "--expect", "poe")
    assert code == 1
    assert "MISSING" in out


def test_validate_expect_ok():
    code, _ = run_cli("validate", str(STRUCTURES / "example2.txt"),
                      "--expect", "involution,po-semigroup")
    assert code == 0


def test_validate_parse_error_exit_two(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("n 2\nmult\n0 0\n0 9\n")
    code, _ = run_cli("validate", str(bad))
    assert code == 2


def test_missing_file_exit_two():
    code, _ = run_cli("validate", "/nonexistent/f.txt")
    assert code == 2


def test_usage_error_exit_two():
    code, _ = run_cli("search")  # missing required --order
    assert code == 2


def test_check_onepoint_all_claims():
    code, out = run_cli("check", str(STRUCTURES / "onepoint.txt"), "--claims", "all")
    assert code == 0
    assert "fail" not in out.split()


def test_check_unknown_claim_exit_two():
    code, _ = run_cli("check", str(STRUCTURES / "onepoint.txt"), "--claims", "prop99")
    assert code == 2


def test_check_json_round_trips_reports():
    path = STRUCTURES / "chain2.txt"
    code, out = run_cli("check", str(path), "--json")
    assert code == 0
    doc = json.loads(out)
    S, _ = validate_structure(load_structure(path))
    from starsemi import report_record
    expected = [report_record(r, S) for r in check_all(S)]
    assert doc["reports"] == expected


def test_check_detects_failure_exit_one(tmp_path):
    spec = ModelSpec(order=3, required_tiers=frozenset({INVOLUTION, POE}))
    sweep = search_counterexample(spec, ("mut-prop15-all",))
    model, _ = sweep.counterexample
    f = tmp_path / "cx.txt"
    f.write_text(serialize_structure(model))
    code, out = run_cli("check", str(f), "--claims", "mut-prop15-all")
    assert code == 1
    assert "witness" in out


def test_classify_chain2():
    code, out = run_cli("classify", str(STRUCTURES / "chain2.txt"))
    assert code == 0
    assert "idempotent" in out and "star_semiprime" in out


def test_classify_without_top_exit_one():
    code, _ = run_cli("classify", str(STRUCTURES / "example2.txt"))
    assert code == 1


def test_classify_json():
    code, out = run_cli("classify", str(STRUCTURES / "chain2.txt"), "--json")
    doc = json.loads(out)
    assert doc["profile"]["star_regular"] is True
    assert {e["element"] for e in doc["elements"]} == {"0", "e"}


def test_filters_output():
    code, out = run_cli("filters", str(STRUCTURES / "chain2.txt"))
    assert code == 0
    assert "N(0) = {0, e}" in out
    assert "N(e) = {e}" in out


def test_filters_json_without_involution(tmp_path):
    f = tmp_path / "nostar.txt"
    f.write_text("n 2\nmult\n0 0\n0 1\nleq\n0 <= 1\n")
    code, out = run_cli("filters", str(f), "--json")
    assert code == 0
    doc = json.loads(out)
    assert all(row["window"] is None for row in doc["filters"])


def test_search_order3_sweep_exit_zero():
    code, out = run_cli("search", "--order", "3", "--tiers", "involution,poe",
                        "--claims", "all")
    assert code == 0
    assert "34 model" in out


def test_search_counterexample_exit_one():
    code, out = run_cli("search", "--order", "2", "--tiers", "involution,poe",
                        "--claims", "mut-prop17-all-idem")
    assert code == 1
    assert "COUNTEREXAMPLE" in out


def test_search_json_and_catalog(tmp_path):
    outdir = tmp_path / "cat"
    code, out = run_cli("search", "--order", "2", "--tiers", "involution,poe",
                        "--json", "--out", str(outdir))
    assert code == 0
    doc = json.loads(out)
    assert doc["models"] == 4
    assert (outdir / "index.txt").exists()
    assert len(list(outdir.glob("model_*.txt"))) == 4


def test_search_unknown_tier_exit_two():
    code, _ = run_cli("search", "--order", "2", "--tiers", "involutionn")
    assert code == 2


def test_orders_example2():
    code, out = run_cli("orders", str(STRUCTURES / "example2.txt"))
    assert code == 0
    assert "5 compatible order(s)" in out
    assert "(equality)" in out


def test_orders_require_greatest():
    code, out = run_cli("orders", str(STRUCTURES / "example2.txt"), "--require-greatest")
    assert code == 0
    assert "3 compatible order(s)" in out


def test_orders_json():
    code, out = run_cli("orders", str(STRUCTURES / "example2.txt"), "--json")
    doc = json.loads(out)
    assert doc["count"] == 5
    assert [] in doc["orders"]  # the equality order has no covering pairs


def test_candidate_file_validates_with_poe():
    code, out = run_cli("validate", str(STRUCTURES / "example2_candidate_order.txt"),
                        "--expect", "involution,poe,po-semigroup")
    assert code == 0


def test_help_and_version_exit_zero():
    assert run_cli("--help")[0] == 0
    assert run_cli("--version")[0] == 0
