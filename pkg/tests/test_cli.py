import json
import subprocess
import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"


def run_cli(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "phasequark", *args],
        capture_output=True,
        text=True,
        **kwargs,
    )


# -- exit-code contract ------------------------------------------------------


def test_verify_all_passes_with_exit_zero():
    result = run_cli("verify", "--suite", "all")
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report["all_passed"] is True
    assert report["seed"] == 1729
    assert len(report["checks"]) == 32
    assert all(c["status"] == "pass" for c in report["checks"])


def test_unreachable_tolerance_fails_with_exit_one():
    result = run_cli("verify", "--suite", "clifford", "--tol", "1e-30")
    assert result.returncode == 1
    report = json.loads(result.stdout)
    assert report["all_passed"] is False
    failed = [c["name"] for c in report["checks"] if c["status"] == "fail"]
    assert "clifford/random-basis-similarity" in failed


def test_unknown_suite_is_usage_error():
    result = run_cli("verify", "--suite", "nope")
    assert result.returncode == 2


def test_missing_subcommand_is_usage_error():
    result = run_cli()
    assert result.returncode == 2


def test_malformed_spec_file_is_input_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    result = run_cli("spectrum", str(bad))
    assert result.returncode == 2
    assert "error" in json.loads(result.stdout)


def test_invalid_spec_fields_is_input_error(tmp_path):
    bad = tmp_path / "bad_kind.json"
    bad.write_text(json.dumps({"kind": "ColorR", "m": -1}))
    result = run_cli("spectrum", str(bad))
    assert result.returncode == 2
    assert "m must be" in json.loads(result.stdout)["error"]


def test_unknown_export_label_is_input_error():
    result = run_cli("export", "Q7")
    assert result.returncode == 2


def test_transform_rejects_short_input():
    result = run_cli("transform", "--pairing", "R", "--input", "1,2,3")
    assert result.returncode == 2


def test_transform_generator_requires_angle():
    result = run_cli("transform", "--generator", "F2", "--input", "1,2,3,4,5,6")
    assert result.returncode == 2


# -- determinism -------------------------------------------------------------


def test_reports_are_byte_identical_for_same_seed():
    first = run_cli("verify", "--suite", "composite", "--seed", "7")
    second = run_cli("verify", "--suite", "composite", "--seed", "7")
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    different = run_cli("verify", "--suite", "composite", "--seed", "8")
    assert different.stdout != first.stdout


# -- golden files -------------------------------------------------------------


@pytest.mark.parametrize(
    "golden,args",
    [
        ("verify_su3_default.json", ("verify", "--suite", "su3")),
        ("spectrum_qqbar_rest.json", ("spectrum", str(DATA / "qqbar_rest.json"))),
        ("conjugate_color_r.json", ("conjugate", str(DATA / "color_r.json"))),
        (
            "transform_pairing_r.json",
            ("transform", "--pairing", "R", "--input", "1,2,3,4,5,6"),
        ),
        ("export_a1.json", ("export", "A1")),
    ],
)
def test_golden_outputs(golden, args):
    result = run_cli(*args)
    assert result.returncode == 0
    assert result.stdout == (GOLDEN / golden).read_text()


# -- behavior spot checks ------------------------------------------------------


def test_transform_pairing_red_example():
    result = run_cli("transform", "--pairing", "R", "--input", "1,2,3,4,5,6")
    payload = json.loads(result.stdout)
    assert payload["generalized_p"] == [1, 5, -6]
    assert payload["generalized_x"] == [4, -2, 3]


def test_transform_generator_examples():
    identity = run_cli("transform", "--generator", "F2", "--angle", "0",
                       "--input", "1,2,3,4,5,6")
    assert json.loads(identity.stdout)["output"] == [1, 2, 3, 4, 5, 6]
    quarter = run_cli("transform", "--generator", "R", "--angle",
                      "1.5707963267948966", "--input", "1,0,0,0,0,0")
    assert json.loads(quarter.stdout)["output"] == [0, 0, 0, 1, 0, 0]


def test_spectrum_rest_frame_values():
    result = run_cli("spectrum", str(DATA / "qqbar_rest.json"))
    payload = json.loads(result.stdout)
    assert payload["spectrum"]["scalar_square"] == 36
    assert payload["spectrum"]["eigenvalues"] == [-6, -6, -6, -6, 6, 6, 6, 6]


def test_conjugate_dirac_em_flips_charge():
    result = run_cli("conjugate", str(DATA / "dirac_em.json"))
    payload = json.loads(result.stdout)
    assert payload["conjugated_spec"]["em"]["e"] == -1.25
    assert payload["input_spec"]["em"]["e"] == 1.25


def test_export_csv_format():
    result = run_cli("export", "A1", "--format", "csv")
    assert result.returncode == 0
    rows = result.stdout.strip().split("\n")
    assert len(rows) == 8
    assert set(",".join(rows).split(",")) == {"0", "1"}
    gmatrix = run_cli("export", "G(1,5)", "--format", "csv")
    assert gmatrix.stdout.splitlines()[0] == "0,0,0,0,1,0"


def test_export_pairing_matrix():
    result = run_cli("export", "pairing:R")
    payload = json.loads(result.stdout)
    assert payload["kind"] == "pairing"
    assert payload["matrix"][0] == [1, 0, 0, 0, 0, 0]
    assert payload["matrix"][1] == [0, 0, 0, 0, 1, 0]


def test_out_flag_writes_file(tmp_path):
    target = tmp_path / "report.json"
    result = run_cli("verify", "--suite", "su3", "--out", str(target))
    assert result.returncode == 0
    assert result.stdout == ""
    assert target.read_text() == (GOLDEN / "verify_su3_default.json").read_text()


def test_version_flag():
    result = run_cli("--version")
    assert result.returncode == 0
    assert "phasequark" in result.stdout
