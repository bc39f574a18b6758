import json

import pytest

import severi.calibrate as calibrate
import severi.localization as localization
from severi.cli import main


@pytest.fixture(autouse=True)
def fresh_calibration():
    calibrate._calibrated = False
    yield
    calibrate._calibrated = False


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_basic(capsys):
    code, out, _ = run(capsys, "count", "--delta", "1", "--degree", "2")
    assert code == 0
    assert out.strip() == "140"


def test_count_smooth_conic(capsys):
    code, out, _ = run(capsys, "count", "--delta", "0", "--degree", "2")
    assert code == 0
    assert out.strip() == "92"


def test_count_line(capsys):
    code, out, _ = run(capsys, "count", "--delta", "0", "--degree", "1")
    assert code == 0
    assert out.strip() == "0"


def test_count_json_deterministic(capsys):
    args = ("count", "--delta", "0", "--degree", "2", "--json", "--seed", "3")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["count"] == 92
    assert payload["schema_version"] == 1
    assert "timing_s" not in payload


def test_count_timing_flag(capsys):
    code, out, _ = run(capsys, "count", "--delta", "0", "--degree", "2", "--json", "--timing")
    payload = json.loads(out)
    assert code == 0 and "timing_s" in payload


def test_count_explicit_spec(capsys):
    code, out, _ = run(capsys, "count", "--delta", "1", "--degree", "2", "--spec", "1,2,6,18")
    assert code == 0 and out.strip() == "140"


def test_invalid_spec_exits_2(capsys):
    code, _, err = run(capsys, "count", "--delta", "1", "--degree", "2", "--spec", "1,1,2,3")
    assert code == 2
    assert "distinct" in err


def test_invalid_window_exits_2(capsys):
    code, _, _ = run(capsys, "count", "--delta", "3", "--degree", "1")
    assert code == 2


def test_poly_delta0(capsys, tmp_path):
    code, out, _ = run(capsys, "poly", "--delta", "0", "--cache-dir", str(tmp_path), "--no-verify")
    assert code == 0
    assert "N_0(d)" in out
    # cached polynomials show up in the table dump
    code, out, _ = run(capsys, "table", "--cache-dir", str(tmp_path))
    assert code == 0
    assert "delta=0 mode=p3 degree=9" in out


def test_poly_p2_one_node(capsys, tmp_path):
    code, out, _ = run(
        capsys, "poly", "--delta", "1", "--mode", "p2", "--cache-dir", str(tmp_path), "--no-verify"
    )
    assert code == 0
    assert "3*d^2 - 6*d + 3" in out


def test_poly_json(capsys, tmp_path):
    code, out, _ = run(
        capsys, "poly", "--delta", "0", "--json", "--cache-dir", str(tmp_path), "--no-verify"
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["degree"] == 9
    assert payload["coefficients"] == payload["ordered_coefficients"]


def test_check_calibration_section(capsys):
    code, out, _ = run(capsys, "check", "--only", "nu")
    assert code == 0
    assert "17/17 pass" in out
    assert "ALL PASS" in out


def test_check_tables_small(capsys):
    code, out, _ = run(capsys, "check", "--only", "tables", "--max-delta", "3")
    assert code == 0
    assert "[tables]" in out and "ALL PASS" in out


def test_check_weights_and_bps(capsys):
    code, out, _ = run(capsys, "check", "--only", "weights")
    assert code == 0
    code, out, _ = run(capsys, "check", "--only", "bps")
    assert code == 0


def test_check_json_shape(capsys):
    code, out, _ = run(capsys, "check", "--only", "dualspec", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["passed"] is True


def test_fault_injection_fails_calibration(capsys, monkeypatch):
    # dualize the Grassmannian tangent weights: every localized count flips
    # sign, and the calibration gate must fail before reporting anything
    import severi.weights as weights

    def dualized(plane):
        return [tuple(-x for x in c) for c in weights.gr_tangent_weights(plane)]

    monkeypatch.setattr(localization, "gr_tangent_weights", dualized)
    code, out, err = run(capsys, "count", "--delta", "0", "--degree", "2")
    assert code == 1
    assert "calibration" in err


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
