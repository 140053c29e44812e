import json

import pytest
from fastapi.testclient import TestClient

from vlekit.api.cli import main
from vlekit.api.service import create_app


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_json(capsys):
    code, out, err = run_cli(capsys, "validate", "--smiles", "OCC", "CCCCCC")
    assert code == 0
    assert err == ""
    body = json.loads(out)
    assert body["components"][0]["canonical"] == "CCO"
    assert body["components"][1]["groups"] == {"1": 2, "2": 4}


def test_psat(capsys):
    code, out, _ = run_cli(capsys, "psat", "--smiles", "CCO", "--T", "350")
    assert code == 0
    assert json.loads(out)["p_Pa"] == pytest.approx(95638.41294094584, rel=1e-12)


def test_tboil(capsys):
    code, out, _ = run_cli(capsys, "tboil", "--smiles", "O", "--p", "101325")
    assert code == 0
    assert json.loads(out)["T_K"] == pytest.approx(373.159, abs=1e-2)


def test_activity_defaults_to_csv(capsys):
    code, out, _ = run_cli(
        capsys,
        "activity", "--smiles", "CCCCCC", "CCO", "--model", "nrtl-demo", "--T", "400",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x1,ln_gamma1,ln_gamma2"
    assert len(lines) == 102


def test_activity_json_flag(capsys):
    code, out, _ = run_cli(
        capsys,
        "activity", "--smiles", "CCCCCC", "CCO",
        "--model", "nrtl-demo", "--T", "400", "--json",
    )
    assert code == 0
    body = json.loads(out)
    assert len(body["x1"]) == 101


def test_vle_csv_and_out_file(capsys, tmp_path):
    target = tmp_path / "diagram.csv"
    code, out, _ = run_cli(
        capsys,
        "vle", "--smiles", "CCCCCC", "CCO", "--model", "nrtl-demo",
        "--T", "400", "--out", str(target),
    )
    assert code == 0
    assert out == ""
    lines = target.read_text().splitlines()
    assert lines[0] == "x1,y1,T_K,p_Pa,gamma1,gamma2,line"
    assert len(lines) == 203


def test_fit_csv(capsys):
    code, out, _ = run_cli(
        capsys,
        "fit", "--smiles", "CCCCCC", "CCO", "--model", "unifac",
        "--variant", "3", "--T", "340",
    )
    assert code == 0
    assert out.startswith("# parameters")
    loss_line = next(l for l in out.splitlines() if l.startswith("loss,"))
    assert float(loss_line.split(",")[1]) == pytest.approx(6.202960776680684e-05, rel=1e-8)


def test_error_exit_code_and_structured_stderr(capsys):
    code, out, err = run_cli(capsys, "psat", "--smiles", "CC(C", "--T", "350")
    assert code == 2
    assert out == ""
    body = json.loads(err)
    assert body["error"]["code"] == "parse_error"
    assert isinstance(body["error"]["offset"], int)


def test_parameter_gap_error(capsys):
    code, _, err = run_cli(
        capsys,
        "activity", "--smiles", "CO", "CN", "--model", "unifac", "--T", "350",
    )
    assert code == 2
    assert json.loads(err)["error"]["pair"] == [6, 15]


def test_vle_condition_conflict(capsys):
    code, _, err = run_cli(
        capsys,
        "vle", "--smiles", "CCCCCC", "CCO", "--model", "nrtl-demo",
        "--T", "400", "--p", "101325",
    )
    assert code == 2
    assert json.loads(err)["error"]["code"] == "invalid_request"


def test_fit_range_required(capsys):
    code, _, err = run_cli(
        capsys,
        "fit", "--smiles", "CCCCCC", "CCO", "--model", "unifac",
        "--variant", "6", "--T", "340",
    )
    assert code == 2
    assert json.loads(err)["error"]["code"] == "range_required"


def test_config_error(capsys, tmp_path):
    bad = tmp_path / "vlekit.conf"
    bad.write_text("port = not-a-number\n")
    code, _, err = run_cli(
        capsys, "--config", str(bad), "psat", "--smiles", "CCO", "--T", "350"
    )
    assert code == 2
    assert json.loads(err)["error"]["code"] == "config_error"


def test_config_custom_antoine_table(capsys, tmp_path):
    table = tmp_path / "antoine.csv"
    table.write_text(
        "smiles,A,B,C,t_min_K,t_max_K,p_unit\n"
        "CCO,5.24677,1598.673,-46.424,292.77,366.63,bar\n"
    )
    conf = tmp_path / "vlekit.conf"
    conf.write_text(f"antoine_table = {table}\n")
    code, out, _ = run_cli(
        capsys, "--config", str(conf), "psat", "--smiles", "CCO", "--T", "350"
    )
    assert code == 0
    assert json.loads(out)["p_Pa"] == pytest.approx(95638.41294094584, rel=1e-12)
    # the custom table replaces the bundled one, so hexane is now uncovered
    code, _, err = run_cli(
        capsys, "--config", str(conf), "psat", "--smiles", "CCCCCC", "--T", "350"
    )
    assert code == 2
    assert json.loads(err)["error"]["code"] == "not_covered"


@pytest.mark.parametrize(
    "argv,request_json,path",
    [
        (
            ("activity", "--smiles", "CCCCCC", "CCO", "--model", "nrtl-demo", "--T", "400"),
            {"smiles": ["CCCCCC", "CCO"], "model": "nrtl-demo", "T_K": 400.0},
            "/v1/activity",
        ),
        (
            ("vle", "--smiles", "CCCCCC", "CCO", "--model", "nrtl-demo", "--T", "400"),
            {"smiles": ["CCCCCC", "CCO"], "model": "nrtl-demo", "T_K": 400.0},
            "/v1/vle",
        ),
        (
            ("fit", "--smiles", "CCCCCC", "CCO", "--model", "unifac",
             "--variant", "3", "--T", "340"),
            {"smiles": ["CCCCCC", "CCO"], "model": "unifac", "variant": 3, "T_K": 340.0},
            "/v1/fit-nrtl",
        ),
    ],
    ids=["activity", "vle", "fit"],
)
def test_cli_and_service_emit_identical_csv(capsys, registry, argv, request_json, path):
    code, out, _ = run_cli(capsys, *argv)
    assert code == 0
    client = TestClient(create_app(registry=registry))
    r = client.post(path, json=request_json, headers={"accept": "text/csv"})
    assert r.status_code == 200
    assert r.text == out
