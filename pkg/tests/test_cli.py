import json
import math

import numpy as np
import pytest

from tfnorm.cli import main
from tfnorm.grid import GridSpec
from tfnorm.io_json import function_from_dict, function_to_dict, load_function, save_function
from tfnorm.norms import amalgam_norm_discrete, AmalgamSpec, GlobalSpec
from tfnorm.spaces import FLpSpec
from tfnorm.windows import gaussian


@pytest.fixture()
def fn_file(tmp_path):
    g = GridSpec(1, 16.0, 256)
    path = tmp_path / "f.json"
    save_function(gaussian(g, a=1.0), str(path))
    return str(path)


def test_function_json_roundtrip():
    g = GridSpec(1, 16.0, 64)
    f = gaussian(g, a=0.5, freq=1.0)
    back = function_from_dict(function_to_dict(f))
    assert back.grid == g
    assert np.array_equal(back.values, f.values)


def test_norm_command(fn_file, capsys):
    rc = main(["norm", "--space", "W(FL2[0], l1[0])", "--input", fn_file])
    assert rc == 0
    out = json.loads(capsys.readouterr().out)
    f = load_function(fn_file)
    expected = amalgam_norm_discrete(
        f, AmalgamSpec(FLpSpec(2.0), GlobalSpec(1.0))
    ).value
    assert out["value"] == pytest.approx(expected, rel=1e-12)
    assert out["normal_form"] == "W(FL2, l1)"


def test_norm_command_normalizes_composites(fn_file, capsys):
    rc = main(["norm", "--space", "Mod((L1 opi L2))", "--input", fn_file])
    assert rc == 0
    out = json.loads(capsys.readouterr().out)
    assert out["normal_form"] == "W(FL2, l1)"
    assert out["trace"][0]["rule_id"] == "R_C61a"


def test_norm_command_unsupported(fn_file, capsys):
    rc = main(["norm", "--space", "Mod((L3 opi L2))", "--input", fn_file])
    assert rc == 2


def test_norm_command_parse_error(fn_file, capsys):
    rc = main(["norm", "--space", "Mod((L3 opi", "--input", fn_file])
    assert rc == 2
    assert "offset 11" in capsys.readouterr().err


def test_stft_command(fn_file, tmp_path, capsys):
    out = tmp_path / "tf.json"
    rc = main(["stft", "--window", "gaussian", "--input", fn_file, "--out", str(out)])
    assert rc == 0
    blob = json.loads(out.read_text())
    assert blob["xgrid"]["N"] == 256
    assert len(blob["values"]) == 256 * 256


def test_identify_command(capsys):
    rc = main(["identify", "Mod((L1 opi L2))", "--trace"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "W(FL2, l1)"
    assert "R_C61a" in out


def test_identify_parse_error(capsys):
    rc = main(["identify", "Mod((L3 opi"])
    assert rc == 2


def test_verify_command_writes_report(tmp_path, capsys):
    out = tmp_path / "bupu.json"
    rc = main(["verify", "bupu", "--N", "256", "--out", str(out)])
    assert rc == 0
    d = json.loads(out.read_text())
    assert d["theorem_id"] == "bupu" and d["passed"]


def test_verify_command_csv(capsys):
    rc = main(["verify", "bupu", "--N", "256", "--format", "csv"])
    assert rc == 0
    assert capsys.readouterr().out.startswith("case,name,lhs,rhs,ratio")


def test_verify_rejects_bad_config(capsys):
    rc = main(["verify", "thm4.2", "--p1", "3", "--p2", "3"])
    assert rc == 2
    assert "hypothesis violated" in capsys.readouterr().err


def test_verify_unknown_id(capsys):
    rc = main(["verify", "nope"])
    assert rc == 2


def test_verify_list(capsys):
    rc = main(["verify", "list"])
    assert rc == 0
    assert "lemma3.4" in capsys.readouterr().out


def test_report_command(tmp_path, capsys):
    main(["verify", "bupu", "--N", "256", "--out", str(tmp_path / "bupu.json")])
    main(["verify", "identify.golden", "--out", str(tmp_path / "golden.json")])
    capsys.readouterr()
    rc = main(["report", "--dir", str(tmp_path)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "bupu" in out and "identify.golden" in out
    assert "not run" in out  # numeric twins absent in this directory


def test_report_command_empty_dir(tmp_path, capsys):
    rc = main(["report", "--dir", str(tmp_path)])
    assert rc == 2
