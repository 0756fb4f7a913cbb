"""End-to-end runs of the command line program, including exit codes."""

import json

import pytest

from schurcalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_result_envelope(capsys):
    result = run_json(capsys, "lr", "2,1", "2,1", "3,2,1")
    assert set(result) == {"command", "inputs", "output", "elapsed"}
    assert result["command"] == "lr"
    assert result["output"] == {"coefficient": 2}
    assert result["inputs"] == {"lam": "2,1", "mu": "2,1", "nu": "3,2,1"}


def test_lr_zero_case(capsys):
    result = run_json(capsys, "lr", "2", "1", "1,1,1")
    assert result["output"] == {"coefficient": 0}


def test_symmetrizer_output(capsys):
    result = run_json(capsys, "symmetrizer", "2,1")
    out = result["output"]
    assert out["scalar"] == {"num": 3, "den": 1}
    assert out["dim"] == 2
    assert out["support_size"] == 4
    assert out["idempotent_after_scaling"] is True


def test_schur_weyl_inline_json(capsys):
    result = run_json(
        capsys, "schur-weyl", "--d", "2", "--seq", '{"levels":{"2":{"2":1,"1,1":1}}}'
    )
    assert result["output"] == {"d": 2, "coeffs": {"[1,1]": 1, "[2,0]": 1}}


def test_seq_tensor_from_files(capsys, tmp_path):
    left = tmp_path / "left.json"
    right = tmp_path / "right.json"
    left.write_text('{"levels":{"1":{"1":1}}}')
    right.write_text('{"levels":{"1":{"1":1}}}')
    result = run_json(capsys, "seq-tensor", str(left), str(right))
    assert result["output"] == {"levels": {"2": {"2": 1, "1,1": 1}}}


def test_localize_drops_tall_rows(capsys):
    result = run_json(
        capsys, "localize", "--d", "1", '{"levels":{"2":{"2":1,"1,1":1}}}'
    )
    assert result["output"] == {"levels": {"2": {"2": 1}}}


def test_free_gen_and_wedge_component(capsys):
    gen = run_json(capsys, "free-gen", "--level", "3")
    assert gen["output"]["levels"]["3"] == {"3": 1, "2,1": 2, "1,1,1": 1}
    cut = run_json(capsys, "wedge-component", "--n", "3")
    assert cut["output"]["levels"] == {"3": {"1,1,1": 1}}


def test_wedge_dim_example(capsys):
    result = run_json(capsys, "wedge-dim", '{"dims":{"0":3}}', "--bound", "5")
    assert result["output"]["kind"] == "wedge-finite"
    assert result["output"]["n"] == 3


def test_kimura_split_command(capsys):
    result = run_json(capsys, "kimura", '{"dims":{"2":1,"3":2}}')
    out = result["output"]
    assert out["plus"] == {"dims": {"2": 1}}
    assert out["minus"] == {"dims": {"3": 2}}
    assert out["wedge_vanishes_at"] == 2
    assert out["sym_vanishes_at"] == 3


def test_euler_chi_command(capsys):
    result = run_json(capsys, "euler-chi", '{"dims":{"0":2,"1":3,"4":1}}')
    assert result["output"] == {"euler": 0}


def test_serre_window_with_negative_bound(capsys):
    result = run_json(capsys, "serre", "--n", "1", "--window", "-2:2")
    coh = result["output"]["cohomology"]
    assert coh["-2"]["dims"] == {"1": 1}
    assert coh["2"]["dims"] == {"0": 3}


def test_serre_duality_report(capsys):
    result = run_json(
        capsys, "serre", "--n", "1", "--window", "-4:4", "--verify-duality"
    )
    assert result["output"]["all_perfect"] is True


def test_gm_shift_command(capsys):
    result = run_json(capsys, "gm-shift", '{"dims":{"1,0":2,"-1,3":1}}')
    assert result["output"] == {"dims": {"-1,1": 1, "1,2": 2}}


def test_pretty_flag(capsys):
    code, out, err = run(capsys, "lr", "1", "1", "2", "--pretty")
    assert code == 0
    assert "coefficient: 1" in out
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)


def test_deterministic_output(capsys):
    first = run_json(capsys, "serre", "--n", "1", "--window", "0:3")
    second = run_json(capsys, "serre", "--n", "1", "--window", "0:3")
    assert first["output"] == second["output"]
    assert first["inputs"] == second["inputs"]


# ---------------------------------------------------------------------------
# exit codes


def test_usage_error_exits_2(capsys):
    code, out, err = run(capsys, "no-such-command")
    assert code == 2
    code, out, err = run(capsys)
    assert code == 2


def test_bad_partition_exits_2(capsys):
    code, out, err = run(capsys, "lr", "1,2", "1", "2,1")
    assert code == 2
    assert "bad-input" in err


def test_malformed_json_exits_2(capsys):
    code, out, err = run(capsys, "euler-chi", "{not json")
    assert code == 2


def test_bound_exceeded_exits_3(capsys):
    code, out, err = run(capsys, "symmetrizer", "5,4,3")
    assert code == 3
    assert "bound-exceeded" in err


def test_window_exceeded_exits_3(capsys):
    code, out, err = run(capsys, "serre", "--n", "1", "--window", "-30:30")
    assert code == 3


def test_tensor_bound_exits_3(capsys):
    code, out, err = run(
        capsys, "seq-tensor",
        '{"levels":{"5":{"5":1}}}', '{"levels":{"5":{"5":1}}}',
        "--bound", "8",
    )
    assert code == 3


def test_selftest_quick(capsys):
    code, out, err = run(capsys, "selftest", "--quick")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("ok ") for line in lines[:-1])
    assert lines[-1].endswith("(quick)")
