import json

from qfrob.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mf_table(capsys):
    code, out, _ = run_cli(capsys, "mf", "--p", "3", "--m", "1")
    assert code == 0
    assert "verified: true" in out
    assert "x1" in out


def test_mf_json_base_case(capsys):
    code, out, _ = run_cli(capsys, "mf", "--p", "3", "--m", "0", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["A"] == [[[{"coeff": 1, "exps": [1, 0]}]]]
    assert payload["verified"] is True


def test_mf_unsupported_characteristic(capsys):
    code, _, err = run_cli(capsys, "mf", "--p", "2", "--m", "1")
    assert code == 2
    assert "unsupported" in err


def test_mf_check_involution(capsys):
    code, out, _ = run_cli(
        capsys, "mf", "--p", "3", "--m", "2", "--check-involution", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["involution_witness"]["alpha_first_vs_second"] is not None
    assert payload["involution_witness"]["first_vs_second"] is None


def test_decompose_json_line_only(capsys):
    code, out, _ = run_cli(
        capsys,
        "decompose", "--p", "3", "--m", "2", "--e", "1",
        "--sheaf", "O", "--twist", "-2", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["spinor_plus"] == [] and payload["spinor_minus"] == []
    assert payload["rank_total"] == 81
    assert payload["oracle_agrees"] is True


def test_decompose_spinor_sum(capsys):
    code, out, _ = run_cli(
        capsys,
        "decompose", "--p", "3", "--m", "2", "--e", "1",
        "--sheaf", "S", "--twist", "-2", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert {"twist": -2, "mult": 11} in payload["spinor_plus"]
    assert payload["oracle_agrees"] is True


def test_decompose_unsupported(capsys):
    code, _, err = run_cli(
        capsys, "decompose", "--p", "2", "--m", "2", "--e", "1",
        "--sheaf", "O", "--twist", "0",
    )
    assert code == 2


def test_decompose_degenerate_exit(capsys):
    code, _, err = run_cli(
        capsys, "decompose", "--p", "3", "--m", "2", "--e", "3",
        "--sheaf", "O", "--twist", "0",
    )
    assert code == 3
    assert "computation failed" in err


def test_hom_and_ext(capsys):
    code, out, _ = run_cli(
        capsys, "hom", "--p", "3", "--m", "2", "--src", "S+", "--tgt", "S+",
        "--format", "json",
    )
    assert code == 0 and json.loads(out)["value"] == 1
    code, out, _ = run_cli(
        capsys, "ext", "--p", "3", "--m", "2", "--src", "S+", "--tgt", "S-",
        "--tgt-twist", "-1", "--format", "json",
    )
    assert code == 0 and json.loads(out)["value"] == 1


def test_hilbert_values(capsys):
    code, out, _ = run_cli(
        capsys, "hilbert", "--m", "2", "--sheaf", "O", "--twist", "0",
        "--max-degree", "2", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["values"] == [
        {"d": 0, "h0": 1},
        {"d": 1, "h0": 6},
        {"d": 2, "h0": 20},
    ]


def test_outputs_are_deterministic(capsys):
    args = (
        "decompose", "--p", "3", "--m", "2", "--e", "1",
        "--sheaf", "O", "--twist", "0", "--format", "json",
    )
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_output_file_written_atomically(tmp_path, capsys):
    target = tmp_path / "multiset.json"
    code, out, _ = run_cli(
        capsys,
        "decompose", "--p", "3", "--m", "2", "--e", "1",
        "--sheaf", "O", "--twist", "0", "--format", "json",
        "--output", str(target),
    )
    assert code == 0 and out == ""
    payload = json.loads(target.read_text())
    assert payload["rank_total"] == 81
    leftovers = [f for f in tmp_path.iterdir() if f.name.startswith(".qfrob-")]
    assert leftovers == []


def test_threads_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("QFROB_THREADS", "zero")
    code, _, err = run_cli(capsys, "hilbert", "--m", "2", "--sheaf", "O")
    assert code == 2
    monkeypatch.setenv("QFROB_THREADS", "2")
    code, _, _ = run_cli(capsys, "hilbert", "--m", "2", "--sheaf", "O")
    assert code == 0


def test_certify_below_threshold(capsys):
    code, _, err = run_cli(capsys, "certify", "--p", "3", "--m", "2", "--e-max", "1")
    assert code == 2
    assert "threshold" in err
