import json

import pytest

from hqt.catalog import extension_to_json, fingerprint, k8
from hqt.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from hqt.exact import CycNum


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == EXIT_OK
    return json.loads(out)


def test_build_k8(capsys):
    obj = run_json(capsys, "build", "--family", "k8")
    assert obj["dim"] == 8 and obj["eta_ab"] == "-1" and obj["valid"]
    assert obj["fingerprint"] == fingerprint(k8()) and obj["ambient_order"] == 32


def test_build_text(capsys):
    code, out, _ = run(capsys, "build", "--family", "a2n2t", "--n", "3")
    assert code == EXIT_OK and out.startswith("dim 18")


def test_h2n2_2_matches_k8(capsys):
    a = run_json(capsys, "build", "--family", "h2n2", "--n", "2")
    b = run_json(capsys, "build", "--family", "k8")
    assert a["fingerprint"] == b["fingerprint"]


def test_rmatrices_with_oracle(capsys):
    obj = run_json(capsys, "rmatrices", "--family", "k8", "--oracle")
    assert len(obj["items"]) == 8
    assert obj["diff"] == {"only_oracle": 0, "only_constructed": 0}
    assert obj["oracle"]["exhaustive"]
    assert all(it["verified"] for it in obj["items"])
    forms = sorted(it["form"] for it in obj["items"])
    assert forms == ["NonTrivial"] * 4 + ["Trivial"] * 4


def test_rmatrices_filters(capsys):
    obj = run_json(capsys, "rmatrices", "--family", "h2n2", "--n", "3")
    assert len(obj["items"]) == 9 and {it["form"] for it in obj["items"]} == {"Trivial"}
    obj = run_json(capsys, "rmatrices", "--family", "k8n_zeta", "--n", "2", "--nontrivial-only")
    assert len(obj["items"]) == 8 and {it["form"] for it in obj["items"]} == {"NonTrivial"}


def test_minimal(capsys):
    obj = run_json(capsys, "minimal", "--family", "k8n_zeta", "--n", "4")
    assert obj["verdict"] == "minimal" and obj["minimal_set"]
    assert all(m["verified_minimal"] for m in obj["minimal_set"])
    obj = run_json(capsys, "minimal", "--family", "k8n_zeta", "--n", "2")
    assert obj["verdict"] != "minimal" and obj["minimal_set"] == []
    obj = run_json(capsys, "minimal", "--family", "k8")
    assert obj["verdict"] == "minimal" and [CycNum.from_json(w) for w in obj["omega_witnesses"]] == [1]


def test_oracle_command(capsys):
    obj = run_json(capsys, "oracle", "--family", "k8", "--M", "8")
    assert obj["ambient_order"] == 8 and obj["exhaustive"] and len(obj["solutions"]) == 8
    assert obj["fingerprint"] == fingerprint(k8())


def test_accept_k8(capsys):
    code, out, _ = run(capsys, "accept", "--only", "k8")
    assert code == EXIT_OK
    assert out.splitlines()[0].startswith("criterion 1 [PASS]")


def test_dump_roundtrip(capsys, tmp_path):
    obj = run_json(capsys, "build", "--family", "k8", "--dump")
    assert obj["data"] == extension_to_json(k8())
    path = tmp_path / "k8.json"
    path.write_text(json.dumps(obj))
    for fam in (["flat_custom"], ["k8n_custom", "--n", "1"]):
        again = run_json(capsys, "build", "--family", *fam, "--data", str(path))
        assert again["fingerprint"] == obj["fingerprint"]


def test_out_file_and_determinism(capsys, tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "rmatrices", "--family", "k8", "--out", str(p1))[0] == EXIT_OK
    assert run(capsys, "rmatrices", "--family", "k8", "--out", str(p2))[0] == EXIT_OK
    assert p1.read_bytes() == p2.read_bytes()


@pytest.mark.parametrize(
    "argv",
    [
        ["build", "--family", "k8n_zeta", "--n", "3"],
        ["build", "--family", "a2n2t", "--n", "4"],
        ["minimal", "--family", "h2n2", "--n", "3"],
        ["oracle", "--family", "k8n_zeta", "--n", "4"],
        ["build", "--family", "flat_custom", "--data", "/nonexistent.json"],
        ["accept", "--only", "nope"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE and err.startswith("error")


def test_argparse_rejects_unknown_family(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["build", "--family", "nope"])
    assert exc.value.code == 2


def test_accept_failure_exit_code(capsys, monkeypatch):
    from hqt import acceptance

    def failing(numbers=None):
        return [acceptance.CriterionResult(1, "forced", False, [], 0.0)]

    monkeypatch.setattr(acceptance, "run", failing)
    code, out, _ = run(capsys, "accept")
    assert code == EXIT_FAIL and "[FAIL]" in out
