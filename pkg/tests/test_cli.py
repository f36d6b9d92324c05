from __future__ import annotations

import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from branchdec.cli import (
    EXIT_OK,
    EXIT_UNKNOWN_ID,
    EXIT_UNSUPPORTED,
    EXIT_USAGE,
    main,
)

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "branchdec" / "data"


def _tampered_catalog(tmp_path: Path) -> Path:
    root = tmp_path / "cat"
    shutil.copytree(DATA_DIR, root)
    victim = root / "pairs" / "_su_2_2__sp_2_R__.json"
    victim.write_text(victim.read_text() + "\n")
    return root


# ---------------------------------------------------------------------------
# exit codes


def test_exit_code_ok_even_for_negative_answers(capsys):
    code = main(
        ["check", "--pair", "swap:su(1,1)^2", "--X", "1,-1",
         "--question", "deco", "--format", "json"]
    )
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert json.loads(out)["answer"] is False


def test_exit_code_unknown_id(capsys):
    assert main(["pair", "--pair", "(e8,e7)"]) == EXIT_UNKNOWN_ID
    err = capsys.readouterr().err
    assert "unknown pair id" in err

    assert (
        main(["check", "--pair", "(e8,e7)", "--X", "1", "--question", "deco"])
        == EXIT_UNKNOWN_ID
    )


def test_exit_code_unsupported(capsys):
    code = main(
        ["check", "--pair", "(so(4,3),g2(R))", "--X", "0,0,1",
         "--question", "deco"]
    )
    err = capsys.readouterr().err
    assert code == EXIT_UNSUPPORTED
    assert err.startswith("unsupported:")
    assert "embedding record" in err


def test_exit_code_usage_errors(capsys):
    # argparse problems and operational errors both land on 1
    assert main([]) == EXIT_USAGE
    assert main(["frobnicate"]) == EXIT_USAGE
    assert main(["pair"]) == EXIT_USAGE
    assert (
        main(["check", "--pair", "(su(2,2),sp(2,R))", "--X", "1,2",
              "--question", "deco"])
        == EXIT_USAGE
    )
    capsys.readouterr()

    code = main(["parabolic", "--algebra", "su(2,2)"])
    err = capsys.readouterr().err
    assert code == EXIT_USAGE
    assert "parabolic needs --X (or --enumerate)" in err


def test_exit_code_bad_question_value(capsys):
    code = main(
        ["check", "--pair", "(su(2,2),sp(2,R))", "--X", "3,-1,-1,-1",
         "--question", "decide"]
    )
    assert code == EXIT_USAGE


def test_tampered_catalog_is_refused(tmp_path, capsys):
    root = _tampered_catalog(tmp_path)
    code = main(["catalog", "--catalog", str(root)])
    err = capsys.readouterr().err
    assert code == EXIT_USAGE
    assert "checksum mismatch" in err

    assert main(["catalog", "--catalog", str(root), "--force"]) == EXIT_OK


# ---------------------------------------------------------------------------
# payloads


def test_catalog_listing(capsys):
    assert main(["catalog"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "su(2,2)" in out
    assert "(so(4,3),g2(R))" in out
    assert "derived pairs: theta:<algebra>, swap:<doubled algebra>" in out


def test_catalog_json_listing(capsys):
    assert main(["catalog", "--format", "json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["algebras"]) == 13
    assert len(payload["pairs"]) == 8


def test_pair_payload_involution(capsys):
    assert main(["pair", "--pair", "(su(2,2),sp(2,R))", "--format",
                 "json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "involution"
    assert payload["dim_gprime"] == 10
    assert payload["dim_t_sigma"] == 2
    assert payload["dim_t_minus_sigma"] == 1
    assert len(payload["matrix"]) == 4


def test_pair_payload_embedding(capsys):
    assert main(["pair", "--pair", "(so(4,3),g2(R))", "--format",
                 "json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "embedding"
    assert payload["dim_gprime"] == 14
    assert len(payload["tprime_rows"]) == 2


def test_check_text_format(capsys):
    assert main(
        ["check", "--pair", "swap:su(1,1)^2", "--X", "1,-1",
         "--question", "deco", "--format", "text"]
    ) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "deco: false"
    assert "  note: " in out


def test_check_json_witness(capsys):
    assert main(
        ["check", "--pair", "(so(5,C),so(3,2))", "--X", "2,1",
         "--question", "deco", "--format", "json"]
    ) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["answer"] is False
    assert payload["witness"]["point"] == ["0", "1"]


def test_parabolic_single(capsys):
    assert main(
        ["parabolic", "--algebra", "su(2,2)", "--X", "3,-1,-1,-1",
         "--format", "json"]
    ) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["dim_u"] == 3
    assert payload["rho_u"] == ["3/2", "-1/2", "-1/2", "-1/2"]


def test_parabolic_enumerate_counts(capsys):
    assert main(["parabolic", "--algebra", "su(2,2)",
                 "--enumerate"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "75 parabolic classes for su(2,2)"

    assert main(["parabolic", "--algebra", "su(2,2)", "--enumerate",
                 "--dominant"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "26 parabolic classes for su(2,2)"


def test_classify_golden_table(capsys):
    assert main(["classify", "--pair", "swap:su(1,1)^2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out == (
        "X\tdim_levi\tdim_u\tdeco\tadmissible\ttransitive\trho\t"
        "symtype\tvirtsym\n"
        "1,1\t2\t2\ttrue\ttrue\tfalse\tunsupported\ttrue\ttrue\n"
        "1,0\t4\t1\ttrue\ttrue\ttrue\ttrue\ttrue\ttrue\n"
        "1,-1\t2\t2\tfalse\tfalse\tfalse\tunsupported\ttrue\ttrue\n"
        "0,1\t4\t1\ttrue\ttrue\ttrue\ttrue\ttrue\ttrue\n"
        "0,0\t6\t0\ttrue\ttrue\ttrue\ttrue\ttrue\ttrue\n"
        "0,-1\t4\t1\ttrue\ttrue\ttrue\ttrue\ttrue\ttrue\n"
        "-1,1\t2\t2\tfalse\tfalse\tfalse\tunsupported\ttrue\ttrue\n"
        "-1,0\t4\t1\ttrue\ttrue\ttrue\ttrue\ttrue\ttrue\n"
        "-1,-1\t2\t2\ttrue\ttrue\tfalse\tunsupported\ttrue\ttrue\n"
    )


def test_classify_rejects_embedding_cells_gracefully(capsys):
    # embedding pairs have no momentum data, so those cells read
    # "unsupported" instead of aborting the sweep
    assert main(["classify", "--pair", "(so(4,3),g2(R))"]) == EXIT_OK
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert len(lines) > 10
    body = lines[1:]
    assert all(line.split("\t")[3] == "unsupported" for line in body)
    transitive_cells = {line.split("\t")[5] for line in body}
    assert transitive_cells == {"true", "false"}


# ---------------------------------------------------------------------------
# determinism


def test_check_output_is_byte_deterministic(capsys):
    argv = ["check", "--pair", "(su(2,2),sp(2,R))", "--X", "3,-1,-1,-1",
            "--question", "transitive", "--format", "json"]
    assert main(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert main(argv) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second
    # key order is part of the wire format
    assert list(json.loads(first)) == [
        "question", "answer", "equivalents", "witness", "inputs",
        "criterion", "notes",
    ]


def test_verify_passes_and_is_deterministic(capsys):
    assert main(["verify"]) == EXIT_OK
    first = capsys.readouterr()
    assert main(["verify"]) == EXIT_OK
    second = capsys.readouterr()

    assert first.out == second.out
    lines = first.out.splitlines()
    assert lines[0] == "catalog-integrity: PASS"
    assert lines[-1].startswith("verify: ")
    assert lines[-1].endswith("checks, all passed")
    assert all(line.endswith(": PASS") for line in lines[:-1])
    # timings go to stderr so they cannot perturb the report
    assert "ms" in first.err


def test_verify_fails_on_tampered_catalog(tmp_path, capsys):
    root = _tampered_catalog(tmp_path)
    code = main(["verify", "--catalog", str(root)])
    out = capsys.readouterr().out
    assert code == 1
    assert out.splitlines()[0].startswith("catalog-integrity: FAIL")
    assert out.splitlines()[-1] == "verify: 1 check, 1 failed"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "branchdec.cli", "catalog"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "su(2,2)" in proc.stdout
