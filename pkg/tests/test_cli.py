"""End-to-end command behavior: output shapes, exit codes, and the
format switches."""

import json
import subprocess
import sys

import pytest

from tensorcube import Partition, parse
from tensorcube.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


# --- lr ---

def test_lr_plain(capsys):
    code, out = run(capsys, "lr", "3,2,1", "4,3,2,1", "6,4,4,2")
    assert code == 0
    assert out.strip() == "3"


def test_lr_pieri(capsys):
    assert run(capsys, "lr", "1", "1", "2")[1].strip() == "1"
    assert run(capsys, "lr", "1", "1", "1,1")[1].strip() == "1"
    assert run(capsys, "lr", "1", "1", "3")[1].strip() == "0"


def test_lr_json_round_trips(capsys):
    code, out = run(capsys, "lr", "3,2,1", "4,3,2,1", "6,4,4,2", "--format", "json")
    doc = json.loads(out)
    assert doc["coefficient"] == 3
    assert parse(doc["nu"]) == Partition((6, 4, 4, 2))
    assert parse(doc["lambda"]) == Partition((3, 2, 1))


def test_lr_certificates_include_golden_diagram(capsys, datadir):
    code, out = run(
        capsys, "lr", "3,2,1", "4,3,2,1", "6,4,4,2",
        "--certificates", "--format", "ascii-diagram",
    )
    assert code == 0
    golden = (datadir / "first_lrt.txt").read_text()
    assert golden.rstrip("\n") in out
    assert out.count(". . . 1 1 1") == 3  # all three tableaux share row 1


def test_lr_polynomial_backend_agrees(capsys):
    plain = run(capsys, "lr", "2,1", "2,1", "3,2,1")[1]
    poly = run(capsys, "lr", "2,1", "2,1", "3,2,1", "--backend", "polynomials")[1]
    assert plain == poly


def test_lr_parse_error_exits_2(capsys):
    code = main(["lr", "bogus", "1", "1"])
    assert code == 2


# --- nl ---

def test_nl_values(capsys):
    assert run(capsys, "nl", "2", "2", "2")[1].strip() == "1"
    assert run(capsys, "nl", "2,1", "2,1", "2,1")[1].strip() == "0"


def test_nl_support_listing(capsys):
    code, out = run(capsys, "nl", "1,1", "1,1", "1,1", "--support")
    lines = out.strip().splitlines()
    assert lines[0] == "1"
    assert lines[1] == "alpha=1 beta=1 gamma=1 factors=1*1*1"


def test_nl_empty_arguments(capsys):
    code, out = run(capsys, "nl", "", "", "")
    assert code == 0
    assert out.strip() == "1"


# --- decompose ---

def test_decompose_plain(capsys):
    code, out = run(capsys, "decompose", "1", "1", "--family", "C", "--rank", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert "nu=2 mult=1" in lines
    assert "nu=1^2 mult=1" in lines
    assert "nu= mult=1" in lines
    assert "stable=true" in lines


def test_decompose_json(capsys):
    code, out = run(
        capsys, "decompose", "1", "1", "--family", "D", "--rank", "2",
        "--format", "json",
    )
    doc = json.loads(out)
    assert doc["group"] == {"family": "D", "rank": 2}
    assert {t["nu"] for t in doc["terms"]} == {"2", ""}
    assert doc["inadmissible"] == [{"nu": "1^2", "mult": 1}]
    for term in doc["terms"]:
        parse(term["nu"])


def test_decompose_unit(capsys):
    code, out = run(capsys, "decompose", "2", "", "--family", "B", "--rank", "3")
    assert code == 0
    assert "nu=2 mult=1" in out


def test_decompose_odd_rank_d_exits_2(capsys):
    code = main(["decompose", "1", "1", "--family", "D", "--rank", "3"])
    assert code == 2
    err = capsys.readouterr().err
    assert "even" in err


# --- detect ---

def test_detect_exit_codes(capsys):
    assert main(["detect", "7,5,3,1"]) == 0
    assert main(["detect", "3"]) == 1
    assert main(["detect", "4,3,2,1"]) == 0


def test_detect_plain_fields(capsys):
    code, out = run(capsys, "detect", "7,5,3,1")
    assert "N=8029" in out
    assert "witness.alpha=4,3,1" in out
    assert "witness.beta=3,2^2,1" in out
    assert "detected=true" in out


def test_detect_json(capsys):
    code, out = run(capsys, "detect", "4,4", "--format", "json")
    doc = json.loads(out)
    assert doc["detected"] is True
    assert doc["N"] == 3
    assert parse(doc["witness"]["alpha"]) == Partition((2, 2))
    assert doc["witness"]["certificates"][0]["outer"] == "4^2"


def test_detect_color_opt_in(capsys, monkeypatch):
    monkeypatch.setenv("TENSORCUBE_COLOR", "1")
    _, out = run(capsys, "detect", "4,4")
    assert "\x1b[" in out
    monkeypatch.setenv("TENSORCUBE_COLOR", "0")
    _, out = run(capsys, "detect", "4,4")
    assert "\x1b[" not in out


# --- verify ---

def test_verify_odd_plain(capsys):
    code, out = run(capsys, "verify", "odd", "--max-size", "5")
    assert code == 0
    assert "checked=11 failures=0" in out


def test_verify_even_jsonlines(capsys):
    code, out = run(capsys, "verify", "even", "--max-size", "4", "--format", "json")
    lines = out.strip().splitlines()
    docs = [json.loads(line) for line in lines]
    summary = docs[-1]["summary"]
    assert summary["checked"] == 8
    assert summary["failures"] == 0
    assert all("lambda" in d for d in docs[:-1])


def test_verify_bound_exits_2(capsys):
    assert main(["verify", "odd", "--max-size", "99"]) == 2


def test_verify_jobs_deterministic(capsys):
    _, one = run(capsys, "verify", "even", "--max-size", "4")
    _, two = run(capsys, "verify", "even", "--max-size", "4", "--jobs", "2")
    assert one == two


# --- render ---

def test_render_shape(capsys):
    code, out = run(capsys, "render", "6,4,4,2", "--inner", "3,2,1")
    assert code == 0
    assert out == ". . . # # #\n. . # #\n. # # #\n# #\n"


def test_render_json(capsys):
    code, out = run(capsys, "render", "2,1", "--format", "json")
    doc = json.loads(out)
    assert doc["outer"] == "2,1"
    assert doc["inner"] == ""


# --- error class mapping ---

def test_overflow_maps_to_exit_3(capsys, monkeypatch):
    def boom(*args, **kwargs):
        raise OverflowError("too big")

    monkeypatch.setattr("tensorcube.cli.lr_coefficient", boom)
    assert main(["lr", "1", "1", "2"]) == 3


def test_internal_failure_maps_to_exit_4(capsys, monkeypatch):
    def boom(*args, **kwargs):
        raise RuntimeError("invariant broken")

    monkeypatch.setattr("tensorcube.cli.detection.detects", boom)
    assert main(["detect", "4,4"]) == 4


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tensorcube.cli", "lr", "1", "1", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1"
