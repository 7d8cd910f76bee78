import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from stickelberger.cli import main
from stickelberger.config import Config, load_config, parse_config_text
from stickelberger.curves.poly import RatFun
from stickelberger.cyclo import CycloElem
from stickelberger.errors import PreconditionError
from stickelberger.serialize import decode_cyclo, decode_int, decode_rational, dumps, encode_int


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run("--no-timing", *argv)
    return code, json.loads(text)


def test_jacobi_f4():
    code, obj = run_json("jacobi", "--p", "2", "--f", "2", "--d", "3", "--a", "1,1,1")
    assert code == 0 and obj == {"m": 3, "coeffs": ["2", "0"]}
    assert decode_cyclo(obj) == CycloElem(3, [2, 0])


def test_tower_rank_and_nonisol():
    code, obj = run_json("tower-rank", "--p", "23", "--d", "11")
    assert code == 0 and obj["rank"] == 0 and obj["degenerate"] == 0
    code, obj = run_json("verify-nonisol", "--p", "2", "--dmax", "50")
    assert obj["results"] == []


def test_precondition_exit_code():
    code, obj = run_json("tower-rank", "--p", "23", "--d", "6")
    assert code == 2 and obj["error"] == "precondition"
    code, obj = run_json("jacobi", "--p", "4", "--d", "3", "--a", "1,1,1")
    assert code == 2


def test_usage_exit_codes():
    assert run("frobnicate")[0] == 64
    assert run()[0] == 64
    assert run("jacobi", "--p", "two", "--d", "3", "--a", "1,1,1")[0] == 65
    assert run("jacobi", "--p", "2", "--d", "3", "--a", "1,x,1")[0] == 65


def test_determinism():
    argv = ("--no-timing", "bounds", "scan", "--kind", "estimate", "--dmax", "30", "--n", "2")
    assert run(*argv) == run(*argv)


def test_timing_field_present_by_default():
    code, text = run("fermat-prank", "--p", "7", "--d", "3")
    assert "timing_s" in json.loads(text)


def test_curve_commands():
    code, obj = run_json("curve", "check", "--p", "7", "--preset", "paper-p7")
    assert code == 0 and obj["all_pass"]
    code, obj = run_json("curve", "invariants", "--p", "2", "--preset", "paper-p2")
    assert RatFun.from_json(2, obj["j"]) == RatFun.from_json(2, {"numer": [1, 0, 0, 0, 1], "denom": [0, 1]})
    code, obj = run_json("curve", "order", "--p", "2", "--preset", "paper-p2", "--point", "1 0 1,1 1 1 1", "--n", "2")
    assert obj["exact_order"] is True
    code, obj = run_json("curve", "invariants", "--p", "5", "--coeffs", "0,0,0,1,0 1")
    assert code == 0
    code, obj = run_json("curve", "check", "--p", "7", "--preset", "paper-p5")
    assert code == 2


def test_bounds_kinds_and_csv():
    code, obj = run_json("bounds", "scan", "--kind", "delta", "--dmax", "30", "--n", "2")
    assert decode_rational(obj["min"]["value"]) == Fraction(1, 6)
    code, obj = run_json("bounds", "scan", "--kind", "two-di", "--dmax", "300")
    assert obj["violations"] == 0
    code, obj = run_json("bounds", "scan", "--kind", "lowdeg", "--p", "2", "--d", "3,5", "--n", "2")
    assert [decode_rational(r["min"]) for r in obj["rows"]] == [Fraction(1, 2)] * 2
    code, text = run("--format", "csv", "bounds", "scan", "--kind", "estimate", "--dmax", "8")
    lines = text.strip().splitlines()
    assert lines[0].startswith("d,n,value") and len(lines) == 8


def test_other_subcommands():
    assert run_json("gauss", "--p", "5", "--d", "4", "--a", "1", "--exact")[1]["m"] == 20
    assert run_json("valuation", "--p", "2", "--f", "4", "--d", "5", "--a", "1,1,3")[1]["agrees"]
    assert run_json("supersingular", "--p", "2", "--d", "5", "--a", "1,1,1,2")[1]["supersingular"]
    out = run_json("fermat-zeta", "--p", "2", "--f", "2", "--d", "3", "--k", "2")[1]
    assert out["counts"] == ["9", "9"]


def test_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# comment\nexactGaussBound = 16\noutputFormat=json\n")
    code, obj = run_json("--config", str(cfg), "gauss", "--p", "5", "--f", "2", "--d", "4", "--a", "1", "--exact")
    assert code == 2
    assert load_config(str(cfg), environ={"STICKEL_THREADS": "3"}).threadCount == 3
    with pytest.raises(PreconditionError):
        parse_config_text("bogus=1")
    with pytest.raises(PreconditionError):
        Config(outputFormat="xml")


def test_serialization_round_trip():
    big = 3 ** 60
    assert decode_int(encode_int(big)) == big and isinstance(encode_int(big), str)
    assert encode_int(12) == 12
    text = dumps({"r": Fraction(-3, 7), "e": CycloElem(5, [1, -2, 0, 4])})
    obj = json.loads(text)
    assert decode_rational(obj["r"]) == Fraction(-3, 7)
    assert decode_cyclo(obj["e"]) == CycloElem(5, [1, -2, 0, 4])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stickelberger", "--no-timing", "fermat-prank", "--p", "2",
                           "--d", "3"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["p_rank"] == 0
