import json
import subprocess
import sys

import pytest

from oskein.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_examples(capsys):
    assert call(capsys, "homfly", "--braid", "1 1 1", "--strands", "2")[:2] == (0, "z^2*t^-2 + 2*t^-2 - t^-4\n")
    assert call(capsys, "dim", "--from", "u u", "--to", "u u")[:2] == (0, "2\n")
    assert call(capsys, "semisimple", "--q", "2", "--t", "4")[:2] == (0, "false: t = q^2\n")


def test_json_schema_and_determinism(capsys):
    argv = ["homfly", "--pd", "X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]", "--json"]
    code, first, _ = call(capsys, *argv)
    _, second, _ = call(capsys, *argv)
    assert code == 0 and first == second
    body = json.loads(first)
    assert body["schema_version"] == 1 and body["command"] == "homfly"


def test_nf_round_trip(capsys):
    from oskein.ring import SYMBOLIC
    from oskein.skein import BasisExpansion, normal_form
    from oskein.diagram import parse_dsl
    code, out, _ = call(capsys, "nf", "--inline", "obj: u u;x+ 1;x+ 1", "--json")
    assert code == 0
    exp = BasisExpansion.from_json(json.loads(out)["expansion"], SYMBOLIC)
    assert exp == normal_form(parse_dsl("obj: u u\nx+ 1\nx+ 1"))


def test_hecke_round_trip(capsys):
    from oskein.hecke import HeckeElement, young_idempotent
    from oskein.ring import DEFAULT
    code, out, _ = call(capsys, "hecke", "--idempotent", "2,1", "--json")
    assert code == 0
    h = HeckeElement.from_json(json.loads(out)["element"], DEFAULT)
    assert h == young_idempotent((2, 1), DEFAULT)


def test_k0_round_trip(capsys):
    from oskein.combinatorics import Bipartition, SymTensor, chi
    code, out, _ = call(capsys, "k0", "--up", "2,1", "--down", "1", "--json")
    assert SymTensor.from_json(json.loads(out)["class"]) == chi(Bipartition((2, 1), (1,)))


@pytest.mark.parametrize("argv", [
    ["dim", "--from", "u", "--to", "u"],
    ["gram", "--from", "u d", "--to", "u d"],
    ["hecke", "--r", "3", "--word", "1 2 1"],
    ["hecke", "--r", "3", "--jm", "2"],
    ["jm-spec", "--word", "u d"],
    ["k0", "--up", "1", "--down", "1"],
    ["character", "--up", "1", "--word", "u d u"],
    ["branch", "--up", "1"],
    ["blocks", "--max-size", "2", "--q", "2", "--t", "1"],
    ["semisimple"],
    ["oracle-check", "--n", "2", "--inline", "obj: u d;x+ 1;x- 1"],
    ["nf", "--inline", "braid 2\n1 -1"],
])
def test_every_subcommand_runs(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 0, err
    code, out, err = call(capsys, *argv, "--json")
    assert code == 0 and json.loads(out)["schema_version"] == 1


@pytest.mark.parametrize("argv", [
    ["nosuch"],
    [],
    ["dim", "--from", "u x", "--to", "u"],
    ["homfly", "--braid", "1 a"],
    ["homfly", "--braid", "1", "--pd", "X[1,2,2,1]"],
    ["homfly", "--pd", "X[1,2,3]"],
    ["nf"],
    ["nf", "--inline", "obj: u\nx+ 1"],
    ["hecke", "--r", "2", "--word", "3"],
    ["jm-spec", "--word", "uuuuu"],
    ["dim", "--from", "u", "--to", "u", "--bogus"],
    ["homfly", "--braid", "1", "--symbolic", "--q", "2"],
])
def test_input_errors(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2
    assert err.startswith("error: input:") and err.count("\n") == 1


@pytest.mark.parametrize("argv", [
    ["homfly", "--braid", "1 1", "--q", "2", "--t", "1"],
    ["semisimple", "--q", "0", "--t", "2"],
    ["gram", "--from", "u", "--to", "u", "--q", "1"],
])
def test_degenerate_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 3 and err.startswith("error: degenerate:")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "oskein", "dim", "--from", "ud", "--to", ""],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "1\n"
