"""End-to-end command-line checks: exact output strings, exit codes,
JSON mode, and error-stream behavior."""

import json
from importlib import resources

import pytest

from repvol.cli import main

DATA = resources.files("repvol").joinpath("data")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------- seifert


def test_volumes_worked_example(capsys):
    code, out, err = run(capsys, "seifert", "volumes", "(1; 1/2, 1/2)")
    assert code == 0
    assert err == ""
    assert out == "0\n1/4 * 4*pi^2\n1 * 4*pi^2\n"


def test_volumes_decimal(capsys):
    code, out, _ = run(capsys, "seifert", "volumes", "(1; 1/2, 1/2)", "--decimal")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0"
    assert lines[1].startswith("1/4 * 4*pi^2 = 9.8696044")
    assert lines[2].startswith("1 * 4*pi^2 = 39.47841760")


def test_volumes_oracle_agreement(capsys):
    code, out, _ = run(capsys, "seifert", "volumes", "(1; 1/2, 1/2)", "--oracle")
    assert code == 0
    assert out.splitlines()[-1] == "oracle agreement: 3 values"


def test_volumes_json(capsys):
    code, out, _ = run(capsys, "seifert", "volumes", "(1; 1/2, 1/2)", "--json")
    assert code == 0
    assert json.loads(out) == {"coefficients": ["0", "1/4", "1"]}


def test_volumes_witness_flag(capsys):
    code, out, _ = run(capsys, "seifert", "volumes", "(2; 1)", "--witnesses", "4")
    assert code == 0
    assert out == "n=(0) n=-2 zeta=2 z=(-2)\nn=(0) n=2 zeta=-2 z=(2)\n"


def test_witnesses_subcommand_matches_flag(capsys):
    code, out, _ = run(capsys, "seifert", "witnesses", "(2; 1)", "4")
    assert code == 0
    assert out == "n=(0) n=-2 zeta=2 z=(-2)\nn=(0) n=2 zeta=-2 z=(2)\n"


def test_info(capsys):
    code, out, _ = run(capsys, "seifert", "info", "(1; 1/2, 1/2)")
    assert code == 0
    assert out == (
        "notation (1; 1/2, 1/2)\n"
        "euler 1\n"
        "chi -1\n"
        "geometry sl2r-tilde\n"
    )


def test_sv(capsys):
    code, out, _ = run(capsys, "seifert", "sv", "(1; 1/2, 1/2)")
    assert code == 0
    assert out == (
        "max (enumeration) 1 * 4*pi^2\n"
        "max (closed form) 1 * 4*pi^2\n"
    )


def test_foliation(capsys):
    code, out, _ = run(capsys, "seifert", "foliation", "(1; 1/2, 1/2)")
    assert (code, out) == (0, "yes\n")
    code, out, _ = run(capsys, "seifert", "foliation", "(1; 7)")
    assert (code, out) == (0, "no\n")


def test_domain_error_exit_one(capsys):
    code, out, err = run(capsys, "seifert", "volumes", "(1; 1/2, -1/2)")
    assert code == 1
    assert out == ""
    assert err.startswith("error: ")
    assert err.count("\n") == 1


def test_parse_error_exit_one(capsys):
    code, out, err = run(capsys, "seifert", "info", "(1; 2/4)")
    assert code == 1
    assert out == ""
    assert "lowest terms" in err


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["seifert", "bogus-action", "(1;)"])
    assert info.value.code == 2


# ---------------------------------------------------------------- cs


def test_cs_verify_iso_sl2r(capsys):
    code, out, _ = run(capsys, "cs", "verify", "iso-sl2r")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == (
        "T = 2/3 * phiX^phiY^phiZ + 2/3 * phiX^phiY^phiW + 2/3 * phiX^phiZ^phiW"
    )
    assert lines[1] == "volume part = 2/3 * phiX^phiY^phiZ"
    assert lines[2].startswith("primitive = ")
    assert lines[3] == "stated primitive = 1/3 * phiY^phiW + -1/3 * phiZ^phiW (verifies)"
    assert lines[-1] == "OK"


def test_cs_verify_psl2c(capsys):
    code, out, _ = run(capsys, "cs", "verify", "psl2c")
    assert code == 0
    assert out == "T = pi^-2 * phiX^phiY^phiZ\nOK\n"


def test_cs_jacobi_ok(capsys, tmp_path):
    code, out, _ = run(capsys, "cs", "jacobi", str(DATA.joinpath("iso_sl2r.json")))
    assert (code, out) == (0, "ok\n")


def test_cs_jacobi_violation(capsys, tmp_path):
    doc = json.loads(DATA.joinpath("iso_sl2r.json").read_text("utf-8"))
    for entry in doc["brackets"]:
        if entry[0] == "Y" and entry[1] == "Z":
            entry[2]["X"] = -2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, err = run(capsys, "cs", "jacobi", str(bad))
    assert code == 1
    assert out == "violation at (X, Y, W)\n"
    assert err.startswith("error: ")


def test_cs_jacobi_missing_file(capsys):
    code, out, err = run(capsys, "cs", "jacobi", "/nonexistent/algebra.json")
    assert code == 1
    assert err.startswith("error: ")


# ---------------------------------------------------------------- graph


def test_graph_validate_shipped_files(capsys):
    for name in ("motegi_2_3_2_5.json", "prop73_zero_hv.json"):
        code, out, _ = run(capsys, "graph", "validate", str(DATA.joinpath(name)))
        assert (code, out) == (0, "ok\n"), name


def test_graph_validate_reports_problems(capsys, tmp_path):
    doc = json.loads(DATA.joinpath("motegi_2_3_2_5.json").read_text("utf-8"))
    doc["edges"][0]["gluing"] = [[1, 0], [0, 1]]
    bad = tmp_path / "bad_graph.json"
    bad.write_text(json.dumps(doc))
    code, out, err = run(capsys, "graph", "validate", str(bad))
    assert code == 1
    assert "determinant" in out
    assert err.startswith("error: ")


def test_graph_additivity_motegi(capsys):
    code, out, _ = run(
        capsys, "graph", "additivity", str(DATA.joinpath("motegi_2_3_2_5.json"))
    )
    assert (code, out) == (0, "0\n")


def test_graph_additivity_prop73_cases(capsys):
    code, out, _ = run(
        capsys, "graph", "additivity", str(DATA.joinpath("prop73_zero_hv.json"))
    )
    assert (code, out) == (0, "s_kill: 0\nh_kill: 0\n")


def test_graph_rw(capsys, tmp_path):
    good = tmp_path / "good.json"
    good.write_text(
        json.dumps(
            {
                "vertices": ["a", "b", "c"],
                "edges": [["a", "b", "2"], ["b", "c", "3"], ["c", "a", "1/6"]],
            }
        )
    )
    code, out, _ = run(capsys, "graph", "rw", str(good))
    assert (code, out) == (0, "consistent\n")

    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "vertices": ["a", "b", "c"],
                "edges": [["a", "b", "2"], ["b", "c", "3"], ["c", "a", "1"]],
            }
        )
    )
    code, out, err = run(capsys, "graph", "rw", str(bad))
    assert code == 1
    assert out.startswith("inconsistent: cycle ")
    assert err.startswith("error: ")


# ---------------------------------------------------------------- covers


def test_covers_merge(capsys):
    code, out, _ = run(capsys, "covers", "merge", "--degrees", "2,3", "--m", "1")
    assert code == 0
    assert "common_degree" in out and "6" in out
    assert "copies" in out and "3,2" in out


def test_covers_merge_json(capsys):
    code, out, _ = run(
        capsys, "covers", "merge", "--degrees", "2,3", "--m", "1", "--json"
    )
    assert code == 0
    assert json.loads(out) == {
        "common_degree": 6,
        "copies": [3, 2],
        "per_torus_elevations": 6,
    }


def test_covers_colored_json(capsys):
    code, out, _ = run(
        capsys, "covers", "colored", "--k", "2,3", "--l", "1,2", "--json"
    )
    assert code == 0
    assert json.loads(out) == {
        "common_degree": 6,
        "central_positive": 6,
        "central_negative": 6,
        "corridor_copies": [3, 4],
        "matched_elevations": [6, 12],
    }


def test_covers_elevations(capsys):
    code, out, _ = run(capsys, "covers", "elevations", "--torus", "4", "--curve", "2")
    assert code == 0
    assert out.split() == ["elevations", "2"]
    code, _, err = run(capsys, "covers", "elevations", "--torus", "5", "--curve", "2")
    assert code == 1
    assert "does not divide" in err


def test_covers_intersection(capsys):
    code, out, _ = run(
        capsys,
        "covers",
        "intersection",
        "--number", "1", "--deg-f", "2", "--deg-s", "3", "--deg-torus", "6",
    )
    assert code == 0
    assert out.split() == ["intersection", "1"]


# ---------------------------------------------------------------- cases


def test_cases_motegi(capsys):
    code, out, _ = run(capsys, "cases", "motegi", "2", "3", "2", "5")
    assert code == 0
    assert out == "H1 order 59; nontrivial graph manifold: yes; SV = 0\n"
    code, out, _ = run(capsys, "cases", "motegi", "2", "2", "2", "2")
    assert code == 0
    assert out == "H1 order 15; nontrivial graph manifold: no; SV = 0\n"


def test_cases_motegi_json(capsys):
    code, out, _ = run(capsys, "cases", "motegi", "2", "3", "2", "5", "--json")
    assert code == 0
    assert json.loads(out) == {"h1_order": 59, "nontrivial": True, "sv": "0"}


def test_determinism_byte_identical(capsys):
    first = run(capsys, "seifert", "volumes", "(2; 1)", "--oracle")
    second = run(capsys, "seifert", "volumes", "(2; 1)", "--oracle")
    assert first == second
