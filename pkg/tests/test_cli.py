import json

import pytest

from jordancoh.cli import EXIT_INPUT, EXIT_MATH, EXIT_OK, main
from jordancoh.superalgebra import algebra_to_document, builtin_Dt
from conftest import EVEN_REPS, ODD_REPS, cocycle_doc


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    return str(p)


def test_check_builtins(capsys):
    code, out, _ = run(capsys, "check", "--algebra", "builtin:Dt", "--t", "generic")
    assert code == EXIT_OK and "super-Jordan identity: PASS (256 tuples" in out
    code, out, _ = run(capsys, "check", "--algebra", "builtin:M11plus", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["passed"] is True


def test_check_with_module(capsys):
    code, out, _ = run(capsys, "check", "--algebra", "builtin:Dt", "--t", "2", "--module", "regular",
                       "--format", "json")
    assert code == EXIT_OK
    assert [c["name"] for c in json.loads(out)["checks"]][-1].startswith("bimodule")


def test_corrupted_algebra_exits_1(capsys, tmp_path):
    doc = algebra_to_document(builtin_Dt())
    for entry in doc["products"]:
        if entry["left"] == "e1" and entry["right"] == "x":
            entry["result"] = {"x": "1"}
    path = write(tmp_path, "bad.json", doc)
    code, out, _ = run(capsys, "check", "--algebra", path)
    assert code == EXIT_MATH and "FAIL" in out
    code, _, err = run(capsys, "cohomology", "--algebra", path)
    assert code == EXIT_MATH and "not a Jordan superalgebra" in err


@pytest.mark.parametrize("argv", [
    ["check", "--algebra", "builtin:Dt"],                       # t missing
    ["check", "--algebra", "builtin:M11plus", "--t", "1"],      # t not allowed
    ["check", "--algebra", "builtin:Nope"],
    ["check", "--algebra", "builtin:Dt", "--t", "1/0"],
    ["cohomology", "--algebra", "builtin:Dt", "--t", "generic", "--samples", "1,x"],
    ["cohomology", "--algebra", "builtin:Dt", "--t", "generic", "--parity", "3"],
    ["frobnicate"],
    ["check", "--algebra", "/nonexistent.json"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_INPUT


def test_malformed_json_exit_2(capsys, tmp_path):
    path = write(tmp_path, "broken.json", '{"even_basis": [')
    code, _, err = run(capsys, "check", "--algebra", path)
    assert code == EXIT_INPUT and "line 1" in err


def test_cohomology_text_and_json_agree(capsys):
    code, text, _ = run(capsys, "cohomology", "--algebra", "builtin:Dt", "--t", "generic")
    assert code == EXIT_OK
    assert "parity 0: dim Z = 6, dim B = 5, dim H = 1" in text
    assert "parity 1: dim Z = 6, dim B = 6, dim H = 0" in text
    assert "H^2 = F ∔ 0" in text
    code, out, _ = run(capsys, "cohomology", "--algebra", "builtin:Dt", "--t", "generic",
                       "--format", "json")
    payload = json.loads(out)
    assert payload["H2"] == "F ∔ 0"
    assert [(r["dim_Z"], r["dim_B"], r["dim_H"]) for r in payload["reports"]] == [(6, 5, 1), (6, 6, 0)]


def test_t_zero_note(capsys):
    code, out, _ = run(capsys, "cohomology", "--algebra", "builtin:Dt", "--t", "0", "--parity", "0")
    assert code == EXIT_OK and out.startswith("note:")


def test_single_parity_json(capsys):
    code, out, _ = run(capsys, "cohomology", "--algebra", "builtin:M11plus", "--parity", "1",
                       "--format", "json")
    payload = json.loads(out)
    assert code == EXIT_OK and payload["parity"] == 1 and payload["dim_H"] == 0


def test_representatives_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "cohomology", "--algebra", "builtin:Dt", "--t", "generic",
                       "--parity", "0", "--representatives", "--format", "json")
    reps = json.loads(out)["representatives"]
    assert code == EXIT_OK and len(reps) == 1
    path = write(tmp_path, "rep.json", reps[0])
    code, out, _ = run(capsys, "verify-cocycle", "--algebra", "builtin:Dt", "--t", "generic",
                       "--cocycle", path, "--quotient", "--format", "json")
    payload = json.loads(out)
    assert code == EXIT_OK and payload["is_cocycle"] and payload["is_coboundary"] is False


def test_verify_explicit_cocycles(capsys, tmp_path):
    h5 = write(tmp_path, "h5.json", cocycle_doc(0, EVEN_REPS["h5"]))
    code, out, _ = run(capsys, "verify-cocycle", "--algebra", "builtin:Dt", "--t", "generic",
                       "--cocycle", h5, "--quotient")
    assert code == EXIT_OK and "not a coboundary" in out
    h1 = write(tmp_path, "h1.json", cocycle_doc(1, ODD_REPS["h1"]))
    code, out, _ = run(capsys, "verify-cocycle", "--algebra", "builtin:Dt", "--t", "generic",
                       "--cocycle", h1, "--quotient")
    assert code == EXIT_OK and out.strip().endswith("coboundary")
    zero = write(tmp_path, "zero.json", {"parity": 1, "entries": []})
    code, out, _ = run(capsys, "verify-cocycle", "--algebra", "builtin:Dt", "--t", "3",
                       "--cocycle", zero, "--quotient", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["is_coboundary"] is True


def test_verify_non_cocycle_exits_1(capsys, tmp_path):
    bad = write(tmp_path, "bad.json", cocycle_doc(0, [("e1", "e1", {"~e1": "1"})]))
    code, out, _ = run(capsys, "verify-cocycle", "--algebra", "builtin:Dt", "--t", "generic",
                       "--cocycle", bad)
    assert code == EXIT_MATH and "NOT a cocycle" in out


def test_verify_wrong_layout_exits_2(capsys, tmp_path):
    bad = write(tmp_path, "bad.json", cocycle_doc(0, [("e1", "e1", {"~x": "1"})]))
    code, _, _ = run(capsys, "verify-cocycle", "--algebra", "builtin:Dt", "--t", "generic",
                     "--cocycle", bad)
    assert code == EXIT_INPUT


def test_extension_command(capsys, tmp_path):
    h5 = write(tmp_path, "h5.json", cocycle_doc(0, EVEN_REPS["h5"]))
    code, out, _ = run(capsys, "extension", "--algebra", "builtin:Dt", "--t", "generic",
                       "--cocycle", h5, "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["jordan"] is True
    assert len(doc["even_basis"]) + len(doc["odd_basis"]) == 8
    bad = write(tmp_path, "bad.json", cocycle_doc(0, [("e1", "e1", {"~e1": "1"})]))
    code, _, _ = run(capsys, "extension", "--algebra", "builtin:Dt", "--t", "generic",
                     "--cocycle", bad)
    assert code == EXIT_MATH


def test_identity_variants_table(capsys):
    code, out, _ = run(capsys, "cohomology", "--algebra", "builtin:Dt", "--t", "generic",
                       "--identity-variants", "--format", "json", "--samples", "")
    rows = [row for r in json.loads(out)["reports"] for row in r["identity_variants"]]
    assert code == EXIT_OK and len(rows) == 12
    assert all(r["derived"]["passed"] and not r["printed"]["passed"] for r in rows)


def test_printed_coboundary_variant_is_a_consistency_failure(capsys):
    code, _, err = run(capsys, "cohomology", "--algebra", "builtin:Dt", "--t", "generic",
                       "--parity", "1", "--coboundary-variant", "printed")
    assert code == EXIT_MATH and "consistency failure" in err


def test_module_file(capsys, tmp_path):
    from jordancoh.bimodule import bimodule_to_document, regular_bimodule
    path = write(tmp_path, "mod.json", bimodule_to_document(regular_bimodule(builtin_Dt())))
    code, out, _ = run(capsys, "cohomology", "--algebra", "builtin:Dt", "--t", "generic",
                       "--module", path, "--format", "json")
    assert code == EXIT_OK and json.loads(out)["H2"] == "F ∔ 0"


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "jordancoh", "cohomology", "--algebra", "builtin:Dt",
                           "--t", "-1", "--format", "json"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["H2"] == "F ∔ 0"
    proc = subprocess.run([sys.executable, "-m", "jordancoh", "check"], capture_output=True, text=True)
    assert proc.returncode == 2
