import json
import subprocess
import sys

import pytest

from homalg import catalog, io
from homalg.cli import main
from homalg.core import LinearMap


def data(name):
    return str(catalog.path(name))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_exit_codes(capsys):
    assert run(capsys, "check", data("sl2"), "--identity", "hom-lie")[0] == 0
    code, out, _ = run(capsys, "check", data("m4"), "--identity", "hom-lie")
    assert code == 1
    assert out == (
        "identity: hom-lie\nform: -\nverdict: fails\nwitness: (e1, e2, e3)\nresidual: (0, 0, 0, -6)\n"
    )
    code, out, _ = run(capsys, "check", data("assoc2"), "--identity", "hom-malcev")
    assert code == 2
    assert "verdict: precondition" in out and "cause: anticommutative: fails at (u, u)" in out


def test_check_forms(capsys):
    for form in ("direct", "eq23", "eq24"):
        code, out, _ = run(capsys, "check", data("m4"), "--identity", "hom-malcev", "--form", form)
        assert code == 0 and f"form: {form}" in out
    code, out, _ = run(capsys, "check", data("ra_np"), "--identity", "left-alternative", "--form", "eq44")
    assert code == 1 and "witness:" in out
    code, out, _ = run(capsys, "check", data("ra_np"), "--identity", "hom-alternative")
    assert code == 1 and "clause: left" in out


def test_check_report_file(capsys, tmp_path):
    report = tmp_path / "r.homalg-report"
    code, _, _ = run(capsys, "check", data("m4"), "--identity", "hom-lie", "--report", str(report))
    assert code == 1
    row = json.loads(report.read_text())["results"][0]
    assert row["verdict"] == "fails" and row["witness"]["labels"] == ["e1", "e2", "e3"]


@pytest.mark.parametrize("argv", [
    ["check", "missing.homalg", "--identity", "hom-lie"],
    ["check", "SL2", "--identity", "no-such"],
    ["check", "SL2", "--identity", "hom-lts"],
    ["check", "SL2", "--identity", "hom-lie", "--form", "eq23"],
    ["check", "SL2", "--identity", "hom-malcev", "--form", "eq41"],
    ["check", "SL2"],
    ["frobnicate"],
    ["verify", "--suite", "nonexistent"],
    ["construct", "SL2", "--functor", "no-such"],
    ["construct", "SL2", "--functor", "yau-twist"],
    ["construct", "SL2", "--functor", "alpha-n-lts", "--morphism", "SL2", "--n", "1"],
    ["construct", "LTS", "--functor", "loos-lts"],
    ["catalog", "show"],
    ["catalog", "show", "nope"],
    ["search", "--want", "hom-lie"],
    ["search", "--want", "hom-lie=maybe"],
    ["search", "--want", "nope=holds"],
    ["search", "--want", "hom-lie=holds", "--dims", "x..3"],
    ["search", "--want", "hom-lie=holds", "--dims", "0..2"],
    ["search", "--want", "hom-lie=holds", "--budget", "0"],
    ["search", "--want", "hom-lie=holds", "--generator", "nope"],
])
def test_usage_errors(capsys, argv):
    argv = [{"SL2": data("sl2"), "LTS": data("lts-sl2")}.get(a, a) for a in argv]
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 64
    assert capsys.readouterr().err


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.homalg"
    bad.write_text('{"format": "homalg",\n "dim": }')
    code, _, err = run(capsys, "check", str(bad), "--identity", "hom-lie")
    assert code == 64 and "line 2" in err


def test_threads_variable(capsys, monkeypatch):
    monkeypatch.setenv("HOMCHECK_THREADS", "many")
    assert run(capsys, "check", data("sl2"), "--identity", "hom-lie")[0] == 64
    monkeypatch.setenv("HOMCHECK_THREADS", "3")
    code, out, _ = run(capsys, "check", data("m4"), "--identity", "hom-lie")
    assert code == 1 and "witness: (e1, e2, e3)" in out


def test_construct_loos_then_check(capsys, tmp_path):
    out = tmp_path / "out.homalg"
    assert run(capsys, "construct", data("sl2"), "--functor", "loos-lts", "-o", str(out))[0] == 0
    assert run(capsys, "check", str(out), "--identity", "hom-lts")[0] == 0
    doc = io.load_document(out)
    assert doc.meta["provenance"] == {"functor": "loos-lts", "inputs": ["sl2.homalg"], "twist_power": 2}
    assert io.canonical(out.read_text()) == out.read_text()


def test_construct_bol_one_sided(capsys, tmp_path):
    b = tmp_path / "b.homalg"
    assert run(capsys, "construct", data("ra_np"), "--functor", "bol-one-sided", "--side", "right", "-o", str(b))[0] == 0
    assert run(capsys, "check", str(b), "--identity", "hom-bol")[0] == 0


def test_construct_alpha_zero_equals_loos(capsys, tmp_path):
    ident = tmp_path / "id.homalg"
    io.dump(LinearMap.identity(3), ident, "id")
    c, loos = tmp_path / "c.homalg", tmp_path / "loos.homalg"
    argv = ["construct", data("sl2"), "--functor", "alpha-n-lts", "--morphism", str(ident), "--n", "0", "-o", str(c)]
    assert run(capsys, *argv)[0] == 0
    assert run(capsys, "construct", data("sl2"), "--functor", "loos-lts", "-o", str(loos))[0] == 0
    assert io.load(c) == io.load(loos)
    assert io.load_document(c).meta["provenance"]["twist_power"] == 0


def test_construct_precondition(capsys, tmp_path):
    code, _, err = run(capsys, "construct", data("assoc2"), "--functor", "loos-lts", "-o", str(tmp_path / "x"))
    assert code == 2 and "hom-malcev" in err and not (tmp_path / "x").exists()
    code, _, _ = run(capsys, "construct", data("assoc2"), "--functor", "loos-lts", "--no-check", "-o", str(tmp_path / "x"))
    assert code == 0


def test_construct_to_stdout(capsys):
    code, out, _ = run(capsys, "construct", data("ra_np"), "--functor", "opposite")
    assert code == 0 and io.parse(out).kind == "binary"


def test_catalog_verbs(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and [line.split()[0] for line in out.splitlines()] == catalog.names()
    code, out, _ = run(capsys, "catalog", "show", "sl2")
    assert code == 0 and out == catalog.path("sl2").read_text()


def test_search_verb(capsys, tmp_path):
    out = tmp_path / "found.homalg"
    argv = ["search", "--want", "anticommutative=holds", "--dims", "3", "--budget", "1", "-o", str(out)]
    assert run(capsys, *argv)[0] == 0
    entry = catalog.from_document(io.load_document(out))
    assert catalog.verify(entry) == [] and entry.provenance["attempt"] == 0
    code, _, err = run(capsys, "search", "--want", "anticommutative=fails", "--generator", "anticommutative",
                       "--budget", "3")
    assert code == 1 and "no algebra" in err
    code, out_text, _ = run(capsys, "search", "--want", "right-alternative:eq41=holds", "--want",
                            "left-alternative=fails", "--dims", "3", "--budget", "20000", "--seed", "2024")
    assert code == 0 and io.parse(out_text).value == catalog.get("ra_np").payload


def test_verify_verb(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--suite", "thm-3.2")
    assert code == 0 and out.startswith("== thm-3.2:") and "FAIL" not in out
    report = tmp_path / "rep"
    code, out, _ = run(capsys, "verify", "--suite", "equiv-2.2-2.3-2.4", "--report", str(report))
    assert code == 0
    rows = json.loads(report.read_text())["results"]
    assert rows and all(r["verdict"] == "pass" for r in rows)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "homalg", "check", data("sl2"), "--identity", "hom-malcev"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "verdict: holds" in proc.stdout
