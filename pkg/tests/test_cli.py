import json
import subprocess
import sys

import pytest

from cayleychar.cli import RunConfig, main, render_json, run_subcommand


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_weight_sym3(capsys):
    code, out, _ = run(capsys, "weight", "sym:3")
    assert code == 0
    assert out.strip() == "8/3 ≈ 2.6666666667"


def test_precision_override(capsys):
    _, out, _ = run(capsys, "weight", "sym:3", "--precision", "3")
    assert out.strip() == "8/3 ≈ 2.667"


def test_weight_json(capsys):
    _, out, _ = run(capsys, "weight", "mathieu:11", "--format", "json")
    data = json.loads(out)
    assert data["weight"] == {"num": "11881", "den": "1980", "decimal": "6.0005050505", "repeating": "6.00(05)"}


def test_spectrum_sym3(capsys):
    code, out, _ = run(capsys, "spectrum", "sym:3", "--class", "3a", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["connection_set"] == ["3a"]
    assert data["degree"] == "2"
    multiset = {}
    for ev in data["eigenvalues"]:
        multiset[ev["value"]] = multiset.get(ev["value"], 0) + int(ev["multiplicity"])
    assert multiset == {"2": 2, "-1": 4}
    assert data["energy"] == "8" and data["exact"] is True and data["singular"] is False


def test_spectrum_union_of_classes(capsys):
    code, out, _ = run(capsys, "spectrum", "cyclic:5", "--class", "5a,5d")
    assert code == 0 and "10-regular" not in out and "2-regular" in out


def test_verify_m11(capsys):
    code, out, _ = run(capsys, "verify", "mathieu:11", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["theorem_holds"] is True
    assert "5a" in data["contrapositive"]
    five = next(c for c in data["classes"] if c["label"] == "5a")
    assert five == {
        "label": "5a", "size": "1584", "order": "5", "rational": True, "vanishing": True,
        "witnesses": five["witnesses"], "centralizer": "5", "comparison": "below",
    }
    assert five["witnesses"]


def test_classify_table_view(capsys):
    code, out, _ = run(capsys, "classify", "sym:4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("sym:4: omega = 25/6")
    assert len(lines) == 2 + 5
    assert len({len(l) for l in lines[1:]}) <= 2  # aligned columns


def test_classes_and_chartab(capsys, tmp_path):
    code, out, _ = run(capsys, "classes", "quaternion:8", "--format", "json")
    assert code == 0 and len(json.loads(out)["classes"]) == 5
    path = tmp_path / "m.tbl"
    code, out, _ = run(capsys, "chartab", "alt:5", "--export", str(path), "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["degrees"] == ["1", "3", "3", "4", "5"]
    code, out2, _ = run(capsys, "chartab", "alt:5", "--import", str(path), "--format", "json")
    assert code == 0 and out2 == out


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "dihedral:12", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["mismatches"] == [] and int(data["sets_checked"]) > 0
    code, _, err = run(capsys, "oracle", "sym:7")
    assert code == 1 and "cap" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["weight", "sym:3", "--prime", "5"],  # not 1 mod 6
        ["weight", "sym:3", "--prime", "19", "--max-order", "3"],  # cap exceeded
        ["weight", "@/nonexistent/file.gens"],
        ["weight", "bogus:3"],
        ["spectrum", "sym:3"],  # no class
        ["spectrum", "cyclic:5", "--class", "5a"],  # not inverse-closed
        ["chartab", "sym:3", "--import", "/nonexistent.tbl"],
    ],
)
def test_input_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == "" and err.startswith("error:")


def test_invalid_prime_rejected_before_computation(monkeypatch, capsys):
    import cayleychar.dixon as dixon

    def boom(*a, **k):
        raise AssertionError("table computed despite invalid prime")

    monkeypatch.setattr(dixon, "character_table", boom)
    code, _, _ = run(capsys, "chartab", "mathieu:11", "--prime", "1327")
    assert code == 1


def test_valid_prime_override(capsys):
    code, out, _ = run(capsys, "chartab", "sym:3", "--prime", "13", "--format", "json")
    assert code == 0 and json.loads(out)["prime"] == "13"


def test_corrupt_import_exits_3(capsys, tmp_path):
    path = tmp_path / "bad.tbl"
    run(capsys, "chartab", "sym:3", "--export", str(path))
    path.write_text(path.read_text().replace("char 2 2 0 -1", "char 2 2 1 -1"))
    code, _, err = run(capsys, "verify", "sym:3", "--import", str(path))
    assert code == 3 and "rejected" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "mathieu:11"),
        ("classify", "sym:5"),
        ("spectrum", "alt:5", "--class", "5a,5b"),
        ("classes", "dihedral:12"),
        ("chartab", "quaternion:8"),
    ],
)
def test_json_round_trip_and_determinism(argv):
    cfg = RunConfig(format="json", class_labels=tuple(a for a in argv[3:]))
    first, _ = run_subcommand(argv[0], argv[1], cfg)
    second, _ = run_subcommand(argv[0], argv[1], cfg)
    assert first == second
    assert render_json(json.loads(first)) == first


def test_console_entry_point_determinism():
    cmd = [sys.executable, "-m", "cayleychar", "classify", "alt:5", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True)
    b = subprocess.run(cmd, capture_output=True, check=True)
    assert a.stdout == b.stdout and a.returncode == 0
