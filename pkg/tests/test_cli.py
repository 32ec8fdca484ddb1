import csv
import io
import json
import math
import xml.etree.ElementTree as ET

import pytest

from gelliptic import cli, suites
from gelliptic.report import Report


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("text,value", [
    ("1+2i", 1 + 2j), ("-0.5-1.25i", -0.5 - 1.25j), ("3", 3 + 0j), ("2i", 2j),
    ("i", 1j), ("-i", -1j), ("1+i", 1 + 1j), ("1e-3+2i", 0.001 + 2j), ("-2i", -2j),
])
def test_parse_complex(text, value):
    assert cli.parse_complex(text) == value


@pytest.mark.parametrize("text", ["", "1+2j", "1 + 2i", "abc", "1+2", "ii", "2i3", "nan"])
def test_parse_complex_rejects(text):
    with pytest.raises(ValueError):
        cli.parse_complex(text)


def test_eval_examples(capsys):
    code, out, _ = run(capsys, "eval", "--fn", "mu", "--a", "0.5", "--b", "0.5", "--c", "1",
                       "--r", "0.7071067811865476")
    assert code == 0 and float(out.split()[0]) == pytest.approx(math.pi / 2, rel=1e-12)
    code, out, _ = run(capsys, "eval", "--fn", "F", "--a", "1", "--b", "1", "--c", "2", "--x", "0.5",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["value"] == pytest.approx(1.3862943611, rel=1e-10)
    assert set(data) == {"value", "method", "terms_used", "error_estimate"}
    code, out, _ = run(capsys, "eval", "--fn", "M", "--a", "0.5", "--b", "0.5", "--c", "1", "--x", "0.3")
    assert code == 0 and float(out.split()[0]) == pytest.approx(0.3183098862, rel=1e-10)


def test_eval_other_functions(capsys):
    base = ["--a", "0.5", "--b", "0.5", "--c", "1"]
    code, out, _ = run(capsys, "eval", "--fn", "K", *base, "--r", "0.8")
    assert code == 0 and float(out.split()[0]) == pytest.approx(1.9953027776, rel=1e-10)
    code, out, _ = run(capsys, "eval", "--fn", "E", *base, "--r", "0.6")
    assert float(out.split()[0]) == pytest.approx(1.4180833944, rel=1e-10)
    code, out, _ = run(capsys, "eval", "--fn", "muinv", *base, "--y", str(math.pi / 2))
    assert float(out.split()[0]) == pytest.approx(1 / math.sqrt(2), rel=1e-12)
    code, out, _ = run(capsys, "eval", "--fn", "phi", *base, "--K", "2", "--r", "0.25")
    assert float(out.split()[0]) == pytest.approx(2 * 0.5 / 1.25, rel=1e-10)


def test_eval_errors(capsys):
    code, _, err = run(capsys, "eval", "--fn", "K", "--a", "0.5", "--b", "0.5", "--c", "1", "--r", "1")
    assert code == 2 and "InfinityAtOne" in err
    code, _, err = run(capsys, "eval", "--fn", "F", "--a", "1", "--b", "1", "--c", "2")
    assert code == 2 and "--x" in err
    code, _, _ = run(capsys, "eval", "--fn", "F", "--a", "x", "--b", "1", "--c", "2", "--x", "0.1")
    assert code == 2
    code, _, _ = run(capsys, "eval", "--fn", "nope")
    assert code == 2
    code, _, _ = run(capsys, "eval", "--fn", "muinv", "--a", "0.3", "--b", "0.4", "--c", "1", "--y", "100")
    assert code == 2


def test_no_convergence_exit(capsys, monkeypatch):
    monkeypatch.setenv("GELLIPTIC_MAX_TERMS", "3")
    code, _, err = run(capsys, "eval", "--fn", "F", "--a", "0.5", "--b", "0.5", "--c", "1", "--x", "0.7")
    assert code == 3 and "converge" in err


def test_qm(capsys):
    code, out, _ = run(capsys, "qm", "--A", "1+2i", "--B", "i")
    assert code == 0
    assert out.splitlines()[0].startswith("modulus ")
    assert float(out.split()[1]) == pytest.approx(1.279261, abs=2e-6)
    code, out, _ = run(capsys, "qm", "--A", "1+1i", "--B", "i", "--format", "json")
    data = json.loads(out)
    assert set(data) == {"modulus", "r", "a", "b", "c", "residual", "iterations"}
    assert data["modulus"] == pytest.approx(1.0, abs=1e-12)
    code, _, err = run(capsys, "qm", "--A", "1+2j", "--B", "i")
    assert code == 2 and "malformed" in err
    code, _, _ = run(capsys, "qm", "--A", "1-2i", "--B", "i")
    assert code == 2


def test_table(capsys):
    code, out, _ = run(capsys, "table")
    rows = [line.split() for line in out.splitlines()]
    assert code == 0 and len(rows) == 5 and all(len(r) == 5 for r in rows)
    assert rows[0][1] == "1.279261" and rows[4][0] == "0.715410" and rows[2][2] == "1.000000"
    code, out, _ = run(capsys, "table", "--m", "2", "--n", "2", "--format", "csv")
    recs = list(csv.DictReader(io.StringIO(out)))
    assert [r["modulus"] for r in recs] == ["1.000000", "1.279261", "0.781700", "1.000000"]
    code, out, _ = run(capsys, "table", "--m", "1", "--n", "1", "--format", "json")
    assert json.loads(out)["values"] == [[1.0]]
    code, _, _ = run(capsys, "table", "--m", "0")
    assert code == 2


def test_grid_svg_and_csv(capsys, tmp_path):
    path = tmp_path / "g.svg"
    code, _, _ = run(capsys, "grid", "--n-lines", "3", "--samples", "10", "--out", str(path))
    assert code == 0
    root = ET.parse(path).getroot()
    paths = root.findall("{http://www.w3.org/2000/svg}path") + \
        root.findall(".//{http://www.w3.org/2000/svg}path")
    assert any(p.get("id") == "polygon" for p in paths)
    assert len([p for p in paths if p.get("id", "").startswith("line")]) == 6
    code, out, _ = run(capsys, "grid", "--n-lines", "2", "--samples", "8", "--format", "csv")
    recs = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(recs) == 4 * 8
    assert list(recs[0]) == ["line_id", "point_index", "re", "im"]
    code, _, _ = run(capsys, "grid", "--a", "1.5")
    assert code == 2


def test_deterministic_output(capsys):
    outs = [run(capsys, "grid", "--n-lines", "2", "--samples", "8", "--format", "csv")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    outs = [run(capsys, "verify", "--suite", "seriesmono", "--seed", "7")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "odes")
    assert code == 0 and out.strip().endswith("checks passed")


def test_verify_forced_failure(capsys, monkeypatch):
    def broken(seed):
        rep = Report("fixture")
        rep.add("always fails", False)
        return [rep]
    monkeypatch.setitem(suites.SUITES, "odes", broken)
    code, out, _ = run(capsys, "verify", "--suite", "odes")
    assert code == 1 and "[FAIL] always fails" in out


def test_verify_mlimits_reports_known_gap(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "mlimits")
    assert code == 1
    assert out.count("[FAIL]") == 1 and "c=a+b+1" in out


def test_help(capsys):
    code, out, _ = run(capsys, "qm", "--help")
    assert code == 0 and "complex literal" in out
