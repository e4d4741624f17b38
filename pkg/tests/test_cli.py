import json
import math

import pytest

from planarspex.cli import main
from planarspex.io import decode_graph6
from planarspex.spectral import spectral_radius


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rho_examples(capsys):
    code, out, _ = run(capsys, "rho", "C~")
    assert code == 0 and "rho=3.0" in out
    code, out, _ = run(capsys, "--format", "json", "rho", "Bw")
    assert json.loads(out)["rho"] == pytest.approx(2.0)
    code, out, _ = run(capsys, "rho", "gm:7")
    assert "closed form gm:7: 3.0" in out


def test_rho_from_stdin_and_edge_list(capsys, monkeypatch, tmp_path):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("C~\n"))
    code, out, _ = run(capsys, "rho", "-")
    assert code == 0 and "rho=3.0" in out
    path = tmp_path / "k3.txt"
    path.write_text("3 3\n0 1\n1 2\n0 2\n")
    code, out, _ = run(capsys, "rho", str(path))
    assert "rho=2.0" in out


def test_parse_errors_exit_2(capsys):
    assert run(capsys, "rho", "C~~")[0] == 2
    assert run(capsys, "rho", "gm:x")[0] == 2
    assert run(capsys, "extremal", "--m", "3", "--forbid", "tree:3")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "--rho-tol", "-1", "rho", "C~")[0] == 2


def test_classify_and_build(capsys):
    code, out, _ = run(capsys, "--format", "json", "classify", "C~", "--forbid", "cycle:3")
    data = json.loads(out)
    assert data["planar"] and not data["outerplanar"] and data["contains cycle:3"]
    code, out, _ = run(capsys, "build", "gm:7")
    g = decode_graph6(out.strip())
    assert (g.n, g.m) == (5, 7)
    code, out, _ = run(capsys, "build", "star:3", "--edges")
    assert out.splitlines()[0] == "4 3"


def test_extremal_examples(capsys, tmp_path):
    code, out, _ = run(capsys, "extremal", "--m", "3", "--class", "outerplanar")
    assert code == 0 and "Bw" in out
    report = tmp_path / "r.json"
    run(capsys, "--format", "json", "extremal", "--m", "6", "--class", "planar", "--out", str(report))
    data = json.loads(report.read_text())
    assert [x["graph6"] for x in data["maximizers"]] == ["C~"]
    for x in data["maximizers"]:
        assert abs(spectral_radius(decode_graph6(x["graph6"])).rho - x["rho"]) <= 1e-9
    code, out, _ = run(capsys, "extremal", "--m", "5", "--class", "outerplanar", "--forbid", "cycle:3")
    assert f"rho={math.sqrt(5)!r}" in out and "reference star" in out


def test_enumerate_count_and_budget(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "4", "--class", "any", "--count")
    assert out.strip() == "5"
    code, _, err = run(capsys, "extremal", "--m", "14", "--class", "planar")
    assert code == 3 and "budget" in err
    assert run(capsys, "--budget", "3", "enumerate", "--m", "4", "--count")[0] == 3


def test_scan(capsys):
    code, out, _ = run(capsys, "--format", "json", "scan", "--kind", "conjecture", "--range", "25..40")
    winners = {r["m"]: r["winner"] for r in json.loads(out)["rows"]}
    assert [m for m in winners if winners[m] == "G"] == [31, *range(33, 41)]
    code, out, _ = run(capsys, "scan", "--kind", "crossover", "--range", "5..101")
    assert code == 0 and int(out.strip().splitlines()[-1].split("=")[1]) <= 64
    code, out, _ = run(capsys, "--format", "csv", "scan", "--kind", "conjecture", "--range", "6..6")
    assert out.splitlines()[1].endswith(",H," + out.splitlines()[1].split(",")[-1])
    assert run(capsys, "scan", "--kind", "conjecture", "--range", "9..3")[0] == 2


def test_verify_population_file(capsys, tmp_path):
    good = tmp_path / "good.g6"
    good.write_text("C~\nBw\nDhc\n")
    out_file = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--population", str(good), "--out", str(out_file))
    assert code == 0 and "overall: pass" in out
    assert json.loads(out_file.read_text())["status"] == "pass"
    bad = tmp_path / "bad.g6"
    bad.write_text("C~\nC~~\n")
    assert run(capsys, "verify", "--population", str(bad))[0] == 2


def test_config_file_and_override(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"output_format": "json", "enum_budget_m": 3}))
    code, out, _ = run(capsys, "--config", str(cfg), "rho", "C~")
    assert json.loads(out)["rho"] == pytest.approx(3.0)
    assert run(capsys, "--config", str(cfg), "enumerate", "--m", "4", "--count")[0] == 3
    assert run(capsys, "--config", str(cfg), "--budget", "5", "enumerate", "--m", "4", "--count")[0] == 0


def test_help_lists_tokens(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    for token in ("star:N", "gm:N", "hm:N", "fan:N", "wheel:N", "book:N", "path:k", "g6:"):
        assert token in out
