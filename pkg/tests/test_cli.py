import json
import math
import subprocess
import sys

import pytest

from ccg25.cli import main


def run(args, tmp_path=None):
    return main(args)


def test_construct_standard(tmp_path):
    out = tmp_path / "std.json"
    assert main(["construct", "--t", "1,1,1", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["certificate"]["reducible"] is True
    assert doc["moduli"]["t0"] == "1/1"
    assert doc["moduli"]["count"] == 1
    assert doc["certificate"]["w_closed"] == pytest.approx(40 * math.pi)


def test_construct_infeasible_exit_2(tmp_path):
    assert main(["construct", "--t", "1,1,100", "--out", str(tmp_path / "x.json")]) == 2


def test_construct_parse_failure_exit_1():
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--t", "zardoz"])
    assert exc.value.code == 1


def test_construct_family33(tmp_path):
    out = tmp_path / "f33.json"
    assert main(["construct", "--family33", "3.14159265", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["certificate"]["gram_defect"] <= 1e-8


def test_certify_roundtrip(tmp_path):
    out = tmp_path / "rmk.json"
    assert main(["construct", "--t", "1,1/16,1/4096", "--out", str(out)]) == 0
    cert_out = tmp_path / "cert.json"
    assert main(["certify", str(out), "--out", str(cert_out)]) == 0
    cert = json.loads(cert_out.read_text())
    assert cert["curvature_constant"] is True
    assert cert["gram_defect"] <= 1e-10


def test_scan_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    argv = ["scan", "--g", "1", "--t0-range", "1:3/2:3", "--no-plot"]
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    header = a.read_text().splitlines()[0]
    assert header == "t0,t1,g,F,X,Y,Z,in_S,count,W_over_pi"


def test_scan_plot_written(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["scan", "--g", "1", "--t0-range", "1:3/2:2", "--out", str(out)]) == 0
    assert (tmp_path / "s.csv.png").exists()


def test_scan_dat_format(tmp_path):
    out = tmp_path / "s.dat"
    assert main(["scan", "--g", "1", "--t0-range", "1:3/2:2", "--format", "dat",
                 "--no-plot", "--out", str(out)]) == 0
    assert out.read_text().startswith("# t0 t1 g")


def test_levelset(tmp_path):
    out = tmp_path / "ls.csv"
    assert main(["levelset", "--s-range", "1:11/6:5", "--no-plot", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("s,t1_upper,t1_lower")
    first = lines[1].split(",")
    assert float(first[1]) == pytest.approx(1.0)
    assert float(first[2]) == pytest.approx(1 / 16)
    assert all(float(line.split(",")[3]) == 0 for line in lines[1:])


def test_functional(tmp_path):
    out = tmp_path / "w.json"
    assert main(["functional", "--t", "1,1/16,1/4096", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["w_closed_over_pi"] == "184/7"


def test_verify_paper_only(capsys, tmp_path):
    rep = tmp_path / "report.json"
    assert main(["verify-paper", "--only", "gradient,genericity", "--out", str(rep)]) == 0
    captured = capsys.readouterr()
    assert "PASS" in captured.out and "FAIL" not in captured.out
    doc = json.loads(rep.read_text())
    assert all(c["pass"] for c in doc)


def test_verify_paper_precision_robustness(capsys):
    # identical verdicts at two working precisions
    outs = []
    for bits in (128, 256):
        assert main(["verify-paper", "--only", "gradient,w_functional",
                     "--precision", str(bits)]) == 0
        outs.append([l.split()[0] for l in capsys.readouterr().out.splitlines() if l])
    assert outs[0] == outs[1]


def test_cli_entrypoint_subprocess():
    proc = subprocess.run([sys.executable, "-m", "ccg25.cli", "functional", "--t", "1,1,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert '"40/1"' in proc.stdout
