import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from wpkit.cli import main
from wpkit.rotation import angle_distance

HALF_ARCTAN2 = 0.553574358897045251508532730089
CPLX = ["--A-re", "1", "--B-re", "1", "--B-im", "1", "--hbar", "1"]


def run(argv):
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


def read_csv(text):
    rows = [r for r in text.splitlines() if not r.startswith("#")]
    return list(csv.DictReader(rows))


def test_theta_complex():
    code, out = run(["theta", *CPLX])
    d = json.loads(out)
    assert code == 0
    assert d["theta"] == pytest.approx(HALF_ARCTAN2, abs=1e-15)
    assert d["im_ba"] == 1.0 and d["mod_a"] == 1.0 and d["mod_b"] == pytest.approx(math.sqrt(2))


def test_theta_identity():
    code, out = run(["theta", "--A-re", "1", "--B-re", "1"])
    assert json.loads(out)["theta"] == 0.0


def test_invalid_params_exit_2(capsys):
    code, _ = run(["theta", "--A-re", "1", "--B-re", "2"])
    assert code == 2
    assert "exceeds tolerance" in capsys.readouterr().err


def test_report():
    code, out = run(["report", *CPLX])
    d = json.loads(out)
    assert d["product_alphabeta"] == pytest.approx(0.5, rel=1e-12)
    assert d["residual_min"] < 1e-10
    assert d["quadrature"]["product_alphabeta"] == pytest.approx(0.5, rel=1e-7)
    code, out = run(["report", "--A-re", "1", "--B-re", "1"])
    assert json.loads(out)["product_xp"] == pytest.approx(0.5, abs=1e-15)
    code, out = run(["report", *CPLX, "--k", "2"])
    assert json.loads(out)["product_alphabeta"] == pytest.approx(2.5, rel=1e-12)


def test_report_explicit_theta():
    code, out = run(["report", *CPLX, "--theta", "0"])
    d = json.loads(out)
    assert d["product_alphabeta"] == pytest.approx(d["product_xp"])
    assert d["residual_min"] > 0.2


def test_report_negative_k():
    assert run(["report", "--k", "-1"])[0] == 2


@pytest.mark.parametrize("cmd", [["theta", *CPLX], ["report", *CPLX, "--k", "3"], ["ellipse", *CPLX]])
def test_json_round_trip(cmd):
    _, out = run(cmd)
    d = json.loads(out)
    assert json.loads(json.dumps(d)) == d


def test_json_pretty():
    _, out = run(["theta", *CPLX, "--json-pretty"])
    assert out.count("\n") > 2


def test_sample_standard():
    code, out = run(["sample", "--xmin", "-5", "--xmax", "5", "--points", "11"])
    rows = read_csv(out)
    assert len(rows) == 11
    mid = rows[5]
    assert float(mid["x"]) == 0
    assert float(mid["abs2"]) == pytest.approx(math.pi ** -0.5, abs=1e-15)
    code, out = run(["sample", "--k", "1", "--xmin", "-5", "--xmax", "5", "--points", "11"])
    assert float(read_csv(out)[5]["abs2"]) == 0


def test_sample_complex_default_grid():
    code, out = run(["sample", *CPLX])
    rows = read_csv(out)
    assert len(rows) == 4001
    x = np.array([float(r["x"]) for r in rows])
    w = np.array([float(r["abs2"]) for r in rows])
    assert np.trapezoid(w, x) == pytest.approx(1.0, abs=1e-6)
    # |phi_0|^2 is the Gaussian of variance hbar |A|^2 / 2
    np.testing.assert_allclose(w, np.exp(-x ** 2) / math.sqrt(math.pi), atol=1e-15)


@pytest.mark.parametrize("k", [0, 3, 7])
def test_sample_norm(k):
    _, out = run(["sample", "--A-re", "0.5", "--B-re", "2", "--B-im", "3", "--hbar", "0.1", "--a", "1",
                  "--k", str(k)])
    rows = read_csv(out)
    x = np.array([float(r["x"]) for r in rows])
    w = np.array([float(r["abs2"]) for r in rows])
    assert abs(np.trapezoid(w, x) - 1) <= 1e-6


def test_sample_bad_points():
    assert run(["sample", "--points", "1"])[0] == 2


def test_sample_full_precision():
    _, out = run(["sample", "--xmin", "0", "--xmax", "1", "--points", "2"])
    v = read_csv(out)[0]["re"]
    assert float(v) == math.pi ** -0.25


def test_scan_circular():
    _, out = run(["scan", "--A-re", "1", "--B-re", "1"])
    rows = read_csv(out)
    assert len(rows) == 1024
    np.testing.assert_allclose([float(r["product"]) for r in rows], 1.0, atol=1e-15)


@pytest.mark.parametrize("points", [1024, 4096])
def test_scan_complex(points):
    _, out = run(["scan", *CPLX, "--points", str(points)])
    rows = read_csv(out)
    t = np.array([float(r["t"]) for r in rows])
    prod = np.array([float(r["product"]) for r in rows])
    im = np.array([float(r["im_ba"]) for r in rows])
    i = np.argmin(prod)
    # product = sqrt(1 + Im^2) with |d Im/dt| = sqrt(5); offset at most half a step
    step = math.pi / points
    assert abs(prod[i] - 1) <= 0.5 * 5 * (step / 2) ** 2
    # minimizers sit at theta and theta + pi/2
    assert angle_distance(t[i], HALF_ARCTAN2) <= step + 1e-9
    assert np.sign(im[i - 1]) != np.sign(im[i + 1])
    tail = out.strip().splitlines()[-1]
    assert tail.startswith("# argmin=")
    fields = dict(kv.split("=") for kv in tail[2:].split())
    assert angle_distance(float(fields["argmin"]), float(fields["optimal_theta"])) <= step + 1e-9


def test_ellipse_oscillator():
    _, out = run(["ellipse", "--A-re", "0.5", "--B-re", "2"])
    e = json.loads(out)
    assert e["tilt"] == 0
    assert e["semiaxes"] == pytest.approx([math.sqrt(0.5), math.sqrt(8)], rel=1e-15)


def test_ellipse_circle_and_complex():
    e = json.loads(run(["ellipse", "--A-re", "1", "--B-re", "1"])[1])
    assert e["semiaxes"] == pytest.approx([math.sqrt(2)] * 2)
    e = json.loads(run(["ellipse", *CPLX])[1])
    assert e["tilt"] == pytest.approx(HALF_ARCTAN2, abs=1e-15)
    assert abs(e["semiaxes"][0] * e["semiaxes"][1] - 2) < 1e-12
    assert len(e["boundary"]) == 64


def test_verify_small():
    code, out = run(["verify", "--trials", "5"])
    assert code == 0
    assert "all 13 invariants passed" in out


def test_verify_tamper():
    code, out = run(["verify", "--trials", "2", "--tamper"])
    assert code == 1
    assert "failed invariants:" in out and "FAIL" in out


def test_verify_env_seed(monkeypatch):
    monkeypatch.setenv("WPKIT_SEED", "7")
    code, out = run(["verify", "--trials", "2"])
    assert code == 0 and "seed=7" in out


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "wpkit", "theta", *CPLX],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["theta"] == pytest.approx(HALF_ARCTAN2)
    bad = subprocess.run([sys.executable, "-m", "wpkit", "theta", "--B-re", "2"], capture_output=True)
    assert bad.returncode == 2
