import json
import math
import os
import subprocess

import pytest

import chordgeom


def test_unit_parabola_probe_is_exact():
    c = chordgeom.parse_curve_spec("parabola:a=1")
    r = chordgeom.probe(c, 0.0, 1.0)
    assert r["L"] == pytest.approx(2.0, rel=1e-14)
    assert r["S"] == pytest.approx(4.0 / 3.0, rel=1e-12)
    assert r["S_over_T"] == pytest.approx(4.0 / 3.0, rel=1e-12)
    assert r["g_over_h"] == pytest.approx(0.4, rel=1e-12)
    assert r["j_over_h"] == pytest.approx(2.0 / 3.0, rel=1e-13)
    assert r["k_over_h"] == pytest.approx(4.0 / 3.0, rel=1e-13)
    assert r["alpha"] == pytest.approx(1.0, rel=1e-13)
    assert r["y0"] == pytest.approx(-1.0, rel=1e-13)


def test_chord_and_frame():
    c = chordgeom.make_curve("circle", [1.0])
    ch = chordgeom.chord_endpoints(c, 0.0, 0.5)
    assert ch.length == pytest.approx(math.sqrt(3.0), rel=1e-14)
    f = chordgeom.probe_frame(c, 0.3)
    u, v = f.to_frame(*f.from_frame(0.2, -0.1))
    assert (u, v) == pytest.approx((0.2, -0.1), abs=1e-15)
    assert chordgeom.curvature_at(c, 0.0) == pytest.approx(1.0)


def test_alpha_tracks_local_coefficient_on_tilted_parabola():
    c = chordgeom.make_curve("parabola", [2.0])
    a_p = chordgeom.canonical_quadratic_coefficient(c, 1.5)
    for h in (0.5, 0.01):
        assert chordgeom.probe(c, 1.5, h)["alpha"] == pytest.approx(1.0 / math.sqrt(a_p), rel=1e-10)


def test_limits_and_fits():
    s = chordgeom.limit_suite(chordgeom.make_curve("circle", [1.0]), 0.0)
    assert abs(s["j_over_h"]["value"] - 2.0 / 3.0) <= 1e-4
    assert abs(s["alpha"]["value"] - math.sqrt(2.0)) <= 1e-4
    value, err = chordgeom.estimate_limit([(0.5, 3.0), (0.25, 3.0), (0.125, 3.0)])
    assert (value, err) == (3.0, 0.0)
    fit = chordgeom.power_law_fit([(2.0 ** -i, 2.0 ** -i / 3.0) for i in range(1, 8)])
    assert fit["mu"] == pytest.approx(1.0)
    assert fit["lambda"] == pytest.approx(1.0 / 3.0)


def test_classifier():
    para = chordgeom.make_curve("parabola", [2.0])
    assert chordgeom.classify_parabola(para, [-1.0, 0.0, 1.5])["classification"] == "parabola"
    circle = chordgeom.make_curve("circle", [1.0])
    assert chordgeom.classify_parabola(circle, [0.0])["classification"] == "not-parabola"


def test_errors():
    with pytest.raises(chordgeom.AnalysisError):
        chordgeom.make_curve("poly", [0.0, 0.0, 0.0, 1.0])
    with pytest.raises(chordgeom.AnalysisError):
        chordgeom.chord_endpoints(chordgeom.make_curve("circle", [1.0]), 0.0, 5.0)


def test_run_in_process():
    status, out, err = chordgeom.run(["detect", "--curve", "circle:r=1", "--xp", "0"])
    assert status == 0, err
    assert json.loads(out)["classification"] == "not-parabola"
    status, _, _ = chordgeom.run(["probe", "--curve", "circle:r=0", "--h", "0.1"])
    assert status == 2


@pytest.mark.skipif("CHORDGEOM_CLI" not in os.environ, reason="CLI binary not provided")
def test_cli_binary_csv_round_trip():
    proc = subprocess.run(
        [os.environ["CHORDGEOM_CLI"], "sweep", "--curve", "parabola:a=1", "--xp", "0", "--n", "3"],
        capture_output=True, text=True, check=True,
    )
    lines = proc.stdout.strip().splitlines()
    assert lines[0].startswith("curve,xp,h,L,S,T,g,j,k,delta,alpha")
    assert len(lines) == 4
