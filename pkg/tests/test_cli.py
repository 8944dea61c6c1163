import csv
import io
import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import numpy as np
import pytest

from helpers import CASE_H, CASE_QUAD
from quadcover.cli import RECORD_FIELDS, main
from quadcover.planner import plan
from quadcover.scenario import load_scenario

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"
M4 = SCENARIOS / "case_study_m4.json"
M9 = SCENARIOS / "case_study_m9.json"
M4_EXACT = SCENARIOS / "case_study_m4_exact.json"
SVG = "{http://www.w3.org/2000/svg}"


def _write_scenario(tmp_path, name="s.json", **overrides):
    doc = {"quad": [list(p) for p in CASE_QUAD], "m": 4, "frequency_hz": 2e9, "environment": "suburban"}
    doc.update(overrides)
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return path


def _rows(text):
    data = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(data))))


def test_plan_csv_stdout(capsys):
    assert main(["plan", "--scenario", str(M4)]) == 0
    out = capsys.readouterr().out
    rows = _rows(out)
    assert list(rows[0]) == list(RECORD_FIELDS)
    assert [r["uav_id"] for r in rows] == ["1", "2", "3", "4"]
    assert "# coverage_fraction,0.756009" in out
    assert "# quad_area_m2,586250.000" in out
    assert any(line.startswith("# homography,") for line in out.splitlines())
    # one decimal on angles, two on path loss
    assert all(len(r["psi_deg"].split(".")[1]) == 1 for r in rows)
    assert all(len(r["pl_max_db"].split(".")[1]) == 2 for r in rows)


def test_plan_json_file(tmp_path):
    out = tmp_path / "plan.json"
    assert main(["plan", "--scenario", str(M9), "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert len(doc["placements"]) == 9
    assert doc["summary"]["coverage_fraction"] == pytest.approx(0.790, abs=0.002)
    assert doc["summary"]["homography_decimals"] == 4
    # JSON keeps full precision
    ref = plan(load_scenario(M9))
    assert doc["placements"][8]["psi_deg"] == ref.placements[8].psi


def test_plan_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["plan", "--scenario", str(M4), "--out", str(a)]) == 0
    assert main(["plan", "--scenario", str(M4), "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_malformed_json_leaves_no_output(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"quad": [[0, 0], ')
    out = tmp_path / "out.csv"
    assert main(["plan", "--scenario", str(bad), "--out", str(out)]) == 2
    assert not out.exists()
    assert list(tmp_path.iterdir()) == [bad]


def test_input_errors(tmp_path, capsys):
    assert main(["plan", "--scenario", str(_write_scenario(tmp_path, m="four"))]) == 2
    assert main(["plan", "--scenario", str(_write_scenario(tmp_path, environment="rural"))]) == 2
    assert main(["plan", "--scenario", str(_write_scenario(tmp_path, m=40))]) == 2
    assert main(["plan", "--scenario", str(_write_scenario(tmp_path, extra=1))]) == 2
    custom = {"xi_los": 0.5, "xi_nlos": 18, "eta": 6.0, "kappa": 0.3}
    assert main(["plan", "--scenario", str(_write_scenario(tmp_path, environment=custom))]) == 0
    assert main(["plan"]) == 2
    assert main(["bogus"]) == 2
    capsys.readouterr()


def test_missing_file_is_io_error(tmp_path):
    assert main(["plan", "--scenario", str(tmp_path / "nope.json")]) == 1
    out = tmp_path / "no_such_dir" / "x.csv"
    assert main(["plan", "--scenario", str(M4), "--out", str(out)]) == 1


def test_degenerate_quad_exits_before_rendering(tmp_path):
    s = _write_scenario(tmp_path, quad=[[0, 0], [1, 0], [2, 0], [0, 1]])
    out = tmp_path / "fig.svg"
    assert main(["render", "--scenario", str(s), "--out", str(out)]) == 2
    assert not out.exists()
    s = _write_scenario(tmp_path, "bow.json", quad=[[0, 0], [100, 100], [100, 0], [0, 100]])
    assert main(["plan", "--scenario", str(s)]) == 2


def test_planning_failure_exit_code(tmp_path, capsys):
    tiny = _write_scenario(tmp_path, quad=[[0, 0], [1, 0], [1, 1], [0, 1]])
    assert main(["plan", "--scenario", str(tiny)]) == 3
    assert "UAV 1:" in capsys.readouterr().err


def _ellipses(path):
    root = ET.parse(path).getroot()
    return {el.get("id"): el for el in root.iter(f"{SVG}ellipse")}, root


@pytest.mark.parametrize("scenario, m", [(M4, 4), (M9, 9)])
def test_render_footprints(tmp_path, scenario, m):
    out = tmp_path / "fig.svg"
    assert main(["render", "--scenario", str(scenario), "--out", str(out)]) == 0
    ellipses, root = _ellipses(out)
    assert len(ellipses) == m
    ref = plan(load_scenario(scenario))
    for e in ref.footprints:
        el = ellipses[f"footprint-{e.index}"]
        got = [float(el.get(k)) for k in ("cx", "cy", "rx", "ry")]
        for g, want in zip(got, (e.center.x, e.center.y, e.a, e.b)):
            assert g == pytest.approx(want, rel=5e-6)
        angle = float(el.get("transform").split("(")[1].split()[0])
        assert angle == pytest.approx(math.degrees(e.phi), rel=5e-6, abs=1e-6)
    labels = {t.text for t in root.iter(f"{SVG}text")}
    assert {str(i) for i in range(1, m + 1)} <= labels
    assert "world-to-view" in out.read_text()


def test_render_exact_footprints_inside_quad_path(tmp_path):
    out = tmp_path / "fig.svg"
    assert main(["render", "--scenario", str(M4_EXACT), "--out", str(out)]) == 0
    ellipses, root = _ellipses(out)
    quad = next(p for p in root.iter(f"{SVG}polygon") if p.get("id") == "quad")
    pts = np.array([[float(v) for v in pair.split(",")] for pair in quad.get("points").split()])
    for el in ellipses.values():
        cx, cy, rx, ry = (float(el.get(k)) for k in ("cx", "cy", "rx", "ry"))
        phi = math.radians(float(el.get("transform").split("(")[1].split()[0]))
        t = np.linspace(0, 2 * np.pi, 128, endpoint=False)
        x = cx + rx * np.cos(t) * math.cos(phi) - ry * np.sin(t) * math.sin(phi)
        y = cy + rx * np.cos(t) * math.sin(phi) + ry * np.sin(t) * math.cos(phi)
        for i in range(4):
            (x0, y0), (x1, y1) = pts[i], pts[(i + 1) % 4]
            cross = (x1 - x0) * (y - y0) - (y1 - y0) * (x - x0)
            assert cross.min() > -1e-6 * 2000 * math.hypot(x1 - x0, y1 - y0)
    # no separate packed-region outline when the homography is exact
    assert not any(p.get("id") == "packed-region" for p in root.iter(f"{SVG}polygon"))


@pytest.mark.parametrize("mode", ["packing_pair", "pose3d"])
def test_render_other_modes(tmp_path, mode):
    out = tmp_path / f"{mode}.svg"
    assert main(["render", "--scenario", str(M9), "--out", str(out), "--mode", mode]) == 0
    root = ET.parse(out).getroot()
    if mode == "packing_pair":
        circles = [c for c in root.iter(f"{SVG}circle") if (c.get("id") or "").startswith("circle-")]
        assert len(circles) == 9
        assert len(_ellipses(out)[0]) == 9
    else:
        tilts = [ln for ln in root.iter(f"{SVG}line") if (ln.get("id") or "").startswith("tilt-")]
        assert len(tilts) == 9
    assert main(["render", "--scenario", str(M9), "--out", str(out), "--mode", "cubist"]) == 2


def _parse_matrix(text):
    lines = text.splitlines()
    return np.array([[float(v) for v in lines[i].split()] for i in (1, 2, 3)])


def test_homography_command(capsys):
    args = [str(v) for p in CASE_QUAD for v in p]
    assert main(["homography", *args]) == 0
    out = capsys.readouterr().out
    assert np.abs(_parse_matrix(out) - CASE_H).max() < 5e-4
    assert "vanishing point (horizontal lines): (" in out

    assert main(["homography", "0", "0", "1", "0", "1", "1", "0", "1"]) == 0
    out = capsys.readouterr().out
    np.testing.assert_allclose(_parse_matrix(out), np.eye(3) / math.sqrt(3), atol=1e-6)
    assert out.count("at infinity") == 2

    assert main(["homography", "0", "0", "2", "0", "2", "1", "0", "1"]) == 0
    m = _parse_matrix(capsys.readouterr().out)
    np.testing.assert_allclose(m, np.diag([2.0, 1.0, 1.0]) / math.sqrt(6), atol=1e-6)

    assert main(["homography", "0", "0", "1", "0", "2", "0", "0", "1"]) == 2
    assert main(["homography", "0", "0", "1"]) == 2
    capsys.readouterr()


def test_verify_passes_and_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert main(["verify", "--scenario", str(M4), "--seed", "42", "--out", str(a)]) == 0
    assert main(["verify", "--scenario", str(M4), "--seed", "42", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[-1] == "verify: PASS 4/4 passed"
    assert all(line.startswith("PASS") for line in lines[:-1])


def test_verify_detects_overlapping_packing(tmp_path, capsys):
    (tmp_path / "overlap.txt").write_text("# hand-edited: circles overlap\n4 0.3\n0.3 0.3\n0.7 0.3\n0.3 0.7\n0.7 0.7\n")
    s = _write_scenario(tmp_path, packing_file="overlap.txt")
    assert main(["verify", "--scenario", str(s), "--samples", "20000"]) == 4
    out = capsys.readouterr().out
    assert "FAIL tangency" in out
    assert out.splitlines()[-1].startswith("verify: FAIL")
    # plan refuses the same file up front
    assert main(["plan", "--scenario", str(s)]) == 2


def test_verify_sample_floor(capsys):
    assert main(["verify", "--scenario", str(M4), "--samples", "100"]) == 2
    capsys.readouterr()


def test_offset_policy_flag(capsys):
    assert main(["plan", "--scenario", str(M4), "--format", "json"]) == 0
    toward = json.loads(capsys.readouterr().out)
    assert main(["plan", "--scenario", str(M4), "--format", "json", "--offset-policy", "away-from-centroid"]) == 0
    away = json.loads(capsys.readouterr().out)
    assert away["summary"]["offset_policy"] == "away-from-centroid"
    for t, a in zip(toward["placements"], away["placements"]):
        assert t["h_opt_m"] == a["h_opt_m"]
        mid = ((t["proj_x"] + a["proj_x"]) / 2, (t["proj_y"] + a["proj_y"]) / 2)
        assert mid == pytest.approx((t["center_x"], t["center_y"]), abs=1e-6)


def test_figures_written(tmp_path):
    out = tmp_path / "m4.csv"
    figs = tmp_path / "figs"
    assert main(["plan", "--scenario", str(M4), "--out", str(out), "--figures", str(figs)]) == 0
    names = sorted(p.name for p in figs.iterdir())
    assert names == ["m4_altitude_pathloss.png", "m4_footprints.png"]
    for p in figs.iterdir():
        assert p.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "quadcover", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("quadcover ")
