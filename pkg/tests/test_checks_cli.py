import json
import os
import subprocess
import sys

import numpy as np
import pytest

from elliptikit.checks import RunConfig, registry, report_bytes, run_checks

# one registered check per claimed theorem; compared exactly so additions and
# removals both show up here
MANIFEST = {
    "projective.join_meet_duality",
    "projective.cross_ratio_reciprocal",
    "projective.normalization_idempotent",
    "metric.triangle_inequality",
    "metric.segment_pairing",
    "metric.parallel_incidences",
    "metric.reflection_isometry",
    "metric.circle_center_symmetry",
    "frame.char_inverse",
    "frame.dual_triple_coords",
    "frame.trig_rules",
    "frame.staudtian_concavity",
    "frame.staudtian_representation",
    "cevian.tripole_roundtrip",
    "cevian.tripolar_conjugates_collinear",
    "cevian.ktilde_maps_circumcircle",
    "cevian.pedal_antipedal_duality",
    "centers.companion_associates",
    "centers.absolute_orthocenter",
    "centers.classical_equidistance",
    "centers.conjugacy_relations",
    "centers.hminus_perspector",
    "centers.gsharp_area_bisection",
    "centers.angle_form_agreement",
    "centers.dual_triangle_circumradius",
    "centers.euclidean_limits",
    "conics.simson_pedal_collinearity",
    "conics.circumconic_perspector_roundtrip",
    "conics.ellipse_symmetry_points",
    "conics.bicevian_circle_condition",
    "conics.cubic_incidences",
    "lines.equation_join_consistency",
    "lines.central_line_rosters",
    "lines.ok_specifics",
    "lines.akopyan_cevian_axis",
    "lines.longchamps_radical_center",
    "lines.longchamps_memberships",
    "lines.harmonic_range_go",
    "lines.harmonic_range_akopyan",
    "lines.vigara_symmetry",
    "lines.hart_circle",
}


def test_registry_matches_manifest():
    assert set(registry()) == MANIFEST


def test_registry_statements_are_clean():
    for check in registry().values():
        assert check.statement
        assert check.tolerance >= 0.0
        assert check.kind in ("per_frame", "global")


def test_small_run_passes_and_reports():
    rep = run_checks(RunConfig(seed=42, frames=15))
    assert rep["pass"]
    assert len(rep["checks"]) == len(MANIFEST)
    for c in rep["checks"]:
        assert set(c) == {"name", "statement", "frames_tested", "max_residual",
                          "tolerance", "pass", "worst_frame"}
    names = [c["name"] for c in rep["checks"]]
    assert names == sorted(names)


def test_report_bytes_deterministic():
    r1 = report_bytes(run_checks(RunConfig(seed=9, frames=10)))
    r2 = report_bytes(run_checks(RunConfig(seed=9, frames=10)))
    assert r1 == r2
    r3 = report_bytes(run_checks(RunConfig(seed=10, frames=10)))
    assert r3 != r1


def test_only_filter_and_overrides():
    rep = run_checks(RunConfig(seed=3, frames=8, only="harmonic"))
    assert [c["name"] for c in rep["checks"]] == [
        "lines.harmonic_range_akopyan", "lines.harmonic_range_go"]
    strict = run_checks(RunConfig(seed=3, frames=8, only="harmonic",
                                  tolerances={"lines.harmonic_range_go": 1e-30}))
    by_name = {c["name"]: c for c in strict["checks"]}
    assert not by_name["lines.harmonic_range_go"]["pass"]
    assert not strict["pass"]


def test_tol_scale_applies():
    rep = run_checks(RunConfig(seed=3, frames=8, only="harmonic",
                               tol_scale=7.0))
    for c in rep["checks"]:
        assert c["tolerance"] == pytest.approx(7e-9)


# ---------------------------------------------------------------------------
# command line


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "elliptikit.cli", *args],
                          capture_output=True, env=env)


def test_cli_compute_centers():
    out = run_cli("compute", "--sides", "1.0,0.8,0.6", "G", "O", "Ktilde")
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["centers"]["G"]["bary"] == [1.0, 1.0, 1.0]
    kt = np.array(data["centers"]["Ktilde"]["bary"])
    f = np.array(data["frame"]["sides"])
    want = 1 - np.cos(f)
    assert np.allclose(kt / kt[0], want / want[0], atol=1e-12)


def test_cli_compute_octant_radius():
    out = run_cli("compute", "--sides", "pi/2,pi/2,pi/2", "--radius", "circum")
    data = json.loads(out.stdout)
    assert data["radii"]["circumradius"] == pytest.approx(0.9553166181245093)


def test_cli_compute_vertices_input():
    out = run_cli("compute", "--vertices", "1,0,0;0,1,0;0,0,1", "O")
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert np.allclose(data["centers"]["O"]["bary"], [1, 1, 1])


def test_cli_exit_codes():
    bad = run_cli("compute", "--sides", "1.0,0.8")
    assert bad.returncode == 2
    undef = run_cli("compute", "--sides", "1.0,0.7,0.7", "OKtripole")
    assert undef.returncode == 3
    assert b"vanishes" in undef.stderr


def test_cli_verify_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    r1 = run_cli("verify", "--seed", "42", "--frames", "25", "--out", str(a))
    r2 = run_cli("verify", "--seed", "42", "--frames", "25", "--out", str(b))
    assert r1.returncode == 0 and r2.returncode == 0
    assert a.read_bytes() == b.read_bytes()
    rep = json.loads(a.read_text())
    assert rep["pass"] and rep["hash"]


def test_cli_verify_tol_scale_env(tmp_path):
    out = run_cli("verify", "--seed", "4", "--frames", "6", "--only",
                  "harmonic", env_extra={"ELLIPTIKIT_TOL_SCALE": "3.5"})
    rep = json.loads(out.stdout)
    assert rep["config"]["tol_scale"] == 3.5


def test_cli_limit_table():
    out = run_cli("limit", "--sides", "1.0,0.85,0.62", "I", "--lams",
                  "1e-1,1e-2")
    assert out.returncode == 0
    lines = out.stdout.decode().strip().splitlines()
    assert lines[0].startswith("center\treference")
    assert len(lines) == 3
    assert "X1" in lines[1]


def test_cli_render_svg(tmp_path):
    target = tmp_path / "octant.svg"
    out = run_cli("render", "--sides", "1.2,0.9,0.7", "O", "circumcircle",
                  "--out", str(target), "--grid", "121")
    assert out.returncode == 0
    svg = target.read_text()
    assert svg.startswith("<?xml")
    assert "svg" in svg.splitlines()[1].lower() or "<svg" in svg
