import math

import numpy as np
import pytest

import elliptikit.numerics as nm
from elliptikit.centers import (CenterId, VertexCenterId, catalog, center,
                                center_angle_vector, circumradius,
                                dual_triangle_circumradius,
                                euclidean_limit_check, inradius,
                                kimberling_tag, limit_convergence_order,
                                parse_center, vertex_center)
from elliptikit.cevian import dual_triple, harmonic_associates
from elliptikit.errors import (IsoscelesDegeneracy, NoLimitTag,
                               UndefinedCenter)
from elliptikit.frame import Bary, bary_distance, frame_from_sides, from_bary
from elliptikit.lines import LineId, central_line
from elliptikit.metric import distance

from oracles import sphere_circumcenter


def test_equilateral_centers_coincide():
    f = frame_from_sides(0.9, 0.9, 0.9)
    for name in ("G", "I", "O", "H", "K", "Ktilde", "Ge", "Na"):
        v = center(name, f).v
        assert nm.proportional(v, (1, 1, 1), 1e-10)


def test_octant_circumcenter(octant_frame):
    f = octant_frame
    o = center(CenterId.O, f)
    assert nm.proportional(o.v, (1, 1, 1))
    assert circumradius(f) == pytest.approx(math.acos(math.sqrt(1 / 3)),
                                            abs=1e-12)
    assert inradius(f) == pytest.approx(math.acos(math.sqrt(2 / 3)),
                                        abs=1e-12)


def test_circumcenter_against_sphere_oracle(frame_batch):
    for f in frame_batch[:30]:
        o = from_bary(center(CenterId.O, f))
        oracle = sphere_circumcenter(*f.reps)
        assert nm.proj_distance(o.v, oracle) < 1e-9
        d = [distance(o, v) for v in f.vertices]
        assert max(d) - min(d) < 1e-12
        assert d[0] == pytest.approx(circumradius(f), abs=1e-10)


def test_angle_forms_match_side_forms(generic_frame, frame_batch):
    for f in [generic_frame] + frame_batch[:20]:
        for cid, spec in catalog().items():
            if spec.angle_form is None or not spec.angle_form_consistent:
                continue
            ang = center_angle_vector(cid, f)
            assert nm.proj_distance(center(cid, f).v, ang) < 1e-10, cid


def test_inconsistent_angle_form_is_flagged():
    spec = catalog()[CenterId.KTILDE_TAUDELTA]
    assert spec.angle_form is not None
    assert not spec.angle_form_consistent
    f = frame_from_sides(1.0, 0.85, 0.62)
    ang = center_angle_vector(CenterId.KTILDE_TAUDELTA, f)
    assert nm.proj_distance(center(CenterId.KTILDE_TAUDELTA, f).v, ang) > 1e-6


def test_hstar_equals_htaudelta(base_frame):
    assert nm.proportional(center(CenterId.HSTAR, base_frame).v,
                           center(CenterId.HTAUDELTA, base_frame).v)


def test_companion_centers(base_frame):
    f = base_frame
    for cid in (CenterId.G, CenterId.I):
        assoc = list(harmonic_associates(center(cid, f)))
        for i in (1, 2, 3):
            assert nm.proj_distance(center(cid, f, i).v, assoc[i - 1].v) < 1e-12
    h = center(CenterId.H, f)
    for i in (1, 2, 3):
        assert nm.proj_distance(center(CenterId.H, f, i).v, h.v) < 1e-12


def test_center_parsing():
    assert parse_center("G+") is CenterId.GPLUS
    assert parse_center("gplus") is CenterId.GPLUS
    assert parse_center("Ktilde") is CenterId.KTILDE
    assert parse_center("h-") is CenterId.HMINUS
    with pytest.raises(KeyError):
        parse_center("X9999")


def test_undefined_centers(octant_frame):
    with pytest.raises(UndefinedCenter) as err:
        center(CenterId.H, octant_frame)
    assert "S_A" in str(err.value) or "right angle" in str(err.value)
    iso = frame_from_sides(1.0, 0.7, 0.7)
    with pytest.raises(UndefinedCenter):
        center(CenterId.OK_TRIPOLE, iso)
    with pytest.raises(IsoscelesDegeneracy):
        # with b = c the B-triplex point degenerates (the A one survives)
        vertex_center(VertexCenterId.TRIPLEX, "B", iso)


def test_triplex_points(generic_frame):
    f = generic_frame
    go = central_line(LineId.GO, f)
    for vtx in "ABC":
        t = vertex_center(VertexCenterId.TRIPLEX, vtx, f)
        assert nm.incidence_residual(go, t.v) < 1e-10


def test_triplex_circum_points(generic_frame):
    from elliptikit.conics import circumcircle
    f = generic_frame
    circ = circumcircle(f)
    e = np.eye(3)
    for k, vtx in enumerate("ABC"):
        t = vertex_center(VertexCenterId.TRIPLEX_CIRCUM, vtx, f)
        assert circ.residual(t) < 1e-12
        # on the join of the vertex with the two other sign-flip points of
        # the centroid (the stated vertex line holds in this corrected form)
        flip = np.ones(3)
        flip[(k + 1) % 3] = -1.0
        line = nm.cross(e[k], flip)
        assert nm.incidence_residual(line, t.v) < 1e-10


def test_triplex_concurrency_at_t(generic_frame):
    f = generic_frame
    e = np.eye(3)
    lines = []
    for k, vtx in enumerate("ABC"):
        t = vertex_center(VertexCenterId.TRIPLEX_CIRCUM, vtx, f)
        assoc = np.ones(3)
        assoc[k] = -1.0
        lines.append(nm.cross(assoc, t.v))
    meetpt = nm.cross(lines[0], lines[1])
    assert nm.incidence_residual(lines[2], meetpt) < 1e-10
    assert nm.proj_distance(meetpt, center(CenterId.T, f).v) < 1e-9


def test_ex_pedal_touch_points(base_frame):
    f = base_frame
    na = center(CenterId.NA, f)
    for k, vtx in enumerate("ABC"):
        t = vertex_center(VertexCenterId.EX_PEDAL_TOUCH, vtx, f)
        want = na.v.copy()
        want[k] = 0.0
        assert nm.proj_distance(t.v, want) < 1e-12


def test_radii_match_distances(frame_batch):
    from elliptikit.cevian import pedal_triple
    for f in frame_batch[:20]:
        o = center(CenterId.O, f)
        assert bary_distance(o, Bary((1, 0, 0), f)) == pytest.approx(
            circumradius(f), abs=1e-10)
        i = center(CenterId.I, f)
        feet = pedal_triple(i)
        assert bary_distance(i, feet.a) == pytest.approx(inradius(f), abs=1e-10)
        kappa = f.star_norm((f.sa, f.sb, f.sc))
        assert math.cos(inradius(f)) == pytest.approx(
            2 * math.sin(f.s) / kappa, abs=1e-12)


def test_companion_radius_ordering(frame_batch):
    for f in frame_batch:
        assert circumradius(f) >= inradius(f) - 1e-12


def test_dual_triangle_circumradius(base_frame):
    f = base_frame
    i = center(CenterId.I, f)
    rr = dual_triangle_circumradius(f)
    for v in dual_triple(f):
        assert bary_distance(i, v) == pytest.approx(rr, abs=1e-10)


def test_euclidean_limit_g_is_exact(generic_frame):
    assert euclidean_limit_check(CenterId.G, generic_frame, 1e-2) == 0.0


def test_euclidean_limit_orders(generic_frame):
    for cid, spec in catalog().items():
        if spec.kimberling is None:
            continue
        ds, order = limit_convergence_order(cid, generic_frame)
        if order is None:
            assert max(ds) < 1e-13
        else:
            assert abs(order - 2.0) < 0.3, (cid, order)


def test_limit_ratio_scaling(generic_frame):
    d2 = euclidean_limit_check(CenterId.I, generic_frame, 1e-2)
    d3 = euclidean_limit_check(CenterId.I, generic_frame, 1e-3)
    assert d2 / d3 == pytest.approx(100.0, rel=0.5)


def test_ktilde_limit_is_symmedian(generic_frame):
    assert kimberling_tag(CenterId.KTILDE) == "X6"
    assert euclidean_limit_check(CenterId.KTILDE, generic_frame, 1e-2) < 1e-3


def test_no_limit_tag(generic_frame):
    assert kimberling_tag(CenterId.ORTHIC_AXIS_MEET) is None
    with pytest.raises(NoLimitTag):
        euclidean_limit_check(CenterId.ORTHIC_AXIS_MEET, generic_frame, 1e-2)


def test_all_final_table_rows_tagged():
    tagged = {cid for cid, spec in catalog().items() if spec.kimberling}
    assert CenterId.ORTHIC_AXIS_MEET not in tagged
    assert len(tagged) == len(list(CenterId)) - 1
