import math

import numpy as np
import pytest

import elliptikit.numerics as nm
from elliptikit.centers import CenterId, center
from elliptikit.cevian import (PointTriple, anticevian_triangle,
                               antimedial_triangle, antipedal_triple,
                               cevian_triangle, dual_triple,
                               harmonic_associates, isoconjugate,
                               medial_triangle, pedal_triple, traces,
                               tripolar, tripolar_dual, tripole)
from elliptikit.errors import DegenerateTripole, OnSideline, VertexInput
from elliptikit.frame import (Bary, bary_distance, bary_midpoints, from_bary,
                              to_bary)
from elliptikit.lines import bary_cross_ratio
from elliptikit.metric import midpoints, pedal, perp
from elliptikit.projective import ProjPoint, join


def rand_interior(frame, rng):
    return Bary(rng.dirichlet((2, 2, 2)) + 0.05, frame)


def test_traces_of_centroid_are_midpoints(base_frame):
    f = base_frame
    tr = traces(Bary((1, 1, 1), f))
    verts = f.vertices
    for t, (p, q) in zip(tr, ((verts[1], verts[2]), (verts[0], verts[2]),
                              (verts[0], verts[1]))):
        mids = midpoints(p, q)
        assert any(nm.proj_distance(from_bary(t).v, m.v) < 1e-12 for m in mids)


def test_traces_errors(base_frame):
    with pytest.raises(VertexInput):
        traces(Bary((1, 0, 0), base_frame))
    with pytest.raises(OnSideline):
        traces(Bary((0, 2, 1), base_frame))


def test_harmonic_associates_are_companion_centroids(base_frame):
    f = base_frame
    assoc = list(harmonic_associates(center(CenterId.G, f)))
    for i in (1, 2, 3):
        assert nm.proportional(assoc[i - 1].v, center(CenterId.G, f, i).v)


def test_trace_conjugate_cross_ratio(base_frame, rng):
    f = base_frame
    e = np.eye(3)
    for _ in range(25):
        p = rand_interior(f, rng)
        a_p = traces(p).a
        line = tripolar(p)
        cut = Bary(nm.cross(line, nm.cross(e[1], e[2])), f)
        cr = bary_cross_ratio(Bary(e[1], f), Bary(e[2], f), a_p, cut)
        assert cr == pytest.approx(-1.0, abs=1e-10)


def test_pedal_triple_of_circumcenter(base_frame):
    f = base_frame
    o = center(CenterId.O, f)
    feet = pedal_triple(o)
    mids = traces(Bary((1, 1, 1), f))
    for foot, m in zip(feet, mids):
        assert nm.proj_distance(foot.v, m.v) < 1e-12


def test_pedals_perpendicular(base_frame, rng):
    f = base_frame
    for _ in range(50):
        p = rand_interior(f, rng)
        feet = pedal_triple(p)
        p_amb = from_bary(p)
        for k, foot in enumerate(feet):
            side = join(f.vertices[(k + 1) % 3], f.vertices[(k + 2) % 3])
            oracle = pedal(side, p_amb)
            assert nm.proj_distance(from_bary(foot).v, oracle.v) < 1e-10


def test_antipedal_of_orthocenter_display(base_frame):
    f = base_frame
    anti = antipedal_triple(center(CenterId.H, f))
    expect = (np.array([-f.ca, f.cb, f.cc]), np.array([f.ca, -f.cb, f.cc]),
              np.array([f.ca, f.cb, -f.cc]))
    for got, want in zip(anti, expect):
        assert nm.proj_distance(got.v, want) < 1e-10


def test_antipedal_displayed_formula(base_frame, rng):
    f = base_frame
    for _ in range(20):
        p = rand_interior(f, rng)
        x, y, z = p.v
        sa2, sb2, sc2 = f.sa**2, f.sb**2, f.sc**2
        want = np.array([-1.0,
                         (y * f.SC + x * sb2) / (x * f.SC + y * sa2),
                         (z * f.SB + x * sc2) / (x * f.SB + z * sa2)])
        assert nm.proj_distance(antipedal_triple(p).a.v, want) < 1e-10


def test_dual_triple(base_frame, octant_frame):
    f = base_frame
    dt = dual_triple(f)
    # star-orthogonal to the other two vertices
    e = np.eye(3)
    for k, d in enumerate(dt):
        for j in range(3):
            if j != k:
                s = abs(f.star(d.v, e[j]))
                assert s < 1e-12 * f.star_norm(d.v) * f.star_norm(e[j])
    # perspective at the orthocenter
    persp = PointTriple(*dt).perspector()
    assert persp is not None
    assert nm.proj_distance(persp.v, center(CenterId.H, f).v) < 1e-10
    # self-polar octant triangle
    for k, d in enumerate(dual_triple(octant_frame)):
        assert nm.proportional(d.v, e[k])


def test_tripolar_examples(base_frame):
    f = base_frame
    assert nm.proportional(tripolar(Bary((1, 1, 1), f)), (1, 1, 1))
    o = tripolar_dual(Bary((1, 1, 1), f))
    assert nm.proj_distance(o.v, center(CenterId.O, f).v) < 1e-12
    h = center(CenterId.H, f)
    orthic = tripolar(h)
    assert nm.proj_distance(orthic, np.array([f.SA, f.SB, f.SC])) < 1e-12
    hstar = tripolar_dual(h)
    assert nm.proj_distance(hstar.v, center(CenterId.HSTAR, f).v) < 1e-10


def test_tripole_roundtrip_and_errors(base_frame, rng):
    f = base_frame
    for _ in range(50):
        p = rand_interior(f, rng)
        assert nm.proj_distance(tripole(tripolar(p), f).v, p.v) < 1e-10
    with pytest.raises(DegenerateTripole):
        tripole(np.array([0.0, 1.0, 1.0]), f)


def test_cevian_triangle_of_centroid_is_medial(base_frame):
    f = base_frame
    med = medial_triangle(f)
    tr = traces(Bary((1, 1, 1), f))
    for v, t in zip(med, tr):
        assert nm.proportional(v.v, t.v)
    # contains the centroid
    assert med.contains(Bary((1, 1, 1), f), tol=1e-9)


def test_cevian_triangle_companion_selection(base_frame, rng):
    f = base_frame
    p = rand_interior(f, rng)
    for i in range(4):
        sel = cevian_triangle(p, i)
        marker = np.abs(p.v)
        if i:
            marker = marker.copy()
            marker[i - 1] *= -1
        assert sel.contains(Bary(marker, f), tol=1e-9)


def test_anticevian_of_cosine_point(base_frame):
    f = base_frame
    gp = center(CenterId.GPLUS, f)
    anti = anticevian_triangle(gp, 0)
    verts = list(anti)
    e = np.eye(3)
    # reference vertices are the side midpoints: A = B' + C' on units
    for k in range(3):
        p = verts[(k + 1) % 3]
        q = verts[(k + 2) % 3]
        m1, m2 = bary_midpoints(p, q)
        assert any(nm.proj_distance(m.v, e[k]) < 1e-10 for m in (m1, m2))
    # and the antimedial triangle's centroid is the cosine point
    anti2 = antimedial_triangle(f)
    got = {tuple(np.round(x.unit(), 8)) for x in anti2}
    want = {tuple(np.round(x.unit(), 8)) for x in anti}
    assert got == want


def test_anticevian_vertices_match_antipedal_of_h(base_frame):
    f = base_frame
    anti = antimedial_triangle(f)
    ah = antipedal_triple(center(CenterId.H, f))
    for got, want in zip(anti, ah):
        assert nm.proj_distance(got.v, want.v) < 1e-10


def test_anticevian_side_membership_pattern(base_frame, rng):
    f = base_frame
    p = rand_interior(f, rng)
    sel0 = anticevian_triangle(p, 0)
    verts0 = sel0.ambient_reps()
    e = np.eye(3)
    for k in range(3):
        others = [verts0[j] for j in range(3) if j != k]
        w = np.linalg.lstsq(np.stack(others).T, f._basis @ e[k], rcond=None)[0]
        w = w if w[np.argmax(np.abs(w))] > 0 else -w
        assert np.all(w >= -1e-9)
    sel1 = anticevian_triangle(p, 1)
    verts1 = sel1.ambient_reps()
    hits = []
    for k in range(3):
        others = [verts1[j] for j in range(3) if j != k]
        w = np.linalg.lstsq(np.stack(others).T, f._basis @ e[k], rcond=None)[0]
        w = w if w[np.argmax(np.abs(w))] > 0 else -w
        hits.append(bool(np.all(w >= -1e-9)))
    assert hits == [True, False, False]


def test_isoconjugation(base_frame, rng):
    f = base_frame
    g = Bary((1, 1, 1), f)
    for _ in range(50):
        q = rand_interior(f, rng)
        p = rand_interior(f, rng)
        back = isoconjugate(p, isoconjugate(p, q))
        assert nm.proj_distance(back.v, q.v) < 1e-12
    ge, na = center(CenterId.GE, f), center(CenterId.NA, f)
    assert nm.proj_distance(isoconjugate(g, ge).v, na.v) < 1e-12
    k = center(CenterId.K, f)
    i = center(CenterId.I, f)
    assert nm.proj_distance(isoconjugate(k, i).v, i.v) < 1e-12
    with pytest.raises(VertexInput):
        isoconjugate(k, Bary((1, 0, 0), f))
