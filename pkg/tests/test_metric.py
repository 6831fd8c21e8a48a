import math

import numpy as np
import pytest

import elliptikit.numerics as nm
from elliptikit.errors import ConcentricCircles, OutsideDomain, PoleInput
from elliptikit.metric import (AmbientCircle, angle_measure, circle_through,
                               distance, midpoints, on_circle, par, pedal,
                               perp, perp_bisectors, radical_axis,
                               reflect_point, segment_measure, tangent_length)
from elliptikit.projective import ProjLine, ProjPoint, dual, join

from oracles import geodesic_distance, pedal_by_minimization, rodrigues


def line_points(coeffs, ts):
    """Unit points on the great circle with the given coefficient vector."""
    n = np.asarray(coeffs, float)
    n = n / nm.norm(n)
    seed = np.array([1.0, 0.0, 0.0])
    if abs(seed @ n) > 0.9:
        seed = np.array([0.0, 1.0, 0.0])
    e1 = seed - (seed @ n) * n
    e1 /= nm.norm(e1)
    e2 = np.cross(n, e1)
    return [ProjPoint(math.cos(t) * e1 + math.sin(t) * e2) for t in ts]


def rand_point(rng):
    return ProjPoint(rng.normal(size=3))


def test_distance_examples():
    assert distance(ProjPoint((1, 0, 0)), ProjPoint((0, 1, 0))) == \
        pytest.approx(math.pi / 2)
    p = ProjPoint((2, -1, 3))
    assert distance(p, p) == 0.0


def test_distance_sine_identity(rng):
    for _ in range(1000):
        p, q = rand_point(rng), rand_point(rng)
        lhs = math.sin(distance(p, q))
        rhs = nm.norm(np.cross(p.unit(), q.unit()))
        # the identity holds for the segment measure; the distance folds it
        assert lhs == pytest.approx(rhs, abs=1e-12)


def test_triangle_inequality(rng):
    for _ in range(500):
        p, q, r = (rand_point(rng) for _ in range(3))
        assert distance(p, r) <= distance(p, q) + distance(q, r) + 1e-12


def test_segment_measures_pair_to_pi(rng):
    p, q = rand_point(rng), rand_point(rng)
    assert segment_measure(p, q, +1) + segment_measure(p, q, -1) == \
        pytest.approx(math.pi, abs=1e-15)


def test_midpoints_octant():
    m1, m2 = midpoints(ProjPoint((1, 0, 0)), ProjPoint((0, 1, 0)))
    assert nm.proportional(m1.v, (1, 1, 0))
    assert nm.proportional(m2.v, (1, -1, 0))


def test_midpoints_equidistant_and_incident(rng):
    for _ in range(200):
        p, q = rand_point(rng), rand_point(rng)
        m1, m2 = midpoints(p, q)
        for m in (m1, m2):
            assert distance(m, p) == pytest.approx(distance(m, q), abs=1e-12)
        line = join(p, q)
        assert nm.incidence_residual(line.v, m1.v) < 1e-12
        # the two midpoints are orthogonal points
        assert abs(m1.unit() @ m2.unit()) < 1e-12


def test_midpoint_against_bisection_oracle(rng):
    from oracles import segment_midpoint_by_bisection
    for _ in range(50):
        p, q = rand_point(rng), rand_point(rng)
        m1, _ = midpoints(p, q)
        oracle = segment_midpoint_by_bisection(p.unit(), q.unit())
        assert nm.proj_distance(m1.v, oracle) < 1e-9


def test_octant_angles_are_right():
    a, b, c = ProjPoint((1, 0, 0)), ProjPoint((0, 1, 0)), ProjPoint((0, 0, 1))
    for s, p, q in ((a, b, c), (b, c, a), (c, a, b)):
        assert angle_measure(p, s, q) == pytest.approx(math.pi / 2)


def test_angle_excess_positive(rng):
    for _ in range(100):
        a, b, c = (rand_point(rng) for _ in range(3))
        try:
            total = (angle_measure(b, a, c) + angle_measure(c, b, a)
                     + angle_measure(a, c, b))
        except Exception:
            continue
        assert total > math.pi - 1e-9


def test_perp_pedal_par_displayed_example():
    l = ProjLine((0, 0, 1))
    p = ProjPoint((1, 1, 1))
    pp = perp(l, p)
    assert nm.incidence_residual(pp.v, (0, 0, 1)) < 1e-15
    assert nm.proportional(pedal(l, p).v, (1, 1, 0))


def test_perp_pedal_par_incidences(rng):
    for _ in range(1000):
        l = ProjLine(rng.normal(size=3))
        p = rand_point(rng)
        foot = pedal(l, p)
        assert nm.incidence_residual(l.v, foot.v) < 1e-12
        # perpendicularity via polarity: the pole of perp lies on l
        assert nm.incidence_residual(l.v, dual(perp(l, p)).v) < 1e-12
        pl = par(l, p)
        assert nm.incidence_residual(pl.v, p.v) < 1e-12
        assert nm.incidence_residual(perp(l, p).v, dual(pl).v) < 1e-12


def test_pedal_displayed_formula(rng):
    for _ in range(100):
        l = ProjLine(rng.normal(size=3))
        p = rand_point(rng)
        l0, l1, l2 = l.v
        p0, p1, p2 = p.v
        formula = np.array([
            l0 * (l1 * p1 + l2 * p2) - p0 * (l1 * l1 + l2 * l2),
            l1 * (l0 * p0 + l2 * p2) - p1 * (l0 * l0 + l2 * l2),
            l2 * (l0 * p0 + l1 * p1) - p2 * (l0 * l0 + l1 * l1),
        ])
        assert nm.proj_distance(pedal(l, p).v, formula) < 1e-10


def test_pedal_against_minimization_oracle(rng):
    for _ in range(30):
        l = ProjLine(rng.normal(size=3))
        p = rand_point(rng)
        oracle = pedal_by_minimization(l.v, p.unit())
        assert nm.proj_distance(pedal(l, p).v, oracle) < 1e-6


def test_perp_pole_input():
    l = ProjLine((1, 2, 3))
    with pytest.raises(PoleInput):
        perp(l, ProjPoint((1, 2, 3)))


def test_perp_bisectors(rng):
    for _ in range(20):
        p, q = rand_point(rng), rand_point(rng)
        b1, b2 = perp_bisectors(p, q)
        pole = dual(join(p, q))
        for b in (b1, b2):
            assert nm.incidence_residual(b.v, pole.v) < 1e-12
            for x in line_points(b.v, np.linspace(0.1, 2.9, 20)):
                assert distance(x, p) == pytest.approx(distance(x, q), abs=1e-10)


def test_perp_bisectors_of_axes():
    b1, b2 = perp_bisectors(ProjPoint((1, 0, 0)), ProjPoint((0, 1, 0)))
    got = {tuple(np.round(b.unit(), 9)) for b in (b1, b2)}
    want = {tuple(np.round(nm.unitize(np.array([1.0, -1.0, 0.0])), 9)),
            tuple(np.round(nm.unitize(np.array([1.0, 1.0, 0.0])), 9))}
    assert got == want


def test_reflection_properties(rng):
    s = rand_point(rng)
    p = rand_point(rng)
    assert nm.proportional(reflect_point(p, p).v, p.v)
    for _ in range(1000):
        x = rand_point(rng)
        twice = reflect_point(reflect_point(x, s), s)
        assert nm.proj_distance(twice.v, x.v) < 1e-10
    for _ in range(200):
        x, y = rand_point(rng), rand_point(rng)
        assert distance(reflect_point(x, s), reflect_point(y, s)) == \
            pytest.approx(distance(x, y), abs=1e-10)
        assert distance(s, x) == pytest.approx(distance(s, reflect_point(x, s)),
                                               abs=1e-10)


def test_circle_basics():
    c = circle_through(ProjPoint((1, 0, 0)), ProjPoint((1, 1, 0)))
    assert c.radius == pytest.approx(math.pi / 4)
    assert on_circle(ProjPoint((1, 1, 0)), c)
    assert c.radius <= math.pi / 2


def test_circle_rotation_oracle(rng):
    for _ in range(10):
        m, p = rand_point(rng), rand_point(rng)
        c = circle_through(m, p)
        for ang in np.linspace(0.1, 2 * math.pi, 50):
            x = rodrigues(p.unit(), m.unit(), ang)
            assert on_circle(ProjPoint(x), c, tol=1e-12)


def test_circle_reflection_symmetry(rng):
    for _ in range(100):
        m, p = rand_point(rng), rand_point(rng)
        c = circle_through(m, p)
        assert on_circle(reflect_point(p, m), c, tol=1e-10)


def test_tangent_length_domain(rng):
    m, p = ProjPoint((1, 0, 0)), ProjPoint((2, 1, 0))
    c = circle_through(m, p)
    assert tangent_length(p, c) == pytest.approx(0.0, abs=1e-7)
    with pytest.raises(OutsideDomain):
        tangent_length(m, c)


def test_tangent_length_pythagoras(rng):
    for _ in range(100):
        m, p, x = (rand_point(rng) for _ in range(3))
        c = circle_through(m, p)
        try:
            t = tangent_length(x, c)
        except OutsideDomain:
            continue
        assert math.cos(distance(x, m)) == pytest.approx(
            c.cosradius * math.cos(t), abs=1e-12)


def test_radical_axis_equal_power(rng):
    for _ in range(50):
        m1, p1, m2, p2 = (rand_point(rng) for _ in range(4))
        c1, c2 = circle_through(m1, p1), circle_through(m2, p2)
        if min(c1.cosradius, c2.cosradius) < 0.05:
            continue
        axis = radical_axis(c1, c2)
        for x in line_points(axis.v, np.linspace(0.05, 3.0, 12)):
            r1 = math.cos(distance(x, c1.center)) / c1.cosradius
            r2 = math.cos(distance(x, c2.center)) / c2.cosradius
            assert abs(r1) == pytest.approx(abs(r2), abs=1e-9)


def test_radical_axis_concentric():
    m = ProjPoint((1, 1, 0))
    with pytest.raises(ConcentricCircles):
        radical_axis(circle_through(m, ProjPoint((1, 0, 0))),
                     circle_through(m, ProjPoint((0, 1, 0))))
