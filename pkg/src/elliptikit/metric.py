"""The elliptic metric in ambient coordinates.

Distances, segment measures and midpoints, angle measures, perpendiculars,
parallels, pedals, reflections, circles, tangent lengths and radical axes.
All operations act on unit representatives (canonical sign, euclidean norm 1),
which fixes the branch labels of segments and angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import numerics as nm
from .errors import (ConcentricCircles, DegenerateInput, OutsideDomain,
                     PoleInput)
from .projective import ProjLine, ProjPoint, dual, join, meet


def distance(p: ProjPoint, q: ProjPoint) -> float:
    """Point distance arccos|p . q| on unit representatives, in [0, pi/2]."""
    return nm.clamped_acos(abs(float(p.unit() @ q.unit())))


def line_distance(k: ProjLine, l: ProjLine) -> float:
    """Angle distance between lines = distance of their poles."""
    return distance(dual(k), dual(l))


def segment_measure(p: ProjPoint, q: ProjPoint, branch: int = +1) -> float:
    """Length of the segment [p,q]+ (branch=+1) or [p,q]- (branch=-1)."""
    mu = nm.clamped_acos(float(p.unit() @ q.unit()))
    return mu if branch > 0 else math.pi - mu


def midpoints(p: ProjPoint, q: ProjPoint) -> tuple[ProjPoint, ProjPoint]:
    """Midpoints of [p,q]+ and [p,q]-: sum and difference of unit reps."""
    if p.approx_equal(q):
        raise DegenerateInput("midpoints of coinciding points")
    pu, qu = p.unit(), q.unit()
    return ProjPoint(pu + qu), ProjPoint(pu - qu)


def angle_measure(q: ProjPoint, s: ProjPoint, r: ProjPoint,
                  branch: int = +1) -> float:
    """Measure of the angle at vertex s subtended by q and r.

    branch=+1 picks the angle of the segment [q,r]+, branch=-1 its complement
    to pi.
    """
    su = s.unit()
    u = np.cross(su, q.unit())
    v = np.cross(su, r.unit())
    nu, nv = nm.norm(u), nm.norm(v)
    if nu < 1e-14 or nv < 1e-14:
        raise DegenerateInput("angle vertex coincides with a leg point")
    mu = nm.clamped_acos(float(u @ v) / (nu * nv))
    return mu if branch > 0 else math.pi - mu


def perp(l: ProjLine, p: ProjPoint) -> ProjLine:
    """Perpendicular from p to l: the join of p with the pole of l."""
    pole = dual(l)
    if p.approx_equal(pole):
        raise PoleInput("point is the pole of the line")
    return join(p, pole)


def pedal(l: ProjLine, p: ProjPoint) -> ProjPoint:
    """Orthogonal projection of p on l."""
    return meet(l, perp(l, p))


def par(l: ProjLine, p: ProjPoint) -> ProjLine:
    """Parallel to l through p: perpendicular to the perpendicular."""
    return perp(perp(l, p), p)


def perp_bisectors(p: ProjPoint, q: ProjPoint) -> tuple[ProjLine, ProjLine]:
    """Perpendicular bisectors of [p,q]+ and [p,q]-."""
    mplus, mminus = midpoints(p, q)
    pole = dual(join(p, q))
    return join(mplus, pole), join(mminus, pole)


def reflect_point(p: ProjPoint, s: ProjPoint) -> ProjPoint:
    """Mirror image of p in s (equals reflection in the polar line of s)."""
    pv, sv = p.v, s.v
    return ProjPoint(2.0 * float(pv @ sv) * sv - float(sv @ sv) * pv)


@dataclass(frozen=True)
class AmbientCircle:
    """Circle with a center and the cosine of its radius."""

    center: ProjPoint
    cosradius: float

    @property
    def radius(self) -> float:
        return nm.clamped_acos(self.cosradius)

    def to_json(self) -> dict:
        return {"center": self.center.to_json(), "cosradius": self.cosradius}


def circle_through(m: ProjPoint, p: ProjPoint) -> AmbientCircle:
    """Circle with center m through p."""
    return AmbientCircle(m, abs(float(p.unit() @ m.unit())))


def on_circle(x: ProjPoint, c: AmbientCircle, tol: float = 1e-10) -> bool:
    """Membership via the homogeneous quadratic of the circle."""
    xv, mv = x.v, c.center.v
    lhs = float(xv @ xv) * c.cosradius**2 * float(mv @ mv)
    rhs = float(mv @ xv) ** 2
    scale = float(xv @ xv) * float(mv @ mv)
    return abs(lhs - rhs) < tol * scale


def tangent_length(p: ProjPoint, c: AmbientCircle) -> float:
    """Geodesic length of a tangent segment from p to the circle.

    Spherical right-triangle relation cos d(p, m) = cos r * cos t; defined
    only for points outside (or on) the circle.
    """
    if c.cosradius < 1e-14:
        raise OutsideDomain("tangent length undefined for great-circle radius")
    cd = math.cos(distance(p, c.center))
    ratio = cd / c.cosradius
    if ratio > 1.0 + 1e-9:
        raise OutsideDomain("point lies inside the circle")
    return nm.clamped_acos(min(1.0, ratio))


def radical_axes(c1: AmbientCircle, c2: AmbientCircle) -> tuple[ProjLine, ProjLine]:
    """Both factor lines of the equal-power locus of two circles.

    The pencil of the two radius-normalized circle quadratics degenerates
    into a product of two lines; every point of either line has the same
    unsigned power cos d(x, m)/cos r with respect to both circles (the two
    branches differ by the antipodal pairing of the centers).
    """
    if c1.center.approx_equal(c2.center):
        raise ConcentricCircles("radical axis of concentric circles")
    if min(c1.cosradius, c2.cosradius) < 1e-12:
        raise OutsideDomain("radical axis needs radii below pi/2")
    m1 = c1.center.unit()
    m2 = c2.center.unit()
    if float(m1 @ m2) < 0.0:
        m2 = -m2
    return (ProjLine(m1 / c1.cosradius - m2 / c2.cosradius),
            ProjLine(m1 / c1.cosradius + m2 / c2.cosradius))


def radical_axis(c1: AmbientCircle, c2: AmbientCircle) -> ProjLine:
    """The hemisphere-aligned equal-power line of two circles.

    This is the branch that continues the flat-geometry radical axis (it
    passes between equal circles); see radical_axes for the full line pair.
    """
    return radical_axes(c1, c2)[0]
