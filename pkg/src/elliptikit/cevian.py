"""Traces, cevian and anticevian triangles, pedals, duals, tripolars.

Everything here is plain coordinate algebra over a frame's barycentric
triples; the formulas come from the frame's characteristic matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import numerics as nm
from .errors import (DegenerateTripole, OnSideline, PoleOfSideline,
                     VertexInput)
from .frame import Bary, TriangleFrame, bary_join, from_bary

_VERTICES = tuple(np.eye(3))


@dataclass(frozen=True)
class PointTriple:
    """Vertex-indexed triple of barycentric points (A-, B-, C-associated)."""

    a: Bary
    b: Bary
    c: Bary

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def perspector(self, tol: float = 1e-10) -> Bary | None:
        """Perspective center with the reference triangle, if the joins concur."""
        frame = self.a.frame
        lines = [nm.cross(e, x.v) for e, x in zip(_VERTICES, self)]
        p = nm.cross(lines[0], lines[1])
        if nm.incidence_residual(lines[2], p) < tol:
            return Bary(p, frame)
        return None


def _check_off_vertices(p: Bary):
    for e in _VERTICES:
        if nm.proportional(p.v, e):
            raise VertexInput("operation undefined at a reference vertex")


def _check_off_sidelines(p: Bary, tol: float = 1e-13):
    if np.min(np.abs(p.v)) <= tol * np.max(np.abs(p.v)):
        raise OnSideline("point lies on a sideline")


def traces(p: Bary) -> PointTriple:
    """Intersections of the cevians of p with the opposite sidelines."""
    _check_off_vertices(p)
    _check_off_sidelines(p)
    f = p.frame
    x, y, z = p.v
    return PointTriple(Bary((0.0, y, z), f), Bary((x, 0.0, z), f), Bary((x, y, 0.0), f))


def harmonic_associates(p: Bary) -> PointTriple:
    """The three points obtained by flipping one coordinate sign."""
    _check_off_vertices(p)
    f = p.frame
    x, y, z = p.v
    return PointTriple(Bary((-x, y, z), f), Bary((x, -y, z), f), Bary((x, y, -z), f))


def pedal_triple(p: Bary) -> PointTriple:
    """Orthogonal projections of p on the three sidelines."""
    f = p.frame
    x, y, z = p.v
    sa2, sb2, sc2 = f.sa**2, f.sb**2, f.sc**2
    pa = np.array([0.0, x * f.SC + y * sa2, x * f.SB + z * sa2])
    pb = np.array([y * f.SC + x * sb2, 0.0, y * f.SA + z * sb2])
    pc = np.array([z * f.SB + x * sc2, z * f.SA + y * sc2, 0.0])
    for v in (pa, pb, pc):
        if nm.norm(v) < 1e-14 * nm.norm(p.v):
            raise PoleOfSideline("point is the pole of a sideline")
    return PointTriple(Bary(pa, f), Bary(pb, f), Bary(pc, f))


def antipedal_triple(p: Bary) -> PointTriple:
    """Vertices whose pedal lines pass through the reference vertices.

    Each vertex is the meet of the perpendiculars to the joins vertex-p
    erected at the two other vertices.
    """
    f = p.frame

    def perp_at(vertex: np.ndarray) -> np.ndarray:
        line = nm.cross(vertex, p.v)
        pole = line @ f.charadjoint
        return nm.cross(vertex, pole)

    ls = [perp_at(e) for e in _VERTICES]
    return PointTriple(Bary(nm.cross(ls[1], ls[2]), f),
                       Bary(nm.cross(ls[2], ls[0]), f),
                       Bary(nm.cross(ls[0], ls[1]), f))


def dual_triple(frame: TriangleFrame) -> PointTriple:
    """Poles of the three sidelines."""
    sa2, sb2, sc2 = frame.sa**2, frame.sb**2, frame.sc**2
    SA, SB, SC = frame.SA, frame.SB, frame.SC
    return PointTriple(Bary((sa2, -SC, -SB), frame),
                       Bary((-SC, sb2, -SA), frame),
                       Bary((-SB, -SA, sc2), frame))


def tripolar(p: Bary) -> np.ndarray:
    """Line through the harmonic conjugates of the traces of p."""
    _check_off_vertices(p)
    x, y, z = p.v
    return np.array([y * z, z * x, x * y])


def tripole(l, frame: TriangleFrame) -> Bary:
    """Inverse of the tripolar map."""
    l = np.asarray(l, dtype=float)
    if np.min(np.abs(l)) <= 1e-13 * np.max(np.abs(l)):
        raise DegenerateTripole("tripole degenerates to a vertex")
    return Bary(np.array([l[1] * l[2], l[2] * l[0], l[0] * l[1]]), frame)


def tripolar_dual(p: Bary) -> Bary:
    """Pole (under the absolute polarity) of the tripolar line of p."""
    f = p.frame
    x, y, z = p.v
    SA, SB, SC = f.SA, f.SB, f.SC
    return Bary(np.array([
        x * (y * SB + z * SC) - y * z * f.sa**2,
        y * (z * SC + x * SA) - z * x * f.sb**2,
        z * (x * SA + y * SB) - x * y * f.sc**2,
    ]), f)


def isoconjugate(pole: Bary, q: Bary) -> Bary:
    """Isoconjugation with the given pole (an involution off the sidelines)."""
    _check_off_sidelines(pole)
    _check_off_vertices(q)
    p, qq = pole.v, q.v
    return Bary(np.array([p[0] * qq[1] * qq[2],
                          p[1] * qq[2] * qq[0],
                          p[2] * qq[0] * qq[1]]), q.frame)


# ---------------------------------------------------------------------------
# triangle selections


@dataclass(frozen=True)
class TriangleSelection:
    """Triangle with representative signs fixed so it is a positive cone.

    ``vertices`` holds the three Bary points with representatives chosen so
    the selected triangle consists of their nonnegative combinations.
    """

    vertices: tuple[Bary, Bary, Bary]

    def __iter__(self):
        return iter(self.vertices)

    def ambient_reps(self) -> np.ndarray:
        out = []
        for x in self.vertices:
            v = x.frame._basis @ x.v
            out.append(v / nm.norm(v))
        return np.stack(out)

    def contains(self, p: Bary, tol: float = 1e-12) -> bool:
        reps = self.ambient_reps()
        w = np.linalg.solve(reps.T, from_bary(p).v)
        w = w if w[np.argmax(np.abs(w))] > 0 else -w
        return bool(np.all(w >= -tol * np.max(np.abs(w))))


def _orient_triple(triple: PointTriple, marker: Bary) -> TriangleSelection:
    """Flip vertex representatives so the marker is a positive combination."""
    frame = marker.frame
    reps = np.stack([frame._basis @ x.v for x in triple])
    reps /= np.linalg.norm(reps, axis=1)[:, None]
    w = np.linalg.solve(reps.T, from_bary(marker).unit())
    verts = []
    for wi, x in zip(w, triple):
        verts.append(Bary(x.v if wi >= 0 else -x.v, frame))
    return TriangleSelection(tuple(verts))


def cevian_triangle(p: Bary, index: int = 0) -> TriangleSelection:
    """Triangle on the traces of p containing the sign-marked companion point."""
    _check_off_sidelines(p)
    f = p.frame
    marker = np.abs(p.v)
    if index:
        marker = marker.copy()
        marker[index - 1] *= -1.0
    return _orient_triple(traces(p), Bary(marker, f))


def anticevian_triangle(p: Bary, index: int = 0) -> TriangleSelection:
    """Triangle on the harmonic associates of p.

    For index 0 all reference vertices lie on its sides; for index i only the
    i-th does.
    """
    _check_off_sidelines(p)
    f = p.frame
    assoc = harmonic_associates(p)
    reps = np.stack([f._basis @ x.v for x in assoc])
    reps /= np.linalg.norm(reps, axis=1)[:, None]

    def side_pattern(signs) -> tuple[bool, ...]:
        sr = reps * np.asarray(signs)[:, None]
        hits = []
        for k, e in enumerate(_VERTICES):
            others = [sr[j] for j in range(3) if j != k]
            w = np.linalg.lstsq(np.stack(others).T, f._basis @ e, rcond=None)[0]
            w = w if w[np.argmax(np.abs(w))] > 0 else -w
            hits.append(bool(np.all(w >= -1e-9 * np.max(np.abs(w)))))
        return tuple(hits)

    want = tuple(i == index - 1 for i in range(3)) if index else (True, True, True)
    for signs in ((1, 1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, -1)):
        if side_pattern(signs) == want:
            verts = tuple(Bary(s * x.v, f) for s, x in zip(signs, assoc))
            return TriangleSelection(verts)
    raise OnSideline("anticevian selection failed (degenerate position)")


def medial_triangle(frame: TriangleFrame, index: int = 0) -> TriangleSelection:
    """Cevian triangle of the centroid: the side midpoints."""
    return cevian_triangle(Bary((1.0, 1.0, 1.0), frame), index)


def antimedial_triangle(frame: TriangleFrame) -> TriangleSelection:
    """Anticevian triangle of the cosine point; its side midpoints are A, B, C."""
    return anticevian_triangle(Bary((frame.ca, frame.cb, frame.cc), frame))
