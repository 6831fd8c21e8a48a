"""Reference triangles and barycentric calculus.

A TriangleFrame fixes unit representatives of three non-collinear points.
The positive cone of those representatives is the frame's primary triangle;
the three sign flips give the other three triangles sharing the vertices.
All barycentric formulas are driven by the Gram matrix of the representatives
(the characteristic matrix), whose off-diagonal entries are the side cosines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import numerics as nm
from .errors import (CollinearVertices, DegenerateInput, DomainError,
                     IllConditioned, Unrealizable)
from .projective import ProjPoint

DEFAULT_STAUDTIAN_FLOOR = 1e-6

# side substitutions for the triangles sharing the vertices: triangle i>0
# replaces the two sides not opposite vertex i by their complements to pi
_SIDE_SUBS = {
    0: lambda a, b, c: (a, b, c),
    1: lambda a, b, c: (a, math.pi - b, math.pi - c),
    2: lambda a, b, c: (math.pi - a, b, math.pi - c),
    3: lambda a, b, c: (math.pi - a, math.pi - b, c),
}


def cosine_rule_angle(a: float, b: float, c: float) -> float:
    """Angle opposite side a from the side cosine rule."""
    sb, sc = math.sin(b), math.sin(c)
    if sb <= 0 or sc <= 0:
        raise DomainError("sides must lie strictly between 0 and pi")
    return nm.clamped_acos((math.cos(a) - math.cos(b) * math.cos(c)) / (sb * sc))


def cosine_rule_side(alpha: float, beta: float, gamma: float) -> float:
    """Side opposite alpha from the angle cosine rule."""
    sb, sg = math.sin(beta), math.sin(gamma)
    if sb <= 0 or sg <= 0:
        raise DomainError("angles must lie strictly between 0 and pi")
    return nm.clamped_acos((math.cos(alpha) + math.cos(beta) * math.cos(gamma)) / (sb * sg))


class TriangleFrame:
    """Immutable reference triple with its derived metric data.

    Attributes follow the primary triangle of the stored representatives:
    sides a, b, c; angles alpha, beta, gamma; semiperimeter s; the quantities
    S_A, S_B, S_C; the signed basis determinant S with staudtian |S|/2 and
    excess; the characteristic matrix (Gram matrix of the representatives)
    with its adjoint and inverse.
    """

    __slots__ = ("reps", "index", "a", "b", "c", "alpha", "beta", "gamma",
                 "s", "ca", "cb", "cc", "sa", "sb", "sc", "SA", "SB", "SC",
                 "S", "staudtian", "excess", "charmatrix", "charadjoint",
                 "charinverse", "_basis", "_basis_inv")

    def __init__(self, reps: np.ndarray, index: int = 0):
        reps = np.asarray(reps, dtype=float).reshape(3, 3)
        self.reps = reps
        self.index = index
        A, B, C = reps
        self.ca = float(B @ C)
        self.cb = float(C @ A)
        self.cc = float(A @ B)
        self.a = nm.clamped_acos(self.ca)
        self.b = nm.clamped_acos(self.cb)
        self.c = nm.clamped_acos(self.cc)
        self.sa, self.sb, self.sc = math.sin(self.a), math.sin(self.b), math.sin(self.c)
        self.SA = self.ca - self.cb * self.cc
        self.SB = self.cb - self.cc * self.ca
        self.SC = self.cc - self.ca * self.cb
        self.alpha = cosine_rule_angle(self.a, self.b, self.c)
        self.beta = cosine_rule_angle(self.b, self.c, self.a)
        self.gamma = cosine_rule_angle(self.c, self.a, self.b)
        self.s = (self.a + self.b + self.c) / 2.0
        self.S = nm.det3(A, B, C)
        self.staudtian = abs(self.S) / 2.0
        self.excess = self.alpha + self.beta + self.gamma - math.pi
        self.charmatrix = np.array([[1.0, self.cc, self.cb],
                                    [self.cc, 1.0, self.ca],
                                    [self.cb, self.ca, 1.0]])
        self.charadjoint = nm.adjoint3(self.charmatrix)
        self.charinverse = self.charadjoint / (self.S * self.S)
        self._basis = reps.T.copy()          # columns A, B, C
        self._basis_inv = np.linalg.inv(self._basis)

    # -- vertices ---------------------------------------------------------

    @property
    def vertices(self) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
        return tuple(ProjPoint(r) for r in self.reps)

    def sides(self, index: int = 0) -> tuple[float, float, float]:
        """Side lengths of the frame's primary triangle (0) or a companion."""
        return _SIDE_SUBS[index](self.a, self.b, self.c)

    def semiperimeter(self, index: int = 0) -> float:
        return sum(self.sides(index)) / 2.0

    # -- star product -----------------------------------------------------

    def star(self, p, q) -> float:
        """Characteristic-matrix bilinear form on barycentric triples."""
        p = np.asarray(p, dtype=float)
        q = np.asarray(q, dtype=float)
        return float(p @ self.charmatrix @ q)

    def star_norm(self, p) -> float:
        sq = self.star(p, p)
        if sq < 0:
            if sq < -1e-12 * float(np.asarray(p) @ np.asarray(p)):
                raise DomainError("negative star square on a real triple")
            sq = 0.0
        return math.sqrt(sq)

    def to_json(self) -> dict:
        return {
            "vertices": [list(map(float, nm.canonical(r))) for r in self.reps],
            "index": self.index,
            "sides": [self.a, self.b, self.c],
            "angles": [self.alpha, self.beta, self.gamma],
            "staudtian": self.staudtian,
            "excess": self.excess,
        }

    def __repr__(self):
        return (f"TriangleFrame(sides=({self.a:.6f}, {self.b:.6f}, {self.c:.6f}), "
                f"index={self.index})")


def build_frame(a_pt: ProjPoint, b_pt: ProjPoint, c_pt: ProjPoint,
                index: int = 0,
                staudtian_floor: float = DEFAULT_STAUDTIAN_FLOOR) -> TriangleFrame:
    """Frame over three points; index selects which of the four triangles.

    The canonical unit representatives define triangle 0; index i>0 flips the
    i-th vertex representative, which realizes the side substitutions for the
    companion triangles.
    """
    reps = np.stack([a_pt.unit(), b_pt.unit(), c_pt.unit()])
    if index not in _SIDE_SUBS:
        raise ValueError("index must be 0, 1, 2 or 3")
    if index > 0:
        reps = reps.copy()
        reps[index - 1] *= -1.0
    det = nm.det3(*reps)
    if abs(det) / 2.0 < 1e-12:
        raise CollinearVertices("vertices are collinear")
    if abs(det) / 2.0 < staudtian_floor:
        raise IllConditioned(f"staudtian {abs(det)/2:.3e} below floor {staudtian_floor:g}")
    return TriangleFrame(reps, index)


def frame_from_sides(a: float, b: float, c: float, index: int = 0,
                     staudtian_floor: float = DEFAULT_STAUDTIAN_FLOOR) -> TriangleFrame:
    """Synthesize a frame realizing the given side lengths.

    Deterministic chart: first vertex at (1,0,0), second in the x0x1-plane,
    third with positive last coordinate.
    """
    for x in (a, b, c):
        if not 0.0 < x < math.pi:
            raise Unrealizable("sides must lie strictly between 0 and pi")
    if a + b + c >= 2.0 * math.pi:
        raise Unrealizable("perimeter must stay below 2*pi")
    if a >= b + c or b >= c + a or c >= a + b:
        raise Unrealizable("spherical triangle inequality violated")
    ca, cb, cc = math.cos(a), math.cos(b), math.cos(c)
    sc = math.sin(c)
    A = np.array([1.0, 0.0, 0.0])
    B = np.array([cc, sc, 0.0])
    x = (ca - cb * cc) / sc
    y2 = 1.0 - cb * cb - x * x
    if y2 <= 0.0:
        raise Unrealizable("sides do not close to a spherical triangle")
    C = np.array([cb, x, math.sqrt(y2)])
    staud = sc * math.sqrt(y2) / 2.0
    if staud < staudtian_floor:
        raise IllConditioned(f"staudtian {staud:.3e} below floor {staudtian_floor:g}")
    return TriangleFrame(np.stack([A, B, C]), index)


def sine_rule_ratio(frame: TriangleFrame) -> float:
    """Common ratio sin(angle)/sin(side) = |S| / (sin a sin b sin c)."""
    return abs(frame.S) / (frame.sa * frame.sb * frame.sc)


# ---------------------------------------------------------------------------
# barycentric coordinates


@dataclass(frozen=True)
class Bary:
    """Homogeneous barycentric triple relative to a frame."""

    v: np.ndarray
    frame: TriangleFrame

    def __post_init__(self):
        object.__setattr__(self, "v", np.asarray(self.v, dtype=float).reshape(3))
        if not np.any(self.v):
            raise ValueError("zero barycentric triple")

    def canonical(self) -> np.ndarray:
        return nm.canonical(self.v)

    def unit(self) -> np.ndarray:
        """Lexicographically positive representative with star norm 1."""
        u = self.v if self.v[nm.leading_index(self.v)] > 0 else -self.v
        return u / self.frame.star_norm(u)

    def approx_equal(self, other: "Bary", tol: float = nm.EQ_TOL) -> bool:
        return nm.proportional(self.v, other.v, tol)

    def is_interior(self) -> bool:
        """True when all coordinates share one sign (triangle 0 interior)."""
        u = self.v
        return bool(np.all(u > 0.0) or np.all(u < 0.0))

    def to_json(self) -> list[float]:
        return [float(x) for x in self.canonical()]

    def __repr__(self):
        a, b, c = self.canonical()
        return f"Bary[{a:.10g} : {b:.10g} : {c:.10g}]"


def to_bary(p: ProjPoint, frame: TriangleFrame) -> Bary:
    """Barycentric coordinates via triple products with the representatives."""
    pu = p.unit()
    A, B, C = frame.reps
    return Bary(np.array([nm.det3(pu, B, C), nm.det3(A, pu, C), nm.det3(A, B, pu)]),
                frame)


def from_bary(p: Bary) -> ProjPoint:
    """Ambient point with the given barycentric coordinates."""
    return ProjPoint(p.frame._basis @ p.v)


def bary_distance(p: Bary, q: Bary) -> float:
    """Distance from the star product (matches the ambient distance)."""
    f = p.frame
    num = abs(f.star(p.v, q.v))
    return nm.clamped_acos(num / (f.star_norm(p.v) * f.star_norm(q.v)))


def bary_join(p: Bary, q: Bary) -> np.ndarray:
    """Coefficients of the barycentric line through two points."""
    if p.approx_equal(q):
        raise DegenerateInput("join of coinciding points")
    return nm.cross(p.v, q.v)


def bary_meet(k, l, frame: TriangleFrame) -> Bary:
    """Common point of two barycentric lines given by coefficient triples."""
    k = np.asarray(k, dtype=float)
    l = np.asarray(l, dtype=float)
    if nm.proportional(k, l):
        raise DegenerateInput("meet of coinciding lines")
    return Bary(nm.cross(k, l), frame)


def bary_midpoints(p: Bary, q: Bary) -> tuple[Bary, Bary]:
    """Midpoints of the two segments, on star-unit representatives."""
    if p.approx_equal(q):
        raise DegenerateInput("midpoints of coinciding points")
    pu, qu = p.unit(), q.unit()
    return Bary(pu + qu, p.frame), Bary(pu - qu, p.frame)


def bary_combine(p: Bary, q: Bary, sp: float = 1.0, sq: float = 1.0) -> Bary:
    """Linear combination sp*p + sq*q of star-unit representatives."""
    return Bary(sp * p.unit() + sq * q.unit(), p.frame)


def bary_dual_point(p: Bary) -> np.ndarray:
    """Coefficients of the polar line of a point: p times the Gram matrix."""
    return p.v @ p.frame.charmatrix


def bary_dual_line(l, frame: TriangleFrame) -> Bary:
    """Pole of a barycentric line: coefficients times the adjoint."""
    return Bary(np.asarray(l, dtype=float) @ frame.charadjoint, frame)


def bary_reflect(p: Bary, s: Bary) -> Bary:
    """Mirror image of p in s, written with star products."""
    f = p.frame
    return Bary(2.0 * f.star(p.v, s.v) * s.v - f.star(s.v, s.v) * p.v, f)


def angle_bisectors(k, l, frame: TriangleFrame) -> tuple[np.ndarray, np.ndarray]:
    """The two bisector lines of the line pair (k, l)."""
    k = np.asarray(k, dtype=float)
    l = np.asarray(l, dtype=float)
    if nm.proportional(k, l):
        raise DegenerateInput("bisectors of coinciding lines")
    wk = math.sqrt(float(l @ frame.charadjoint @ l))
    wl = math.sqrt(float(k @ frame.charadjoint @ k))
    return wk * k + wl * l, wk * k - wl * l


def staudtian_of(p, q, r, frame: TriangleFrame | None = None) -> float:
    """Half the absolute determinant of the unit representatives."""
    vs = []
    for x in (p, q, r):
        if isinstance(x, Bary):
            vs.append(from_bary(x).unit())
        elif isinstance(x, ProjPoint):
            vs.append(x.unit())
        else:
            if frame is None:
                raise TypeError("raw triples need an explicit frame")
            vs.append(from_bary(Bary(np.asarray(x, dtype=float), frame)).unit())
    return abs(nm.det3(*vs)) / 2.0


def _corner_angle(s, q, r) -> float:
    u = np.cross(s, q)
    v = np.cross(s, r)
    return nm.clamped_acos(float(u @ v) / (nm.norm(u) * nm.norm(v)))


def excess_of(p, q, r, frame: TriangleFrame | None = None) -> float:
    """Angle excess (area) of the triangle spanned by positive combinations.

    Representative-sensitive: the inner angles are the ones of the cone of
    the given representative vectors, so sign flips select the companion
    triangles.
    """
    vs = []
    for x in (p, q, r):
        if isinstance(x, Bary):
            vs.append(x.frame._basis @ x.v)
        elif isinstance(x, ProjPoint):
            vs.append(x.v)
        else:
            if frame is None:
                raise TypeError("raw triples need an explicit frame")
            vs.append(frame._basis @ np.asarray(x, dtype=float))
    P, Q, R = (v / nm.norm(v) for v in vs)
    return (_corner_angle(P, Q, R) + _corner_angle(Q, R, P)
            + _corner_angle(R, P, Q) - math.pi)
