"""The four central lines, their center rosters, and the attached theorems:
harmonic ranges, the bicevian symmetry statement, the Hart circle tangencies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import numerics as nm
from .cevian import isoconjugate, traces, tripolar
from .centers import CenterId, VertexCenterId, center, inradius, vertex_center
from .conics import Conic, bicevian_conic, circle_conic
from .errors import EquilateralDegeneracy, NotCollinear
from .frame import Bary, TriangleFrame, bary_distance, bary_dual_line
from .projective import ProjPoint


class LineId(str, Enum):
    ORTHOAXIS = "orthoaxis"
    GO = "go"
    OK = "ok"
    AKOPYAN = "akopyan"
    ORTHIC_AXIS = "orthic-axis"
    LEMOINE_AXIS = "lemoine-axis"
    G_TRIPOLAR = "g-tripolar"


def parse_line(name: str) -> LineId:
    low = name.strip().lower().replace("_", "-")
    for lid in LineId:
        if lid.value == low:
            return lid
    raise KeyError(f"unknown central line {name!r}")


def _check_scalene(frame: TriangleFrame):
    worst = min(abs(frame.ca - frame.cb), abs(frame.cb - frame.cc),
                abs(frame.cc - frame.ca))
    if worst < 1e-12:
        raise EquilateralDegeneracy("central line collapses for this symmetry")


def central_line(lid: LineId | str, frame: TriangleFrame) -> np.ndarray:
    """Closed-form coefficients of a central line."""
    lid = parse_line(lid) if isinstance(lid, str) else lid
    ca, cb, cc = frame.ca, frame.cb, frame.cc
    SA, SB, SC = frame.SA, frame.SB, frame.SC
    if lid in (LineId.ORTHOAXIS, LineId.GO, LineId.OK, LineId.AKOPYAN):
        _check_scalene(frame)
    if lid is LineId.ORTHOAXIS:
        return np.array([SA * (cb * cb - cc * cc),
                         SB * (cc * cc - ca * ca),
                         SC * (ca * ca - cb * cb)])
    if lid is LineId.GO:
        return np.array([(1 + ca - cb - cc) * (cb - cc),
                         (1 - ca + cb - cc) * (cc - ca),
                         (1 - ca - cb + cc) * (ca - cb)])
    if lid is LineId.OK:
        return np.array([(cb - cc) / (1 - ca),
                         (cc - ca) / (1 - cb),
                         (ca - cb) / (1 - cc)])
    if lid is LineId.AKOPYAN:
        return np.array([(cb - cc) * (1 + 2 * ca - cb - cc - cb * cc),
                         (cc - ca) * (1 - ca + 2 * cb - cc - cc * ca),
                         (ca - cb) * (1 - ca - cb + 2 * cc - ca * cb)])
    if lid is LineId.ORTHIC_AXIS:
        return np.array([SA, SB, SC])
    if lid is LineId.LEMOINE_AXIS:
        return tripolar(center(CenterId.KTILDE, frame))
    return np.array([1.0, 1.0, 1.0])  # tripolar of the centroid


def central_line_constructed(lid: LineId | str, frame: TriangleFrame) -> np.ndarray:
    """The same line from its defining construction (join or tripolar)."""
    lid = parse_line(lid) if isinstance(lid, str) else lid
    if lid is LineId.ORTHOAXIS:
        pair = (CenterId.GPLUS, CenterId.H)
    elif lid is LineId.GO:
        pair = (CenterId.G, CenterId.O)
    elif lid is LineId.OK:
        pair = (CenterId.O, CenterId.K)
    elif lid is LineId.AKOPYAN:
        pair = (CenterId.O, CenterId.HSTAR)
    elif lid is LineId.ORTHIC_AXIS:
        return tripolar(center(CenterId.H, frame))
    elif lid is LineId.LEMOINE_AXIS:
        return tripolar(center(CenterId.KTILDE, frame))
    else:
        return tripolar(center(CenterId.G, frame))
    p, q = (center(c, frame) for c in pair)
    return nm.cross(p.v, q.v)


def roster(lid: LineId | str, frame: TriangleFrame) -> list[tuple[str, np.ndarray]]:
    """Named points expected on the line."""
    lid = parse_line(lid) if isinstance(lid, str) else lid
    if lid is LineId.ORTHOAXIS:
        ids = (CenterId.H, CenterId.GPLUS, CenterId.HSTAR, CenterId.OPLUS,
               CenterId.L, CenterId.ORTHIC_AXIS_MEET)
        return [(c.value, center(c, frame).v) for c in ids]
    if lid is LineId.GO:
        ids = (CenterId.G, CenterId.O, CenterId.HMINUS, CenterId.L, CenterId.T)
        out = [(c.value, center(c, frame).v) for c in ids]
        kt_conj_o = isoconjugate(center(CenterId.KTILDE, frame),
                                 center(CenterId.O, frame))
        out.append(("Ktilde-conjugate-of-O", kt_conj_o.v))
        for vtx in "ABC":
            out.append((f"T_{vtx}",
                        vertex_center(VertexCenterId.TRIPLEX, vtx, frame).v))
        return out
    if lid is LineId.OK:
        out = [(CenterId.KTILDE.value, center(CenterId.KTILDE, frame).v)]
        lem = central_line(LineId.LEMOINE_AXIS, frame)
        out.append(("dual-of-lemoine-axis", bary_dual_line(lem, frame).v))
        from .conics import apollonian_common_points
        tplus, tminus = apollonian_common_points(frame)
        out.append(("apollonian-common-plus", tplus.v))
        out.append(("apollonian-common-minus", tminus.v))
        return out
    if lid is LineId.AKOPYAN:
        ids = (CenterId.O, CenterId.HSTAR, CenterId.GSHARP, CenterId.HSHARP,
               CenterId.NSHARP)
        return [(c.value, center(c, frame).v) for c in ids]
    if lid is LineId.ORTHIC_AXIS:
        return [(CenterId.ORTHIC_AXIS_MEET.value,
                 center(CenterId.ORTHIC_AXIS_MEET, frame).v)]
    if lid is LineId.LEMOINE_AXIS:
        ca, cb, cc = frame.ca, frame.cb, frame.cc
        return [("L_A", np.array([0.0, 1 - cb, cc - 1])),
                ("L_B", np.array([ca - 1, 0.0, 1 - cc])),
                ("L_C", np.array([1 - ca, cb - 1, 0.0]))]
    return [("second-midpoint-a", np.array([0.0, -1.0, 1.0])),
            ("second-midpoint-b", np.array([1.0, 0.0, -1.0])),
            ("second-midpoint-c", np.array([-1.0, 1.0, 0.0]))]


def roster_residuals(lid: LineId | str, frame: TriangleFrame) -> dict[str, float]:
    line = central_line(lid, frame)
    return {name: nm.incidence_residual(line, v) for name, v in roster(lid, frame)}


# ---------------------------------------------------------------------------
# harmonic ranges


def bary_cross_ratio(p: Bary, q: Bary, r: Bary, s: Bary) -> float:
    """Cross ratio on a barycentric line; -1 is a harmonic range."""
    pv, qv, rv, sv = (x.v / nm.norm(x.v) for x in (p, q, r, s))
    n = np.cross(pv, qv)
    nn = float(n @ n)
    for name, xv in (("third", rv), ("fourth", sv)):
        if abs(nm.det3(pv, qv, xv)) > 1e-9:
            raise NotCollinear(f"{name} cross-ratio point is off the base line")
    lam1 = float(np.cross(rv, qv) @ n) / nn
    mu1 = float(np.cross(pv, rv) @ n) / nn
    lam2 = float(np.cross(sv, qv) @ n) / nn
    mu2 = float(np.cross(pv, sv) @ n) / nn
    return (mu1 * lam2) / (lam1 * mu2)


@dataclass(frozen=True)
class HarmonicRange:
    line: LineId
    names: tuple[str, str, str, str]
    value: float

    @property
    def residual(self) -> float:
        return abs(self.value + 1.0)


def harmonic_range_check(frame: TriangleFrame) -> list[HarmonicRange]:
    """The two catalog harmonic ranges, with pairing fixed by the identities
    that expose the middle points as sum and difference of the outer pair."""
    _check_scalene(frame)  # the four points collapse on symmetric frames
    o = center(CenterId.O, frame)
    ranges = [
        HarmonicRange(LineId.GO, ("O", "Hminus", "G", "L"),
                      bary_cross_ratio(o, center(CenterId.HMINUS, frame),
                                       center(CenterId.G, frame),
                                       center(CenterId.L, frame))),
        HarmonicRange(LineId.AKOPYAN, ("O", "Nsharp", "Gsharp", "Hsharp"),
                      bary_cross_ratio(o, center(CenterId.NSHARP, frame),
                                       center(CenterId.GSHARP, frame),
                                       center(CenterId.HSHARP, frame))),
    ]
    return ranges


# ---------------------------------------------------------------------------
# bicevian symmetry of the orthoaxis


@dataclass(frozen=True)
class VigaraSymmetry:
    conic: Conic
    axis: np.ndarray
    axis_pole: Bary
    symmetry_points: tuple[Bary, Bary]
    identity_residual: float


def vigara_symmetry(frame: TriangleFrame) -> VigaraSymmetry:
    """Symmetry of the trace conic of the orthocenter and the cosine point.

    The orthoaxis is a symmetry axis; its pole and the sum/difference points
    of the orthocenter and its isogonal conjugate are symmetry points. The
    defining identity (h+o) M (h-o) = 0 on unit representatives is evaluated
    in the equivalent four-factor form (hMh)(oTo) = (oMo)(hTh), which stays
    conditioned on thin frames.
    """
    from .frame import from_bary, to_bary  # local import to avoid a cycle

    h = center(CenterId.H, frame)
    gp = center(CenterId.GPLUS, frame)
    conic = bicevian_conic(h, gp)
    axis = central_line(LineId.ORTHOAXIS, frame)
    axis_pole = bary_dual_line(axis, frame)
    op = center(CenterId.OPLUS, frame)
    hu_amb = from_bary(h).unit()
    ou_amb = from_bary(op).unit()
    plus = to_bary(ProjPoint(hu_amb + ou_amb), frame)
    minus = to_bary(ProjPoint(hu_amb - ou_amb), frame)
    hv, ov = h.v, op.v
    m, t = conic.mat, frame.charmatrix
    resid = abs(float(hv @ m @ hv) * float(ov @ t @ ov)
                - float(ov @ m @ ov) * float(hv @ t @ hv))
    resid /= (nm.norm(m.ravel()) * float(hv @ hv) * float(ov @ ov) * 3.0)
    return VigaraSymmetry(conic, axis, axis_pole, (plus, minus), resid)


# ---------------------------------------------------------------------------
# Hart circle


@dataclass(frozen=True)
class Tangency:
    incircle_index: int
    center_distance: float
    own_radius: float
    other_radius: float
    species: str
    residual: float


@dataclass(frozen=True)
class HartCircle:
    conic: Conic
    center: Bary
    radius: float
    feuerbach: Bary
    tangencies: tuple[Tangency, ...]


def hart_circle(frame: TriangleFrame) -> HartCircle:
    """Common cevian circle of the two area-bisection centers.

    Touches the incircles of all four triangles on the reference vertices;
    the touch point with the primary incircle is the Feuerbach point.
    """
    gs = center(CenterId.GSHARP, frame)
    hs = center(CenterId.HSHARP, frame)
    conic = bicevian_conic(gs, hs)
    ns = center(CenterId.NSHARP, frame)
    radius = bary_distance(ns, traces(gs).a)
    fe = center(CenterId.FE, frame)
    tangs = []
    for i in range(4):
        incenter = center(CenterId.I, frame, i)
        ri = inradius(frame, i)
        d = bary_distance(ns, incenter)
        # point distances fold at pi/2, so the center separation of touching
        # circles is the radius sum or difference or a complement of one
        candidates = (("external", radius + ri),
                      ("internal", abs(radius - ri)),
                      ("external", math.pi - (radius + ri)),
                      ("internal", math.pi - abs(radius - ri)))
        species, residual = min(((sp, abs(d - val)) for sp, val in candidates),
                                key=lambda t: t[1])
        tangs.append(Tangency(i, d, radius, ri, species, residual))
    return HartCircle(conic, ns, radius, fe, tuple(tangs))


def sharp_cevian_circle_centers(frame: TriangleFrame) -> list[Bary]:
    """Centers of the circles through two vertices and two pseudo-orthocenter
    traces, one per vertex pair (A,B), (B,C), (C,A)."""
    a, b, c = frame.a, frame.b, frame.c

    def g(x, y, z):
        chx, chy, chz = math.cos(x / 2), math.cos(y / 2), math.cos(z / 2)
        shz = math.sin(z / 2)
        return (chx / (chx + chy * chz),
                chy / (chy + chz * chx),
                chz * shz * shz / ((chx + chy * chz) * (chy + chx * chz)))

    g1, g2, g3 = g(a, b, c)
    ab = np.array([g1, g2, g3])
    h1, h2, h3 = g(b, c, a)
    bc = np.array([h3, h1, h2])
    k1, k2, k3 = g(c, a, b)
    ca_ = np.array([k2, k3, k1])
    return [Bary(ab, frame), Bary(bc, frame), Bary(ca_, frame)]


# ---------------------------------------------------------------------------
# power circles of the medial configuration


def power_circles(frame: TriangleFrame) -> list[Conic]:
    """Circles on the side midpoints through the opposite vertices."""
    mids = [Bary((0.0, 1.0, 1.0), frame), Bary((1.0, 0.0, 1.0), frame),
            Bary((1.0, 1.0, 0.0), frame)]
    verts = [Bary(tuple(e), frame) for e in np.eye(3)]
    return [circle_conic(m, v) for m, v in zip(mids, verts)]
