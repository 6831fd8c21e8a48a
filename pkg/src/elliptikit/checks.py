"""Named verification checks and the deterministic sweep runner.

Every theorem the library claims is registered here exactly once, either as a
per-frame residual (swept over seeded random frames) or as a global check
with its own internal sampling. Composite checks whose parts carry different
tolerances report the worst part-residual divided by its part-tolerance and
use 1.0 as the check tolerance. The report serialization is canonical:
identical configuration gives identical bytes.
"""

from __future__ import annotations

import hashlib
import math
import os
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import numerics as nm
from .cevian import (antipedal_triple, dual_triple, harmonic_associates,
                     isoconjugate, pedal_triple, traces, tripolar, tripole)
from .centers import (CenterId, catalog, center, center_angle_vector,
                      circumradius, dual_triangle_circumradius, inradius,
                      limit_convergence_order)
from .conics import (ConicClass, Cubic, bicevian_conic, bicevian_perspector,
                     circumcevian_conjugates, circumcircle, circumconic,
                     circumconic_points, classify, conic_perspector,
                     conic_points, euler_feuerbach_cubic, incircle,
                     simson_cubic, simson_locus_cubic, symmetry_points)
from .frame import (Bary, TriangleFrame, bary_distance, bary_dual_line,
                    bary_reflect, excess_of, from_bary, frame_from_sides,
                    staudtian_of, to_bary)
from .lines import (LineId, central_line, central_line_constructed,
                    harmonic_range_check, hart_circle, roster_residuals,
                    vigara_symmetry)
from .metric import (circle_through, distance, on_circle, par, pedal, perp,
                     reflect_point, segment_measure, tangent_length)
from .projective import ProjLine, ProjPoint, cross_ratio, dual, join, meet
from .sampling import random_frames


@dataclass
class RunConfig:
    """Configuration of one verification sweep."""

    seed: int = 42
    frames: int = 1000
    staudtian_floor: float = 1e-6
    tolerances: dict = field(default_factory=dict)
    tol_scale: float = 1.0
    only: Optional[str] = None
    out: Optional[str] = None

    @staticmethod
    def env_tol_scale() -> float:
        raw = os.environ.get("ELLIPTIKIT_TOL_SCALE", "1")
        try:
            return float(raw)
        except ValueError:
            return 1.0


@dataclass(frozen=True)
class Check:
    name: str
    statement: str
    tolerance: float
    kind: str                      # "per_frame" or "global"
    fn: Callable


_REGISTRY: dict[str, Check] = {}


def _register(name, statement, tolerance, kind="per_frame"):
    def deco(fn):
        _REGISTRY[name] = Check(name, statement, tolerance, kind, fn)
        return fn
    return deco


def registry() -> dict[str, Check]:
    return dict(_REGISTRY)


def _frame_rng(frame_index: int, salt: int = 0) -> np.random.Generator:
    return np.random.default_rng(977 * (frame_index + 1) + salt)


def _rand_point(rng) -> ProjPoint:
    return ProjPoint(rng.normal(size=3))


def _generic_bary(frame: TriangleFrame, rng) -> Bary:
    return Bary(rng.dirichlet((2.0, 2.0, 2.0)) + 0.05, frame)


# ---------------------------------------------------------------------------
# projective core


@_register("projective.join_meet_duality",
           "dual of a join equals the meet of the duals", 1e-12, "global")
def _chk_join_meet(config, frames):
    rng = np.random.default_rng(config.seed + 1)
    worst = 0.0
    for _ in range(300):
        p, q = _rand_point(rng), _rand_point(rng)
        worst = max(worst, nm.proj_distance(dual(join(p, q)).v,
                                            meet(dual(p), dual(q)).v))
    return worst, 300, None


@_register("projective.cross_ratio_reciprocal",
           "swapping the last two cross-ratio points inverts the value",
           1e-10, "global")
def _chk_cr_recip(config, frames):
    rng = np.random.default_rng(config.seed + 2)
    worst = 0.0
    for _ in range(300):
        p, q = _rand_point(rng), _rand_point(rng)
        t1, t2 = rng.uniform(0.2, 2.0, size=2)
        r = ProjPoint(p.unit() + t1 * q.unit())
        s = ProjPoint(p.unit() - t2 * q.unit())
        worst = max(worst, abs(cross_ratio(p, q, r, s) * cross_ratio(p, q, s, r) - 1.0))
    return worst, 300, None


@_register("projective.normalization_idempotent",
           "canonicalizing twice equals canonicalizing once, bit-exactly",
           0.0, "global")
def _chk_norm_idem(config, frames):
    rng = np.random.default_rng(config.seed + 3)
    worst = 0.0
    for _ in range(300):
        v = nm.canonical(rng.normal(size=3))
        worst = max(worst, float(np.max(np.abs(nm.canonical(v) - v))))
    return worst, 300, None


# ---------------------------------------------------------------------------
# metric


@_register("metric.triangle_inequality",
           "the point distance satisfies the triangle inequality", 1e-12, "global")
def _chk_triangle_ineq(config, frames):
    rng = np.random.default_rng(config.seed + 4)
    worst = 0.0
    for _ in range(300):
        p, q, r = (_rand_point(rng) for _ in range(3))
        worst = max(worst, distance(p, r) - distance(p, q) - distance(q, r))
    return max(worst, 0.0), 300, None


@_register("metric.segment_pairing",
           "the two segment measures of a point pair sum to pi", 1e-12, "global")
def _chk_segment_pairing(config, frames):
    rng = np.random.default_rng(config.seed + 5)
    worst = 0.0
    for _ in range(300):
        p, q = _rand_point(rng), _rand_point(rng)
        worst = max(worst, abs(segment_measure(p, q, +1)
                               + segment_measure(p, q, -1) - math.pi))
    return worst, 300, None


@_register("metric.parallel_incidences",
           "the parallel through a point contains it, and the pedal lies on "
           "both the base line and the perpendicular", 1e-10, "global")
def _chk_parallel(config, frames):
    rng = np.random.default_rng(config.seed + 6)
    worst = 0.0
    for _ in range(300):
        l = ProjLine(rng.normal(size=3))
        p = _rand_point(rng)
        pp = perp(l, p)
        pl = par(l, p)
        foot = pedal(l, p)
        worst = max(worst,
                    nm.incidence_residual(pl.v, p.v),
                    nm.incidence_residual(pp.v, foot.v),
                    nm.incidence_residual(l.v, foot.v),
                    nm.incidence_residual(pp.v, dual(pl).v))
    return worst, 300, None


@_register("metric.reflection_isometry",
           "point reflection preserves distances", 1e-10, "global")
def _chk_reflection(config, frames):
    rng = np.random.default_rng(config.seed + 7)
    worst = 0.0
    for _ in range(300):
        x, y, s = (_rand_point(rng) for _ in range(3))
        worst = max(worst, abs(distance(reflect_point(x, s), reflect_point(y, s))
                               - distance(x, y)))
    return worst, 300, None


@_register("metric.circle_center_symmetry",
           "reflecting a circle point in the center stays on the circle",
           1e-10, "global")
def _chk_circle_sym(config, frames):
    rng = np.random.default_rng(config.seed + 8)
    worst = 0.0
    for _ in range(300):
        m, p = _rand_point(rng), _rand_point(rng)
        c = circle_through(m, p)
        r = reflect_point(p, m)
        worst = max(worst, abs(abs(float(r.unit() @ m.unit())) - c.cosradius))
    return worst, 300, None


# ---------------------------------------------------------------------------
# frames and barycentric calculus


@_register("frame.char_inverse",
           "the characteristic matrix times its adjoint is the determinant "
           "times the identity (defect relative to the adjoint scale)", 1e-12)
def _chk_char_inverse(ctx):
    f = ctx.frame
    defect = f.charmatrix @ f.charadjoint - (f.S * f.S) * np.eye(3)
    return float(np.max(np.abs(defect)) / np.max(np.abs(f.charadjoint)))


@_register("frame.dual_triple_coords",
           "the sideline poles have the closed-form barycentric coordinates",
           1e-10)
def _chk_dual_triple(ctx):
    f = ctx.frame
    worst = 0.0
    for k, formula in enumerate(dual_triple(f)):
        amb = nm.cross(f.reps[(k + 1) % 3], f.reps[(k + 2) % 3])
        worst = max(worst, nm.proj_distance(to_bary(ProjPoint(amb), f).v, formula.v))
    return worst


@_register("frame.trig_rules",
           "side and angle cosine rules and the sine rule hold together", 1e-12)
def _chk_trig(ctx):
    f = ctx.frame
    sides = (f.a, f.b, f.c)
    angles = (f.alpha, f.beta, f.gamma)
    ratio = abs(f.S) / (f.sa * f.sb * f.sc)
    worst = 0.0
    for k in range(3):
        x = sides[k]
        y, z = sides[(k + 1) % 3], sides[(k + 2) % 3]
        al = angles[k]
        be, ga = angles[(k + 1) % 3], angles[(k + 2) % 3]
        worst = max(worst, abs(math.cos(al) * math.sin(y) * math.sin(z)
                               - (math.cos(x) - math.cos(y) * math.cos(z))))
        worst = max(worst, abs(math.cos(x) * math.sin(be) * math.sin(ga)
                               - (math.cos(al) + math.cos(be) * math.cos(ga))))
        worst = max(worst, abs(math.sin(al) * math.sin(y) * math.sin(z)
                               - abs(f.S)))
    return worst


@_register("frame.staudtian_concavity",
           "the vertex-split staudtian sum exceeds the whole staudtian, with "
           "its interior maximum at the circumcenter when that is interior",
           1e-9, "global")
def _chk_staudtian_concavity(config, frames):
    # the closed form of the split sum is staudtian(ABC) times the coordinate
    # sum of the unit combination, which is maximized at the adjoint image of
    # (1,1,1): the circumcenter, not the incenter
    e = np.eye(3)
    worst = 0.0
    tested = 0
    for fi, f in enumerate(frames[: max(1, min(5, len(frames)))]):
        rng = _frame_rng(fi, 11)

        def split_sum(v, f=f):
            p = Bary(v, f)
            return (staudtian_of(Bary(e[1], f), p, Bary(e[2], f))
                    + staudtian_of(Bary(e[2], f), p, Bary(e[0], f))
                    + staudtian_of(Bary(e[0], f), p, Bary(e[1], f)))

        base = staudtian_of(Bary(e[0], f), Bary(e[1], f), Bary(e[2], f))
        for _ in range(40):
            v = rng.dirichlet((1.5, 1.5, 1.5)) + 1e-3
            worst = max(worst, base - split_sum(v))
            tested += 1
        o = center(CenterId.O, f).v
        if np.all(o > 0):
            o = o / o.sum()
            ref = split_sum(o)
            for _ in range(100):
                v = o + rng.normal(size=3) * 1e-4
                if np.all(v > 0):
                    worst = max(worst, split_sum(v) - ref)
                    tested += 1
    return max(worst, 0.0), tested, None


@_register("frame.staudtian_representation",
           "interior points equal their vertex-split staudtian coordinates",
           1e-10)
def _chk_staudtian_rep(ctx):
    f = ctx.frame
    rng = _frame_rng(ctx.index, 42)
    e = np.eye(3)
    worst = 0.0
    for _ in range(2):
        p = Bary(rng.dirichlet((2.0, 2.0, 2.0)) + 1e-3, f)
        n = np.array([staudtian_of(Bary(e[1], f), p, Bary(e[2], f)),
                      staudtian_of(Bary(e[2], f), p, Bary(e[0], f)),
                      staudtian_of(Bary(e[0], f), p, Bary(e[1], f))])
        worst = max(worst, nm.proj_distance(n, p.v))
    return worst


# ---------------------------------------------------------------------------
# cevian apparatus


@_register("cevian.tripole_roundtrip",
           "the tripole of the tripolar returns the point", 1e-10)
def _chk_tripole_roundtrip(ctx):
    f = ctx.frame
    p = _generic_bary(f, _frame_rng(ctx.index, 21))
    return nm.proj_distance(tripole(tripolar(p), f).v, p.v)


@_register("cevian.tripolar_conjugates_collinear",
           "the trace conjugates of a point lie on its tripolar line", 1e-12)
def _chk_tripolar_collinear(ctx):
    f = ctx.frame
    p = _generic_bary(f, _frame_rng(ctx.index, 22))
    line = tripolar(p)
    x, y, z = p.v
    pts = (np.array([0.0, -y, z]), np.array([-x, 0.0, z]), np.array([x, -y, 0.0]))
    return max(nm.incidence_residual(line, q) for q in pts)


@_register("cevian.ktilde_maps_circumcircle",
           "the Lemoine-point isoconjugation sends the circumcircle to the "
           "centroid tripolar", 1e-9)
def _chk_ktilde_map(ctx):
    f = ctx.frame
    kt = ctx.center(CenterId.KTILDE)
    worst = 0.0
    for x in circumconic_points(kt, 5, seed=ctx.index):
        y = isoconjugate(kt, x)
        worst = max(worst, abs(float(np.sum(y.v))) / nm.norm(y.v))
    return worst


@_register("cevian.pedal_antipedal_duality",
           "each antipedal vertex projects back onto the matching reference "
           "vertices", 1e-10)
def _chk_pedal_antipedal(ctx):
    # constructed in ambient coordinates, where the perpendiculars keep unit
    # scale; the coordinate formula is checked against this construction in
    # the unit tests
    f = ctx.frame
    p = _generic_bary(f, _frame_rng(ctx.index, 23))
    pamb = from_bary(p)
    verts = [ProjPoint(r) for r in f.reps]
    worst = 0.0
    for k in range(3):
        others = [j for j in range(3) if j != k]
        perps = [perp(join(verts[j], pamb), verts[j]) for j in others]
        anti_amb = meet(perps[0], perps[1])
        for j in others:
            foot = pedal(join(verts[j], pamb), anti_amb)
            worst = max(worst, nm.proj_distance(foot.v, f.reps[j]))
    return worst


# ---------------------------------------------------------------------------
# centers catalog


@_register("centers.companion_associates",
           "companion centroids and incenters are the one-sign-flip points",
           1e-12)
def _chk_companion_assoc(ctx):
    f = ctx.frame
    worst = 0.0
    for cid in (CenterId.G, CenterId.I):
        assoc = list(harmonic_associates(center(cid, f)))
        for i in (1, 2, 3):
            worst = max(worst, nm.proj_distance(center(cid, f, i).v,
                                                assoc[i - 1].v))
    return worst


@_register("centers.absolute_orthocenter",
           "the orthocenter is the same for all four companion triangles",
           1e-12)
def _chk_absolute_h(ctx):
    f = ctx.frame
    h0 = center(CenterId.H, f)
    return max(nm.proj_distance(center(CenterId.H, f, i).v, h0.v)
               for i in (1, 2, 3))


@_register("centers.classical_equidistance",
           "circumcenter and incenter equidistance matches the closed-form "
           "radii, with the touch points at the Gergonne traces", 1e-10)
def _chk_classical(ctx):
    f = ctx.frame
    o = ctx.center(CenterId.O)
    e = np.eye(3)
    dists = [bary_distance(o, Bary(e[k], f)) for k in range(3)]
    worst = max(dists) - min(dists)
    worst = max(worst, abs(dists[0] - circumradius(f)))
    i_ = ctx.center(CenterId.I)
    feet = list(pedal_triple(i_))
    r = inradius(f)
    pd = [bary_distance(i_, x) for x in feet]
    worst = max(worst, max(pd) - min(pd), abs(pd[0] - r))
    for foot, t in zip(feet, traces(ctx.center(CenterId.GE))):
        worst = max(worst, nm.proj_distance(foot.v, t.v))
    return worst


@_register("centers.conjugacy_relations",
           "the basecenter and the medial orthocenter are the isogonal "
           "conjugates of the orthocenter and circumcenter", 1e-10)
def _chk_conjugacy(ctx):
    k = ctx.center(CenterId.K)
    worst = nm.proj_distance(isoconjugate(k, ctx.center(CenterId.H)).v,
                             ctx.center(CenterId.OPLUS).v)
    worst = max(worst, nm.proj_distance(isoconjugate(k, ctx.center(CenterId.O)).v,
                                        ctx.center(CenterId.HMINUS).v))
    ktco = isoconjugate(ctx.center(CenterId.KTILDE), ctx.center(CenterId.O))
    return max(worst, nm.incidence_residual(ctx.line(LineId.GO), ktco.v))


@_register("centers.hminus_perspector",
           "the companion circumcenters form a perspective triple through the "
           "isogonal conjugate of the circumcenter", 1e-10)
def _chk_hminus_persp(ctx):
    f = ctx.frame
    e = np.eye(3)
    lines = [nm.cross(e[i - 1], center(CenterId.O, f, i).v) for i in (1, 2, 3)]
    p = nm.cross(lines[0], lines[1])
    worst = nm.incidence_residual(lines[2], p)
    return max(worst, nm.proj_distance(p, ctx.center(CenterId.HMINUS).v))


@_register("centers.gsharp_area_bisection",
           "every cevian of the area-bisection point halves the excess", 1e-9)
def _chk_gsharp_area(ctx):
    f = ctx.frame
    tr = list(traces(ctx.center(CenterId.GSHARP)))
    e = np.eye(3)
    worst = 0.0
    for k, t in enumerate(tr):
        j = (k + 1) % 3
        half = excess_of(Bary(e[k], f), Bary(e[j], f), t)
        worst = max(worst, abs(half - f.excess / 2.0))
    return worst


@_register("centers.angle_form_agreement",
           "side-form and angle-form center functions give the same point",
           1e-10)
def _chk_angle_forms(ctx):
    f = ctx.frame
    worst = 0.0
    for cid, spec in catalog().items():
        if spec.angle_form is None or not spec.angle_form_consistent:
            continue
        worst = max(worst, nm.proj_distance(center(cid, f).v,
                                            center_angle_vector(cid, f)))
    return worst


@_register("centers.dual_triangle_circumradius",
           "the incenter is the dual triple's circumcenter at the closed-form "
           "radius", 1e-10)
def _chk_dual_circumradius(ctx):
    f = ctx.frame
    i_ = ctx.center(CenterId.I)
    rr = dual_triangle_circumradius(f)
    return max(abs(bary_distance(i_, x) - rr) for x in dual_triple(f))


@_register("centers.euclidean_limits",
           "every tagged center approaches its flat reference at second order "
           "(residual is |order - 2|)", 0.3, "global")
def _chk_limits(config, frames):
    # generic scalene base; (1.0, 0.8, 0.6) is euclidean-right and would
    # degenerate the orthocenter family in the shrink limit
    base = frame_from_sides(1.0, 0.85, 0.62)
    worst = 0.0
    tested = 0
    worst_tag = None
    for cid, spec in catalog().items():
        if spec.kimberling is None:
            continue
        _, order = limit_convergence_order(cid, base)
        tested += 1
        if order is None:
            continue  # identically at the limit
        if abs(order - 2.0) > worst:
            worst = abs(order - 2.0)
            worst_tag = cid.value
    return worst, tested, worst_tag


# ---------------------------------------------------------------------------
# conics and cubics


def _sample_on_cubic(cub: Cubic, base: np.ndarray, rng) -> np.ndarray | None:
    for _ in range(8):
        w = rng.normal(size=3)
        ts = np.array([1.0, 2.0, 3.0])
        v0 = cub.evaluate(base)
        mat = np.stack([ts**3, ts**2, ts], axis=1)
        try:
            a3, a2, a1 = np.linalg.solve(mat, [cub.evaluate(base + t * w) - v0
                                               for t in ts])
        except np.linalg.LinAlgError:
            continue
        if abs(a3) < 1e-18:
            continue
        for rt in np.roots([a3, a2, a1 + 0j]):
            if abs(rt.imag) < 1e-10 and abs(rt.real) > 1e-5:
                x = base + rt.real * w
                if nm.norm(x) > 1e-8 and cub.residual(x) < 1e-11:
                    return x
    return None


@_register("conics.simson_pedal_collinearity",
           "points of the pedal cubic have collinear sideline pedals", 1e-8)
def _chk_simson_collinear(ctx):
    f = ctx.frame
    cub = ctx.simson_locus
    base = dual_triple(f).a
    rng = _frame_rng(ctx.index, 31)
    worst = 0.0
    for _ in range(3):
        x = _sample_on_cubic(cub, base.v, rng)
        if x is None:
            continue
        pa, pb, pc = (q.v / nm.norm(q.v) for q in pedal_triple(Bary(x, f)))
        worst = max(worst, abs(nm.det3(pa, pb, pc)))
    return worst


@_register("conics.circumconic_perspector_roundtrip",
           "the perspector of a circumconic is its defining point", 1e-10)
def _chk_circumconic_roundtrip(ctx):
    f = ctx.frame
    rng = _frame_rng(ctx.index, 32)
    worst = 0.0
    for _ in range(2):
        p = _generic_bary(f, rng)
        worst = max(worst, nm.proj_distance(conic_perspector(circumconic(p)).v, p.v))
    return worst


@_register("conics.ellipse_symmetry_points",
           "a proper ellipse has three mutually star-orthogonal symmetry "
           "points", 1e-8)
def _chk_ellipse_symmetry(ctx):
    f = ctx.frame
    sym = symmetry_points(ctx.vigara.conic)
    if sym.kind is not ConicClass.ELLIPSE:
        return 1.0
    worst = 0.0
    for i in range(3):
        for j in range(i + 1, 3):
            s = abs(f.star(sym.points[i].v, sym.points[j].v))
            s /= f.star_norm(sym.points[i].v) * f.star_norm(sym.points[j].v)
            worst = max(worst, s)
    return worst


@_register("conics.bicevian_circle_condition",
           "the trace conic of a point and its circumcevian conjugate is a "
           "circle about the cevian-circle center", 1e-8)
def _chk_bicevian_circle(ctx):
    f = ctx.frame
    p = _generic_bary(f, _frame_rng(ctx.index, 33))
    rec = circumcevian_conjugates(p)[0]
    conic = bicevian_conic(p, rec.conjugate)
    if classify(conic) is not ConicClass.CIRCLE:
        return 1.0
    sym = symmetry_points(conic)
    return nm.proj_distance(sym.points[0].v, rec.center.v)


@_register("conics.cubic_incidences",
           "the catalog points lie on the pedal cubics and the pedal-line "
           "tripoles on theirs", 1e-9)
def _chk_cubic_incidences(ctx):
    f = ctx.frame
    ef = euler_feuerbach_cubic(f)
    worst = 0.0
    for t in traces(ctx.center(CenterId.HMINUS)):
        worst = max(worst, ef.residual(t))
    for i in range(4):
        for t in traces(center(CenterId.G, f, i)):
            worst = max(worst, ef.residual(t))
    loc = ctx.simson_locus
    for x in dual_triple(f):
        worst = max(worst, loc.residual(x))
    SA, SB, SC = f.SA, f.SB, f.SC
    sa2, sb2, sc2 = f.sa**2, f.sb**2, f.sc**2
    for x in (np.array([-SB * SC, sb2 * SB, sc2 * SC]),
              np.array([sa2 * SA, -SC * SA, sc2 * SC]),
              np.array([sa2 * SA, sb2 * SB, -SA * SB])):
        worst = max(worst, loc.residual(x))
    sim = simson_cubic(f)
    rng = _frame_rng(ctx.index, 41)
    base = dual_triple(f).a
    for _ in range(2):
        x = _sample_on_cubic(loc, base.v, rng)
        if x is None:
            continue
        pt = pedal_triple(Bary(x, f))
        line = nm.cross(pt.a.v, pt.b.v)
        if np.min(np.abs(line)) < 1e-12 * np.max(np.abs(line)):
            continue
        worst = max(worst, sim.residual(tripole(line, f)))
    return worst


# ---------------------------------------------------------------------------
# central lines


@_register("lines.equation_join_consistency",
           "every central-line equation matches its defining construction",
           1e-10)
def _chk_line_equations(ctx):
    f = ctx.frame
    return max(nm.proj_distance(central_line(lid, f),
                                central_line_constructed(lid, f))
               for lid in LineId)


@_register("lines.central_line_rosters",
           "every catalog center claimed for a central line is incident with "
           "it", 1e-10)
def _chk_rosters(ctx):
    f = ctx.frame
    return max(max(roster_residuals(lid, f).values())
               for lid in (LineId.ORTHOAXIS, LineId.GO, LineId.OK,
                           LineId.AKOPYAN))


@_register("lines.ok_specifics",
           "the circumcenter-symmedian line has its tripole on the "
           "circumcircle and is perpendicular to the Lemoine axis", 1e-10)
def _chk_ok_specifics(ctx):
    f = ctx.frame
    ok = ctx.line(LineId.OK)
    worst = circumcircle(f).residual(tripole(ok, f))
    lem = central_line(LineId.LEMOINE_AXIS, f)
    return max(worst, nm.incidence_residual(ok, bary_dual_line(lem, f).v))


@_register("lines.akopyan_cevian_axis",
           "the area-bisection point, its circumcevian conjugate and their "
           "circle center are collinear on the Akopyan line", 1e-9)
def _chk_cevian_axis(ctx):
    f = ctx.frame
    gs = ctx.center(CenterId.GSHARP)
    rec = circumcevian_conjugates(gs)[0]
    worst = nm.proj_distance(rec.conjugate.v, ctx.center(CenterId.HSHARP).v)
    worst = max(worst, nm.proj_distance(rec.center.v, ctx.center(CenterId.NSHARP).v))
    ako = ctx.line(LineId.AKOPYAN)
    for v in (gs.v, rec.conjugate.v, rec.center.v):
        worst = max(worst, nm.incidence_residual(ako, v))
    return worst


@_register("lines.longchamps_radical_center",
           "the double dual point has the same power ratio to the three "
           "power circles", 1e-9)
def _chk_longchamps_power(ctx):
    f = ctx.frame
    l_amb = from_bary(ctx.center(CenterId.L))
    mids = [Bary((0.0, 1.0, 1.0), f), Bary((1.0, 0.0, 1.0), f),
            Bary((1.0, 1.0, 0.0), f)]
    ratios = []
    for k, m in enumerate(mids):
        circ = circle_through(from_bary(m), ProjPoint(f.reps[k]))
        cosd = math.cos(distance(l_amb, circ.center))
        ratios.append(cosd / circ.cosradius)
    return max(ratios) - min(ratios)


@_register("lines.longchamps_memberships",
           "the double dual point lies on the incenter-Gergonne line and on "
           "every companion centroid-circumcenter line", 1e-10)
def _chk_longchamps_lines(ctx):
    f = ctx.frame
    l = ctx.center(CenterId.L)
    worst = nm.incidence_residual(
        nm.cross(ctx.center(CenterId.I).v, ctx.center(CenterId.GE).v), l.v)
    for i in range(4):
        worst = max(worst, nm.incidence_residual(
            nm.cross(center(CenterId.G, f, i).v, center(CenterId.O, f, i).v), l.v))
    return worst


@_register("lines.harmonic_range_go",
           "circumcenter, medial orthocenter, centroid and double dual point "
           "form a harmonic range", 1e-9)
def _chk_harmonic_go(ctx):
    return harmonic_range_check(ctx.frame)[0].residual


@_register("lines.harmonic_range_akopyan",
           "circumcenter and cevian-circle center separate the two "
           "area-bisection points harmonically", 1e-9)
def _chk_harmonic_ako(ctx):
    return harmonic_range_check(ctx.frame)[1].residual


@_register("lines.vigara_symmetry",
           "the orthoaxis trace conic has the predicted symmetry points "
           "(part residuals scaled by their own tolerances)", 1.0)
def _chk_vigara(ctx):
    f = ctx.frame
    vg = ctx.vigara
    worst = vg.identity_residual / 1e-10
    persp = bicevian_perspector(ctx.center(CenterId.H), ctx.center(CenterId.GPLUS))
    worst = max(worst, nm.proj_distance(persp.v, vg.axis_pole.v) / 1e-10)
    trace_base = traces(ctx.center(CenterId.H)).a
    pts = conic_points(vg.conic, 20, seed=ctx.index, base=trace_base)
    for s in vg.symmetry_points:
        s_amb = from_bary(s)
        for x in pts:
            # reflect through ambient coordinates: the barycentric formula is
            # exact but ill-conditioned when the Gram matrix is nearly singular
            r_amb = reflect_point(from_bary(x), s_amb)
            worst = max(worst, vg.conic.residual(to_bary(r_amb, f)) / 1e-8)
    return worst


@_register("lines.hart_circle",
           "the common cevian circle touches all four incircles, through the "
           "touch point on the primary incircle (part residuals scaled by "
           "their own tolerances)", 1.0)
def _chk_hart(ctx):
    f = ctx.frame
    hc = ctx.hart
    worst = max(t.residual for t in hc.tangencies) / 1e-7
    worst = max(worst, hc.conic.residual(hc.feuerbach) / 1e-9)
    worst = max(worst, incircle(f).residual(hc.feuerbach) / 1e-9)
    g, h = ctx.center(CenterId.G), ctx.center(CenterId.H)
    op, hm = ctx.center(CenterId.OPLUS), ctx.center(CenterId.HMINUS)
    worst = max(worst, nm.incidence_residual(nm.cross(g.v, h.v), hc.center.v) / 1e-9)
    worst = max(worst, nm.incidence_residual(nm.cross(op.v, hm.v), hc.center.v) / 1e-9)
    return worst


# ---------------------------------------------------------------------------
# runner


class FrameContext:
    """Per-frame memo of centers, lines and shared constructions."""

    def __init__(self, frame: TriangleFrame, index: int):
        self.frame = frame
        self.index = index
        self._centers: dict = {}
        self._lines: dict = {}
        self._vigara = None
        self._hart = None
        self._simson_locus = None

    def center(self, cid: CenterId) -> Bary:
        if cid not in self._centers:
            self._centers[cid] = center(cid, self.frame)
        return self._centers[cid]

    def line(self, lid: LineId) -> np.ndarray:
        if lid not in self._lines:
            self._lines[lid] = central_line(lid, self.frame)
        return self._lines[lid]

    @property
    def vigara(self):
        if self._vigara is None:
            self._vigara = vigara_symmetry(self.frame)
        return self._vigara

    @property
    def hart(self):
        if self._hart is None:
            self._hart = hart_circle(self.frame)
        return self._hart

    @property
    def simson_locus(self) -> Cubic:
        if self._simson_locus is None:
            self._simson_locus = simson_locus_cubic(self.frame)
        return self._simson_locus


def _canonical_json(value) -> str:
    if isinstance(value, dict):
        inner = ",".join(f"{_canonical_json(k)}:{_canonical_json(v)}"
                         for k, v in sorted(value.items()))
        return "{" + inner + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_canonical_json(v) for v in value) + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        x = float(value)
        if x != x or x in (float("inf"), float("-inf")):
            return '"' + str(x) + '"'
        return format(x, ".17g")
    return '"' + str(value).replace("\\", "\\\\").replace('"', '\\"') + '"'


def run_checks(config: RunConfig,
               progress: Callable[[str], None] | None = None) -> dict:
    """Run the registered checks and assemble the canonical report."""
    frames = random_frames(config.frames, config.seed, config.staudtian_floor)
    contexts = [FrameContext(f, i) for i, f in enumerate(frames)]
    results = []
    all_pass = True
    for name in sorted(_REGISTRY):
        if config.only and config.only not in name:
            continue
        check = _REGISTRY[name]
        tol = config.tolerances.get(name, check.tolerance) * config.tol_scale
        if check.kind == "per_frame":
            worst = -math.inf
            worst_index = 0
            for ctx in contexts:
                r = float(check.fn(ctx))
                if r > worst:
                    worst, worst_index = r, ctx.index
            frames_tested = len(contexts)
            wf = frames[worst_index]
            worst_info = {"index": worst_index, "sides": [wf.a, wf.b, wf.c]}
        else:
            worst, frames_tested, extra = check.fn(config, frames)
            worst = float(worst)
            worst_info = {"detail": extra} if extra is not None else None
        passed = bool(worst <= tol)
        all_pass = all_pass and passed
        results.append({
            "name": name,
            "statement": check.statement,
            "frames_tested": frames_tested,
            "max_residual": worst,
            "tolerance": tol,
            "pass": passed,
            "worst_frame": worst_info,
        })
        if progress is not None:
            status = "pass" if passed else "FAIL"
            progress(f"{status:4s}  {name:44s} max_residual={worst:.3e}  tol={tol:.1e}")
    payload = {
        "config": {
            "seed": config.seed,
            "frames": config.frames,
            "staudtian_floor": config.staudtian_floor,
            "tol_scale": config.tol_scale,
            "only": config.only,
            "tolerances": dict(sorted(config.tolerances.items())),
        },
        "checks": results,
        "pass": all_pass,
    }
    payload["hash"] = hashlib.sha256(_canonical_json(payload).encode()).hexdigest()
    return payload


def report_bytes(payload: dict) -> bytes:
    return (_canonical_json(payload) + "\n").encode()
