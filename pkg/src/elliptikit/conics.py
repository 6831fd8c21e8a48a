"""Conics and cubics in barycentric coordinates.

Conics are symmetric 3x3 coefficient matrices; a point lies on the conic when
the quadratic form vanishes. Symmetry points are the eigenvectors of the
adjoint-characteristic-matrix times the conic matrix, computed through the
generalized symmetric eigenproblem (the characteristic matrix is positive
definite, so all eigenvalues are real). Cubics are stored as ten coefficients
over the degree-3 monomials in lexicographic exponent order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable, Sequence

import numpy as np
import scipy.linalg

from . import numerics as nm
from .cevian import traces
from .centers import CenterId, center
from .errors import (ConstructionDegenerate, DegenerateCevianCircle,
                     DegenerateConic, DegenerateInput, DiagonalMatrix,
                     IsoscelesDegeneracy, OnSideline, RankDeficient)
from .frame import Bary, TriangleFrame

DEGENERATE_DET_TOL = 1e-12
CIRCLE_GAP_TOL = 1e-8


class ConicClass(Enum):
    TWO_LINES = "two lines"
    DOUBLE_LINE = "double line"
    POINT = "point"
    EMPTY = "empty"
    CIRCLE = "circle"
    ELLIPSE = "ellipse"


@dataclass(frozen=True)
class Conic:
    """Symmetric coefficient matrix of a barycentric conic."""

    mat: np.ndarray
    frame: TriangleFrame

    def __post_init__(self):
        m = np.asarray(self.mat, dtype=float).reshape(3, 3)
        if not np.allclose(m, m.T, atol=1e-12 * max(1.0, np.abs(m).max())):
            raise ValueError("conic matrix must be symmetric")
        object.__setattr__(self, "mat", (m + m.T) / 2.0)

    def evaluate(self, p: Bary | np.ndarray) -> float:
        v = p.v if isinstance(p, Bary) else np.asarray(p, dtype=float)
        return float(v @ self.mat @ v)

    def residual(self, p: Bary | np.ndarray) -> float:
        """|x M x| scaled by the matrix and coordinate norms."""
        v = p.v if isinstance(p, Bary) else np.asarray(p, dtype=float)
        return abs(float(v @ self.mat @ v)) / (nm.norm(self.mat.ravel()) * float(v @ v))

    def contains(self, p: Bary | np.ndarray, tol: float = 1e-10) -> bool:
        return self.residual(p) < tol

    def to_json(self) -> dict:
        m = self.mat
        return {"m11": m[0, 0], "m22": m[1, 1], "m33": m[2, 2],
                "m23": m[1, 2], "m31": m[2, 0], "m12": m[0, 1]}


def polar(p: Bary, conic: Conic) -> np.ndarray:
    """Coefficients of the polar line of p."""
    return conic.mat @ p.v


def pole(l, conic: Conic) -> Bary:
    """Pole of a line: coefficients times the adjoint matrix."""
    adj = nm.adjoint3(conic.mat)
    if nm.norm(adj.ravel()) < 1e-14 * nm.norm(conic.mat.ravel()) ** 2:
        raise RankDeficient("conic matrix has rank below 2")
    return Bary(np.asarray(l, dtype=float) @ adj, conic.frame)


def conic_perspector(conic: Conic) -> Bary:
    """Perspector of the polar triangle of the sidelines."""
    m = conic.mat
    off = max(abs(m[0, 1]), abs(m[1, 2]), abs(m[2, 0]))
    if off < 1e-14 * max(1.0, abs(m).max()):
        raise DiagonalMatrix("diagonal conic matrix has no perspector")
    d1 = m[0, 0] * m[1, 2] - m[2, 0] * m[0, 1]
    d2 = m[1, 1] * m[2, 0] - m[0, 1] * m[1, 2]
    d3 = m[2, 2] * m[0, 1] - m[1, 2] * m[2, 0]
    return Bary(np.array([d2 * d3, d3 * d1, d1 * d2]), conic.frame)


# ---------------------------------------------------------------------------
# classification and symmetry points


def classify(conic: Conic) -> ConicClass:
    m = conic.mat / np.abs(conic.mat).max()
    det = float(np.linalg.det(m))
    if abs(det) < DEGENERATE_DET_TOL:
        ev = np.linalg.eigvalsh(m)
        small = np.abs(ev) < 1e-8
        if small.sum() >= 2:
            return ConicClass.DOUBLE_LINE
        signs = np.sign(ev[~small])
        return ConicClass.TWO_LINES if signs.min() < 0 < signs.max() else ConicClass.POINT
    ev = np.linalg.eigvalsh(m)
    if ev.min() > 0 or ev.max() < 0:
        return ConicClass.EMPTY
    w = scipy.linalg.eigh(m, conic.frame.charmatrix, eigvals_only=True)
    gaps = np.diff(np.sort(w))
    scale = np.abs(w).max()
    return ConicClass.CIRCLE if gaps.min() < CIRCLE_GAP_TOL * scale else ConicClass.ELLIPSE


@dataclass(frozen=True)
class ConicSymmetry:
    """Symmetry structure: the eigen data of the polarity comparison."""

    kind: ConicClass
    points: tuple[Bary, ...]
    axis: np.ndarray | None          # polar line of the center, circles only
    eigenvalues: np.ndarray


def symmetry_points(conic: Conic) -> ConicSymmetry:
    """Symmetry points of a circle or proper ellipse.

    For an ellipse: three mutually star-orthogonal points. For a circle: the
    center plus the line of its polar (the double eigenplane).
    """
    kind = classify(conic)
    if kind not in (ConicClass.CIRCLE, ConicClass.ELLIPSE):
        raise DegenerateConic(f"symmetry points of a {kind.value}")
    f = conic.frame
    w, vecs = scipy.linalg.eigh(conic.mat, f.charmatrix)
    w_scaled = w * f.S * f.S  # eigenvalues of adjoint(T) @ M
    if kind is ConicClass.ELLIPSE:
        pts = tuple(Bary(vecs[:, i], f) for i in range(3))
        return ConicSymmetry(kind, pts, None, w_scaled)
    gaps = np.abs(np.subtract.outer(w, w))
    np.fill_diagonal(gaps, np.inf)
    simple = int(np.argmax(np.min(gaps, axis=1)))
    centerpt = Bary(vecs[:, simple], f)
    return ConicSymmetry(kind, (centerpt,), centerpt.v @ f.charmatrix, w_scaled)


# ---------------------------------------------------------------------------
# standard conics


def circumconic(p: Bary) -> Conic:
    """Conic through the vertices with the given perspector."""
    if np.min(np.abs(p.v)) <= 1e-13 * np.max(np.abs(p.v)):
        raise OnSideline("circumconic perspector must be off the sidelines")
    x, y, z = p.v
    return Conic(np.array([[0.0, z, y], [z, 0.0, x], [y, x, 0.0]]), p.frame)


def inconic(p: Bary) -> Conic:
    """Conic touching the sidelines at the traces of the perspector."""
    if np.min(np.abs(p.v)) <= 1e-13 * np.max(np.abs(p.v)):
        raise OnSideline("inconic perspector must be off the sidelines")
    x, y, z = p.v
    m = np.array([
        [1.0 / x**2, -1.0 / (x * y), -1.0 / (z * x)],
        [-1.0 / (x * y), 1.0 / y**2, -1.0 / (y * z)],
        [-1.0 / (z * x), -1.0 / (y * z), 1.0 / z**2],
    ])
    return Conic(m, p.frame)


def circumcircle(frame: TriangleFrame, index: int = 0) -> Conic:
    """Circumcircle of the selected triangle (perspector: the Lemoine point)."""
    return circumconic(center(CenterId.KTILDE, frame, index))


def incircle(frame: TriangleFrame, index: int = 0) -> Conic:
    """Incircle of the selected triangle (perspector: the Gergonne point)."""
    return inconic(center(CenterId.GE, frame, index))


def circle_conic(m: Bary, through: Bary) -> Conic:
    """Circle with center m through a point, as a barycentric conic."""
    f = m.frame
    mp = f.star(m.v, through.v)
    tm = f.charmatrix @ m.v
    mat = mp * mp * f.charmatrix - f.star(through.v, through.v) * np.outer(tm, tm)
    return Conic(mat, f)


def circumconic_center_to_perspector(m: Bary) -> Bary:
    """Perspector of the circumconic with the given center."""
    f = m.frame
    x, y, z = m.v
    return Bary(np.array([
        x * (2 * y * z * f.ca - x * x + y * y + z * z),
        y * (2 * z * x * f.cb + x * x - y * y + z * z),
        z * (2 * x * y * f.cc + x * x + y * y - z * z),
    ]), f)


# ---------------------------------------------------------------------------
# bicevian conics and circumcevian conjugates


def bicevian_conic(p: Bary, q: Bary) -> Conic:
    """Conic through the six traces of p and q."""
    if p.approx_equal(q):
        raise DegenerateInput("bicevian conic needs distinct points")
    for x in (p, q):
        if np.min(np.abs(x.v)) <= 1e-13 * np.max(np.abs(x.v)):
            raise OnSideline("bicevian points must be off the sidelines")
    pv, qv = p.v, q.v
    m = np.empty((3, 3))
    for i in range(3):
        m[i, i] = 2.0 / (pv[i] * qv[i])
    for i, j in ((0, 1), (1, 2), (2, 0)):
        m[i, j] = m[j, i] = -(1.0 / (pv[i] * qv[j]) + 1.0 / (pv[j] * qv[i]))
    return Conic(m, p.frame)


def bicevian_perspector(p: Bary, q: Bary) -> Bary:
    """Perspective center associated with the trace conic of p and q."""
    pv, qv = p.v, q.v
    return Bary(np.array([
        pv[0] * qv[0] * (pv[1] * qv[2] - pv[2] * qv[1]),
        pv[1] * qv[1] * (pv[2] * qv[0] - pv[0] * qv[2]),
        pv[2] * qv[2] * (pv[0] * qv[1] - pv[1] * qv[0]),
    ]), p.frame)


@dataclass(frozen=True)
class CevianCircle:
    """One of the four circles through a cevian trace triple."""

    index: int
    center: Bary
    conjugate: Bary
    radius: float


def circumcevian_conjugates(p: Bary) -> list[CevianCircle]:
    """The four circles through the traces of p with their conjugate points.

    For each circle: its center, the point whose traces are concyclic with
    the traces of p on it, and its radius.
    """
    f = p.frame
    if np.min(np.abs(p.v)) <= 1e-13 * np.max(np.abs(p.v)):
        raise OnSideline("circumcevian conjugates need a point off the sidelines")
    x, y, z = p.v
    t1 = math.sqrt(y * y + 2 * y * z * f.ca + z * z)
    t2 = math.sqrt(z * z + 2 * z * x * f.cb + x * x)
    t3 = math.sqrt(x * x + 2 * x * y * f.cc + y * y)
    u0, u1 = t1 + t2 + t3, -t1 + t2 + t3
    u2, u3 = t1 - t2 + t3, t1 + t2 - t3
    svecs = (
        np.array([u1 / x, u2 / y, u3 / z]),
        np.array([u0 / x, -u3 / y, -u2 / z]),
        np.array([-u3 / x, u0 / y, -u1 / z]),
        np.array([-u2 / x, -u1 / y, u0 / z]),
    )
    out = []
    s2 = f.S * f.S
    for i, sv in enumerate(svecs):
        denom = sv * sv - 4.0
        if np.min(np.abs(denom)) < 1e-12:
            raise DegenerateCevianCircle("a conjugate coordinate denominator vanishes")
        m = sv @ f.charadjoint
        qv = 1.0 / (denom * p.v)
        r = nm.clamped_acos(2.0 * s2 / f.star_norm(m))
        out.append(CevianCircle(i, Bary(m, f), Bary(qv, f), r))
    return out


# ---------------------------------------------------------------------------
# Lemoine conic and apollonian circles


def fit_conic(points: Sequence[Bary | np.ndarray], frame: TriangleFrame) -> Conic:
    """Least-squares conic through sample points (null vector of moments)."""
    rows = []
    for p in points:
        v = p.v if isinstance(p, Bary) else np.asarray(p, dtype=float)
        v = v / nm.norm(v)
        rows.append([v[0] ** 2, v[1] ** 2, v[2] ** 2,
                     2 * v[1] * v[2], 2 * v[2] * v[0], 2 * v[0] * v[1]])
    _, sv, vt = np.linalg.svd(np.asarray(rows))
    if len(points) >= 6 and sv[-2] < 1e-8 * sv[0]:
        raise DegenerateConic("conic through the samples is not unique")
    c = vt[-1]
    m = np.array([[c[0], c[5], c[4]], [c[5], c[1], c[3]], [c[4], c[3], c[2]]])
    return Conic(m, frame)


def _parallel(line: np.ndarray, p: np.ndarray, frame: TriangleFrame) -> np.ndarray:
    pole_pt = line @ frame.charadjoint
    perp_ln = nm.cross(p, pole_pt)
    pole2 = perp_ln @ frame.charadjoint
    return nm.cross(p, pole2)


@dataclass(frozen=True)
class LemoineFigure:
    conic: Conic
    axis_points: tuple[Bary, Bary, Bary]        # on the dual line of the Lemoine point
    conic_points: tuple[Bary, ...]              # the six defining intersections


def lemoine_points(frame: TriangleFrame) -> LemoineFigure:
    """Parallel-intersection configuration through the Lemoine point."""
    kt = center(CenterId.KTILDE, frame)
    sidelines = [nm.cross(np.eye(3)[j], np.eye(3)[k])
                 for j, k in ((1, 2), (2, 0), (0, 1))]
    pars = [_parallel(l, kt.v, frame) for l in sidelines]
    axis_points = tuple(Bary(nm.cross(pars[j], sidelines[j]), frame) for j in range(3))
    six = []
    for j in range(3):
        for k in range(3):
            if j != k:
                six.append(Bary(nm.cross(pars[k], sidelines[j]), frame))
    return LemoineFigure(fit_conic(six, frame), axis_points, tuple(six))


def lemoine_conic(frame: TriangleFrame) -> Conic:
    """Conic through the six parallel intersections off the touched sides."""
    if min(abs(frame.ca - frame.cb), abs(frame.cb - frame.cc),
           abs(frame.cc - frame.ca)) < 1e-10:
        raise ConstructionDegenerate("Lemoine conic needs a scalene frame")
    return lemoine_points(frame).conic


def apollonian_circles(frame: TriangleFrame) -> list[Conic]:
    """Circles over the Lemoine-axis sideline points through the vertices."""
    ca, cb, cc = frame.ca, frame.cb, frame.cc
    if min(abs(ca - cb), abs(cb - cc), abs(cc - ca)) < 1e-12:
        raise IsoscelesDegeneracy("apollonian circles need a scalene frame")
    la = Bary((0.0, 1.0 - cb, cc - 1.0), frame)
    lb = Bary((ca - 1.0, 0.0, 1.0 - cc), frame)
    lc = Bary((1.0 - ca, cb - 1.0, 0.0), frame)
    verts = [Bary(tuple(e), frame) for e in np.eye(3)]
    return [circle_conic(m, v) for m, v in zip((la, lb, lc), verts)]


def apollonian_common_points(frame: TriangleFrame) -> tuple[Bary, Bary]:
    """The two points shared by all three apollonian circles (on O-K)."""
    ca, cb, cc = frame.ca, frame.cb, frame.cc
    base = 1.0 + ca + cb + cc
    disc = abs(frame.S) / math.sqrt(3.0)
    out = []
    for sgn in (+1.0, -1.0):
        t = (base + sgn * disc) / 2.0
        out.append(Bary(np.array([(1 - ca) * (1 + ca - t),
                                  (1 - cb) * (1 + cb - t),
                                  (1 - cc) * (1 + cc - t)]), frame))
    return tuple(out)


# ---------------------------------------------------------------------------
# cubics

MONOMIALS = ((3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
             (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3))


@dataclass(frozen=True)
class Cubic:
    """Ten homogeneous coefficients over MONOMIALS (lexicographic order)."""

    coeffs: np.ndarray
    frame: TriangleFrame

    def __post_init__(self):
        object.__setattr__(self, "coeffs",
                           np.asarray(self.coeffs, dtype=float).reshape(10))

    def evaluate(self, p: Bary | np.ndarray) -> float:
        v = p.v if isinstance(p, Bary) else np.asarray(p, dtype=float)
        x, y, z = v
        total = 0.0
        for c, (i, j, k) in zip(self.coeffs, MONOMIALS):
            total += c * x**i * y**j * z**k
        return total

    def residual(self, p: Bary | np.ndarray) -> float:
        v = p.v if isinstance(p, Bary) else np.asarray(p, dtype=float)
        return abs(self.evaluate(v)) / (nm.norm(self.coeffs) * nm.norm(v) ** 3)

    def to_json(self) -> dict:
        return {"monomials": [list(m) for m in MONOMIALS],
                "coeffs": [float(c) for c in self.coeffs]}


def cubic_eval(cubic: Cubic, p) -> float:
    return cubic.evaluate(p)


def _coeff_dict(pairs) -> np.ndarray:
    d = dict(pairs)
    return np.array([d.get(m, 0.0) for m in MONOMIALS])


def simson_locus_cubic(frame: TriangleFrame) -> Cubic:
    """Locus of points whose three sideline pedals are collinear."""
    ca, cb, cc = frame.ca, frame.cb, frame.cc
    sa2, sb2, sc2 = frame.sa**2, frame.sb**2, frame.sc**2
    return Cubic(_coeff_dict({
        (1, 2, 0): ca * sc2, (1, 0, 2): ca * sb2,
        (2, 1, 0): cb * sc2, (0, 1, 2): cb * sa2,
        (2, 0, 1): cc * sb2, (0, 2, 1): cc * sa2,
        (1, 1, 1): 2.0 * (1.0 - ca * cb * cc),
    }), frame)


def simson_cubic(frame: TriangleFrame) -> Cubic:
    """Locus of tripoles of the pedal lines."""
    SA, SB, SC = frame.SA, frame.SB, frame.SC
    return Cubic(_coeff_dict({
        (1, 2, 0): SA, (1, 0, 2): SA,
        (2, 1, 0): SB, (0, 1, 2): SB,
        (2, 0, 1): SC, (0, 2, 1): SC,
        (1, 1, 1): -2.0 * (1.0 - frame.ca * frame.cb * frame.cc),
    }), frame)


def compose_cubic(cubic: Cubic, lin: np.ndarray,
                  frame: TriangleFrame) -> Cubic:
    """Coefficients of x -> F(lin @ x) for a linear coordinate change."""
    lin = np.asarray(lin, dtype=float)
    out = {m: 0.0 for m in MONOMIALS}
    for cval, (i, j, k) in zip(cubic.coeffs, MONOMIALS):
        if cval == 0.0:
            continue
        forms = [lin[0]] * i + [lin[1]] * j + [lin[2]] * k
        for idx in product(range(3), repeat=3):
            mono = [0, 0, 0]
            coef = cval
            for fi, comp in enumerate(idx):
                coef *= forms[fi][comp]
                mono[comp] += 1
            out[tuple(mono)] += coef
    return Cubic(_coeff_dict(out.items()), frame)


def euler_feuerbach_cubic(frame: TriangleFrame) -> Cubic:
    """Locus of points whose pedals on the medial sidelines are collinear.

    Instantiates the pedal-collinearity cubic on the medial triangle and
    pulls it back through the barycentric change of frame.
    """
    from .frame import build_frame, from_bary  # local to avoid cycle at import

    g_traces = traces(Bary((1.0, 1.0, 1.0), frame))
    medial = build_frame(*(from_bary(t) for t in g_traces),
                         staudtian_floor=1e-300)
    inner = simson_locus_cubic(medial)
    # barycentric coords w.r.t. the medial frame of a point with frame coords x
    lin = np.linalg.inv(medial._basis) @ frame._basis
    return compose_cubic(inner, lin, frame)


def fit_cubic(points: Iterable[Bary | np.ndarray], frame: TriangleFrame) -> Cubic:
    """Cubic through sample points (null vector of the monomial moments)."""
    rows = []
    for p in points:
        v = p.v if isinstance(p, Bary) else np.asarray(p, dtype=float)
        v = v / nm.norm(v)
        x, y, z = v
        rows.append([x**i * y**j * z**k for (i, j, k) in MONOMIALS])
    _, _, vt = np.linalg.svd(np.asarray(rows))
    return Cubic(vt[-1], frame)


def conic_point(conic: Conic) -> Bary:
    """One real point on a circle or proper ellipse."""
    f = conic.frame
    w, vecs = scipy.linalg.eigh(conic.mat, f.charmatrix)
    i, j = int(np.argmin(w)), int(np.argmax(w))
    if w[i] >= 0 or w[j] <= 0:
        raise DegenerateConic("conic has no real points")
    x = math.sqrt(w[j]) * vecs[:, i] + math.sqrt(-w[i]) * vecs[:, j]
    return Bary(x, f)


def circumconic_points(p: Bary, count: int, seed: int = 0) -> list[Bary]:
    """Exact rational samples on the circumconic with perspector p.

    The pencil of lines through the first vertex meets the conic in
    [-p1 t u : t (p2 u + p3 t) : u (p2 u + p3 t)] for directions (t, u).
    """
    rng = np.random.default_rng(seed)
    p1, p2, p3 = p.v
    out = []
    while len(out) < count:
        t, u = rng.normal(size=2)
        w = p2 * u + p3 * t
        x = np.array([-p1 * t * u, t * w, u * w])
        if nm.norm(x) > 1e-8 * max(abs(t), abs(u)) ** 2:
            out.append(Bary(x, p.frame))
    return out


def conic_points(conic: Conic, count: int, seed: int = 0,
                 base: Bary | None = None) -> list[Bary]:
    """Sample points on a conic by secants through a known point."""
    f = conic.frame
    base = conic_point(conic).v if base is None else base.v
    rng = np.random.default_rng(seed)
    out = []
    m = conic.mat
    while len(out) < count:
        w = rng.normal(size=3)
        a2 = float(w @ m @ w)
        a1 = 2.0 * float(base @ m @ w)
        if abs(a2) < 1e-14 or abs(a1) < 1e-14:
            continue
        t = -a1 / a2
        x = base + t * w
        if nm.norm(x) < 1e-10:
            continue
        out.append(Bary(x, f))
    return out
