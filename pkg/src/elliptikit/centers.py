"""Catalog of named triangle centers.

Every center is defined by one side-form function f(a, b, c); the coordinates
are [f(a,b,c) : f(b,c,a) : f(c,a,b)]. Companion-triangle variants come from
the side substitutions plus one coordinate sign flip; angle-form rows and
euclidean-limit references ride along as metadata.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from . import numerics as nm
from .errors import IsoscelesDegeneracy, NoLimitTag, UndefinedCenter
from .frame import Bary, TriangleFrame, frame_from_sides

_COS = math.cos
_SIN = math.sin


class CenterId(str, Enum):
    G = "G"
    GPLUS = "G+"
    GSHARP = "Gsharp"
    I = "I"
    O = "O"
    OPLUS = "O+"
    H = "H"
    HMINUS = "Hminus"
    HSHARP = "Hsharp"
    NSHARP = "Nsharp"
    K = "K"
    KTILDE = "Ktilde"
    GE = "Ge"
    NA = "Na"
    FE = "Fe"
    L = "L"
    T = "T"
    HSTAR = "Hstar"
    ORTHIC_AXIS_MEET = "OrthicAxisMeet"
    HTAUDELTA = "HtauDelta"
    OK_TRIPOLE = "OKtripole"
    KTILDE_TAUDELTA = "KtildeTauDelta"


class VertexCenterId(str, Enum):
    TRIPLEX = "Triplex"
    TRIPLEX_CIRCUM = "TriplexCircum"
    EX_PEDAL_TOUCH = "ExPedalTouch"


_ALIASES = {
    "gplus": CenterId.GPLUS, "g+": CenterId.GPLUS,
    "oplus": CenterId.OPLUS, "o+": CenterId.OPLUS,
    "h-": CenterId.HMINUS, "hminus": CenterId.HMINUS,
    "h*": CenterId.HSTAR, "hstar": CenterId.HSTAR,
    "gsharp": CenterId.GSHARP, "hsharp": CenterId.HSHARP,
    "nsharp": CenterId.NSHARP, "ktilde": CenterId.KTILDE,
    "orthicaxismeet": CenterId.ORTHIC_AXIS_MEET,
    "htaudelta": CenterId.HTAUDELTA, "oktripole": CenterId.OK_TRIPOLE,
    "ktildetaudelta": CenterId.KTILDE_TAUDELTA,
}


def parse_center(name: str) -> CenterId:
    key = name.strip()
    try:
        return CenterId(key)
    except ValueError:
        pass
    low = key.lower()
    if low in _ALIASES:
        return _ALIASES[low]
    for cid in CenterId:
        if cid.value.lower() == low:
            return cid
    raise KeyError(f"unknown center name {name!r}")


# ---------------------------------------------------------------------------
# side forms


def _trig(a, b, c):
    ca, cb, cc = _COS(a), _COS(b), _COS(c)
    return ca, cb, cc, _SIN(a), _SIN(b), _SIN(c)


def _SA(a, b, c):
    ca, cb, cc = _COS(a), _COS(b), _COS(c)
    return ca - cb * cc


def _det_char(a, b, c):
    ca, cb, cc = _COS(a), _COS(b), _COS(c)
    return 1.0 - ca * ca - cb * cb - cc * cc + 2.0 * ca * cb * cc


def _f_g(a, b, c):
    return 1.0


def _f_gplus(a, b, c):
    return _COS(a)


def _f_gsharp(a, b, c):
    ch_a, ch_b, ch_c = _COS(a / 2), _COS(b / 2), _COS(c / 2)
    return ch_a / (ch_a + ch_b * ch_c)


def _f_i(a, b, c):
    return _SIN(a)


def _versines(a, b, c):
    # 1 - cos x, computed cancellation-free for small sides
    return (2.0 * _SIN(a / 2) ** 2, 2.0 * _SIN(b / 2) ** 2, 2.0 * _SIN(c / 2) ** 2)


def _f_o(a, b, c):
    u, v, w = _versines(a, b, c)
    return u * (v + w - u)


def _f_oplus(a, b, c):
    return _SA(a, b, c) * _SIN(a) ** 2


def _f_h(a, b, c):
    return _SA(b, c, a) * _SA(c, a, b)


def _f_hminus(a, b, c):
    u, v, w = _versines(a, b, c)
    return (2.0 - u) / (v + w - u)


def _f_hsharp(a, b, c):
    ch_a, ch_b, ch_c = _COS(a / 2), _COS(b / 2), _COS(c / 2)
    return ch_a / (ch_a - ch_b * ch_c)


def _f_nsharp(a, b, c):
    # stable regrouping of c_{a/2}^2 (c_{a/2}^2 (2 c_{b/2}^2 c_{c/2}^2
    # - c_{b/2}^2 - c_{c/2}^2) + c_{b/2}^2 s_{b/2}^2 + c_{c/2}^2 s_{c/2}^2)
    u, v, w = _versines(a, b, c)
    return (2.0 - u) * (v * (2 * u + 2 * w - 2 * v - u * w)
                        + w * (2 * u + 2 * v - 2 * w - u * v))


def _f_k(a, b, c):
    return _SIN(a) ** 2


def _f_ktilde(a, b, c):
    return 1.0 - _COS(a)


def _f_ge(a, b, c):
    s = (a + b + c) / 2
    return 1.0 / _SIN(s - a)


def _f_na(a, b, c):
    s = (a + b + c) / 2
    return _SIN(s - a)


def _f_fe(a, b, c):
    # det form + S_B S_C, with the semiperimeter product identities keeping
    # the fourth-order terms cancellation-free
    s = (a + b + c) / 2
    ws, wa, wb, wc = _SIN(s), _SIN(s - a), _SIN(s - b), _SIN(s - c)
    det = 4.0 * ws * wa * wb * wc
    sb_ = ws * wb - wc * wa
    sc_ = ws * wc - wa * wb
    sa, sbn, scn = _SIN(a), _SIN(b), _SIN(c)
    return det + sb_ * sc_ - sa * sa * sbn * scn


def _f_l(a, b, c):
    # c_a(-c_a^2+c_b^2+c_c^2+1) - 2 c_b c_c, expanded over versines
    u, v, w = _versines(a, b, c)
    return (-3.0 * u * u + v * v + w * w + 2.0 * u * (v + w) - 2.0 * v * w
            + u ** 3 - u * (v * v + w * w))


def _f_t(a, b, c):
    p, q, r = _SIN(a / 2) ** 2, _SIN(b / 2) ** 2, _SIN(c / 2) ** 2
    return -3.0 * p * p + q * q + r * r + 2.0 * p * (q + r) - 2.0 * q * r


def _f_hstar(a, b, c):
    sa = _SIN(a)
    return 2.0 * _SA(b, c, a) * _SA(c, a, b) - _SA(a, b, c) * sa * sa


def _f_oam(a, b, c):
    ca, cb, cc = _COS(a), _COS(b), _COS(c)
    return _SA(b, c, a) * _SA(c, a, b) * (-2.0 * ca * ca + cb * cb + cc * cc)


def _f_oktripole(a, b, c):
    u, v, w = _versines(a, b, c)
    return u / (w - v)


def _f_ktilde_taudelta(a, b, c):
    ca, cb, cc, sa, sb, sc = _trig(a, b, c)
    u1, u2, u3 = 1.0 - ca, 1.0 - cb, 1.0 - cc
    return u1 * (u2 * _SA(b, c, a) + u3 * _SA(c, a, b)) - u2 * u3 * sa * sa


# ---------------------------------------------------------------------------
# angle forms (functions of the angles and the half-excess)


def _xi(x, eps):
    return _SIN(x) * _SIN(x - eps)


def _a_l(x, y, z, eps):
    xa, xb, xc = _xi(x, eps), _xi(y, eps), _xi(z, eps)
    phi = 2.0 * _SIN(eps) * _SIN(x - eps) / (_SIN(y) * _SIN(z))
    return (3.0 * xa * xa - 2.0 * xa * (xb + xc) - (xb - xc) ** 2
            - phi * (xa * xa - xb * xb - xc * xc))


def _a_t(x, y, z, eps):
    xa, xb, xc = _xi(x, eps), _xi(y, eps), _xi(z, eps)
    return -3.0 * xa * xa + 2.0 * xa * (xb + xc) + (xb - xc) ** 2


def _a_ktilde_taudelta(x, y, z, eps):
    # as printed; fails the side-form cross-check and is flagged inconsistent
    xa, xb, xc = _xi(x, eps), _xi(y, eps), _xi(z, eps)
    return (xa * (xb + xc) - xb * xb - xc * xc
            - 2.0 * _SIN(eps) * _SIN(x - eps) * _SIN(y - eps) * _SIN(z - eps))


@dataclass(frozen=True)
class CenterSpec:
    id: CenterId
    side_form: Callable[[float, float, float], float]
    angle_form: Optional[Callable[[float, float, float, float], float]]
    angle_form_consistent: bool
    kimberling: Optional[str]
    guard: Optional[Callable[[float, float, float], tuple[float, str]]]


def _guard_hminus(a, b, c):
    ca, cb, cc = _COS(a), _COS(b), _COS(c)
    worst = min(abs(1 + ca - cb - cc), abs(1 - ca + cb - cc), abs(1 - ca - cb + cc))
    return worst, "1 + cos a - cos b - cos c (cyclic)"


def _guard_hsharp(a, b, c):
    ch = [_COS(a / 2), _COS(b / 2), _COS(c / 2)]
    worst = min(abs(ch[0] - ch[1] * ch[2]), abs(ch[1] - ch[2] * ch[0]),
                abs(ch[2] - ch[0] * ch[1]))
    return worst, "cos(a/2) - cos(b/2) cos(c/2) (cyclic)"


def _guard_h(a, b, c):
    ss = sorted((abs(_SA(a, b, c)), abs(_SA(b, c, a)), abs(_SA(c, a, b))))
    return ss[1], "two of S_A, S_B, S_C (right angles at two vertices)"


def _guard_scalene(a, b, c):
    ca, cb, cc = _COS(a), _COS(b), _COS(c)
    worst = min(abs(ca - cb), abs(cb - cc), abs(cc - ca))
    return worst, "cos a - cos b (isosceles frame)"


_CATALOG: dict[CenterId, CenterSpec] = {}


def _register(cid, side_form, angle_form, kimberling, guard=None, consistent=True):
    _CATALOG[cid] = CenterSpec(cid, side_form, angle_form, consistent, kimberling, guard)


_register(CenterId.G, _f_g, lambda x, y, z, e: 1.0, "X2")
_register(CenterId.GPLUS, _f_gplus,
          lambda x, y, z, e: 1.0 - 2.0 * _SIN(e) * _SIN(x - e) / (_SIN(y) * _SIN(z)),
          "X2")
_register(CenterId.GSHARP, _f_gsharp,
          lambda x, y, z, e: _SIN(x) / (_SIN(x) + _SIN(x - e)), "X2")
_register(CenterId.I, _f_i, lambda x, y, z, e: _SIN(x), "X1")
_register(CenterId.O, _f_o, lambda x, y, z, e: _SIN(x) * _COS(x - e), "X3")
_register(CenterId.OPLUS, _f_oplus, lambda x, y, z, e: _SIN(2.0 * x), "X3")
_register(CenterId.H, _f_h, lambda x, y, z, e: math.tan(x), "X4", guard=_guard_h)
_register(CenterId.HMINUS, _f_hminus,
          lambda x, y, z, e: _SIN(x) / _COS(x - e), "X4", guard=_guard_hminus)
_register(CenterId.HSHARP, _f_hsharp,
          lambda x, y, z, e: _SIN(x) / (_SIN(x) - _SIN(x - e)), "X4",
          guard=_guard_hsharp)
_register(CenterId.NSHARP, _f_nsharp,
          lambda x, y, z, e: _SIN(x) * _COS(y - z), "X5")
_register(CenterId.K, _f_k, lambda x, y, z, e: _SIN(x) ** 2, "X6")
_register(CenterId.KTILDE, _f_ktilde, lambda x, y, z, e: _xi(x, e), "X6")
_register(CenterId.GE, _f_ge, lambda x, y, z, e: math.tan(x / 2), "X7")
_register(CenterId.NA, _f_na, lambda x, y, z, e: 1.0 / math.tan(x / 2), "X8")
_register(CenterId.FE, _f_fe,
          lambda x, y, z, e: _SIN(x) * (1.0 - _COS(y - z)), "X11")
_register(CenterId.L, _f_l, _a_l, "X20")
_register(CenterId.T, _f_t, _a_t, "X20")
_register(CenterId.HSTAR, _f_hstar,
          lambda x, y, z, e: _SIN(x) * (_COS(x) - 2.0 * _COS(y) * _COS(z)), "X30")
_register(CenterId.ORTHIC_AXIS_MEET, _f_oam, None, None)
_register(CenterId.HTAUDELTA, _f_hstar,
          lambda x, y, z, e: _SIN(x) * (_COS(x) - 2.0 * _COS(y) * _COS(z)), "X30")
_register(CenterId.OK_TRIPOLE, _f_oktripole,
          lambda x, y, z, e: _xi(x, e) / (_xi(y, e) - _xi(z, e)), "X110",
          guard=_guard_scalene)
_register(CenterId.KTILDE_TAUDELTA, _f_ktilde_taudelta, _a_ktilde_taudelta,
          "brocard-infinity", consistent=False)


def catalog() -> dict[CenterId, CenterSpec]:
    return dict(_CATALOG)


def center_side_vector(cid: CenterId, sides: tuple[float, float, float]) -> np.ndarray:
    a, b, c = sides
    spec = _CATALOG[cid]
    if spec.guard is not None:
        worst, expr = spec.guard(a, b, c)
        if worst < 1e-12:
            raise UndefinedCenter(cid.value, expr)
    f = spec.side_form
    v = np.array([f(a, b, c), f(b, c, a), f(c, a, b)])
    if not np.all(np.isfinite(v)) or nm.norm(v) == 0.0:
        raise UndefinedCenter(cid.value, "defining expression")
    return v


def center(cid: CenterId | str, frame: TriangleFrame, index: int = 0) -> Bary:
    """Barycentric coordinates of a catalog center for triangle ``index``."""
    cid = parse_center(cid) if isinstance(cid, str) else cid
    v = center_side_vector(cid, frame.sides(index))
    if index:
        v = v.copy()
        v[index - 1] *= -1.0
    return Bary(v, frame)


def center_angle_vector(cid: CenterId, frame: TriangleFrame) -> np.ndarray | None:
    """Angle-form coordinates from the catalog row, if one is recorded."""
    spec = _CATALOG[cid]
    if spec.angle_form is None:
        return None
    al, be, ga = frame.alpha, frame.beta, frame.gamma
    eps = frame.excess / 2.0
    g = spec.angle_form
    return np.array([g(al, be, ga, eps), g(be, ga, al, eps), g(ga, al, be, eps)])


# ---------------------------------------------------------------------------
# vertex-indexed centers


def _rotate(g, order, a, b, c):
    g1, g2, g3 = g(a, b, c)
    if order == 0:
        return np.array([g1, g2, g3])
    if order == 1:
        return np.array([g3, g1, g2])
    return np.array([g2, g3, g1])


def vertex_center(vid: VertexCenterId | str, vertex: int | str,
                  frame: TriangleFrame, index: int = 0) -> Bary:
    """Vertex-indexed catalog points (triplex family, excircle touch points)."""
    if isinstance(vid, str):
        vid = VertexCenterId(vid)
    k = {"A": 0, "B": 1, "C": 2}.get(vertex, vertex)
    if k not in (0, 1, 2):
        raise ValueError("vertex must be A, B, C or 0, 1, 2")
    a, b, c = frame.sides(index)
    args = [(a, b, c), (b, c, a), (c, a, b)][k]

    if vid is VertexCenterId.TRIPLEX:
        def g(x, y, z):
            cx, cy, cz = _COS(x), _COS(y), _COS(z)
            if min(abs(cx - cz), abs(cx - cy)) < 1e-12:
                raise IsoscelesDegeneracy("triplex point needs cos a distinct from cos b, cos c")
            return 1.0, (1.0 - cy) / (cx - cz), (1.0 - cz) / (cx - cy)
    elif vid is VertexCenterId.TRIPLEX_CIRCUM:
        def g(x, y, z):
            cx, cy, cz = _COS(x), _COS(y), _COS(z)
            return 1.0 - cx, cy - cz, cz - cy
    else:  # EX_PEDAL_TOUCH: traces of the isotomic conjugate of Ge
        def g(x, y, z):
            s = (x + y + z) / 2
            return 0.0, _SIN(s - y), _SIN(s - z)

    v = _rotate(g, k, *args)
    if index:
        v = v.copy()
        v[index - 1] *= -1.0
    return Bary(v, frame)


# ---------------------------------------------------------------------------
# radii


def circumradius(frame: TriangleFrame, index: int = 0) -> float:
    """Circumradius of the selected triangle, closed form in the side cosines."""
    a, b, c = frame.sides(index)
    ca, cb, cc = _COS(a), _COS(b), _COS(c)
    num = ca * ca + cb * cb + cc * cc - 2.0 * ca * cb * cc - 1.0
    den = (ca * ca + cb * cb + cc * cc - 2.0 * cb * cc - 2.0 * cc * ca
           - 2.0 * ca * cb + 2.0 * ca + 2.0 * cb + 2.0 * cc - 3.0)
    return nm.clamped_acos(math.sqrt(abs(num / den)))


def inradius(frame: TriangleFrame, index: int = 0) -> float:
    """Inradius of the selected triangle via the star norm of the incenter."""
    a, b, c = frame.sides(index)
    ca, cb, cc, sa, sb, sc = _trig(a, b, c)
    kappa = math.sqrt(sa * sa + sb * sb + sc * sc
                      + 2.0 * (ca * sb * sc + cb * sc * sa + cc * sa * sb))
    s = (a + b + c) / 2
    return nm.clamped_acos(2.0 * _SIN(s) / kappa)


def dual_triangle_circumradius(frame: TriangleFrame) -> float:
    """Circumradius of the dual triple (its circumcenter is the incenter)."""
    sa, sb, sc = frame.sa, frame.sb, frame.sc
    ca, cb, cc = frame.ca, frame.cb, frame.cc
    kappa = math.sqrt(sa * sa + sb * sb + sc * sc
                      + 2.0 * (ca * sb * sc + cb * sc * sa + cc * sa * sb))
    return nm.clamped_acos(abs(frame.S) / kappa)


# ---------------------------------------------------------------------------
# euclidean limits


def _kimberling_vector(tag: str, a: float, b: float, c: float) -> np.ndarray:
    a2, b2, c2 = a * a, b * b, c * c
    if tag == "X1":
        return np.array([a, b, c])
    if tag == "X2":
        return np.array([1.0, 1.0, 1.0])
    if tag == "X3":
        return np.array([a2 * (b2 + c2 - a2), b2 * (c2 + a2 - b2), c2 * (a2 + b2 - c2)])
    if tag == "X4":
        return np.array([(a2 + b2 - c2) * (c2 + a2 - b2),
                         (b2 + c2 - a2) * (a2 + b2 - c2),
                         (c2 + a2 - b2) * (b2 + c2 - a2)])
    if tag == "X5":
        return np.array([a2 * (b2 + c2) - (b2 - c2) ** 2,
                         b2 * (c2 + a2) - (c2 - a2) ** 2,
                         c2 * (a2 + b2) - (a2 - b2) ** 2])
    if tag == "X6":
        return np.array([a2, b2, c2])
    if tag == "X7":
        return np.array([(a - b + c) * (a + b - c),
                         (b - c + a) * (b + c - a),
                         (c - a + b) * (c + a - b)])
    if tag == "X8":
        return np.array([b + c - a, c + a - b, a + b - c])
    if tag == "X11":
        return np.array([(b - c) ** 2 * (b + c - a),
                         (c - a) ** 2 * (c + a - b),
                         (a - b) ** 2 * (a + b - c)])
    if tag == "X20":
        return np.array([3 * a2 * a2 - 2 * a2 * (b2 + c2) - (b2 - c2) ** 2,
                         3 * b2 * b2 - 2 * b2 * (c2 + a2) - (c2 - a2) ** 2,
                         3 * c2 * c2 - 2 * c2 * (a2 + b2) - (a2 - b2) ** 2])
    if tag == "X30":
        return np.array([2 * a2 * a2 - a2 * (b2 + c2) - (b2 - c2) ** 2,
                         2 * b2 * b2 - b2 * (c2 + a2) - (c2 - a2) ** 2,
                         2 * c2 * c2 - c2 * (a2 + b2) - (a2 - b2) ** 2])
    if tag == "X110":
        return np.array([a2 / (b2 - c2), b2 / (c2 - a2), c2 / (a2 - b2)])
    if tag == "brocard-infinity":
        x3 = _kimberling_vector("X3", a, b, c)
        x6 = _kimberling_vector("X6", a, b, c)
        return x3 / x3.sum() - x6 / x6.sum()
    raise KeyError(f"unknown reference tag {tag!r}")


def kimberling_tag(cid: CenterId) -> Optional[str]:
    return _CATALOG[cid].kimberling


def euclidean_limit_check(cid: CenterId | str, base_frame: TriangleFrame,
                          lam: float) -> float:
    """Discrepancy between the shrunk elliptic center and its flat reference.

    Shrinks the base sides by ``lam``, evaluates the catalog center, and
    compares with the Kimberling reference at the unshrunk side proportions.
    Coordinates are sum-normalized; the two infinity-point references
    (coordinate sum zero) are compared with the projective sine distance.
    """
    cid = parse_center(cid) if isinstance(cid, str) else cid
    tag = _CATALOG[cid].kimberling
    if tag is None:
        raise NoLimitTag(f"{cid.value} has no euclidean-limit reference")
    if not 0.0 < lam <= 0.2:
        raise ValueError("shrink factor must lie in (0, 0.2]")
    a, b, c = base_frame.sides(0)
    small = frame_from_sides(lam * a, lam * b, lam * c, staudtian_floor=1e-300)
    v = center(cid, small).v
    ref = _kimberling_vector(tag, a, b, c)
    if abs(ref.sum()) > 1e-9 * nm.norm(ref):
        return float(np.max(np.abs(v / v.sum() - ref / ref.sum())))
    return nm.proj_distance(v, ref)


def limit_convergence_order(cid: CenterId | str, base_frame: TriangleFrame,
                            lams=(1e-2, 1e-3)) -> tuple[list[float], Optional[float]]:
    """Per-lambda discrepancies and the fitted convergence order.

    Returns (discrepancies, order); the order is None when the center sits
    exactly at its limit (all discrepancies below 1e-13).
    """
    ds = [euclidean_limit_check(cid, base_frame, lam) for lam in lams]
    if max(ds) < 1e-13:
        return ds, None
    order = math.log(ds[0] / ds[-1]) / math.log(lams[0] / lams[-1])
    return ds, order
