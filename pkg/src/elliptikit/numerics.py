"""Low-level numeric kernels: compensated products, canonical representatives.

Homogeneous triples are numpy float64 arrays of shape (3,). The cross products
and determinants here use error-free transformations (Veltkamp splitting) so
incidence residuals stay near machine epsilon even for badly conditioned
triangles.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

# relative threshold below which a coordinate counts as zero when picking the
# leading component of a canonical representative
LEX_EPS = 1e-12

# scale-invariant projective equality tolerance: |u x v| < EQ_TOL |u||v|
EQ_TOL = 1e-10

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_prod(a: float, b: float) -> tuple[float, float]:
    """Product and exact rounding error of a*b (Dekker/Veltkamp)."""
    p = a * b
    ca = _SPLITTER * a
    ah = ca - (ca - a)
    al = a - ah
    cb = _SPLITTER * b
    bh = cb - (cb - b)
    bl = b - bh
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def _diff_prod(a: float, b: float, c: float, d: float) -> float:
    """a*b - c*d with one compensated step (Kahan determinant)."""
    w, e = _two_prod(c, d)
    f = a * b - w
    return f - e


def cross(u, v) -> np.ndarray:
    """Compensated cross product of two triples."""
    return np.array([
        _diff_prod(u[1], v[2], u[2], v[1]),
        _diff_prod(u[2], v[0], u[0], v[2]),
        _diff_prod(u[0], v[1], u[1], v[0]),
    ])


def det3(u, v, w) -> float:
    """Compensated 3x3 determinant with rows u, v, w."""
    c = cross(v, w)
    return math.fsum((u[0] * c[0], u[1] * c[1], u[2] * c[2]))


def norm(v) -> float:
    return float(np.linalg.norm(v))


def leading_index(v) -> int:
    """Index of the first coordinate that is not negligibly small."""
    v = np.asarray(v, dtype=float)
    scale = np.max(np.abs(v))
    if scale == 0.0:
        raise ValueError("zero homogeneous triple")
    for i, x in enumerate(v):
        if abs(x) > LEX_EPS * scale:
            return i
    return int(np.argmax(np.abs(v)))


def canonical(v) -> np.ndarray:
    """Representative scaled so the leading coordinate equals one.

    Matches the visualizing-vector rule: strictly positive in the
    lexicographic order, leading entry normalized to 1. Coordinates below the
    relative zero threshold are snapped to exact zeros so serialized goldens
    are stable.
    """
    v = np.asarray(v, dtype=float)
    k = leading_index(v)
    out = v / v[k]
    out[np.abs(out) <= LEX_EPS] = 0.0
    return out


def unitize(v) -> np.ndarray:
    """Unit representative: canonical direction scaled to euclidean norm 1."""
    v = np.asarray(v, dtype=float)
    k = leading_index(v)
    u = v / np.linalg.norm(v)
    return u if v[k] > 0 else -u


def proportional(u, v, tol: float = EQ_TOL) -> bool:
    """Projective equality of two triples, scale-invariant tolerance."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return norm(np.cross(u, v)) < tol * norm(u) * norm(v)


def proj_distance(u, v) -> float:
    """sin of the angle between the coordinate directions (0 iff equal)."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return norm(np.cross(u, v)) / (norm(u) * norm(v))


def incidence_residual(line, point) -> float:
    """Normalized incidence residual |l . p| / (|l| |p|)."""
    line = np.asarray(line, dtype=float)
    point = np.asarray(point, dtype=float)
    return abs(float(line @ point)) / (norm(line) * norm(point))


def clamped_acos(x: float, guard: float = 1e-9) -> float:
    """arccos with clamping; arguments beyond 1+guard raise DomainError."""
    if abs(x) > 1.0 + guard:
        raise DomainError(f"arccos argument {x!r} outside [-1,1] beyond guard")
    return math.acos(min(1.0, max(-1.0, x)))


def adjoint3(m) -> np.ndarray:
    """Adjoint (transposed cofactor matrix) of a 3x3 matrix."""
    m = np.asarray(m, dtype=float)
    out = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != j]
            s = [k for k in range(3) if k != i]
            out[i, j] = ((-1) ** (i + j)) * (m[r[0], s[0]] * m[r[1], s[1]]
                                             - m[r[0], s[1]] * m[r[1], s[0]])
    return out
