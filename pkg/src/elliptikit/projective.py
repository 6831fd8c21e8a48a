"""Homogeneous-coordinate arithmetic on the real projective plane.

Points and lines are real triples modulo scale. Join and meet are cross
products; the polarity of the elliptic absolute conic (curvature sign +1,
scale 1) is coordinate-identical, so duality just reinterprets the triple.
"""

from __future__ import annotations

import numpy as np

from . import numerics as nm
from .errors import DegenerateInput, DegenerateRange, NotCollinear

COLLINEAR_TOL = 1e-10


class _HomogeneousTriple:
    """Shared behaviour of points and lines: a triple modulo nonzero scale."""

    __slots__ = ("v",)

    def __init__(self, coords):
        v = np.asarray(coords, dtype=float).reshape(3)
        if not np.any(v):
            raise ValueError("homogeneous triple must be nonzero")
        self.v = v

    def canonical(self) -> np.ndarray:
        """Representative with leading coordinate 1 (lexicographic rule)."""
        return nm.canonical(self.v)

    def unit(self) -> np.ndarray:
        """Canonical representative scaled to euclidean norm 1."""
        return nm.unitize(self.v)

    def approx_equal(self, other, tol: float = nm.EQ_TOL) -> bool:
        return nm.proportional(self.v, other.v, tol)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.approx_equal(other)

    def __hash__(self):
        raise TypeError(f"{type(self).__name__} is unhashable (tolerance equality)")

    def to_json(self) -> list[float]:
        return [float(x) for x in self.canonical()]

    def __repr__(self):
        a, b, c = self.canonical()
        return f"{type(self).__name__}({a:.12g}, {b:.12g}, {c:.12g})"


class ProjPoint(_HomogeneousTriple):
    """Point (p0 : p1 : p2) of the projective plane."""


class ProjLine(_HomogeneousTriple):
    """Line with homogeneous coefficients (l0 : l1 : l2)."""

    def contains(self, point: ProjPoint, tol: float = nm.EQ_TOL) -> bool:
        return nm.incidence_residual(self.v, point.v) < tol


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """Line through two distinct points."""
    if p.approx_equal(q):
        raise DegenerateInput("join of coinciding points")
    return ProjLine(nm.cross(p.v, q.v))


def meet(k: ProjLine, l: ProjLine) -> ProjPoint:
    """Common point of two distinct lines."""
    if k.approx_equal(l):
        raise DegenerateInput("meet of coinciding lines")
    return ProjPoint(nm.cross(k.v, l.v))


def dual(x):
    """Polarity of the absolute conic: same triple, other element type."""
    if isinstance(x, ProjPoint):
        return ProjLine(x.v.copy())
    if isinstance(x, ProjLine):
        return ProjPoint(x.v.copy())
    raise TypeError(f"cannot dualize {type(x).__name__}")


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint,
              tol: float = COLLINEAR_TOL) -> bool:
    d = nm.det3(p.v, q.v, r.v)
    return abs(d) < tol * nm.norm(p.v) * nm.norm(q.v) * nm.norm(r.v)


def concurrent(k: ProjLine, l: ProjLine, m: ProjLine,
               tol: float = COLLINEAR_TOL) -> bool:
    d = nm.det3(k.v, l.v, m.v)
    return abs(d) < tol * nm.norm(k.v) * nm.norm(l.v) * nm.norm(m.v)


def _span_coefficients(p: np.ndarray, q: np.ndarray, r: np.ndarray):
    """(lam, mu) with r = lam p + mu q, for unit-norm collinear triples."""
    n = np.cross(p, q)
    nn = float(n @ n)
    lam = float(np.cross(r, q) @ n) / nn
    mu = float(np.cross(p, r) @ n) / nn
    return lam, mu


def cross_ratio(p: ProjPoint, q: ProjPoint, r: ProjPoint, s: ProjPoint) -> float:
    """Cross ratio (p,q; r,s) of four collinear points; -1 is harmonic.

    Decomposes r = lam1 p + mu1 q and s = lam2 p + mu2 q on unit
    representatives and returns (mu1/lam1)/(mu2/lam2). The value does not
    depend on the representative signs.
    """
    if p.approx_equal(q):
        raise DegenerateInput("cross ratio needs distinct base points")
    pu, qu, ru, su = (x.v / nm.norm(x.v) for x in (p, q, r, s))
    for x, xu in (("r", ru), ("s", su)):
        if abs(nm.det3(pu, qu, xu)) > COLLINEAR_TOL:
            raise NotCollinear(f"point {x} is off the base line")
    lam1, mu1 = _span_coefficients(pu, qu, ru)
    lam2, mu2 = _span_coefficients(pu, qu, su)
    denom = lam1 * mu2
    if abs(denom) < 1e-300 or abs(lam1) < 1e-14 or abs(mu2) < 1e-14:
        raise DegenerateRange("cross-ratio denominator vanishes")
    return (mu1 * lam2) / denom
