"""Independent brute-force spherical oracles.

Everything here works directly on unit vectors of the sphere with generic
numerics (rotations, root finding, minimization), never through the package's
own coordinate formulas, so the tests compare two genuinely different routes.
"""

import numpy as np
from scipy.optimize import brentq, minimize_scalar


def unit(v):
    v = np.asarray(v, float)
    return v / np.linalg.norm(v)


def geodesic_distance(u, v):
    return float(np.arccos(np.clip(abs(np.dot(unit(u), unit(v))), 0.0, 1.0)))


def rodrigues(v, axis, angle):
    """Rotate v about the unit axis by the given angle."""
    k = unit(axis)
    v = np.asarray(v, float)
    return (v * np.cos(angle) + np.cross(k, v) * np.sin(angle)
            + k * np.dot(k, v) * (1.0 - np.cos(angle)))


def sphere_circumcenter(a, b, c):
    """Point equidistant from three unit vectors (sign-fixed equidistance)."""
    a, b, c = unit(a), unit(b), unit(c)
    x = np.cross(b - a, c - a)
    return unit(x)


def great_circle_basis(p, q):
    """Orthonormal basis (p, w) of the plane spanned by two unit vectors."""
    p, q = unit(p), unit(q)
    w = q - np.dot(q, p) * p
    return p, unit(w)


def segment_midpoint_by_bisection(p, q):
    """Equidistant point between p and q on their great circle, via root
    finding on the arc parameter."""
    p0, w = great_circle_basis(p, q)
    ang = float(np.arctan2(np.dot(unit(q), w), np.dot(unit(q), p0)))

    def gap(t):
        x = p0 * np.cos(t) + w * np.sin(t)
        return geodesic_distance(x, p) - geodesic_distance(x, q)

    t = brentq(gap, 1e-12, ang - 1e-12, xtol=1e-15)
    return p0 * np.cos(t) + w * np.sin(t)


def pedal_by_minimization(line_normal, p):
    """Closest point to p on the great circle with the given pole."""
    n = unit(line_normal)
    # orthonormal basis of the circle plane
    seed = np.array([1.0, 0.0, 0.0])
    if abs(np.dot(seed, n)) > 0.9:
        seed = np.array([0.0, 1.0, 0.0])
    e1 = unit(seed - np.dot(seed, n) * n)
    e2 = np.cross(n, e1)

    def dist(t):
        return geodesic_distance(e1 * np.cos(t) + e2 * np.sin(t), p)

    best = min(
        (minimize_scalar(dist, bounds=(lo, lo + np.pi), method="bounded",
                         options={"xatol": 1e-14})
         for lo in (0.0, np.pi / 2)),
        key=lambda r: r.fun)
    t = float(best.x)
    return e1 * np.cos(t) + e2 * np.sin(t)


def synthesize_triangle(a, b, c):
    """Unit vectors realizing the given side lengths, in an unrelated chart
    (first vertex at the north pole, second in the x-z plane)."""
    A = np.array([0.0, 0.0, 1.0])
    B = np.array([np.sin(c), 0.0, np.cos(c)])

    def gap(phi):
        C = np.array([np.sin(b) * np.cos(phi), np.sin(b) * np.sin(phi),
                      np.cos(b)])
        # signed arc measure: monotone in phi, unlike the folded distance
        return float(np.arccos(np.clip(np.dot(B, C), -1.0, 1.0))) - a

    phi = brentq(gap, 1e-12, np.pi - 1e-12, xtol=1e-15)
    C = np.array([np.sin(b) * np.cos(phi), np.sin(b) * np.sin(phi), np.cos(b)])
    return A, B, C
