"""Seeded random frame generation for the verification sweeps."""

from __future__ import annotations

import numpy as np

from .errors import CollinearVertices, IllConditioned
from .frame import DEFAULT_STAUDTIAN_FLOOR, TriangleFrame, build_frame
from .projective import ProjPoint


def random_frames(count: int, seed: int,
                  staudtian_floor: float = DEFAULT_STAUDTIAN_FLOOR) -> list[TriangleFrame]:
    """Frames over vertex triples drawn uniformly from the sphere.

    Rejection below the staudtian floor; canonical representatives, so each
    draw lands on the primary triangle of its lexicographic normalization.
    """
    rng = np.random.default_rng(seed)
    frames: list[TriangleFrame] = []
    while len(frames) < count:
        pts = rng.normal(size=(3, 3))
        pts /= np.linalg.norm(pts, axis=1)[:, None]
        try:
            frames.append(build_frame(ProjPoint(pts[0]), ProjPoint(pts[1]),
                                      ProjPoint(pts[2]),
                                      staudtian_floor=staudtian_floor))
        except (CollinearVertices, IllConditioned):
            continue
    return frames


def random_interior(frame: TriangleFrame, count: int, seed: int) -> np.ndarray:
    """Interior barycentric triples (positive coordinates summing to one)."""
    rng = np.random.default_rng(seed)
    w = rng.dirichlet(np.ones(3), size=count)
    return np.clip(w, 1e-6, None)
