"""Figure rendering for the affine chart x0 = 1.

Points and lines of the projective plane draw as markers and straight lines
in the chart; conics and cubics are contoured on a grid. The dotted unit
circle is the construction substitute for the (real-point-free) absolute
conic.
"""

from __future__ import annotations

import io
import warnings

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from . import numerics as nm
from .centers import CenterId, center, parse_center
from .conics import (Conic, Cubic, apollonian_circles, circumcircle,
                     euler_feuerbach_cubic, incircle, lemoine_conic,
                     simson_cubic, simson_locus_cubic)
from .frame import TriangleFrame, from_bary
from .lines import LineId, central_line, parse_line


class ElementOffChart(UserWarning):
    """Element cannot be drawn: its chart coordinate vanishes."""


def chart_point(v: np.ndarray) -> tuple[float, float] | None:
    """Affine coordinates (x1/x0, x2/x0), or None for far elements."""
    if abs(v[0]) < 1e-9 * nm.norm(v):
        return None
    return float(v[1] / v[0]), float(v[2] / v[0])


_CONIC_NAMES = ("circumcircle", "incircle", "excircle-a", "excircle-b",
                "excircle-c", "hart-circle", "lemoine-conic", "apollonian-a",
                "apollonian-b", "apollonian-c")
_CUBIC_NAMES = ("ef-cubic", "simson-cubic", "simson-locus-cubic")


def _conic_by_name(name: str, frame: TriangleFrame) -> Conic:
    if name == "circumcircle":
        return circumcircle(frame)
    if name == "incircle":
        return incircle(frame)
    if name.startswith("excircle-"):
        idx = "abc".index(name[-1]) + 1
        return incircle(frame, idx)
    if name == "hart-circle":
        from .lines import hart_circle
        return hart_circle(frame).conic
    if name == "lemoine-conic":
        return lemoine_conic(frame)
    if name.startswith("apollonian-"):
        return apollonian_circles(frame)["abc".index(name[-1])]
    raise KeyError(name)


def _cubic_by_name(name: str, frame: TriangleFrame) -> Cubic:
    if name == "ef-cubic":
        return euler_feuerbach_cubic(frame)
    if name == "simson-cubic":
        return simson_cubic(frame)
    return simson_locus_cubic(frame)


def _ambient_quadratic(conic: Conic):
    binv = np.linalg.inv(conic.frame._basis)
    return binv.T @ conic.mat @ binv


def _draw_line_coeffs(ax, coeffs: np.ndarray, box: float, **kw):
    l0, l1, l2 = coeffs
    # l0 + l1 u + l2 w = 0 in chart coordinates
    if abs(l2) >= abs(l1):
        u = np.linspace(-box, box, 64)
        w = -(l0 + l1 * u) / l2
        ax.plot(u, w, **kw)
    else:
        w = np.linspace(-box, box, 64)
        u = -(l0 + l2 * w) / l1
        ax.plot(u, w, **kw)


def render_figure(frame: TriangleFrame, elements: list[str],
                  grid: int = 481, margin: float = 1.6):
    """Matplotlib figure with the triangle, substitute circle and elements."""
    fig, ax = plt.subplots(figsize=(7.2, 7.2))
    corners = []
    for rep in frame.reps:
        pt = chart_point(rep)
        if pt is None:
            warnings.warn("triangle vertex at the chart horizon", ElementOffChart)
        else:
            corners.append(pt)
    box = max([1.4] + [max(abs(p[0]), abs(p[1])) for p in corners]) * margin

    theta = np.linspace(0, 2 * np.pi, 256)
    ax.plot(np.cos(theta), np.sin(theta), linestyle=":", color="0.55",
            linewidth=1.0, label="substitute circle")

    for k in range(3):
        line = nm.cross(frame.reps[(k + 1) % 3], frame.reps[(k + 2) % 3])
        _draw_line_coeffs(ax, line, box, color="0.3", linewidth=1.1)
    for pt, name in zip(corners, "ABC"):
        ax.plot([pt[0]], [pt[1]], "o", color="0.15", markersize=5)
        ax.annotate(name, pt, textcoords="offset points", xytext=(5, 5))

    uu, ww = np.meshgrid(np.linspace(-box, box, grid),
                         np.linspace(-box, box, grid))

    cmap_cycle = plt.rcParams["axes.prop_cycle"].by_key()["color"]
    ci = 0
    for raw in elements:
        name = raw.strip()
        low = name.lower()
        color = cmap_cycle[ci % len(cmap_cycle)]
        ci += 1
        if low in _CONIC_NAMES or low in _CUBIC_NAMES:
            if low in _CONIC_NAMES:
                q = _ambient_quadratic(_conic_by_name(low, frame))
                vals = (q[0, 0] + 2 * q[0, 1] * uu + 2 * q[0, 2] * ww
                        + q[1, 1] * uu**2 + 2 * q[1, 2] * uu * ww + q[2, 2] * ww**2)
            else:
                cub = _cubic_by_name(low, frame)
                binv = np.linalg.inv(frame._basis)
                xs = binv[0, 0] + binv[0, 1] * uu + binv[0, 2] * ww
                ys = binv[1, 0] + binv[1, 1] * uu + binv[1, 2] * ww
                zs = binv[2, 0] + binv[2, 1] * uu + binv[2, 2] * ww
                vals = np.zeros_like(uu)
                from .conics import MONOMIALS
                for cval, (i, j, k) in zip(cub.coeffs, MONOMIALS):
                    if cval:
                        vals += cval * xs**i * ys**j * zs**k
                scale = np.maximum(np.abs(xs) + np.abs(ys) + np.abs(zs), 1e-12)
                vals = vals / scale**3
            ax.contour(uu, ww, vals, levels=[0.0], colors=[color],
                       linewidths=1.2)
            ax.plot([], [], color=color, label=low)
            continue
        try:
            lid = parse_line(low)
        except KeyError:
            lid = None
        if lid is not None:
            coeffs_bary = central_line(lid, frame)
            # ambient coefficients: the bary line l.x pulled through the basis
            coeffs = np.linalg.inv(frame._basis).T @ coeffs_bary
            _draw_line_coeffs(ax, coeffs, box, color=color, linewidth=1.2,
                              label=low)
            continue
        cid = parse_center(name)
        amb = from_bary(center(cid, frame)).unit()
        pt = chart_point(amb)
        if pt is None:
            warnings.warn(f"{name} lies at the chart horizon", ElementOffChart)
            continue
        ax.plot([pt[0]], [pt[1]], "o", color=color, markersize=4)
        ax.annotate(cid.value, pt, textcoords="offset points", xytext=(4, 4),
                    color=color)

    ax.set_xlim(-box, box)
    ax.set_ylim(-box, box)
    ax.set_aspect("equal")
    ax.legend(loc="upper right", fontsize=8)
    ax.set_title("affine chart x0 = 1")
    fig.tight_layout()
    return fig


def render_svg(frame: TriangleFrame, elements: list[str], grid: int = 481,
               margin: float = 1.6) -> str:
    fig = render_figure(frame, elements, grid=grid, margin=margin)
    buf = io.StringIO()
    fig.savefig(buf, format="svg")
    plt.close(fig)
    return buf.getvalue()
