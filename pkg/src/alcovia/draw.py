"""Pictures of alcove walks in rank at most 2.

The walk is drawn through alcove barycenters in a Euclidean
realization of the coweight plane: crossings are arrows into the next
alcove, folds are bounces off the shared wall.  Two output backends
share the same geometry: a matplotlib renderer (:func:`render_walk`,
:func:`render_walks`) and a TikZ emitter (:func:`emit_tikz`).

>>> rs = build_root_system("A2")
>>> emb = planar_embedding(rs)
>>> [round(x, 3) for x in emb.alpha_vectors[0]]
[1.414, 0.0]
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import RankOutOfRange
from .rootsys import RootSystem, build_root_system
from .walks import Walk, steps_string

__all__ = [
    "planar_embedding",
    "walk_polyline",
    "render_walk",
    "render_walks",
    "emit_tikz",
]

Point = tuple[float, float]


@dataclass(frozen=True)
class PlanarEmbedding:
    """Euclidean coordinates for simple roots and their dual basis."""

    alpha_vectors: tuple[Point, ...]
    dual_vectors: tuple[Point, ...]


def _require_low_rank(rs: RootSystem) -> None:
    if rs.rank > 2:
        raise RankOutOfRange(
            f"drawing supports rank at most 2, got rank {rs.rank}"
        )


def planar_embedding(rs: RootSystem) -> PlanarEmbedding:
    """Realize the (co)weight plane with short roots of squared length 2.

    The dual basis vectors pair to ``delta_ij`` with the simple roots,
    so wall levels and coweight coordinates read off by plain dot
    products.  Rank-1 systems embed on the x-axis.
    """
    _require_low_rank(rs)
    d = rs.symmetrizer
    a11 = math.sqrt(2.0 * d[0])
    alphas: list[Point] = [(a11, 0.0)]
    if rs.rank == 2:
        # (alpha_1, alpha_2) = d_1 A_{12}; solve for the second vector.
        dot = d[0] * rs.cartan[0][1]
        x = dot / a11
        norm2 = 2.0 * d[1]
        y = math.sqrt(max(norm2 - x * x, 0.0))
        alphas.append((x, y))
    # Dual basis: solve the 2x2 (or 1x1) linear system.
    if rs.rank == 1:
        duals: list[Point] = [(1.0 / alphas[0][0], 0.0)]
    else:
        (a, b), (c, e) = alphas
        det = a * e - b * c
        duals = [(e / det, -c / det), (-b / det, a / det)]
    return PlanarEmbedding(tuple(alphas), tuple(duals))


def _realize(emb: PlanarEmbedding, coords: Sequence, scale: float = 1.0) -> Point:
    x = sum(float(c) * v[0] for c, v in zip(coords, emb.dual_vectors))
    y = sum(float(c) * v[1] for c, v in zip(coords, emb.dual_vectors))
    return (x * scale, y * scale)


def _dot(p: Point, q: Point) -> float:
    return p[0] * q[0] + p[1] * q[1]


def _barycenter(rs: RootSystem, emb: PlanarEmbedding, alcove) -> Point:
    """Barycenter of the image of the base alcove under ``alcove``.

    The base alcove has vertices at the origin and at the dual-basis
    points scaled down by the highest-root coordinates.
    """
    from fractions import Fraction

    theta_rc = rs.theta.root_coords
    verts = [tuple(Fraction(0) for _ in range(rs.rank))]
    for i in range(rs.rank):
        verts.append(
            tuple(
                Fraction(1, theta_rc[i]) if j == i else Fraction(0)
                for j in range(rs.rank)
            )
        )
    pts = []
    for v in verts:
        image = alcove.fin.act_coweight(v)
        shifted = tuple(Fraction(alcove.trans[j]) + image[j] for j in range(rs.rank))
        pts.append(_realize(emb, shifted))
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    return (cx, cy)


def _wall_geometry(rs: RootSystem, emb: PlanarEmbedding, wall) -> tuple[Point, float]:
    """Normal vector and offset: the wall is ``dot(x, normal) = -level``."""
    alpha = tuple(wall.grad)
    normal = (
        sum(float(c) * v[0] for c, v in zip(alpha, emb.alpha_vectors)),
        sum(float(c) * v[1] for c, v in zip(alpha, emb.alpha_vectors)),
    )
    return normal, -float(wall.level)


def _foot(p: Point, normal: Point, offset: float) -> Point:
    shift = (_dot(p, normal) - offset) / _dot(normal, normal)
    return (p[0] - shift * normal[0], p[1] - shift * normal[1])


def walk_polyline(p: Walk) -> list[tuple[Point, str]]:
    """The drawn vertices of a walk with per-segment step kinds.

    Starts at the base barycenter; each crossing appends the next
    barycenter, each fold appends the wall foot and a return to the
    same barycenter.
    """
    rs = p.wtype.rs
    _require_low_rank(rs)
    emb = planar_embedding(rs)
    out: list[tuple[Point, str]] = [(_barycenter(rs, emb, p.alcoves[0]), "start")]
    for k, (wall, kind) in enumerate(p.steps, start=1):
        here = _barycenter(rs, emb, p.alcoves[k - 1])
        if kind == "f":
            normal, offset = _wall_geometry(rs, emb, wall)
            out.append((_foot(here, normal, offset), "f"))
            out.append((here, "f-back"))
        else:
            out.append((_barycenter(rs, emb, p.alcoves[k]), kind))
    return out


def _frame(points: Iterable[Point], margin: float = 1.2) -> tuple[float, float, float, float]:
    xs = [p[0] for p in points] or [0.0]
    ys = [p[1] for p in points] or [0.0]
    return (min(xs) - margin, max(xs) + margin, min(ys) - margin, max(ys) + margin)


def _wall_segments(
    rs: RootSystem, frame: tuple[float, float, float, float]
) -> list[tuple[Point, Point]]:
    """Clipped wall lines of every root family inside the frame."""
    emb = planar_embedding(rs)
    x0, x1, y0, y1 = frame
    corners = [(x0, y0), (x0, y1), (x1, y0), (x1, y1)]
    segs: list[tuple[Point, Point]] = []
    for root in rs.positive_roots:
        normal = (
            sum(float(c) * v[0] for c, v in zip(root.root_coords, emb.alpha_vectors)),
            sum(float(c) * v[1] for c, v in zip(root.root_coords, emb.alpha_vectors)),
        )
        nn = _dot(normal, normal)
        values = [_dot(c, normal) for c in corners]
        lo, hi = math.floor(min(values)), math.ceil(max(values))
        direction = (-normal[1], normal[0])
        dlen = math.sqrt(_dot(direction, direction))
        if dlen == 0:
            continue
        direction = (direction[0] / dlen, direction[1] / dlen)
        reach = math.hypot(x1 - x0, y1 - y0)
        for k in range(lo, hi + 1):
            base = (normal[0] * k / nn, normal[1] * k / nn)
            a = (base[0] - reach * direction[0], base[1] - reach * direction[1])
            b = (base[0] + reach * direction[0], base[1] + reach * direction[1])
            segs.append((a, b))
    return segs


def render_walk(p: Walk, outfile: str, title: str | None = None) -> None:
    """Draw one walk to an image file (format from the extension)."""
    render_walks([p], outfile, title=title)


def render_walks(
    walks: Sequence[Walk],
    outfile: str,
    title: str | None = None,
    max_panels: int = 25,
) -> None:
    """Draw up to ``max_panels`` walks as a grid of panels."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    walks = list(walks)[:max_panels]
    if not walks:
        raise ValueError("no walks to draw")
    cols = min(len(walks), max(1, math.ceil(math.sqrt(len(walks)))))
    rows = math.ceil(len(walks) / cols)
    fig, axes = plt.subplots(rows, cols, figsize=(4.2 * cols, 4.2 * rows), squeeze=False)
    for idx, p in enumerate(walks):
        ax = axes[idx // cols][idx % cols]
        pts = walk_polyline(p)
        frame = _frame([pt for pt, _ in pts])
        for a, b in _wall_segments(p.wtype.rs, frame):
            ax.plot([a[0], b[0]], [a[1], b[1]], color="0.85", linewidth=0.6, zorder=1)
        xs = [pt[0] for pt, _ in pts]
        ys = [pt[1] for pt, _ in pts]
        ax.plot(xs, ys, color="tab:blue", linewidth=1.8, zorder=3)
        for (pt, kind) in pts:
            if kind == "f":
                ax.plot([pt[0]], [pt[1]], marker="o", color="tab:red", markersize=5, zorder=4)
        ax.plot([xs[0]], [ys[0]], marker="s", color="tab:green", markersize=6, zorder=4)
        ax.plot([xs[-1]], [ys[-1]], marker="*", color="black", markersize=10, zorder=4)
        ax.set_xlim(frame[0], frame[1])
        ax.set_ylim(frame[2], frame[3])
        ax.set_aspect("equal")
        ax.set_xticks([])
        ax.set_yticks([])
        ax.set_title(steps_string(p), fontsize=8)
    for idx in range(len(walks), rows * cols):
        axes[idx // cols][idx % cols].axis("off")
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(outfile, dpi=150)
    plt.close(fig)


def emit_tikz(p: Walk, outfile: str | None = None) -> str:
    """TikZ source for one walk; written to ``outfile`` when given."""
    pts = walk_polyline(p)
    frame = _frame([pt for pt, _ in pts])
    lines = ["\\begin{tikzpicture}[scale=1.2]"]
    for a, b in _wall_segments(p.wtype.rs, frame):
        lines.append(
            f"  \\draw[gray!30, thin] ({a[0]:.4f},{a[1]:.4f}) -- ({b[0]:.4f},{b[1]:.4f});"
        )
    coords = " -- ".join(f"({pt[0]:.4f},{pt[1]:.4f})" for pt, _ in pts)
    lines.append(f"  \\draw[blue, thick] {coords};")
    for pt, kind in pts:
        if kind == "f":
            lines.append(f"  \\fill[red] ({pt[0]:.4f},{pt[1]:.4f}) circle (2pt);")
    first, last = pts[0][0], pts[-1][0]
    lines.append(f"  \\fill[green!60!black] ({first[0]:.4f},{first[1]:.4f}) circle (2.5pt);")
    lines.append(f"  \\node[star, star points=5, fill=black, inner sep=1.6pt] at ({last[0]:.4f},{last[1]:.4f}) {{}};")
    lines.append("\\end{tikzpicture}")
    text = "\n".join(lines) + "\n"
    if outfile is not None:
        with open(outfile, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
