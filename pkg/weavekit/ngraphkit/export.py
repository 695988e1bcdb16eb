"""JSON, DOT, SVG and PNG renderings of N-graphs."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import matplotlib

matplotlib.use("Agg")  # files only, no display
import matplotlib.pyplot as plt
import networkx as nx
import numpy as np
from PIL import Image, ImageDraw

from ..utils.errors import InvalidNGraph
from .annulus import AnnularNGraph
from .cycles import CycleTuple
from .graph import Edge, NGraph, Vertex, VertexKind, validate

logger = logging.getLogger(__name__)

EDGE_COLORS = {0: "#9e9e9e", 1: "#1f5fbf", 2: "#c62828", 3: "#2e7d32", 4: "#6a1b9a"}
LAYOUT_ROUNDS = 200
INNER_RADIUS = 0.35


# JSON -----------------------------------------------------------------------

def ngraph_to_json(g: NGraph, cycles: Optional[CycleTuple] = None) -> dict:
    data = {
        "N": g.N,
        "vertices": [{"kind": v.kind.value, "color": v.color} for v in g.vertices],
        "edges": [{"u": e.u, "v": e.v, "color": e.color} for e in g.edges],
        "rotation": [list(around) for around in g.rotation],
        "boundary": list(g.boundary),
        "inner": list(g.inner),
        "family": list(g.family) if g.family else None,
    }
    if cycles is not None:
        data["cycles"] = cycles.to_json()
    return data


def ngraph_from_json(data: dict) -> Tuple[NGraph, Optional[CycleTuple]]:
    """Inverse of :func:`ngraph_to_json`; the map is validated before it is returned."""
    try:
        vertices = tuple(Vertex(VertexKind(v["kind"]), int(v["color"])) for v in data["vertices"])
        edges = tuple(Edge(int(e["u"]), int(e["v"]), int(e["color"])) for e in data["edges"])
        rotation = tuple(tuple(int(h) for h in around) for around in data["rotation"])
        inner = tuple(int(b) for b in data.get("inner", ()))
        cls = AnnularNGraph if inner else NGraph
        family = tuple(data["family"]) if data.get("family") else None
        g = cls(int(data["N"]), vertices, edges, rotation, tuple(int(b) for b in data["boundary"]), inner, family)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidNGraph(f"Malformed N-graph JSON: {exc}") from exc
    validate(g)
    cycles = CycleTuple.from_json(data["cycles"]) if data.get("cycles") is not None else None
    return g, cycles


# DOT ------------------------------------------------------------------------

def ngraph_to_dot(g: NGraph, cycles: Optional[CycleTuple] = None, name: str = "ngraph") -> str:
    """Undirected DOT text; cycle edges are drawn thick and labelled."""
    on_cycle: Dict[int, List[int]] = {}
    for spec in cycles or ():
        for e in spec.edges:
            on_cycle.setdefault(e, []).append(spec.label)
    lines = [f"graph {name} {{", "  node [shape=point];"]
    for v, vertex in enumerate(g.vertices):
        shape = {VertexKind.HEXAGONAL: "hexagon", VertexKind.TRIVALENT: "circle"}.get(vertex.kind, "point")
        lines.append(f'  v{v} [shape={shape}, label="", tooltip="{vertex.kind.value}"];')
    for e, edge in enumerate(g.edges):
        attrs = [f'color="{EDGE_COLORS.get(edge.color, "black")}"']
        if edge.color == 0:
            attrs.append("style=dotted")
        if e in on_cycle:
            attrs.append("penwidth=3")
            attrs.append(f'label="{",".join(str(k) for k in on_cycle[e])}"')
        lines.append(f"  v{edge.u} -- v{edge.v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# layout -------------------------------------------------------------------------

def layout(g: NGraph, rounds: int = LAYOUT_ROUNDS) -> np.ndarray:
    """Boundary vertices evenly on their circles, interior vertices relaxed to their neighbours' barycenter."""
    n = len(g.vertices)
    pos = np.zeros((n, 2))
    fixed = np.zeros(n, dtype=bool)
    for ring, radius in ((g.boundary, 1.0), (g.inner, INNER_RADIUS)):
        L = len(ring)
        for k, b in enumerate(ring):
            angle = 2 * np.pi * k / L
            pos[b] = radius * np.cos(angle), radius * np.sin(angle)
            fixed[b] = True
    adjacency = nx.to_numpy_array(g.to_networkx(), nodelist=range(n))
    degree = adjacency.sum(axis=1)
    free = ~fixed & (degree > 0)
    if g.inner:
        # start in the middle of the annulus
        pos[free] = (0.5 + INNER_RADIUS / 2, 0.0)
    for _ in range(rounds):
        pos[free] = (adjacency[free] @ pos) / degree[free, None]
    return pos


# pictures -------------------------------------------------------------------

def draw_svg(g: NGraph, path: Union[str, Path], cycles: Optional[CycleTuple] = None) -> Path:
    path = Path(path)
    pos = layout(g)
    thick = {e for spec in cycles or () for e in spec.edges}
    fig, ax = plt.subplots(figsize=(6, 6))
    for e, edge in enumerate(g.edges):
        xs = [pos[edge.u][0], pos[edge.v][0]]
        ys = [pos[edge.u][1], pos[edge.v][1]]
        style = ":" if edge.color == 0 else "-"
        ax.plot(xs, ys, style, color=EDGE_COLORS.get(edge.color, "black"), lw=4 if e in thick else 1.5)
    for v, vertex in enumerate(g.vertices):
        if vertex.kind is VertexKind.TRIVALENT:
            ax.scatter(*pos[v], s=40, color=EDGE_COLORS.get(vertex.color, "black"), zorder=5)
        elif vertex.kind is VertexKind.HEXAGONAL:
            ax.scatter(*pos[v], s=60, marker="h", color="black", zorder=5)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, format="svg", bbox_inches="tight")
    plt.close(fig)
    logger.info("Wrote %s", path)
    return path


def draw_png(g: NGraph, path: Union[str, Path], cycles: Optional[CycleTuple] = None, size: int = 600) -> Path:
    path = Path(path)
    pos = layout(g)
    margin = 20
    scale = (size - 2 * margin) / 2

    def pixel(v: int) -> Tuple[float, float]:
        x, y = pos[v]
        return margin + (x + 1) * scale, margin + (1 - y) * scale

    thick = {e for spec in cycles or () for e in spec.edges}
    image = Image.new("RGB", (size, size), "white")
    draw = ImageDraw.Draw(image)
    for e, edge in enumerate(g.edges):
        width = 5 if e in thick else 2
        draw.line([pixel(edge.u), pixel(edge.v)], fill=EDGE_COLORS.get(edge.color, "black"), width=width)
    for v, vertex in enumerate(g.vertices):
        if vertex.kind in (VertexKind.TRIVALENT, VertexKind.HEXAGONAL):
            x, y = pixel(v)
            r = 4 if vertex.kind is VertexKind.TRIVALENT else 6
            draw.ellipse([x - r, y - r, x + r, y + r], fill="black")
    image.save(path, format="PNG")
    logger.info("Wrote %s", path)
    return path
