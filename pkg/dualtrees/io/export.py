from pathlib import Path
from typing import Iterable, Optional, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.collections import LineCollection, PolyCollection
from scipy import sparse
from scipy.sparse.linalg import spsolve

from dualtrees.complex.planar_complex import Diagram, boundary_walk
from dualtrees.config import dualtrees_config
from dualtrees.utils.array_to_cmap import array_to_cmap
from dualtrees.utils.file_utils import prepare_output_path
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)


def to_dot(d: Diagram, tree: Optional[Iterable[int]] = None, name: str = "diagram") -> str:
    """
    the 1-skeleton as an undirected DOT graph. parallel edges and loops are
    kept; tree edges are drawn bold and the base vertex is doubled

    :param d: the diagram
    :param tree: optional spanning tree edge ids to highlight
    :param name: graph name
    :returns: DOT text
    :rtype:

    """

    tree = frozenset() if tree is None else frozenset(tree)

    lines = [f"graph {name} {{", "  node [shape=point];"]

    for v in range(d.complex.n_vertices):

        if v == d.base:
            lines.append(f'  {v} [shape=doublecircle, label="*", width=0.15];')
        else:
            lines.append(f"  {v};")

    for e, (a, b) in enumerate(d.complex.edge_endpoints()):

        style = " [penwidth=2.5]" if e in tree else ""
        lines.append(f"  {a} -- {b}{style};")

    lines.append("}")

    return "\n".join(lines) + "\n"


def write_dot(d: Diagram, file_name: Union[str, Path], tree: Optional[Iterable[int]] = None) -> Path:

    path = prepare_output_path(file_name)

    with path.open("w") as f:
        f.write(to_dot(d, tree=tree))

    logger.debug(f"wrote {path}")

    return path


def tutte_layout(d: Diagram) -> np.ndarray:
    """
    barycentric embedding: the boundary vertices are pinned on the unit
    circle in the order of the boundary walk and every other vertex sits at
    the mean of its neighbours

    :returns: (V, 2) positions
    :rtype:

    """

    n = d.complex.n_vertices
    pos = np.zeros((n, 2))

    if d.complex.n_edges == 0:
        return pos

    walk = boundary_walk(d).vertices[:-1]
    pinned = list(dict.fromkeys(int(v) for v in walk))

    angles = 2 * np.pi * np.arange(len(pinned)) / len(pinned)
    pos[pinned, 0] = np.cos(angles)
    pos[pinned, 1] = np.sin(angles)

    free = np.setdiff1d(np.arange(n), pinned)

    if free.size == 0:
        return pos

    ends = d.complex.edge_endpoints()
    ends = ends[ends[:, 0] != ends[:, 1]]

    rows = np.concatenate([ends[:, 0], ends[:, 1]])
    cols = np.concatenate([ends[:, 1], ends[:, 0]])

    adjacency = sparse.coo_matrix((np.ones(rows.size), (rows, cols)), shape=(n, n)).tocsr()
    degree = np.asarray(adjacency.sum(axis=1)).ravel()
    laplacian = sparse.diags(degree) - adjacency

    lap_ff = laplacian[free][:, free].tocsc()
    adj_fp = adjacency[free][:, pinned]

    for axis in range(2):

        pos[free, axis] = spsolve(lap_ff, adj_fp @ pos[pinned, axis])

    return pos


def write_svg(
    d: Diagram,
    file_name: Union[str, Path],
    tree: Optional[Iterable[int]] = None,
    cmap: str = "viridis",
) -> Path:
    """
    draw the diagram on its Tutte layout, cells shaded by degree. the
    picture is for reading only and is never parsed back
    """

    path = prepare_output_path(file_name)
    tree = frozenset() if tree is None else frozenset(tree)

    pos = tutte_layout(d)
    complex = d.complex

    size = dualtrees_config.export.svg_figsize
    alpha = dualtrees_config.export.svg_face_alpha

    fig, ax = plt.subplots(figsize=(size, size))

    cells = [
        pos[[complex.origin[x] for x in complex.faces[f]]] for f in d.bounded_faces
    ]

    if cells:

        _, colors = array_to_cmap([len(c) for c in cells], cmap, alpha=alpha)
        ax.add_collection(PolyCollection(cells, facecolors=colors, edgecolors="none"))

    ends = complex.edge_endpoints()

    if ends.shape[0] > 0:

        segments = pos[ends]
        widths = [2.0 if e in tree else 0.6 for e in range(ends.shape[0])]
        ax.add_collection(LineCollection(segments, colors="k", linewidths=widths))

    ax.scatter(*pos[d.base], color="red", zorder=3, s=20)

    ax.set_xlim(-1.1, 1.1)
    ax.set_ylim(-1.1, 1.1)
    ax.set_aspect("equal")
    ax.set_axis_off()

    with plt.rc_context({"svg.hashsalt": "dualtrees"}):
        fig.savefig(path, format="svg", metadata={"Date": None})

    plt.close(fig)

    logger.debug(f"wrote {path}")

    return path
