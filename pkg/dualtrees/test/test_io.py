import numpy as np
import pytest

from dualtrees.complex import Diagram, UnsupportedSchemaVersion
from dualtrees.constructions.corpus import grid_diagram, square, square_with_pendant
from dualtrees.duality import DualGraph
from dualtrees.io import (
    read_diagram,
    read_json,
    read_record,
    read_sidecar,
    to_dot,
    tutte_layout,
    write_diagram,
    write_dot,
    write_dual,
    write_json,
    write_record,
    write_sidecar,
    write_svg,
)
from dualtrees.shelling import logarithmic_shelling


def test_diagram_file_round_trip(tmp_path):

    d = grid_diagram(2, 3)

    first = write_diagram(d, tmp_path / "grid.json")
    again = read_diagram(first)

    assert isinstance(again, Diagram)
    assert again.to_dict() == d.to_dict()

    second = write_diagram(again, tmp_path / "nested" / "grid.json")

    assert first.read_bytes() == second.read_bytes()
    assert first.read_text().endswith("}\n")


def test_missing_file(tmp_path):

    with pytest.raises(FileNotFoundError):

        read_diagram(tmp_path / "nothing.json")


def test_sidecar(tmp_path, delta_1):

    path = write_sidecar(delta_1.metadata, delta_1.inscribed, tmp_path / "delta_1.meta.json")
    data = read_sidecar(path)

    assert data["p_n"] == 9
    assert data["lambda"] == 5
    assert data["level"] == 1
    assert len(data["tree_edges"]) == 3

    owned = sorted(v for vs in data["territory"].values() for v in vs)

    assert len(owned) == len(set(owned))
    assert set(owned) <= set(range(delta_1.diagram.complex.n_vertices))

    data["version"] = 99
    write_json(data, path)

    with pytest.raises(UnsupportedSchemaVersion):

        read_sidecar(path)


def test_record_file(tmp_path):

    d = grid_diagram(2, 2)
    record = logarithmic_shelling(d)

    path = write_record(record, tmp_path / "record.json")
    again = read_record(path, diagram=d)

    assert again.moves == record.moves
    assert again.trace == record.trace
    assert again.max_boundary == record.max_boundary


def test_dual_file(tmp_path):

    path = write_dual(DualGraph(square()), tmp_path / "dual.json")
    data = read_json(path)

    assert data["n_vertices"] == 2
    assert len(data["edges"]) == 4
    assert data["dual_of"] == [0, 1, 2, 3]


def test_dot():

    d = square_with_pendant()
    text = to_dot(d, tree=[0])

    assert text.startswith("graph diagram {")
    assert text.count(" -- ") == d.complex.n_edges
    assert text.count("penwidth") == 1
    assert text.count("doublecircle") == 1


def test_tutte_layout():

    pos = tutte_layout(grid_diagram(2, 2))

    assert pos.shape == (9, 2)
    assert np.allclose(pos[4], 0.0)

    pinned = np.delete(pos, 4, axis=0)

    assert np.allclose(np.hypot(pinned[:, 0], pinned[:, 1]), 1.0)


def test_drawings(tmp_path):

    d = grid_diagram(2, 3)

    dot = write_dot(d, tmp_path / "grid.dot")
    svg = write_svg(d, tmp_path / "grid.svg", tree=[0, 1])

    assert dot.read_text().count(" -- ") == d.complex.n_edges
    assert svg.read_text().lstrip().startswith("<?xml")
