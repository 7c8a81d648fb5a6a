import json
from pathlib import Path
from typing import Optional, Union

from dualtrees.complex.planar_complex import SCHEMA_VERSION, Diagram, UnsupportedSchemaVersion
from dualtrees.constructions.delta import DeltaMetadata
from dualtrees.constructions.fattened_tree import InscribedTreeMap
from dualtrees.duality.dual_graph import DualGraph
from dualtrees.shelling.record import ShellingRecord
from dualtrees.utils.file_utils import (
    file_existing_and_readable,
    prepare_output_path,
    sanitize_filename,
)
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)

PathLike = Union[str, Path]


def dumps(data: dict) -> str:
    """
    the canonical JSON text: sorted keys, fixed separators, a final newline
    """

    return json.dumps(data, sort_keys=True, indent=1, separators=(",", ": ")) + "\n"


def write_json(data: dict, file_name: PathLike) -> Path:

    path = prepare_output_path(file_name)

    with path.open("w") as f:

        f.write(dumps(data))

    logger.debug(f"wrote {path}")

    return path


def read_json(file_name: PathLike) -> dict:

    path = sanitize_filename(file_name)

    if not file_existing_and_readable(path):

        raise FileNotFoundError(f"{path} does not exist or is not readable")

    with path.open() as f:

        return json.load(f)


def write_diagram(d: Diagram, file_name: PathLike) -> Path:

    return write_json(d.to_dict(), file_name)


def read_diagram(file_name: PathLike) -> Diagram:
    """
    a diagram file, either bare or as written by ``construct`` to stdout
    with its metadata alongside
    """

    data = read_json(file_name)

    if "diagram" in data:
        data = data["diagram"]

    return Diagram.from_dict(data)


def sidecar_dict(metadata: DeltaMetadata, inscribed: InscribedTreeMap) -> dict:
    """
    construction metadata with the territory of every inscribed tree edge
    """

    out = metadata.to_dict()
    out.update(inscribed.to_dict())

    return out


def write_sidecar(
    metadata: DeltaMetadata, inscribed: InscribedTreeMap, file_name: PathLike
) -> Path:

    return write_json(sidecar_dict(metadata, inscribed), file_name)


def read_sidecar(file_name: PathLike) -> dict:

    data = read_json(file_name)

    if data.get("version") != SCHEMA_VERSION:

        raise UnsupportedSchemaVersion(
            f"sidecar schema version {data.get('version')} is not {SCHEMA_VERSION}"
        )

    return data


def write_record(record: ShellingRecord, file_name: PathLike) -> Path:

    return write_json(record.to_dict(), file_name)


def read_record(file_name: PathLike, diagram: Optional[Diagram] = None) -> ShellingRecord:

    return ShellingRecord.from_dict(read_json(file_name), diagram=diagram)


def write_dual(dual: DualGraph, file_name: PathLike) -> Path:

    return write_json(dual.to_dict(), file_name)
