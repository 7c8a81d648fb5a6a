from dualtrees.io.diagram_file import (
    dumps,
    read_diagram,
    read_json,
    read_record,
    read_sidecar,
    sidecar_dict,
    write_diagram,
    write_dual,
    write_json,
    write_record,
    write_sidecar,
)
from dualtrees.io.export import to_dot, tutte_layout, write_dot, write_svg

__all__ = [
    "dumps",
    "read_diagram",
    "read_json",
    "read_record",
    "read_sidecar",
    "sidecar_dict",
    "to_dot",
    "tutte_layout",
    "write_diagram",
    "write_dot",
    "write_dual",
    "write_json",
    "write_record",
    "write_sidecar",
    "write_svg",
]
