from dualtrees.utils.edge_graph import Disconnected, EdgeGraph
from dualtrees.utils.file_utils import (
    file_existing_and_readable,
    if_directory_not_existing_then_make,
    prepare_output_path,
    sanitize_filename,
)

__all__ = [
    "Disconnected",
    "EdgeGraph",
    "file_existing_and_readable",
    "if_directory_not_existing_then_make",
    "prepare_output_path",
    "sanitize_filename",
]
