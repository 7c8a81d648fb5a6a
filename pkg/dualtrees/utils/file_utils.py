import os
from pathlib import Path
from typing import Union


def sanitize_filename(filename: Union[str, Path], abspath: bool = False) -> Path:

    sanitized = Path(os.path.expandvars(os.path.expanduser(str(filename))))

    if abspath:

        return sanitized.absolute()

    else:

        return sanitized


def file_existing_and_readable(filename: Union[str, Path]) -> bool:

    sanitized_filename = sanitize_filename(filename)

    if not sanitized_filename.is_file():

        return False

    # Try to open it

    try:

        with sanitized_filename.open():

            pass

    except OSError:

        return False

    return True


def if_directory_not_existing_then_make(directory: Union[str, Path]) -> None:
    """
    If the given directory does not exists, then make it
    :param directory: directory to check or make
    :return: None
    """

    sanitized_directory = sanitize_filename(directory)

    if not sanitized_directory.exists():

        sanitized_directory.mkdir(parents=True)


def prepare_output_path(file_name: Union[str, Path]) -> Path:
    """
    sanitize an output file name and make sure its parent directory exists
    """

    path = sanitize_filename(file_name)

    if str(path.parent) not in ("", "."):

        if_directory_not_existing_then_make(path.parent)

    return path
