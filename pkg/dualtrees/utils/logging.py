import logging
import logging.handlers as handlers
import os
import sys
from pathlib import Path

import coloredlogs

from dualtrees.config import dualtrees_config

DEFAULT_LOG_COLORS = dict(
    debug=dict(color="blue"),
    info=dict(color="green"),
    warning=dict(color="magenta"),
    error=dict(color="red"),
    critical=dict(color="red", bold=True),
)

LOG_LEVEL_ENV = "DUALTREES_LOG_LEVEL"


def get_path_of_log_dir() -> Path:

    user_log = Path().home() / ".dualtrees" / "log"

    # Create it if doesn't exist
    if not user_log.exists():

        user_log.mkdir(parents=True)

    return user_log


_log_file_names = ["usr.log", "dev.log"]


def get_path_of_log_file(log_file: str) -> Path:
    """
    returns the path of the log files
    """
    assert (
        log_file in _log_file_names
    ), f"{log_file} is not one of {_log_file_names}"

    return get_path_of_log_dir() / log_file


class LogFilter(object):
    def __init__(self, level):
        self.__level = level

    def filter(self, logRecord):
        return logRecord.levelno != self.__level


def _file_handler(log_file: str, level, formatter) -> logging.Handler:

    if not dualtrees_config.logging.file.on:

        return logging.NullHandler()

    try:

        handler = handlers.TimedRotatingFileHandler(
            get_path_of_log_file(log_file), when="D", interval=1, backupCount=10
        )

    except OSError:

        # no writable home directory
        handler = logging.NullHandler()

    handler.setFormatter(formatter)
    handler.setLevel(level)

    return handler


# the developer handler rotates every day and keeps 10 days of backup
_dev_formatter = logging.Formatter(
    "%(asctime)s | %(name)s | %(levelname)s| %(funcName)s | %(lineno)d | %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)

dualtrees_dev_log_handler = _file_handler(
    "dev.log", logging.DEBUG, _dev_formatter
)

_usr_formatter = logging.Formatter(
    "%(asctime)s | %(levelname)s | %(message)s", datefmt="%Y-%m-%d %H:%M:%S"
)

dualtrees_usr_log_handler = _file_handler(
    "usr.log", dualtrees_config.logging.file.level, _usr_formatter
)

_console_formatter = coloredlogs.ColoredFormatter(
    fmt="[%(levelname)-8s] %(message)s",
    datefmt="%H:%M:%S",
    level_styles=DEFAULT_LOG_COLORS,
)

dualtrees_console_log_handler = logging.StreamHandler(sys.stdout)
dualtrees_console_log_handler.setFormatter(_console_formatter)

if not dualtrees_config.logging.console.on:

    _console_level = logging.CRITICAL + 1

elif dualtrees_config.logging.debug:

    _console_level = logging.DEBUG

else:

    _console_level = os.environ.get(
        LOG_LEVEL_ENV, dualtrees_config.logging.console.level
    ).upper()

dualtrees_console_log_handler.setLevel(_console_level)

warning_filter = LogFilter(logging.WARNING)


def silence_warnings():
    """
    supress warning messages in console and file usr logs
    """

    dualtrees_usr_log_handler.addFilter(warning_filter)
    dualtrees_console_log_handler.addFilter(warning_filter)


def activate_warnings():
    """
    re-enable warning messages in console and file usr logs
    """

    dualtrees_usr_log_handler.removeFilter(warning_filter)
    dualtrees_console_log_handler.removeFilter(warning_filter)


def update_logging_level(level):

    dualtrees_console_log_handler.setLevel(level)


def setup_logger(name):

    # A logger with name name will be created
    # and then add it to the print stream
    log = logging.getLogger(name)

    # this must be set to allow debug messages through
    log.setLevel(logging.DEBUG)

    # add the handlers

    log.addHandler(dualtrees_dev_log_handler)

    log.addHandler(dualtrees_console_log_handler)

    log.addHandler(dualtrees_usr_log_handler)

    # we do not want to duplicate the messages in the parents
    log.propagate = False

    return log
