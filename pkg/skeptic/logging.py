"""
Logging
-------

This module makes sure that every skeptic module ends up with a logger that
shares a common formatter and handler.

It tries to be the first thing to install a handler, so that it can set the
basic config, and it also creates a logger at the top of the hierarchy, named
simply `skeptic`, so that all further loggers created with the recommended
pattern (``logging.getLogger(__name__)``) inherit its level.

The command line raises or lowers the level through :func:`set_level`, taking
the default from the ``log_level`` setting of the ``[skeptic]`` config block.

"""
import logging
import sys
from typing import Union

DEFAULT_LEVEL = logging.INFO
"""Default minimum severity `INFO`"""


class LogSetup:  # pragma: no cover
    """Establish global log format and handler for skeptic

    Experiment runs are launched from a terminal or a batch script, so the
    handler writes to standard error and leaves standard output free for the
    JSON and CSV payloads the command line prints.

    Two formatters are defined, one for debugging and one for general use.
    The general one prefixes each message with the logger name, which is
    enough to tell the simulation driver from the dataset driver in a long
    log.

    """

    debug_formatter = logging.Formatter(
        "skeptic:%(levelname)s %(filename)s@%(lineno)s: %(message)s"
    )
    """A formatter helpful for debugging."""

    default_formatter = logging.Formatter(
        "%(asctime)s skeptic %(levelname)s %(name)s: %(message)s"
    )
    """The default formatter"""

    stream_handler = logging.StreamHandler(sys.stderr)
    """A handler writing to standard error"""

    stream_handler.setLevel(logging.DEBUG)
    stream_handler.setFormatter(default_formatter)  # or debug_formatter

    def __init__(self):
        """Setup logging

        If there are not yet any handlers, this routine calls
        :py:func:`logging.basicConfig` to set up basic logging configuration.

        If there are already handlers, for instance due to running within
        :mod:`pytest`, then nothing happens.

        """
        if not logging.getLogger(None).hasHandlers():
            logging.basicConfig(handlers=[self.stream_handler])


def set_level(level: Union[int, str]) -> int:
    """Set the minimum severity of the `skeptic` logger hierarchy

    :param level: a :mod:`logging` level number or name such as ``"DEBUG"``

    :returns: the numeric level which was applied

    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = DEFAULT_LEVEL
    logger.setLevel(level)
    return level


LogSetup()
logger = logging.getLogger("skeptic")
"""Create a logger in order to configure the top of the hierarchy"""
# without this, the library may not emit logs from a script
logger.setLevel(DEFAULT_LEVEL)
