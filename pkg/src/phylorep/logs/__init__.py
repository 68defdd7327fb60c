#!/usr/bin/env python3
# coding=utf-8

"""
Logging setup for ``phylorep``. Library modules only ever call ``logging.getLogger(__name__)``; the command line front
end configures the ``phylorep`` logger through ``configure_logging``.
"""
import logging
from typing import TextIO

# region logs.constants re-exports
from phylorep.logs.constants import TRACE_LOG_LEVEL as TRACE_LOG_LEVEL
from phylorep.logs.constants import VQ_LEVEL_MAP as VQ_LEVEL_MAP
# endregion

# region logs.formatters re-exports
from phylorep.logs.formatters import LogLevelFmt as LogLevelFmt
from phylorep.logs.formatters import SameFmt as SameFmt
from phylorep.logs.formatters import DiffLevelFmt as DiffLevelFmt
# endregion

# region logs.configurator re-exports
from phylorep.logs.configurator import LoggerConfigurator as LoggerConfigurator
from phylorep.logs.configurator import LevelLoggerConfigurator as LevelLoggerConfigurator
from phylorep.logs.configurator import StdLoggerConfigurator as StdLoggerConfigurator
from phylorep.logs.configurator import VQLoggerConfigurator as VQLoggerConfigurator
from phylorep.logs.configurator import EnvLoggerConfigurator as EnvLoggerConfigurator
# endregion

from phylorep.constants import PHYLOREP_LOG_ENV_VAR


def configure_logging(verbosity: int = 0, quietness: int = 0, stream: TextIO | None = None) -> logging.Logger:
    """
    Configure the ``phylorep`` logger: ``PHYLOREP_LOG`` first, then the ``-v``/``-q`` counts, then ``WARNING``.

    :raise ValueError: if both ``verbosity`` and ``quietness`` are given.
    """
    lc = EnvLoggerConfigurator([PHYLOREP_LOG_ENV_VAR],
                               VQLoggerConfigurator(StdLoggerConfigurator(stream=stream), verbosity, quietness))
    return lc.configure(logging.getLogger('phylorep'))
