#!/usr/bin/env python3
# coding=utf-8

"""
Log formats that depend on the active log level.
"""
import logging
from abc import abstractmethod
from typing import Protocol, override

from phylorep.logs.constants import TRACE_LOG_LEVEL, TIMED_DETAIL_LOG_FMT, DETAIL_LOG_FMT, SHORT_LOG_FMT, \
    SHORTER_LOG_FMT


class LogLevelFmt(Protocol):
    """
    How the active log level picks a log format. For e.g.::

        ERROR: an error occurred.
        phylorep.convert.cuts: INFO: some information
        phylorep.convert.cuts: DEBUG: [cuts.py -  cut_graph() ]: some debug info
    """

    @abstractmethod
    def fmt(self, level: int) -> str:
        """
        :param level: ``level`` for which the log ``format`` is to be queried.
        :return: format for the queried ``level``.
        """
        ...


class SameFmt(LogLevelFmt):
    """
    One format for all levels.

    >>> SameFmt().fmt(logging.DEBUG)
    '%(levelname)s: %(message)s'
    """

    def __init__(self, fmt: str = SHORTER_LOG_FMT):
        self._fmt = fmt

    @override
    def fmt(self, level: int) -> str:
        return self._fmt


class DiffLevelFmt(LogLevelFmt):
    DEFAULT_LEVEL_FMT: dict[int, str] = {
        TRACE_LOG_LEVEL: TIMED_DETAIL_LOG_FMT,
        logging.DEBUG: DETAIL_LOG_FMT,
        logging.INFO: SHORT_LOG_FMT,
        logging.WARNING: SHORTER_LOG_FMT,
    }

    def __init__(self, level_fmt: dict[int, str] | None = None):
        """
        More detail the more verbose the level. Levels between registered ones take the format of the next upper
        registered level, levels above all of them the format of the highest.

        >>> f = DiffLevelFmt()
        >>> f.fmt(logging.INFO) == SHORT_LOG_FMT
        True
        >>> f.fmt(logging.INFO - 2) == SHORT_LOG_FMT
        True
        >>> f.fmt(logging.CRITICAL) == SHORTER_LOG_FMT
        True

        :param level_fmt: level to format map, ``DEFAULT_LEVEL_FMT`` if ``None``.
        :raise ValueError: if ``level_fmt`` is empty.
        """
        self.level_fmt = DiffLevelFmt.DEFAULT_LEVEL_FMT if level_fmt is None else level_fmt
        if not self.level_fmt:
            raise ValueError('Level format map must not be empty.')

    @override
    def fmt(self, level: int) -> str:
        return self.level_fmt[self.next_approx_level(level)]

    def next_approx_level(self, missing_level: int) -> int:
        """
        :return: ``missing_level`` itself if registered, else the closest registered level above it, else the highest
            registered level.
        """
        levels = sorted(self.level_fmt)
        for level in levels:
            if level >= missing_level:
                return level
        return levels[-1]
