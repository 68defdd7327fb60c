#!/usr/bin/env python3
# coding=utf-8

"""
Logger configurators: a std-logging one, one driven by verbosity/quietness flags and one driven by environment
variables. They stack, each outer configurator deciding the level and handing it to the one it decorates.
"""
import logging
import os
from abc import abstractmethod
from typing import Protocol, TextIO, override, Literal

from vt.utils.errors.warnings import vt_warn

from phylorep.errors import errmsg_creator
from phylorep.logs.constants import WARNING_LEVEL, TRACE_LOG_LEVEL, TRACE_LOG_STR, VQ_LEVEL_MAP, V_LITERAL, \
    Q_LITERAL
from phylorep.logs.formatters import LogLevelFmt, DiffLevelFmt
from phylorep.utils import get_first_non_none

type Level = int | str | None


class LoggerConfigurator(Protocol):
    """
    Stores logger configuration and applies it to a logger.
    """

    @abstractmethod
    def configure(self, logger: logging.Logger) -> logging.Logger:
        """
        :param logger: logger to configure.
        :return: the configured ``logger``.
        """
        ...

    @abstractmethod
    def clone_with(self, **kwargs) -> 'LoggerConfigurator':
        """
        :return: a copy of this configurator with the fields named in ``kwargs`` replaced.
        """
        ...


class LevelLoggerConfigurator(LoggerConfigurator, Protocol):
    """
    A configurator whose log level can be read and replaced.
    """

    @property
    @abstractmethod
    def level(self) -> Level:
        ...

    @abstractmethod
    def set_level(self, new_level: Level) -> Level:
        """
        :return: the level before the change.
        """
        ...


class StdLoggerConfigurator(LevelLoggerConfigurator):
    LOG_LEVEL_WARNING = WARNING_LEVEL

    def __init__(self, *, level: Level = LOG_LEVEL_WARNING, stream: TextIO | None = None,
                 level_fmt: LogLevelFmt | None = None, no_warn: bool = False):
        """
        Configure a std python logger with one stream handler.

        :param level: active logging level, an ``int``, a digit string or a level name.
        :param stream: stream to log to, ``sys.stderr`` if ``None``.
        :param level_fmt: picks the log format from the level, ``DiffLevelFmt`` if ``None``.
        :param no_warn: do not warn if a supplied level name is unknown.
        """
        self._level = level
        self.stream = stream
        self.level_fmt = DiffLevelFmt() if level_fmt is None else level_fmt
        self.no_warn = no_warn

    def int_level(self, logger_name: str) -> int:
        """
        >>> StdLoggerConfigurator(level='20').int_level('x')
        20
        >>> StdLoggerConfigurator(level='TRACE').int_level('x')
        5
        >>> StdLoggerConfigurator(level=None).int_level('x')
        30
        >>> StdLoggerConfigurator(level=[]).int_level('x') # noqa
        Traceback (most recent call last):
        TypeError: Wrong level value supplied: '[]', Expected int or str, got list
        """
        level = self.level
        logging.addLevelName(TRACE_LOG_LEVEL, TRACE_LOG_STR)
        try:
            match level:
                case int():
                    return level
                case str():
                    return int(level) if level.isdecimal() else logging.getLevelNamesMapping()[level.upper()]
                case None:
                    return StdLoggerConfigurator.LOG_LEVEL_WARNING
                case _:
                    raise TypeError(f"Wrong level value supplied: '{level}', Expected int or str, got "
                                    f"{type(level).__name__}")
        except KeyError:
            if not self.no_warn:
                vt_warn(f"{logger_name}: Undefined log level '{level}'. "
                        f"Choose from {list(logging.getLevelNamesMapping())}.")
                vt_warn(f"{logger_name}: Setting log level to default: "
                        f"'{logging.getLevelName(StdLoggerConfigurator.LOG_LEVEL_WARNING)}'.")
            return StdLoggerConfigurator.LOG_LEVEL_WARNING

    @override
    def configure(self, logger: logging.Logger) -> logging.Logger:
        """
        Set the level and replace any handler an earlier ``configure`` call installed, so configuring twice does not
        duplicate output.

        >>> import io
        >>> buf = io.StringIO()
        >>> log = StdLoggerConfigurator(level='INFO', stream=buf).configure(logging.getLogger('std-conf'))
        >>> log = StdLoggerConfigurator(level='INFO', stream=buf).configure(log)
        >>> log.info('once')
        >>> buf.getvalue()
        'std-conf: INFO: once\\n'
        """
        int_level = self.int_level(logger.name)
        logger.setLevel(int_level)
        for handler in [h for h in logger.handlers if getattr(h, '_phylorep', False)]:
            logger.removeHandler(handler)
        handler = logging.StreamHandler(self.stream)
        handler.setFormatter(logging.Formatter(fmt=self.level_fmt.fmt(int_level)))
        handler._phylorep = True  # type: ignore[attr-defined]
        logger.addHandler(handler)
        return logger

    @override
    def clone_with(self, **kwargs) -> 'StdLoggerConfigurator':
        level = kwargs.pop('level', self.level)
        stream = kwargs.pop('stream', self.stream)
        level_fmt = kwargs.pop('level_fmt', self.level_fmt)
        no_warn = kwargs.pop('no_warn', self.no_warn)
        return StdLoggerConfigurator(level=level, stream=stream, level_fmt=level_fmt, no_warn=no_warn)

    @override
    @property
    def level(self) -> Level:
        return self._level

    @override
    def set_level(self, new_level: Level) -> Level:
        orig_level = self.level
        self._level = new_level
        return orig_level


class VQLoggerConfigurator(LevelLoggerConfigurator):
    MAX_VERBOSITY = 3
    MAX_QUIETNESS = 2

    def __init__(self, configurator: LevelLoggerConfigurator, verbosity: int = 0, quietness: int = 0,
                 warn_only: bool = False):
        """
        Level from counted ``-v`` and ``-q`` flags: ``v`` INFO, ``vv`` DEBUG, ``vvv`` TRACE, ``q`` ERROR, ``qq``
        CRITICAL. Neither flag leaves the level of the decorated ``configurator`` in place.

        >>> VQLoggerConfigurator(StdLoggerConfigurator(), verbosity=2).level
        10
        >>> VQLoggerConfigurator(StdLoggerConfigurator(), quietness=1).level
        40
        >>> VQLoggerConfigurator(StdLoggerConfigurator()).level
        30

        >>> VQLoggerConfigurator(StdLoggerConfigurator(), verbosity=1, quietness=1)
        Traceback (most recent call last):
        ValueError: verbosity and quietness are not allowed together

        :param configurator: decorated configurator, receives the computed level.
        :param verbosity: count of ``-v`` flags.
        :param quietness: count of ``-q`` flags.
        :param warn_only: warn instead of raising when both flags are given, verbosity then wins.
        :raise ValueError: if a count is negative, or both counts are given and ``warn_only`` is not set.
        """
        if verbosity and quietness:
            if not warn_only:
                raise ValueError(errmsg_creator.not_allowed_together('verbosity', 'quietness'))
            vt_warn(errmsg_creator.not_allowed_together('verbosity', 'quietness'))
        self.configurator = configurator
        self.verbosity = verbosity
        self.quietness = quietness
        self.warn_only = warn_only
        self._flag: V_LITERAL | Q_LITERAL | None = (
                self.compute_flag(verbosity, 'verbosity', 'v', VQLoggerConfigurator.MAX_VERBOSITY)
                or self.compute_flag(quietness, 'quietness', 'q', VQLoggerConfigurator.MAX_QUIETNESS))
        self._level: Level = None

    @staticmethod
    def compute_flag(count: int, emphasis: Literal['verbosity', 'quietness'], letter: str,
                     max_count: int) -> str | None:
        """
        >>> VQLoggerConfigurator.compute_flag(2, 'verbosity', 'v', 3)
        'vv'
        >>> VQLoggerConfigurator.compute_flag(0, 'verbosity', 'v', 3) is None
        True
        >>> VQLoggerConfigurator.compute_flag(-1, 'quietness', 'q', 2)
        Traceback (most recent call last):
        ValueError: 'quietness' cannot be negative.
        """
        if count < 0:
            raise ValueError(f"'{emphasis}' cannot be negative.")
        if count > max_count:
            vt_warn(f"Supplied {emphasis}: '{count}' is greater than the max supported {emphasis}: '{max_count}'. "
                    f"Defaulting to max {emphasis}.")
            count = max_count
        return letter * count or None

    @override
    @property
    def level(self) -> Level:
        """
        An explicitly set level, else the level of the flags, else the decorated configurator's level.
        """
        if self._level is not None:
            return self._level
        if self._flag is not None:
            return VQ_LEVEL_MAP[self._flag]
        return self.configurator.level

    @override
    def set_level(self, new_level: Level) -> Level:
        orig_level = self.level
        self._level = new_level
        return orig_level

    @override
    def configure(self, logger: logging.Logger) -> logging.Logger:
        self.configurator.set_level(self.level)
        return self.configurator.configure(logger)

    @override
    def clone_with(self, **kwargs) -> 'VQLoggerConfigurator':
        configurator = kwargs.pop('configurator', self.configurator)
        verbosity = kwargs.pop('verbosity', self.verbosity)
        quietness = kwargs.pop('quietness', self.quietness)
        warn_only = kwargs.pop('warn_only', self.warn_only)
        return VQLoggerConfigurator(configurator, verbosity, quietness, warn_only)


class EnvLoggerConfigurator(LoggerConfigurator):
    def __init__(self, env_list: list[str], configurator: LevelLoggerConfigurator):
        """
        Level from environment variables, the first set one wins over the decorated configurator's level.

        >>> import io
        >>> lc = EnvLoggerConfigurator(['PHYLOREP_DOCTEST_UNSET_LOG'],
        ...                            VQLoggerConfigurator(StdLoggerConfigurator(stream=io.StringIO()), verbosity=1))
        >>> lc.configure(logging.getLogger('env-conf')).level
        20

        :param env_list: environment variables in decreasing precedence.
        :param configurator: decorated configurator.
        """
        self.env_list = env_list
        self.configurator = configurator

    @property
    def level_list(self) -> list[str | None]:
        return [os.getenv(e) for e in self.env_list]

    @override
    def configure(self, logger: logging.Logger) -> logging.Logger:
        final_level = get_first_non_none(self.level_list, self.configurator.level)
        self.configurator.set_level(final_level)
        return self.configurator.configure(logger)

    @override
    def clone_with(self, **kwargs) -> 'EnvLoggerConfigurator':
        env_list = kwargs.pop('env_list', self.env_list.copy())
        configurator = kwargs.pop('configurator', self.configurator)
        return EnvLoggerConfigurator(env_list, configurator)

    def clone_with_envs(self, *envs: str, low_precedence: bool = False) -> 'EnvLoggerConfigurator':
        """
        Clone with extra environment variables, ahead of the present ones unless ``low_precedence``.

        >>> EnvLoggerConfigurator(['PHYLOREP_LOG'], None).clone_with_envs('PHYLOREP_CLI_LOG').env_list # noqa
        ['PHYLOREP_CLI_LOG', 'PHYLOREP_LOG']
        >>> EnvLoggerConfigurator(['PHYLOREP_LOG'], None).clone_with_envs('X', low_precedence=True).env_list # noqa
        ['PHYLOREP_LOG', 'X']
        """
        env_list = self.env_list + list(envs) if low_precedence else list(envs) + self.env_list
        return self.clone_with(env_list=env_list)
