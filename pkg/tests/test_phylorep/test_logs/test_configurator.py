#!/usr/bin/env python3
# coding=utf-8

"""
Tests logger configurators.
"""
import io
import logging

import pytest

from phylorep.logs import (StdLoggerConfigurator, VQLoggerConfigurator, EnvLoggerConfigurator, DiffLevelFmt, SameFmt,
                           TRACE_LOG_LEVEL, configure_logging)
from phylorep.logs.constants import SHORTER_LOG_FMT, SHORT_LOG_FMT, DETAIL_LOG_FMT, TIMED_DETAIL_LOG_FMT


class TestDiffLevelFmt:
    @pytest.mark.parametrize('level, fmt', [
        (TRACE_LOG_LEVEL, TIMED_DETAIL_LOG_FMT),
        (logging.DEBUG, DETAIL_LOG_FMT),
        (logging.INFO, SHORT_LOG_FMT),
        (logging.WARNING, SHORTER_LOG_FMT),
        (logging.ERROR, SHORTER_LOG_FMT),
        (1, TIMED_DETAIL_LOG_FMT),
        (logging.DEBUG + 1, SHORT_LOG_FMT),
    ])
    def test_fmt(self, level, fmt):
        assert DiffLevelFmt().fmt(level) == fmt

    def test_empty_map(self):
        with pytest.raises(ValueError, match='must not be empty'):
            DiffLevelFmt({})


class TestStdLoggerConfigurator:
    @pytest.mark.parametrize('level, expected', [(20, 20), ('20', 20), ('DEBUG', logging.DEBUG),
                                                 ('debug', logging.DEBUG), ('TRACE', TRACE_LOG_LEVEL),
                                                 (None, logging.WARNING)])
    def test_levels(self, level, expected):
        logger = StdLoggerConfigurator(level=level, stream=io.StringIO()).configure(
            logging.getLogger(f"phylorep-test-{level}"))
        assert logger.level == expected

    def test_unknown_level_warns(self):
        with pytest.warns(UserWarning, match="Undefined log level 'BOGUS'"):
            logger = StdLoggerConfigurator(level='BOGUS', stream=io.StringIO()).configure(
                logging.getLogger('phylorep-test-bogus'))
        assert logger.level == logging.WARNING

    def test_superscript_digit_is_unknown(self):
        with pytest.warns(UserWarning, match="Undefined log level '²'"):
            logger = StdLoggerConfigurator(level='²', stream=io.StringIO()).configure(
                logging.getLogger('phylorep-test-superscript'))
        assert logger.level == logging.WARNING

    def test_unknown_level_no_warn(self, recwarn):
        StdLoggerConfigurator(level='BOGUS', stream=io.StringIO(), no_warn=True).configure(
            logging.getLogger('phylorep-test-bogus-quiet'))
        assert len(recwarn) == 0

    @pytest.mark.parametrize('level', [{}, [], 2.5])
    def test_wrong_type(self, level):
        with pytest.raises(TypeError, match='Expected int or str'):
            StdLoggerConfigurator(level=level).configure(logging.getLogger('phylorep-test-type'))  # noqa

    def test_format_follows_level(self):
        buf = io.StringIO()
        logger = StdLoggerConfigurator(level=logging.WARNING, stream=buf).configure(
            logging.getLogger('phylorep-test-fmt'))
        logger.warning('careful')
        assert buf.getvalue() == 'WARNING: careful\n'

    def test_same_fmt(self):
        buf = io.StringIO()
        logger = StdLoggerConfigurator(level=logging.INFO, stream=buf, level_fmt=SameFmt()).configure(
            logging.getLogger('phylorep-test-same'))
        logger.info('hello')
        assert buf.getvalue() == 'INFO: hello\n'

    def test_reconfigure_replaces_handler(self):
        logger = logging.getLogger('phylorep-test-reconf')
        for _ in range(3):
            StdLoggerConfigurator(stream=io.StringIO()).configure(logger)
        assert len(logger.handlers) == 1

    def test_clone_with(self):
        lc = StdLoggerConfigurator(level='INFO')
        clone = lc.clone_with(level='DEBUG')
        assert (lc.level, clone.level) == ('INFO', 'DEBUG')

    def test_set_level_returns_old(self):
        lc = StdLoggerConfigurator(level='INFO')
        assert lc.set_level(10) == 'INFO'
        assert lc.level == 10


class TestVQLoggerConfigurator:
    @pytest.mark.parametrize('v, q, expected', [(0, 0, logging.WARNING), (1, 0, logging.INFO), (2, 0, logging.DEBUG),
                                                (3, 0, TRACE_LOG_LEVEL), (0, 1, logging.ERROR),
                                                (0, 2, logging.CRITICAL)])
    def test_levels(self, v, q, expected):
        lc = VQLoggerConfigurator(StdLoggerConfigurator(stream=io.StringIO()), v, q)
        assert lc.configure(logging.getLogger(f"phylorep-test-vq-{v}-{q}")).level == expected

    def test_together_not_allowed(self):
        with pytest.raises(ValueError, match='verbosity and quietness are not allowed together'):
            VQLoggerConfigurator(StdLoggerConfigurator(), 1, 1)

    def test_together_warn_only(self):
        with pytest.warns(UserWarning, match='not allowed together'):
            lc = VQLoggerConfigurator(StdLoggerConfigurator(), 1, 1, warn_only=True)
        assert lc.level == logging.INFO

    def test_clamps(self):
        with pytest.warns(UserWarning, match="greater than the max supported verbosity"):
            lc = VQLoggerConfigurator(StdLoggerConfigurator(), verbosity=7)
        assert lc.level == TRACE_LOG_LEVEL

    def test_negative(self):
        with pytest.raises(ValueError, match="'verbosity' cannot be negative"):
            VQLoggerConfigurator(StdLoggerConfigurator(), verbosity=-1)


class TestEnvLoggerConfigurator:
    def test_env_wins(self, monkeypatch):
        monkeypatch.setenv('PHYLOREP_TEST_LOG', 'ERROR')
        lc = EnvLoggerConfigurator(['PHYLOREP_TEST_LOG'],
                                   VQLoggerConfigurator(StdLoggerConfigurator(stream=io.StringIO()), verbosity=2))
        assert lc.configure(logging.getLogger('phylorep-test-env')).level == logging.ERROR

    def test_first_set_env_wins(self, monkeypatch):
        monkeypatch.setenv('PHYLOREP_TEST_LOG_2', 'DEBUG')
        monkeypatch.delenv('PHYLOREP_TEST_LOG_1', raising=False)
        lc = EnvLoggerConfigurator(['PHYLOREP_TEST_LOG_1', 'PHYLOREP_TEST_LOG_2'],
                                   StdLoggerConfigurator(stream=io.StringIO()))
        assert lc.configure(logging.getLogger('phylorep-test-env-2')).level == logging.DEBUG

    def test_unset_keeps_underlying(self, monkeypatch):
        monkeypatch.delenv('PHYLOREP_TEST_LOG', raising=False)
        lc = EnvLoggerConfigurator(['PHYLOREP_TEST_LOG'],
                                   VQLoggerConfigurator(StdLoggerConfigurator(stream=io.StringIO()), quietness=1))
        assert lc.configure(logging.getLogger('phylorep-test-env-3')).level == logging.ERROR


class TestConfigureLogging:
    def test_phylorep_log_env(self, monkeypatch):
        monkeypatch.setenv('PHYLOREP_LOG', 'DEBUG')
        assert configure_logging(quietness=2, stream=io.StringIO()).level == logging.DEBUG

    def test_flags(self, monkeypatch):
        monkeypatch.delenv('PHYLOREP_LOG', raising=False)
        assert configure_logging(verbosity=1, stream=io.StringIO()).level == logging.INFO
