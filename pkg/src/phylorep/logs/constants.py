#!/usr/bin/env python3
# coding=utf-8

"""
Log levels and formats used by ``phylorep``.
"""
import logging
from typing import Literal

TRACE_LOG_LEVEL = logging.DEBUG - 5
TRACE_LOG_STR = 'TRACE'
WARNING_LEVEL = logging.WARNING

SHORTER_LOG_FMT = '%(levelname)s: %(message)s'
SHORT_LOG_FMT = '%(name)s: %(levelname)s: %(message)s'
DETAIL_LOG_FMT = '%(name)s: %(levelname)s: [%(filename)s - %(funcName)10s() ]: %(message)s'
TIMED_DETAIL_LOG_FMT = '%(asctime)s: %(name)s: %(levelname)s: [%(filename)s:%(lineno)d - %(funcName)10s() ]: ' \
                       '%(message)s'

type V_LITERAL = Literal['v', 'vv', 'vvv']
type Q_LITERAL = Literal['q', 'qq']

VQ_LEVEL_MAP: dict[str, int] = {
    'v': logging.INFO,
    'vv': logging.DEBUG,
    'vvv': TRACE_LOG_LEVEL,
    'q': logging.ERROR,
    'qq': logging.CRITICAL,
}
"""
Verbosity/quietness flags to log levels. No flag keeps ``WARNING``.
"""
