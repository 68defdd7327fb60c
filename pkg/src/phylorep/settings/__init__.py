#!/usr/bin/env python3
# coding=utf-8

"""
Configuration values read from lists of candidates, usually environment variables.
"""

# region settings.base re-exports
from phylorep.settings.base import Setting as Setting
# endregion

# region settings.list_setting re-exports
from phylorep.settings.list_setting import ListSetting as ListSetting
# endregion

# region settings.env re-exports
from phylorep.settings.env import EnvListSetting as EnvListSetting
from phylorep.settings.env import parse_max_n as parse_max_n
from phylorep.settings.env import max_n_setting as max_n_setting
# endregion
