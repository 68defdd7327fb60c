#!/usr/bin/env python3
# coding=utf-8

"""
Settings read from environment variables.
"""
import os
from collections.abc import Callable
from typing import override

from vt.utils.errors.warnings import vt_warn

from phylorep.constants import PHYLOREP_MAX_N_ENV_VAR, DEFAULT_MAX_N, HARD_MAX_N, MIN_LEAVES
from phylorep.errors import InputError
from phylorep.settings.list_setting import ListSetting


class EnvListSetting[T](ListSetting[T]):
    def __init__(self, env_list: list[str], parser: Callable[[str], T], default: T):
        """
        Candidates are read from ``env_list`` on every access, the first set variable wins.

        :param env_list: environment variables, highest precedence first.
        :param parser: turns the chosen raw value into a ``T``.
        :param default: value when no variable is set.
        """
        super().__init__([], parser, default)
        self._env_list = env_list

    @property
    def env_list(self) -> list[str]:
        return self._env_list

    @override
    @property
    def candidates(self) -> list[str | None]:
        return [os.getenv(e) for e in self.env_list]

    @override
    def clone_with(self, **kwargs) -> 'EnvListSetting[T]':
        env_list = kwargs.pop('env_list', self.env_list.copy())
        parser = kwargs.pop('parser', self.parser)
        default = kwargs.pop('default', self.default)
        return EnvListSetting[T](env_list, parser, default)

    def clone_with_envs(self, *envs: str, low_precedence: bool = False) -> 'EnvListSetting[T]':
        """
        Clone with extra environment variables, ahead of the present ones unless ``low_precedence``.

        >>> s = EnvListSetting(['PHYLOREP_MAX_N'], int, 7)
        >>> s.clone_with_envs('PHYLOREP_CI_MAX_N').env_list
        ['PHYLOREP_CI_MAX_N', 'PHYLOREP_MAX_N']
        >>> s.clone_with_envs('PHYLOREP_CI_MAX_N', low_precedence=True).env_list
        ['PHYLOREP_MAX_N', 'PHYLOREP_CI_MAX_N']
        """
        env_list = self.env_list + list(envs) if low_precedence else list(envs) + self.env_list
        return self.clone_with(env_list=env_list)


def parse_max_n(raw: str) -> int:
    """
    >>> parse_max_n(' 6 ')
    6
    >>> parse_max_n('12')
    8

    >>> parse_max_n('two')
    Traceback (most recent call last):
    phylorep.errors.InputError: PHYLOREP_MAX_N must be an integer, got 'two'.

    :raise InputError: on a non-integer or a value below 3.
    """
    try:
        n = int(raw.strip())
    except ValueError as e:
        raise InputError(f"{PHYLOREP_MAX_N_ENV_VAR} must be an integer, got {raw!r}.") from e
    if n < MIN_LEAVES:
        raise InputError(f"{PHYLOREP_MAX_N_ENV_VAR} must be at least {MIN_LEAVES}, got {n}.")
    if n > HARD_MAX_N:
        vt_warn(f"{PHYLOREP_MAX_N_ENV_VAR}: '{n}' is greater than the max supported: '{HARD_MAX_N}'. "
                f"Defaulting to {HARD_MAX_N}.")
        n = HARD_MAX_N
    return n


def max_n_setting() -> EnvListSetting[int]:
    """
    Largest leaf count the command line front end enumerates: ``PHYLOREP_MAX_N``, else 7.
    """
    return EnvListSetting[int]([PHYLOREP_MAX_N_ENV_VAR], parse_max_n, DEFAULT_MAX_N)
