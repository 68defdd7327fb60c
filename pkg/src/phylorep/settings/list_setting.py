#!/usr/bin/env python3
# coding=utf-8

"""
Settings resolved from a list of candidate values.
"""
from collections.abc import Callable
from typing import override

from phylorep.settings.base import Setting
from phylorep.utils import get_first_non_none


class ListSetting[T](Setting[T]):
    def __init__(self, candidates: list[str | None], parser: Callable[[str], T], default: T):
        """
        The first non-``None`` candidate, parsed, else ``default``.

        >>> ListSetting([None, '5', '6'], int, 7).value
        5
        >>> ListSetting([None], int, 7).value
        7

        >>> ListSetting(None, int, 7) # noqa
        Traceback (most recent call last):
        ValueError: Candidate list must not be None.

        :param candidates: raw values, highest precedence first.
        :param parser: turns the chosen raw value into a ``T``.
        :param default: value when every candidate is ``None``.
        """
        if candidates is None:
            raise ValueError('Candidate list must not be None.')
        self._candidates = candidates
        self.parser = parser
        self.default = default

    @property
    def candidates(self) -> list[str | None]:
        return self._candidates

    @override
    @property
    def value(self) -> T:
        raw = get_first_non_none(self.candidates)
        return self.default if raw is None else self.parser(raw)

    @override
    def clone_with(self, **kwargs) -> 'ListSetting[T]':
        candidates = kwargs.pop('candidates', self.candidates.copy())
        parser = kwargs.pop('parser', self.parser)
        default = kwargs.pop('default', self.default)
        return ListSetting[T](candidates, parser, default)
