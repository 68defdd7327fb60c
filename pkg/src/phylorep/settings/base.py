#!/usr/bin/env python3
# coding=utf-8

"""
Interfaces for configuration values.
"""
from abc import abstractmethod
from typing import Protocol


class Setting[T](Protocol):
    """
    A configuration value resolved on access.
    """

    @property
    @abstractmethod
    def value(self) -> T:
        """
        :return: the resolved value.
        """
        ...

    @abstractmethod
    def clone_with(self, **kwargs) -> 'Setting[T]':
        """
        :return: a copy of this setting with the fields named in ``kwargs`` replaced.
        """
        ...
