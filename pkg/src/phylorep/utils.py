#!/usr/bin/env python3
# coding=utf-8

"""
Utility functions for ordering and printing leaf labels.
"""
from collections.abc import Iterable
from itertools import combinations

type LabelKey = tuple[int, int, str]
"""
Sort key of a single leaf label.
"""

type SetKey = tuple[LabelKey, ...]
"""
Sort key of a set of leaf labels.
"""


def label_key(label: str) -> LabelKey:
    """
    Natural order of leaf labels: labels of ASCII digits compare numerically and come first, everything else
    compares as plain strings.

    Examples:

    >>> sorted(['10', '9', 'b', '1', 'a'], key=label_key)
    ['1', '9', '10', 'a', 'b']
    >>> label_key('²')
    (1, 0, '²')

    :param label: a leaf label.
    :return: the sort key of ``label``.
    """
    if label.isascii() and label.isdecimal():
        return 0, int(label), label
    return 1, 0, label


def sort_labels(labels: Iterable[str]) -> tuple[str, ...]:
    """
    >>> sort_labels({'3', '12', '2'})
    ('2', '3', '12')

    :param labels: leaf labels.
    :return: ``labels`` in natural order.
    """
    return tuple(sorted(labels, key=label_key))


def set_key(labels: Iterable[str]) -> SetKey:
    """
    Lexicographic key of a set of labels, i.e. the key of its naturally sorted elements.

    >>> set_key({'2', '1'}) < set_key({'1', '3'})
    True

    :param labels: a set of leaf labels.
    :return: sort key for the set.
    """
    return tuple(label_key(label) for label in sort_labels(labels))


def fmt_set(labels: Iterable[str]) -> str:
    """
    >>> fmt_set({'5', '4', '12'})
    '{4,5,12}'

    :param labels: a set of leaf labels.
    :return: brace-enclosed, naturally ordered representation of ``labels``.
    """
    return '{' + ','.join(sort_labels(labels)) + '}'


def triples_of(labels: Iterable[str]) -> list[frozenset[str]]:
    """
    >>> [''.join(sort_labels(t)) for t in triples_of(['1', '2', '3', '4'])]
    ['123', '124', '134', '234']

    :param labels: leaf labels.
    :return: every 3-element subset of ``labels``, in natural lexicographic order.
    """
    return [frozenset(t) for t in combinations(sort_labels(labels), 3)]


def command_or_file(command_name: str, file_name: str) -> str:
    """
    Name loggers after the command when a module runs as ``__main__`` and after the module otherwise.

    Examples:

    >>> command_or_file('phylorep', 'phylorep.cli')
    'phylorep.cli'

    >>> command_or_file('phylorep', '__main__')
    'phylorep'

    :param command_name: name of the console command.
    :param file_name: usually ``__name__`` of the calling module.
    :return: ``file_name`` if ``file_name`` is not ``__main__`` else ``command_name``.
    """
    return command_name if file_name == '__main__' else file_name


def join_labels(labels: Iterable[str]) -> str:
    """
    Compact form of a set of labels: juxtaposed when every label is a single character, comma separated otherwise.

    >>> join_labels({'3', '1', '2'})
    '123'
    >>> join_labels({'10', '9'})
    '9,10'

    :param labels: a set of leaf labels.
    :return: the naturally ordered labels joined into one string.
    """
    labels = sort_labels(labels)
    sep = '' if all(len(label) == 1 for label in labels) else ','
    return sep.join(labels)


def get_first_non_none[T](lst: list[T | None], default: T | None = None) -> T | None:
    """
    Get first non ``None`` item from the list ``lst`` else ``default``.

    >>> get_first_non_none([None, '3', '5'], '7')
    '3'
    >>> get_first_non_none([None, None], '7')
    '7'
    """
    for elem in lst:
        if elem is not None:
            return elem
    return default
