#!/usr/bin/env python3
# coding=utf-8

"""
The leaf set every structure is defined over.
"""
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from phylorep.constants import MIN_LEAVES, LABEL_PATTERN
from phylorep.errors import LeafSetError, InputError
from phylorep.utils import sort_labels, fmt_set

_LABEL = re.compile(LABEL_PATTERN)


@dataclass(frozen=True)
class LeafSet:
    labels: tuple[str, ...]

    def __post_init__(self):
        """
        Ordered set of at least three distinct leaf labels made of ``[A-Za-z0-9_.|-]``, so every label is also a
        Newick name. Labels are kept in natural order.

        >>> LeafSet(('3', '1', '2')).labels
        ('1', '2', '3')

        >>> LeafSet(('1', '2'))
        Traceback (most recent call last):
        phylorep.errors.LeafSetError: A leaf set needs at least 3 labels, got 2.

        >>> LeafSet(('1', '2', '2'))
        Traceback (most recent call last):
        phylorep.errors.LeafSetError: Leaf labels must be distinct, repeated: {2}

        >>> LeafSet(('a b', 'c', 'd'))
        Traceback (most recent call last):
        phylorep.errors.LeafSetError: Leaf label 'a b' has characters outside [A-Za-z0-9_.|-].
        """
        labels = tuple(self.labels)
        if any(not isinstance(label, str) or label == '' for label in labels):
            raise LeafSetError(f"Leaf labels must be nonempty strings, got {labels!r}.")
        for label in labels:
            if not _LABEL.fullmatch(label):
                raise LeafSetError(f"Leaf label {label!r} has characters outside [A-Za-z0-9_.|-].")
        repeated = {label for label in labels if labels.count(label) > 1}
        if repeated:
            raise LeafSetError(f"Leaf labels must be distinct, repeated: {fmt_set(repeated)}")
        if len(labels) < MIN_LEAVES:
            raise LeafSetError(f"A leaf set needs at least {MIN_LEAVES} labels, got {len(labels)}.")
        object.__setattr__(self, 'labels', sort_labels(labels))

    @classmethod
    def of(cls, *labels: str) -> 'LeafSet':
        return cls(labels)

    @classmethod
    def from_iterable(cls, labels: Iterable[str]) -> 'LeafSet':
        return cls(tuple(labels))

    @classmethod
    def range(cls, n: int) -> 'LeafSet':
        """
        >>> LeafSet.range(4).labels
        ('1', '2', '3', '4')

        :param n: number of leaves.
        :return: the leaf set ``"1".."n"``.
        """
        return cls(tuple(str(i) for i in range(1, n + 1)))

    @cached_property
    def as_set(self) -> frozenset[str]:
        return frozenset(self.labels)

    @property
    def smallest(self) -> str:
        return self.labels[0]

    def require_subset(self, labels: Iterable[str], what: str = 'labels') -> frozenset[str]:
        """
        :raise InputError: if some label is not a leaf.
        :return: ``labels`` as a frozenset.
        """
        labels = frozenset(labels)
        unknown = labels - self.as_set
        if unknown:
            raise InputError(f"{what} {fmt_set(unknown)} not in leaf set {fmt_set(self.labels)}")
        return labels

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.as_set

    def __str__(self) -> str:
        return fmt_set(self.labels)
