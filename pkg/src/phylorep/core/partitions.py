#!/usr/bin/env python3
# coding=utf-8

"""
Partitions of the leaf set and collections of them.
"""
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from phylorep.constants import DEFAULT_VIOLATION_CAP
from phylorep.core.leaves import LeafSet
from phylorep.core.report import ValidationReport, ViolationCollector
from phylorep.errors import InputError
from phylorep.utils import set_key, fmt_set, sort_labels, triples_of, join_labels, SetKey


@dataclass(frozen=True)
class Partition:
    """
    A set of nonempty, pairwise disjoint parts. Whether the parts cover the leaf set is checked by
    ``PartitionCollection`` which knows the leaf set.

    >>> p = Partition.of({'3', '4', '5'}, {'1'}, {'2'})
    >>> str(p)
    '1|2|345'
    >>> p.separates({'1', '2', '4'}), p.separates({'1', '3', '4'})
    (True, False)

    >>> Partition.of({'1', '2'}, {'2', '3'})
    Traceback (most recent call last):
    phylorep.errors.InputError: Parts of a partition must be disjoint, {2} repeats.
    """
    parts: frozenset[frozenset[str]]

    def __post_init__(self):
        parts = frozenset(frozenset(p) for p in self.parts)
        if any(not p for p in parts):
            raise InputError('Parts of a partition must be nonempty.')
        counts = Counter(label for p in parts for label in p)
        repeated = {label for label, c in counts.items() if c > 1}
        if repeated:
            raise InputError(f"Parts of a partition must be disjoint, {fmt_set(repeated)} repeats.")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, *parts: Iterable[str]) -> 'Partition':
        return cls(frozenset(frozenset(p) for p in parts))

    @cached_property
    def sorted_parts(self) -> tuple[frozenset[str], ...]:
        """
        Parts ordered by their naturally sorted labels.
        """
        return tuple(sorted(self.parts, key=set_key))

    @cached_property
    def _part_of(self) -> dict[str, frozenset[str]]:
        return {label: p for p in self.parts for label in p}

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self._part_of)

    def part_of(self, label: str) -> frozenset[str]:
        """
        :raise InputError: if ``label`` is in no part.
        """
        try:
            return self._part_of[label]
        except KeyError:
            raise InputError(f"{label!r} is in no part of {self}.") from None

    def separates(self, triple: Iterable[str]) -> bool:
        """
        :return: ``True`` if the elements of ``triple`` lie in three distinct parts.
        """
        return len({self.part_of(label) for label in triple}) == 3

    def sort_key(self) -> tuple[SetKey, ...]:
        return tuple(set_key(p) for p in self.sorted_parts)

    def to_json_value(self) -> list[list[str]]:
        return [list(sort_labels(p)) for p in self.sorted_parts]

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[frozenset[str]]:
        return iter(self.sorted_parts)

    def __str__(self) -> str:
        return '|'.join(join_labels(p) for p in self.sorted_parts)


@dataclass(frozen=True)
class PartitionCollection:
    """
    A set of partitions of ``leaves``; duplicate partitions collapse.

    >>> pc = PartitionCollection(LeafSet.range(3), [Partition.of('1', '2', '3'), Partition.of('1', '2', '3')])
    >>> len(pc)
    1

    >>> PartitionCollection(LeafSet.range(3), [Partition.of('12')])
    Traceback (most recent call last):
    phylorep.errors.InputError: Partition 12 does not cover the leaf set {1,2,3}, missing {3}
    """
    leaves: LeafSet
    partitions: frozenset[Partition]

    def __post_init__(self):
        partitions = frozenset(self.partitions)
        for p in partitions:
            self.leaves.require_subset(p.support, f"Partition {p}:")
            missing = self.leaves.as_set - p.support
            if missing:
                raise InputError(f"Partition {p} does not cover the leaf set {self.leaves}, missing {fmt_set(missing)}")
        object.__setattr__(self, 'partitions', partitions)

    @classmethod
    def of(cls, leaves: LeafSet, *partitions: Partition) -> 'PartitionCollection':
        return cls(leaves, frozenset(partitions))

    @cached_property
    def ordered(self) -> tuple[Partition, ...]:
        return tuple(sorted(self.partitions, key=Partition.sort_key))

    def separators(self, triple: Iterable[str]) -> list[Partition]:
        """
        :return: partitions of the collection which separate ``triple``, in canonical order.
        """
        triple = self.leaves.require_subset(triple, 'triple')
        return [p for p in self.ordered if p.separates(triple)]

    def without(self, p: Partition) -> 'PartitionCollection':
        return PartitionCollection(self.leaves, self.partitions - {p})

    def __len__(self) -> int:
        return len(self.partitions)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.ordered)

    def __contains__(self, p: object) -> bool:
        return p in self.partitions


def validate_partitions(pc: PartitionCollection, cap: int = DEFAULT_VIOLATION_CAP) -> ValidationReport:
    """
    Check (P1) to (P4).

    * ``P1``: every partition has at least 3 parts; witness is the partition.
    * ``P2``: every singleton is a part of some partition; witness is the singleton.
    * ``P3``: no set is a part of two partitions; witness is the part and the partitions having it.
    * ``P4``: the complement of a part with more than one element is a part; witness is the part.

    >>> n3 = LeafSet.range(3)
    >>> validate_partitions(PartitionCollection.of(n3, Partition.of('1', '2', '3'))).valid
    True
    >>> report = validate_partitions(PartitionCollection.of(n3, Partition.of('12', '3')))
    >>> sorted(report.axioms())
    ['P1', 'P2']
    """
    vc = ViolationCollector('partitions', cap)
    owners: dict[frozenset[str], list[Partition]] = {}
    for p in pc:
        if len(p) < 3:
            vc.add('P1', p, message=f"partition {p} has {len(p)} parts")
        for part in p.parts:
            owners.setdefault(part, []).append(p)
    for label in pc.leaves:
        if frozenset((label,)) not in owners:
            vc.add('P2', frozenset((label,)), message=f"{{{label}}} is not a part of any partition")
    for part in sorted(owners, key=set_key):
        if len(owners[part]) > 1:
            vc.add('P3', part, *owners[part],
                   message=f"{fmt_set(part)} is a part of {len(owners[part])} partitions")
    for part in sorted(owners, key=set_key):
        if len(part) > 1 and pc.leaves.as_set - part not in owners:
            vc.add('P4', part, message=f"complement of {fmt_set(part)} is not a part")
    return vc.report()


def check_unique_separation(pc: PartitionCollection, cap: int = DEFAULT_VIOLATION_CAP) -> ValidationReport:
    """
    The alternative characterisation of phylogenetic collections: (P1) holds and every triple of leaves is separated
    by exactly one partition. Agrees with ``validate_partitions`` on validity.

    Violation ids: ``P1`` as in ``validate_partitions`` and ``separation`` with the triple followed by every partition
    separating it (none or several).

    >>> n4 = LeafSet.range(4)
    >>> check_unique_separation(PartitionCollection.of(n4, Partition.of('12', '3', '4'),
    ...                                                Partition.of('1', '2', '34'))).valid
    True
    >>> report = check_unique_separation(PartitionCollection.of(n4, Partition.of('12', '3', '4')))
    >>> [''.join(sorted(v.witness[0])) for v in report.of('separation')]
    ['123', '124']
    """
    vc = ViolationCollector('partitions', cap)
    for p in pc:
        if len(p) < 3:
            vc.add('P1', p, message=f"partition {p} has {len(p)} parts")
    for triple in triples_of(pc.leaves):
        if vc.full:
            break
        seps = pc.separators(triple)
        if len(seps) != 1:
            vc.add('separation', triple, *seps,
                   message=f"{fmt_set(triple)} is separated by {len(seps)} partitions")
    return vc.report()
