#!/usr/bin/env python3
# coding=utf-8

"""
Cuts (splits) of the leaf set and sets of them.
"""
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from phylorep.constants import DEFAULT_VIOLATION_CAP
from phylorep.core.leaves import LeafSet
from phylorep.core.report import ValidationReport, ViolationCollector
from phylorep.errors import InputError
from phylorep.utils import label_key, set_key, fmt_set, sort_labels, SetKey


@dataclass(frozen=True)
class Cut:
    """
    Bipartition ``side_a | side_b`` with both sides of at least two labels. The side holding the smallest label is
    stored as ``side_a`` so that ``(A|B) == (B|A)``.

    >>> Cut.of('345', '12') == Cut.of('12', '345')
    True
    >>> str(Cut.of('345', '12'))
    '12|345'

    >>> Cut.of('1', '2345')
    Traceback (most recent call last):
    phylorep.errors.InputError: Both sides of a cut need at least 2 labels, got {1}|{2,3,4,5}.
    """
    side_a: frozenset[str]
    side_b: frozenset[str]

    def __post_init__(self):
        a, b = frozenset(self.side_a), frozenset(self.side_b)
        if len(a) < 2 or len(b) < 2:
            raise InputError(f"Both sides of a cut need at least 2 labels, got {fmt_set(a)}|{fmt_set(b)}.")
        if a & b:
            raise InputError(f"Sides of a cut must be disjoint, {fmt_set(a & b)} on both sides.")
        if label_key(min(b, key=label_key)) < label_key(min(a, key=label_key)):
            a, b = b, a
        object.__setattr__(self, 'side_a', a)
        object.__setattr__(self, 'side_b', b)

    @classmethod
    def of(cls, side_a: Iterable[str], side_b: Iterable[str]) -> 'Cut':
        return cls(frozenset(side_a), frozenset(side_b))

    @classmethod
    def from_cluster(cls, cluster: Iterable[str], leaves: LeafSet) -> 'Cut':
        """
        :return: the cut of ``leaves`` having ``cluster`` as one side.
        """
        cluster = leaves.require_subset(cluster, 'cluster')
        return cls(cluster, leaves.as_set - cluster)

    @property
    def sides(self) -> tuple[frozenset[str], frozenset[str]]:
        return self.side_a, self.side_b

    @property
    def support(self) -> frozenset[str]:
        return self.side_a | self.side_b

    def side_of(self, label: str) -> frozenset[str]:
        return self.side_a if label in self.side_a else self.side_b

    def intersections(self, other: 'Cut') -> tuple[frozenset[str], ...]:
        """
        :return: ``A1∩A2, A1∩B2, B1∩A2, B1∩B2`` in that order.
        """
        return (self.side_a & other.side_a, self.side_a & other.side_b,
                self.side_b & other.side_a, self.side_b & other.side_b)

    def sort_key(self) -> tuple[SetKey, SetKey]:
        return set_key(self.side_a), set_key(self.side_b)

    def to_json_value(self) -> list[list[str]]:
        return [list(sort_labels(self.side_a)), list(sort_labels(self.side_b))]

    def __str__(self) -> str:
        sep = '' if all(len(label) == 1 for label in self.support) else ','
        return f"{sep.join(sort_labels(self.side_a))}|{sep.join(sort_labels(self.side_b))}"


@dataclass(frozen=True)
class CutSet:
    leaves: LeafSet
    cuts: frozenset[Cut]

    def __post_init__(self):
        """
        Cuts of ``leaves``. Every cut must bipartition the whole leaf set.

        >>> CutSet(LeafSet.range(5), [Cut.of('12', '34')])
        Traceback (most recent call last):
        phylorep.errors.InputError: Cut 12|34 does not cover the leaf set {1,2,3,4,5}, missing {5}
        """
        cuts = frozenset(self.cuts)
        for c in cuts:
            self.leaves.require_subset(c.support, f"Cut {c}:")
            missing = self.leaves.as_set - c.support
            if missing:
                raise InputError(f"Cut {c} does not cover the leaf set {self.leaves}, missing {fmt_set(missing)}")
        object.__setattr__(self, 'cuts', cuts)

    @classmethod
    def of(cls, leaves: LeafSet, *cuts: Cut) -> 'CutSet':
        return cls(leaves, frozenset(cuts))

    @classmethod
    def empty(cls, leaves: LeafSet) -> 'CutSet':
        return cls(leaves, frozenset())

    @cached_property
    def ordered(self) -> tuple[Cut, ...]:
        """
        Cuts in canonical order: lexicographic on the sorted ``side_a`` then ``side_b``.
        """
        return tuple(sorted(self.cuts, key=Cut.sort_key))

    def __len__(self) -> int:
        return len(self.cuts)

    def __iter__(self) -> Iterator[Cut]:
        return iter(self.ordered)

    def __contains__(self, c: object) -> bool:
        return c in self.cuts


def clusters(cs: CutSet) -> frozenset[frozenset[str]]:
    """
    Every side of every cut.

    >>> cs = CutSet.of(LeafSet.range(5), Cut.of('12', '345'), Cut.of('123', '45'))
    >>> sorted(''.join(sorted(c)) for c in clusters(cs))
    ['12', '123', '345', '45']
    """
    return frozenset(side for c in cs.cuts for side in c.sides)


def validate_cuts(cs: CutSet, cap: int = DEFAULT_VIOLATION_CAP) -> ValidationReport:
    """
    Check axiom (C): for any two cuts one of the four side intersections is empty. Violations ``C`` carry both cuts
    and the four intersections.

    Distinct cuts satisfying (C) have exactly one empty intersection; a pair with more than one is reported as
    ``C-exact``. Two empty intersections force equal cuts, so on well-formed input ``C-exact`` never shows.

    >>> n9 = LeafSet.range(9)
    >>> report = validate_cuts(CutSet.of(n9, Cut.of('12', '3456789'), Cut.of('13', '2456789')))
    >>> [v.axiom for v in report.violations]
    ['C']
    >>> [fmt_set(s) for s in report.violations[0].witness[2:]]
    ['{1}', '{2}', '{3}', '{4,5,6,7,8,9}']
    """
    vc = ViolationCollector('cuts', cap)
    for c1, c2 in combinations(cs.ordered, 2):
        if vc.full:
            break
        parts = c1.intersections(c2)
        empty = sum(1 for p in parts if not p)
        if empty == 0:
            vc.add('C', c1, c2, *parts, message=f"cuts {c1} and {c2} are incompatible")
        elif empty > 1:
            vc.add('C-exact', c1, c2, *parts, message=f"cuts {c1} and {c2} have {empty} empty intersections")
    return vc.report()
