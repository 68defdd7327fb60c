#!/usr/bin/env python3
# coding=utf-8

"""
Crosses ``(i,j|k,l)`` and crossing relations.

Validation cost is quadratic in the number of crosses for (X2) and ``|X|·|N|`` for (X3), fine for leaf sets of a
dozen labels.
"""
from collections import defaultdict
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from phylorep.constants import DEFAULT_VIOLATION_CAP
from phylorep.core.leaves import LeafSet
from phylorep.core.report import ValidationReport, ViolationCollector
from phylorep.errors import InputError
from phylorep.utils import set_key, sort_labels, SetKey


@dataclass(frozen=True)
class Cross:
    """
    Unordered pair of disjoint 2-element sets. Canonically the pair with the lexicographically smaller sorted labels
    is ``pair_a``.

    >>> Cross.of('4', '3', '2', '1') == Cross.of('1', '2', '3', '4')
    True
    >>> str(Cross.of('4', '3', '2', '1'))
    '(1,2|3,4)'

    >>> Cross.of('1', '2', '2', '3')
    Traceback (most recent call last):
    phylorep.errors.InputError: A cross needs four distinct labels, got ('1', '2', '2', '3').
    """
    pair_a: frozenset[str]
    pair_b: frozenset[str]

    def __post_init__(self):
        a, b = frozenset(self.pair_a), frozenset(self.pair_b)
        if len(a) != 2 or len(b) != 2 or a & b:
            raise InputError(f"A cross needs two disjoint pairs, got {sort_labels(a)}|{sort_labels(b)}.")
        if set_key(b) < set_key(a):
            a, b = b, a
        object.__setattr__(self, 'pair_a', a)
        object.__setattr__(self, 'pair_b', b)

    @classmethod
    def of(cls, i: str, j: str, k: str, l: str) -> 'Cross':
        if len({i, j, k, l}) != 4:
            raise InputError(f"A cross needs four distinct labels, got {(i, j, k, l)!r}.")
        return cls(frozenset((i, j)), frozenset((k, l)))

    @property
    def support(self) -> frozenset[str]:
        return self.pair_a | self.pair_b

    def orderings(self) -> Iterator[tuple[str, str, str, str]]:
        """
        All 8 tuples ``(i, j, k, l)`` that denote this cross.

        >>> len(set(Cross.of('1', '2', '3', '4').orderings()))
        8
        """
        for p, q in ((self.pair_a, self.pair_b), (self.pair_b, self.pair_a)):
            i, j = sort_labels(p)
            k, l = sort_labels(q)
            for first in ((i, j), (j, i)):
                for second in ((k, l), (l, k)):
                    yield *first, *second

    def sort_key(self) -> tuple[SetKey, SetKey]:
        return set_key(self.pair_a), set_key(self.pair_b)

    def to_json_value(self) -> list[list[str]]:
        return [list(sort_labels(self.pair_a)), list(sort_labels(self.pair_b))]

    def __str__(self) -> str:
        return f"({','.join(sort_labels(self.pair_a))}|{','.join(sort_labels(self.pair_b))})"


@dataclass(frozen=True)
class CrossingRelation:
    """
    A set of crosses over ``leaves``.
    """
    leaves: LeafSet
    crosses: frozenset[Cross]

    def __post_init__(self):
        crosses = frozenset(self.crosses)
        for x in crosses:
            self.leaves.require_subset(x.support, f"Cross {x}:")
        object.__setattr__(self, 'crosses', crosses)

    @classmethod
    def of(cls, leaves: LeafSet, *crosses: Cross) -> 'CrossingRelation':
        return cls(leaves, frozenset(crosses))

    @cached_property
    def ordered(self) -> tuple[Cross, ...]:
        return tuple(sorted(self.crosses, key=Cross.sort_key))

    def has(self, i: str, j: str, k: str, l: str) -> bool:
        """
        Membership test taking the cross as four labels; ``False`` for repeated labels.
        """
        if len({i, j, k, l}) != 4:
            return False
        return Cross(frozenset((i, j)), frozenset((k, l))) in self.crosses

    def __len__(self) -> int:
        return len(self.crosses)

    def __iter__(self) -> Iterator[Cross]:
        return iter(self.ordered)

    def __contains__(self, x: object) -> bool:
        return x in self.crosses


def validate_crossing(xr: CrossingRelation, cap: int = DEFAULT_VIOLATION_CAP) -> ValidationReport:
    """
    Check (X1) to (X3) by exhaustive iteration.

    * ``X1``: witness is the cross and the alternative pairing found in the relation.
    * ``X2``: witness is ``(i,j|k,l)``, ``(i,j|k,m)`` and the missing ``(i,j|l,m)``.
    * ``X3``: witness is the cross read as ``(i,j|k,l)`` and the leaf ``m``.

    >>> n5 = LeafSet.range(5)
    >>> report = validate_crossing(CrossingRelation.of(n5, Cross.of('1', '2', '3', '4')))
    >>> sorted({v.witness[-1] for v in report.of('X3')})
    ['5']
    >>> report = validate_crossing(CrossingRelation.of(LeafSet.range(4), Cross.of('1', '2', '3', '4'),
    ...                                               Cross.of('1', '3', '2', '4')))
    >>> report.axioms()
    {'X1'}
    """
    vc = ViolationCollector('crossing', cap)
    _check_x1(xr, vc)
    _check_x2(xr, vc)
    _check_x3(xr, vc)
    return vc.report()


def _check_x1(xr: CrossingRelation, vc: ViolationCollector) -> None:
    for x in xr:
        i, j = sort_labels(x.pair_a)
        k, l = sort_labels(x.pair_b)
        for other in (Cross.of(i, k, j, l), Cross.of(i, l, j, k)):
            if other in xr.crosses and x.sort_key() < other.sort_key():
                vc.add('X1', x, other, message=f"both {x} and {other} are crosses")


def _check_x2(xr: CrossingRelation, vc: ViolationCollector) -> None:
    opposite: dict[frozenset[str], list[frozenset[str]]] = defaultdict(list)
    for x in xr:
        opposite[x.pair_a].append(x.pair_b)
        opposite[x.pair_b].append(x.pair_a)
    for pair in sorted(opposite, key=set_key):
        if vc.full:
            return
        for q1, q2 in combinations(opposite[pair], 2):
            shared = q1 & q2
            if len(shared) != 1:
                continue
            (l,), (m,) = q1 - shared, q2 - shared
            missing = Cross(pair, frozenset((l, m)))
            if missing not in xr.crosses:
                vc.add('X2', Cross(pair, q1), Cross(pair, q2), missing, message=f"{missing} is missing")


def _check_x3(xr: CrossingRelation, vc: ViolationCollector) -> None:
    for x in xr:
        if vc.full:
            return
        for m in xr.leaves:
            if m in x.support:
                continue
            for i, j, k, l in x.orderings():
                if not (xr.has(i, j, k, m) or xr.has(i, m, k, l)):
                    vc.add('X3', (i, j, k, l), m,
                           message=f"neither ({i},{j}|{k},{m}) nor ({i},{m}|{k},{l}) is a cross")
                    break


def crosses_of(labels_a: Iterable[str], labels_b: Iterable[str]) -> Iterator[Cross]:
    """
    Every cross with one pair from ``labels_a`` and the other from ``labels_b``.

    >>> [str(x) for x in crosses_of('123', '45')]
    ['(1,2|4,5)', '(1,3|4,5)', '(2,3|4,5)']
    """
    for p in combinations(sort_labels(labels_a), 2):
        for q in combinations(sort_labels(labels_b), 2):
            yield Cross(frozenset(p), frozenset(q))
