#!/usr/bin/env python3
# coding=utf-8

"""
Equivalence relations on the triples of the leaf set and diversity of triple sets.
"""
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from phylorep.constants import DEFAULT_VIOLATION_CAP
from phylorep.core.leaves import LeafSet
from phylorep.core.report import ValidationReport, ViolationCollector
from phylorep.errors import InputError
from phylorep.utils import set_key, fmt_set, sort_labels, triples_of

type Triple = frozenset[str]
type TripleClass = frozenset[Triple]


def class_key(cls: Iterable[Triple]) -> tuple:
    """
    Classes are ordered by their sorted triples.
    """
    return tuple(sorted(set_key(t) for t in cls))


@dataclass(frozen=True)
class TripleEquivalence:
    """
    A partition of all triples of ``leaves`` into classes.

    >>> n4 = LeafSet.range(4)
    >>> TripleEquivalence.of(n4, ['123', '124'], ['134'])
    Traceback (most recent call last):
    phylorep.errors.InputError: Classes do not cover the triples {2,3,4}.
    """
    leaves: LeafSet
    classes: frozenset[TripleClass]

    def __post_init__(self):
        classes = frozenset(frozenset(frozenset(t) for t in c) for c in self.classes)
        seen: set[Triple] = set()
        for c in classes:
            if not c:
                raise InputError('Classes of a triple equivalence must be nonempty.')
            for t in c:
                self.leaves.require_subset(t, 'triple')
                if len(t) != 3:
                    raise InputError(f"{fmt_set(t)} is not a triple.")
                if t in seen:
                    raise InputError(f"Triple {fmt_set(t)} is in more than one class.")
                seen.add(t)
        missing = [t for t in triples_of(self.leaves) if t not in seen]
        if missing:
            raise InputError(f"Classes do not cover the triples {', '.join(fmt_set(t) for t in missing)}.")
        object.__setattr__(self, 'classes', classes)

    @classmethod
    def of(cls, leaves: LeafSet, *classes: Iterable[Iterable[str]]) -> 'TripleEquivalence':
        return cls(leaves, frozenset(frozenset(frozenset(t) for t in c) for c in classes))

    @cached_property
    def ordered(self) -> tuple[TripleClass, ...]:
        return tuple(sorted(self.classes, key=class_key))

    @cached_property
    def _class_of(self) -> dict[Triple, TripleClass]:
        return {t: c for c in self.classes for t in c}

    def class_of(self, triple: Iterable[str]) -> TripleClass:
        return self._class_of[frozenset(triple)]

    def sizes(self) -> list[int]:
        return sorted(len(c) for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[TripleClass]:
        return iter(self.ordered)


def sorted_triples(cls: Iterable[Triple]) -> list[Triple]:
    return sorted(cls, key=set_key)


def fmt_class(cls: Iterable[Triple]) -> str:
    return '{' + ', '.join(fmt_set(t) for t in sorted_triples(cls)) + '}'


def is_diverse(triples: Iterable[Iterable[str]], leaves: LeafSet,
               cap: int = DEFAULT_VIOLATION_CAP) -> ValidationReport:
    """
    Check that a set of triples is diverse.

    * ``E0``: the set is empty.
    * ``D1``: witness is a triple ``{i,j,k}`` of the set and a leaf ``l`` such that none of ``{i,j,l}``,
      ``{i,k,l}``, ``{j,k,l}`` is in the set.
    * ``D2``: witness is a triple ``{x,y,z}`` outside the set whose three pairs are each covered by a triple of the set,
      followed by those covering triples.

    >>> n5 = LeafSet.range(5)
    >>> is_diverse(['123', '124', '125'], n5).valid
    True
    >>> [(v.axiom, fmt_set(v.witness[0]), v.witness[1]) for v in is_diverse(['124', '125'], n5).violations]
    [('D1', '{1,2,4}', '3'), ('D1', '{1,2,5}', '3')]
    """
    vc = ViolationCollector('equivalence', cap)
    _check_diverse(frozenset(frozenset(t) for t in triples), leaves, vc)
    return vc.report()


def _check_diverse(cls: TripleClass, leaves: LeafSet, vc: ViolationCollector, *prefix) -> None:
    if not cls:
        vc.add('E0', *prefix, message='empty class')
        return
    for t in sorted_triples(cls):
        i, j, k = sort_labels(t)
        for l in leaves:
            if l in t:
                continue
            if not ({i, j, l} in cls or {i, k, l} in cls or {j, k, l} in cls):
                vc.add('D1', *prefix, t, l, message=f"{fmt_set(t)} has no partner triple through {l}")
    cover: dict[frozenset[str], Triple] = {}
    for t in sorted_triples(cls):
        for pair in combinations(sort_labels(t), 2):
            cover.setdefault(frozenset(pair), t)
    for t in triples_of(leaves):
        if vc.full:
            return
        if t in cls:
            continue
        pairs = [frozenset(p) for p in combinations(sort_labels(t), 2)]
        if all(p in cover for p in pairs):
            vc.add('D2', *prefix, t, *(cover[p] for p in pairs),
                   message=f"{fmt_set(t)} is missing while all its pairs are covered")


def validate_equivalence(eq: TripleEquivalence, cap: int = DEFAULT_VIOLATION_CAP) -> ValidationReport:
    """
    Check (E0): every class is diverse. Violation witnesses start with the class followed by the ``is_diverse``
    witness.

    >>> n5 = LeafSet.range(5)
    >>> example = TripleEquivalence.of(n5, ['123', '124', '125'], ['145', '245', '345'],
    ...                                ['134', '135', '234', '235'])
    >>> validate_equivalence(example).valid
    True
    >>> moved = TripleEquivalence.of(n5, ['124', '125'], ['123', '145', '245', '345'],
    ...                              ['134', '135', '234', '235'])
    >>> sorted(validate_equivalence(moved).axioms())
    ['D1', 'D2']
    """
    vc = ViolationCollector('equivalence', cap)
    for cls in eq:
        if vc.full:
            break
        _check_diverse(cls, eq.leaves, vc, cls)
    return vc.report()
