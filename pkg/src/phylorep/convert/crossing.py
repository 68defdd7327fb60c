#!/usr/bin/env python3
# coding=utf-8

"""
Cut sets to crossing relations and back.

A crossing relation gives back its cuts as the set of all cuts compatible with it, found by scanning every
bipartition of the leaf set. Partial cuts grow one leaf at a time into compatible cuts.
"""
import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations

from phylorep.convert.cuts import require_phylogenetic_cuts
from phylorep.core import Cross, CrossingRelation, Cut, CutSet, LeafSet, crosses_of, validate_crossing
from phylorep.errors import InputError, NotPhylogeneticError
from phylorep.utils import fmt_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartialCut:
    """
    A cut of a subset of the leaves. Sides are kept in the given order.

    >>> str(PartialCut.of('12', '67'))
    '{1,2}|{6,7}'

    >>> PartialCut.of('1', '67')
    Traceback (most recent call last):
    phylorep.errors.InputError: Both sides of a partial cut need at least 2 labels, got {1}|{6,7}.
    """
    side_a: frozenset[str]
    side_b: frozenset[str]

    def __post_init__(self):
        a, b = frozenset(self.side_a), frozenset(self.side_b)
        if len(a) < 2 or len(b) < 2:
            raise InputError(f"Both sides of a partial cut need at least 2 labels, got {fmt_set(a)}|{fmt_set(b)}.")
        if a & b:
            raise InputError(f"Sides of a partial cut must be disjoint, {fmt_set(a & b)} on both sides.")
        object.__setattr__(self, 'side_a', a)
        object.__setattr__(self, 'side_b', b)

    @classmethod
    def of(cls, side_a: Iterable[str], side_b: Iterable[str]) -> 'PartialCut':
        return cls(frozenset(side_a), frozenset(side_b))

    @property
    def support(self) -> frozenset[str]:
        return self.side_a | self.side_b

    def with_a(self, label: str) -> 'PartialCut':
        return PartialCut(self.side_a | {label}, self.side_b)

    def with_b(self, label: str) -> 'PartialCut':
        return PartialCut(self.side_a, self.side_b | {label})

    def to_cut(self) -> Cut:
        return Cut(self.side_a, self.side_b)

    def __str__(self) -> str:
        return f"{fmt_set(self.side_a)}|{fmt_set(self.side_b)}"


def cuts_to_crossing(cs: CutSet) -> CrossingRelation:
    """
    Every ``(i,j|k,l)`` with ``i,j`` on one side and ``k,l`` on the other side of some cut.

    >>> n4 = LeafSet.range(4)
    >>> [str(x) for x in cuts_to_crossing(CutSet.of(n4, Cut.of('12', '34')))]
    ['(1,2|3,4)']

    :raise NotPhylogeneticError: if ``cs`` violates axiom (C).
    """
    require_phylogenetic_cuts(cs)
    crosses = frozenset(x for c in cs for x in crosses_of(c.side_a, c.side_b))
    logger.debug("%d cuts give %d crosses", len(cs), len(crosses))
    return CrossingRelation(cs.leaves, crosses)


def is_compatible(xr: CrossingRelation, cut: PartialCut | Cut) -> bool:
    """
    A (partial) cut is compatible with a crossing relation when every cross across it belongs to the relation.

    >>> n4 = LeafSet.range(4)
    >>> xr = CrossingRelation.of(n4, Cross.of('1', '2', '3', '4'))
    >>> is_compatible(xr, Cut.of('12', '34')), is_compatible(xr, Cut.of('13', '24'))
    (True, False)
    """
    return all(x in xr.crosses for x in crosses_of(cut.side_a, cut.side_b))


def _bipartitions(leaves: LeafSet) -> Iterator[Cut]:
    first, *rest = leaves.labels
    for size in range(1, len(rest) - 1):
        for others in combinations(rest, size):
            yield Cut(frozenset((first, *others)), leaves.as_set - {first, *others})


def require_phylogenetic_crossing(xr: CrossingRelation) -> None:
    """
    :raise NotPhylogeneticError: if ``xr`` violates any of (X1) to (X3).
    """
    report = validate_crossing(xr)
    if not report.valid:
        raise NotPhylogeneticError(f"Crossing relation is not phylogenetic: {report.summary()}", report)


def crossing_to_cuts(xr: CrossingRelation) -> CutSet:
    """
    All cuts compatible with ``xr``, by exhaustive scan over the ``2^(n-1) - n - 1`` cuts of the leaf set.

    >>> n5 = LeafSet.range(5)
    >>> crossing_to_cuts(CrossingRelation.of(n5)) == CutSet.empty(n5)
    True

    :raise NotPhylogeneticError: if ``xr`` is not phylogenetic.
    """
    require_phylogenetic_crossing(xr)
    if not xr.crosses:
        return CutSet.empty(xr.leaves)
    cuts = frozenset(c for c in _bipartitions(xr.leaves) if is_compatible(xr, c))
    logger.debug("%d crosses give %d cuts", len(xr), len(cuts))
    return CutSet(xr.leaves, cuts)


def extend_partial_cut(xr: CrossingRelation, pc: PartialCut, m: str) -> PartialCut:
    """
    Put leaf ``m`` on a side of ``pc`` keeping it compatible with ``xr``; ``side_a`` is preferred when both sides
    work. For a phylogenetic ``xr`` one of them always does.

    >>> n5 = LeafSet.range(5)
    >>> xr = cuts_to_crossing(CutSet.of(n5, Cut.of('12', '345')))
    >>> str(extend_partial_cut(xr, PartialCut.of('12', '34'), '5'))
    '{1,2}|{3,4,5}'

    :raise InputError: if ``m`` is not a leaf or already placed.
    :raise NotPhylogeneticError: if ``pc`` is not compatible with ``xr`` or cannot be extended.
    """
    if m not in xr.leaves:
        raise InputError(f"{m!r} is not a leaf.")
    if m in pc.support:
        raise InputError(f"{m!r} is already placed in {pc}.")
    if not is_compatible(xr, pc):
        raise NotPhylogeneticError(f"Partial cut {pc} is not compatible with the crossing relation.", witness=pc)
    for candidate in (pc.with_a(m), pc.with_b(m)):
        if is_compatible(xr, candidate):
            return candidate
    raise NotPhylogeneticError(f"Neither side of {pc} takes {m!r}; the crossing relation is not phylogenetic.",
                               witness=(pc, m))


def complete_partial_cut(xr: CrossingRelation, pc: PartialCut) -> Cut:
    """
    Place every missing leaf, in label order, with ``extend_partial_cut``.

    >>> n5 = LeafSet.range(5)
    >>> xr = cuts_to_crossing(CutSet.of(n5, Cut.of('12', '345'), Cut.of('123', '45')))
    >>> str(complete_partial_cut(xr, PartialCut.of('12', '45')))
    '123|45'
    """
    for m in xr.leaves:
        if m not in pc.support:
            pc = extend_partial_cut(xr, pc, m)
    return pc.to_cut()


def cross_to_cut(xr: CrossingRelation, cross: Cross) -> Cut:
    """
    A cut compatible with ``xr`` separating the pairs of ``cross``.

    :raise InputError: if ``cross`` is not in ``xr``.
    """
    if cross not in xr:
        raise InputError(f"{cross} is not a cross of the relation.")
    return complete_partial_cut(xr, PartialCut(cross.pair_a, cross.pair_b))

