#!/usr/bin/env python3
# coding=utf-8

"""
Exhaustive generation of phylogenetic trees on small leaf sets.

Every tree on ``n`` leaves comes from exactly one tree on the first ``n - 1`` leaves: drop the last leaf and
suppress the vertex of degree 2 it may leave behind. So inserting the next leaf in every possible way, on an edge or
at an internal vertex, reaches every tree.
"""
import logging
from collections.abc import Iterator

from phylorep.constants import MIN_LEAVES, HARD_MAX_N
from phylorep.core import LeafSet, PhyloTree
from phylorep.enumeration.canonical import canonical_code
from phylorep.errors import InputError

logger = logging.getLogger(__name__)

KNOWN_TREE_COUNTS: dict[int, int] = {3: 1, 4: 4, 5: 26, 6: 236, 7: 2752, 8: 39208}
"""
Number of phylogenetic trees on ``n`` labelled leaves.
"""


def _insertions(tree: PhyloTree, leaves: LeafSet, label: str) -> Iterator[PhyloTree]:
    fresh = tree.internal_count
    for u, v in tree.edges:
        rest = tuple(e for e in tree.edges if e != (u, v))
        yield PhyloTree(leaves, fresh + 1, (*rest, (u, fresh), (fresh, v), (label, fresh)))
    for v in tree.internal:
        yield PhyloTree(leaves, fresh, (*tree.edges, (label, v)))


def enumerate_trees(leaves: LeafSet) -> Iterator[PhyloTree]:
    """
    One tree per isomorphism class of phylogenetic trees on ``leaves``, in canonical code order.

    >>> [len(list(enumerate_trees(LeafSet.range(n)))) for n in (3, 4, 5)]
    [1, 4, 26]

    :raise InputError: for more than ``HARD_MAX_N`` leaves.
    """
    if len(leaves) > HARD_MAX_N:
        raise InputError(f"Enumeration supports {MIN_LEAVES} to {HARD_MAX_N} leaves, got {len(leaves)}.")
    level = [PhyloTree.star(LeafSet(leaves.labels[:MIN_LEAVES]))]
    for k in range(MIN_LEAVES, len(leaves)):
        sub = LeafSet(leaves.labels[:k + 1])
        seen = {}
        for tree in level:
            for grown in _insertions(tree, sub, leaves.labels[k]):
                seen.setdefault(canonical_code(grown), grown)
        level = [seen[code] for code in sorted(seen)]
        logger.debug("%d trees on %d leaves", len(level), k + 1)
    yield from level


def count_trees(n: int) -> int:
    """
    >>> count_trees(6)
    236

    >>> count_trees(2)
    Traceback (most recent call last):
    phylorep.errors.InputError: Enumeration supports 3 to 8 leaves, got 2.

    :param n: number of leaves.
    :return: number of phylogenetic trees on ``n`` leaves, by enumeration.
    """
    if not MIN_LEAVES <= n <= HARD_MAX_N:
        raise InputError(f"Enumeration supports {MIN_LEAVES} to {HARD_MAX_N} leaves, got {n}.")
    return sum(1 for _ in enumerate_trees(LeafSet.range(n)))
