#!/usr/bin/env python3
# coding=utf-8

"""
Conversion between any two representations along a fixed path through the tree:

- to the tree: ``partitions -> tree``, ``cuts -> tree``, ``crossing -> cuts -> tree``,
  ``equivalence -> partitions -> tree``.
- from the tree: ``tree -> partitions``, ``tree -> cuts``, ``tree -> cuts -> crossing``, ``tree -> equivalence``.
"""
import logging
from collections.abc import Callable

from phylorep.convert.crossing import cuts_to_crossing, crossing_to_cuts
from phylorep.convert.cuts import tree_to_cuts, cuts_to_tree
from phylorep.convert.equivalence import tree_to_equivalence, equivalence_to_partitions
from phylorep.convert.partitions import tree_to_partitions, partitions_to_tree
from phylorep.core import KINDS, PhyloTree, Structure, kind_of

logger = logging.getLogger(__name__)

_TO_TREE: dict[str, Callable[..., PhyloTree]] = {
    'tree': lambda t: t,
    'partitions': partitions_to_tree,
    'cuts': cuts_to_tree,
    'crossing': lambda x: cuts_to_tree(crossing_to_cuts(x)),
    'equivalence': lambda e: partitions_to_tree(equivalence_to_partitions(e)),
}

_FROM_TREE: dict[str, Callable[[PhyloTree], Structure]] = {
    'tree': lambda t: t,
    'partitions': tree_to_partitions,
    'cuts': tree_to_cuts,
    'crossing': lambda t: cuts_to_crossing(tree_to_cuts(t)),
    'equivalence': tree_to_equivalence,
}


def to_tree(x: Structure) -> PhyloTree:
    """
    :raise NotPhylogeneticError: if ``x`` is not phylogenetic.
    """
    return _TO_TREE[kind_of(x)](x)


def convert(x: Structure, to: str) -> Structure:
    """
    Convert ``x`` into the representation named ``to``.

    >>> from phylorep.core import LeafSet
    >>> [str(p) for p in convert(PhyloTree.star(LeafSet.range(3)), to='partitions')]
    ['1|2|3']

    >>> convert(PhyloTree.star(LeafSet.range(3)), to='forest')
    Traceback (most recent call last):
    ValueError: Unknown kind 'forest', expected one of tree, partitions, cuts, crossing, equivalence.

    :param x: any of the five structures.
    :param to: ``tree``, ``partitions``, ``cuts``, ``crossing`` or ``equivalence``.
    :raise NotPhylogeneticError: if ``x`` is not phylogenetic.
    """
    if to not in KINDS:
        raise ValueError(f"Unknown kind {to!r}, expected one of {', '.join(KINDS)}.")
    logger.debug("converting %s to %s", kind_of(x), to)
    return _FROM_TREE[to](to_tree(x))
