#!/usr/bin/env python3
# coding=utf-8

"""
Trees to partition collections and back, and partition collections to cuts.
"""
import logging

from phylorep.core import (PhyloTree, Partition, PartitionCollection, CutSet, Cut, validate_partitions)
from phylorep.errors import NotPhylogeneticError

logger = logging.getLogger(__name__)


def tree_to_partitions(tree: PhyloTree) -> PartitionCollection:
    """
    One partition per internal vertex ``v``: a part for every edge at ``v``, holding the leaves whose path from ``v``
    begins with that edge.

    >>> from phylorep.core import LeafSet
    >>> [str(p) for p in tree_to_partitions(PhyloTree.star(LeafSet.range(3)))]
    ['1|2|3']

    :param tree: a phylogenetic tree.
    :return: the partition collection of ``tree``.
    """
    partitions = [Partition.of(*(tree.branch(v, w) for w in tree.adjacency[v])) for v in tree.internal]
    logger.debug("tree with %d internal vertices gives %d partitions", tree.internal_count, len(partitions))
    return PartitionCollection(tree.leaves, frozenset(partitions))


def require_phylogenetic_partitions(pc: PartitionCollection) -> None:
    """
    :raise NotPhylogeneticError: if ``pc`` violates any of (P1) to (P4).
    """
    report = validate_partitions(pc)
    if not report.valid:
        raise NotPhylogeneticError(f"Partition collection is not phylogenetic: {report.summary()}", report)


def partitions_to_tree(pc: PartitionCollection) -> PhyloTree:
    """
    Build the tree on the leaves and the partitions of ``pc``: a partition is joined to leaf ``i`` when ``{i}`` is
    one of its parts, and to another partition when a part of the one is the complement of a part of the other.
    Internal vertices are named after their partitions.

    >>> from phylorep.core import LeafSet
    >>> tree = partitions_to_tree(PartitionCollection.of(LeafSet.range(3), Partition.of('1', '2', '3')))
    >>> tree.names, tree.edges
    (('1|2|3',), (('1', 0), ('2', 0), ('3', 0)))

    :param pc: a phylogenetic partition collection.
    :return: a phylogenetic tree whose partition collection is ``pc``.
    :raise NotPhylogeneticError: if ``pc`` is not phylogenetic.
    """
    require_phylogenetic_partitions(pc)
    owner = {part: p for p in pc for part in p.parts}
    edges: set[tuple] = set()
    for p in pc:
        for part in p:
            if len(part) == 1:
                (label,) = part
                edges.add((p, label))
            else:
                q = owner[pc.leaves.as_set - part]
                edges.add(tuple(sorted((p, q), key=Partition.sort_key)))
    logger.debug("partition graph has %d vertices and %d edges", len(pc) + len(pc.leaves), len(edges))
    return PhyloTree.from_edges(edges, pc.leaves, pc.ordered)


def partitions_to_cuts(pc: PartitionCollection) -> CutSet:
    """
    Cuts whose clusters are the parts of size at least 2.

    >>> from phylorep.core import LeafSet
    >>> caterpillar = PartitionCollection.of(LeafSet.range(5), Partition.of('1', '2', '345'),
    ...                                      Partition.of('12', '3', '45'), Partition.of('123', '4', '5'))
    >>> [str(c) for c in partitions_to_cuts(caterpillar)]
    ['12|345', '123|45']

    :raise NotPhylogeneticError: if ``pc`` is not phylogenetic.
    """
    require_phylogenetic_partitions(pc)
    return CutSet(pc.leaves, frozenset(Cut.from_cluster(part, pc.leaves) for p in pc for part in p if len(part) > 1))
