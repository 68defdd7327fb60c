#!/usr/bin/env python3
# coding=utf-8

"""
Triple equivalences from trees and partition collections, and partition collections back from triple equivalences.
"""
import logging
from collections import defaultdict
from collections.abc import Iterable
from itertools import combinations

import networkx as nx
from vt.utils.errors.warnings import vt_warn

from phylorep.core import (PhyloTree, Partition, PartitionCollection, TripleEquivalence, LeafSet, median_vertex,
                           is_diverse)
from phylorep.errors import NotPhylogeneticError
from phylorep.utils import fmt_set, triples_of, sort_labels

logger = logging.getLogger(__name__)


def tree_to_equivalence(tree: PhyloTree) -> TripleEquivalence:
    """
    Triples are equivalent when they have the same median vertex in ``tree``.

    >>> from phylorep.core import LeafSet
    >>> tree_to_equivalence(PhyloTree.star(LeafSet.range(4))).sizes()
    [4]
    """
    classes: dict[int, set[frozenset[str]]] = defaultdict(set)
    for triple in triples_of(tree.leaves):
        classes[median_vertex(tree, triple)].add(triple)
    logger.debug("%d internal vertices, %d are medians", tree.internal_count, len(classes))
    return TripleEquivalence(tree.leaves, frozenset(frozenset(c) for c in classes.values()))


def separating_partition(pc: PartitionCollection, triple: Iterable[str]) -> Partition:
    """
    The single partition of ``pc`` having the three leaves of ``triple`` in three distinct parts.

    >>> from phylorep.core import LeafSet
    >>> pc = PartitionCollection.of(LeafSet.range(4), Partition.of('12', '3', '4'), Partition.of('1', '2', '34'))
    >>> str(separating_partition(pc, '134'))
    '12|3|4'
    >>> separating_partition(pc.without(Partition.of('12', '3', '4')), '134')
    Traceback (most recent call last):
    phylorep.errors.NotPhylogeneticError: Triple {1,3,4} is separated by 0 partitions, expected exactly one.

    :raise NotPhylogeneticError: if no partition or more than one separates ``triple``.
    """
    triple = frozenset(triple)
    seps = pc.separators(triple)
    if len(seps) != 1:
        raise NotPhylogeneticError(f"Triple {fmt_set(triple)} is separated by {len(seps)} partitions, "
                                   f"expected exactly one.", witness=(triple, *seps))
    return seps[0]


def separated_triples(p: Partition) -> frozenset[frozenset[str]]:
    """
    Triples with their leaves in three distinct parts of ``p``.

    >>> sorted(''.join(sorted(t)) for t in separated_triples(Partition.of('1', '2', '345')))
    ['123', '124', '125']

    A partition with fewer than three parts separates nothing, and says so:

    >>> import warnings
    >>> with warnings.catch_warnings(record=True) as caught:
    ...     warnings.simplefilter('always')
    ...     separated_triples(Partition.of('12', '34'))
    frozenset()
    >>> len(caught)
    1
    """
    if len(p) < 3:
        vt_warn(f"Partition {p} has {len(p)} parts and separates no triple.")
        return frozenset()
    return frozenset(frozenset((i, j, k)) for a, b, c in combinations(p.sorted_parts, 3)
                     for i in a for j in b for k in c)


def class_partition(triples: Iterable[Iterable[str]], leaves: LeafSet) -> Partition:
    """
    Partition of ``leaves`` into the connected components of the graph joining ``i`` and ``j`` when no triple of
    ``triples`` holds both. For a diverse set every component is a complete graph.

    >>> str(class_partition(['134', '135', '234', '235'], LeafSet.range(5)))
    '12|3|45'

    :raise NotPhylogeneticError: if ``triples`` is not diverse, or a component is not complete.
    """
    triples = frozenset(frozenset(t) for t in triples)
    report = is_diverse(triples, leaves)
    if not report.valid:
        raise NotPhylogeneticError(f"Triple set is not diverse: {report.summary()}", report, triples)
    covered = {frozenset(pair) for t in triples for pair in combinations(sort_labels(t), 2)}
    g = nx.Graph()
    g.add_nodes_from(leaves)
    g.add_edges_from(pair for pair in combinations(leaves, 2) if frozenset(pair) not in covered)
    components = [frozenset(c) for c in nx.connected_components(g)]
    for c in components:
        size = len(c)
        if g.subgraph(c).number_of_edges() != size * (size - 1) // 2:
            raise NotPhylogeneticError(f"Component {fmt_set(c)} of the triple set's graph is not complete.",
                                       witness=(triples, c))
    return Partition(frozenset(components))


def equivalence_to_partitions(eq: TripleEquivalence) -> PartitionCollection:
    """
    The partition of every class, see ``class_partition``.

    >>> from phylorep.core import LeafSet
    >>> eq = TripleEquivalence.of(LeafSet.range(5), ['123', '124', '125'], ['145', '245', '345'],
    ...                           ['134', '135', '234', '235'])
    >>> [str(p) for p in equivalence_to_partitions(eq)]
    ['1|2|345', '12|3|45', '123|4|5']

    :raise NotPhylogeneticError: naming the first class that is not diverse.
    """
    partitions = frozenset(class_partition(c, eq.leaves) for c in eq)
    return PartitionCollection(eq.leaves, partitions)


def partitions_to_equivalence(pc: PartitionCollection) -> TripleEquivalence:
    """
    Triples are equivalent when the same partition separates them.

    :raise NotPhylogeneticError: if a triple is separated by no partition or by several, or a partition separates no
        triple.
    """
    classes: dict[Partition, set[frozenset[str]]] = defaultdict(set)
    for triple in triples_of(pc.leaves):
        classes[separating_partition(pc, triple)].add(triple)
    idle = [p for p in pc if p not in classes]
    if idle:
        raise NotPhylogeneticError(f"Partition {idle[0]} separates no triple.", witness=idle[0])
    return TripleEquivalence(pc.leaves, frozenset(frozenset(c) for c in classes.values()))
