#!/usr/bin/env python3
# coding=utf-8

"""
Trees to cut sets and back through cut graphs, which join the inclusion Hasse diagrams of the clusters on either
side of one cut.
"""
import logging
from collections.abc import Iterable
from dataclasses import dataclass

import networkx as nx

from phylorep.core import PhyloTree, Cut, CutSet, clusters, validate_cuts
from phylorep.errors import NotPhylogeneticError, InputError
from phylorep.utils import set_key, join_labels

logger = logging.getLogger(__name__)

type Cluster = frozenset[str]


@dataclass(frozen=True)
class HasseDiagram:
    """
    Covering relation of a family of sets ordered by inclusion: ``a -> b`` is a cover when ``a < b`` and no element
    lies strictly between them.

    >>> hd = HasseDiagram.of_inclusion([frozenset('1'), frozenset('2'), frozenset('12'), frozenset('123')])
    >>> [(join_labels(a), join_labels(b)) for a, b in hd.covers]
    [('1', '12'), ('2', '12'), ('12', '123')]
    """
    elements: frozenset[Cluster]
    covers: tuple[tuple[Cluster, Cluster], ...]

    @classmethod
    def of_inclusion(cls, elements: Iterable[Iterable[str]]) -> 'HasseDiagram':
        elements = frozenset(frozenset(e) for e in elements)
        order = nx.DiGraph()
        order.add_nodes_from(elements)
        order.add_edges_from((a, b) for a in elements for b in elements if a < b)
        reduced = nx.transitive_reduction(order)
        covers = sorted(reduced.edges, key=lambda e: (set_key(e[1]), set_key(e[0])))
        return cls(elements, tuple(covers))

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.elements)
        g.add_edges_from(self.covers)
        return g


def tree_to_cuts(tree: PhyloTree) -> CutSet:
    """
    One cut per internal edge, splitting the leaves by the two components left after removing the edge.

    >>> from phylorep.core import LeafSet
    >>> tree_to_cuts(PhyloTree.star(LeafSet.range(4))) == CutSet.empty(LeafSet.range(4))
    True
    """
    return CutSet(tree.leaves, frozenset(Cut(tree.branch(u, v), tree.branch(v, u)) for u, v in tree.internal_edges()))


def require_phylogenetic_cuts(cs: CutSet) -> None:
    """
    :raise NotPhylogeneticError: if ``cs`` violates axiom (C).
    """
    report = validate_cuts(cs)
    if not report.valid:
        raise NotPhylogeneticError(f"Cut set is not phylogenetic: {report.summary()}", report)


def cut_graph(cs: CutSet, cut: Cut) -> nx.Graph:
    """
    The cut graph of ``cut``: the Hasse diagrams of clusters and singletons inside either side of ``cut``, undirected,
    plus an edge joining the two sides. Vertices are leaf sets carrying the node attributes ``leaf`` (singletons) and
    ``label`` (compact label text).

    >>> from phylorep.core import LeafSet
    >>> cs = CutSet.of(LeafSet.range(5), Cut.of('12', '345'), Cut.of('123', '45'))
    >>> g = cut_graph(cs, Cut.of('12', '345'))
    >>> sorted(d['label'] for _, d in g.nodes(data=True) if not d['leaf'])
    ['12', '345', '45']

    :raise InputError: if ``cut`` is not in ``cs``.
    :raise NotPhylogeneticError: if ``cs`` is not phylogenetic.
    """
    if cut not in cs:
        raise InputError(f"Cut {cut} is not in the cut set.")
    require_phylogenetic_cuts(cs)
    vertices = clusters(cs) | {frozenset((label,)) for label in cs.leaves}
    g = nx.Graph()
    for side in cut.sides:
        hasse = HasseDiagram.of_inclusion(v for v in vertices if v <= side)
        g.add_edges_from(hasse.covers)
        g.add_nodes_from(hasse.elements)
    g.add_edge(cut.side_a, cut.side_b)
    for v in g.nodes:
        g.nodes[v]['leaf'] = len(v) == 1
        g.nodes[v]['label'] = join_labels(v)
    return g


def cuts_to_tree(cs: CutSet, cut: Cut | None = None) -> PhyloTree:
    """
    Tree of a phylogenetic cut set: the cut graph of ``cut`` (the canonically smallest cut by default) with singleton
    vertices turned into leaves. Internal vertices are numbered in canonical cluster order and named after their
    clusters. An empty cut set gives the star tree.

    >>> from phylorep.core import LeafSet
    >>> n5 = LeafSet.range(5)
    >>> tree = cuts_to_tree(CutSet.of(n5, Cut.of('12', '345'), Cut.of('123', '45')))
    >>> tree.names
    ('12', '345', '45')
    >>> cuts_to_tree(CutSet.empty(n5)) == PhyloTree.star(n5)
    True

    :raise NotPhylogeneticError: if ``cs`` is not phylogenetic.
    """
    if not cs.cuts:
        logger.debug("no cuts, returning the star tree")
        return PhyloTree.star(cs.leaves)
    cut = cs.ordered[0] if cut is None else cut
    g = cut_graph(cs, cut)
    internal = sorted((v for v, leaf in g.nodes(data='leaf') if not leaf), key=set_key)
    index = {v: i for i, v in enumerate(internal)}

    def vertex(v: Cluster) -> str | int:
        if g.nodes[v]['leaf']:
            (label,) = v
            return label
        return index[v]

    logger.debug("cut graph of %s has %d internal vertices", cut, len(internal))
    return PhyloTree(cs.leaves, len(internal), tuple((vertex(u), vertex(v)) for u, v in g.edges),
                     tuple(join_labels(v) for v in internal))
