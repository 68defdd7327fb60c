#!/usr/bin/env python3
# coding=utf-8

"""
Phylogenetic trees: unrooted trees whose leaves are the leaf set and which have no vertex of degree 2.
"""
import logging
from collections.abc import Iterable, Hashable, Mapping
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from phylorep.constants import DEFAULT_VIOLATION_CAP
from phylorep.core.leaves import LeafSet
from phylorep.core.report import ValidationReport, ViolationCollector
from phylorep.errors import InputError, NotPhylogeneticError
from phylorep.utils import label_key, fmt_set

logger = logging.getLogger(__name__)

type Vertex = str | int
"""
Leaf labels are ``str``, internal vertices are ``int`` indices.
"""

type Edge = tuple[Vertex, Vertex]


def _edge_key(edge: Edge) -> tuple:
    return tuple(_vertex_key(v) for v in edge)


def _vertex_key(v: Vertex) -> tuple:
    if isinstance(v, str):
        return 0, label_key(v)
    return 1, v


def _normalize(u: Vertex, v: Vertex) -> Edge:
    return (u, v) if _vertex_key(u) <= _vertex_key(v) else (v, u)


def validate_tree(edges: Iterable[tuple[Hashable, Hashable]], leaves: LeafSet,
                  internal: Iterable[Hashable] | None = None, cap: int = DEFAULT_VIOLATION_CAP) -> ValidationReport:
    """
    Check that a vertex/edge list is a phylogenetic tree over ``leaves``.

    Axiom ids in the report: ``tree:connected``, ``tree:acyclic``, ``tree:leaf-degree`` (a declared leaf with
    degree other than 1), ``tree:leaf-set`` (a degree-1 vertex which is not a declared leaf) and ``tree:degree-2``.

    Examples:

    >>> n3 = LeafSet.range(3)
    >>> validate_tree([('1', 'x'), ('2', 'x'), ('3', 'x')], n3).valid
    True

    >>> report = validate_tree([('1', 'x'), ('2', 'x'), ('x', 'y'), ('y', '3')], n3)
    >>> [(v.axiom, v.witness) for v in report.violations]
    [('tree:degree-2', ('y',))]

    >>> validate_tree([('1', 'x'), ('x', 'x')], n3)
    Traceback (most recent call last):
    phylorep.errors.InputError: Self-loop at vertex 'x'.

    :param edges: undirected edges; leaf vertices are the labels of ``leaves``.
    :param leaves: the declared leaf set.
    :param internal: the declared internal vertices. When given, an edge end which is neither a leaf nor declared
        internal is an input error. When ``None``, every non-leaf end is internal.
    :param cap: maximum number of violations recorded.
    :raise InputError: on self-loops, duplicate edges, unknown vertex ids or declared leaves missing from the graph.
    """
    graph = _graph_from_edges(edges, leaves, internal)
    vc = ViolationCollector('tree', cap)
    if not nx.is_connected(graph):
        components = sorted((sorted(c, key=_vertex_key) for c in nx.connected_components(graph)), key=len)
        vc.add('tree:connected', *(tuple(c) for c in components),
               message=f"graph has {len(components)} connected components")
    if not nx.is_forest(graph):
        cycle = tuple(u for u, _ in nx.find_cycle(graph))
        vc.add('tree:acyclic', *cycle, message=f"graph has a cycle through {len(cycle)} vertices")
    for v in sorted(graph.nodes, key=lambda x: (str(type(x)), str(x))):
        degree = graph.degree[v]
        if v in leaves:
            if degree != 1:
                vc.add('tree:leaf-degree', v, degree, message=f"leaf {v!r} has degree {degree}")
        elif degree == 1:
            vc.add('tree:leaf-set', v, message=f"vertex {v!r} is a leaf but not a declared leaf")
        elif degree == 2:
            vc.add('tree:degree-2', v, message=f"vertex {v!r} has degree 2")
    return vc.report()


def _graph_from_edges(edges: Iterable[tuple[Hashable, Hashable]], leaves: LeafSet,
                      internal: Iterable[Hashable] | None) -> nx.Graph:
    declared = None if internal is None else set(internal)
    if declared is not None and declared & leaves.as_set:
        raise InputError(f"Internal vertices {sorted(map(str, declared & leaves.as_set))} clash with leaf labels.")
    graph = nx.Graph()
    graph.add_nodes_from(declared or ())
    for u, v in edges:
        if u == v:
            raise InputError(f"Self-loop at vertex {u!r}.")
        for x in (u, v):
            if declared is not None and x not in declared and x not in leaves:
                raise InputError(f"Unknown vertex id {x!r}.")
        if graph.has_edge(u, v):
            raise InputError(f"Duplicate edge {u!r}-{v!r}.")
        graph.add_edge(u, v)
    missing = leaves.as_set - set(graph.nodes)
    if missing:
        raise InputError(f"Leaves {fmt_set(missing)} do not occur in the graph.")
    return graph


@dataclass(frozen=True)
class PhyloTree:
    """
    A phylogenetic tree over ``leaves`` with ``internal_count`` anonymous internal vertices ``0..internal_count-1``.

    ``edges`` is stored normalized and sorted so that two trees with the same vertex ids and edges compare equal.
    ``names`` are display names of internal vertices and do not take part in equality. Use ``from_edges`` to build a
    tree out of arbitrary vertex ids, which validates it; the plain constructor only checks well-formedness.

    Isomorphism (fixing leaves) is not equality, see ``phylorep.enumeration.trees_isomorphic``.
    """
    leaves: LeafSet
    internal_count: int
    edges: tuple[Edge, ...]
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.internal_count < 0:
            raise InputError(f"internal_count cannot be negative, got {self.internal_count}.")
        normalized = []
        for u, v in self.edges:
            for x in (u, v):
                if isinstance(x, str):
                    if x not in self.leaves:
                        raise InputError(f"Unknown vertex id {x!r}.")
                elif not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.internal_count:
                    raise InputError(f"Unknown vertex id {x!r}.")
            if u == v:
                raise InputError(f"Self-loop at vertex {u!r}.")
            normalized.append(_normalize(u, v))
        if len(set(normalized)) != len(normalized):
            raise InputError('Duplicate edge in tree.')
        object.__setattr__(self, 'edges', tuple(sorted(normalized, key=_edge_key)))
        if self.names and len(self.names) != self.internal_count:
            raise InputError(f"Expected {self.internal_count} internal names, got {len(self.names)}.")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[Hashable, Hashable]], leaves: LeafSet,
                   internal: Iterable[Hashable] | None = None) -> 'PhyloTree':
        """
        Validate a graph and build a tree from it. Internal vertices are renumbered in the order of their ``str``
        form and that form is kept as their display name.

        >>> tree = PhyloTree.from_edges([('1', 'a'), ('2', 'a'), ('3', 'a')], LeafSet.range(3))
        >>> tree.internal_count, tree.names
        (1, ('a',))

        :raise NotPhylogeneticError: if the graph is not a phylogenetic tree over ``leaves``.
        :raise InputError: on malformed edge lists.
        """
        edges = list(edges)
        report = validate_tree(edges, leaves, internal)
        if not report.valid:
            raise NotPhylogeneticError(f"Not a phylogenetic tree: {report.summary()}", report)
        nodes = {x for e in edges for x in e} - leaves.as_set
        if internal is not None:
            nodes |= set(internal)
        ordered = sorted(nodes, key=lambda x: (str(x), repr(x)))
        index: dict[Hashable, Vertex] = {x: i for i, x in enumerate(ordered)}
        index.update({label: label for label in leaves})
        return cls(leaves, len(ordered), tuple((index[u], index[v]) for u, v in edges),
                   tuple(str(x) for x in ordered))

    @classmethod
    def star(cls, leaves: LeafSet) -> 'PhyloTree':
        """
        >>> PhyloTree.star(LeafSet.range(3)).edges
        (('1', 0), ('2', 0), ('3', 0))

        :return: the tree with a single internal vertex adjacent to every leaf.
        """
        return cls(leaves, 1, tuple((label, 0) for label in leaves))

    @property
    def internal(self) -> range:
        return range(self.internal_count)

    @cached_property
    def graph(self) -> nx.Graph:
        """
        :return: the tree as an undirected ``networkx`` graph. Treat it as read-only.
        """
        g = nx.Graph()
        g.add_nodes_from(self.leaves)
        g.add_nodes_from(self.internal)
        g.add_edges_from(self.edges)
        return g

    @cached_property
    def adjacency(self) -> Mapping[Vertex, tuple[Vertex, ...]]:
        adj: dict[Vertex, list[Vertex]] = {v: [] for v in (*self.leaves, *self.internal)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ns, key=_vertex_key)) for v, ns in adj.items()}

    @cached_property
    def _branches(self) -> dict[tuple[Vertex, Vertex], frozenset[str]]:
        memo: dict[tuple[Vertex, Vertex], frozenset[str]] = {}

        def branch(frm: Vertex, to: Vertex) -> frozenset[str]:
            key = (frm, to)
            if key not in memo:
                if isinstance(to, str):
                    memo[key] = frozenset((to,))
                else:
                    memo[key] = frozenset().union(*(branch(to, w) for w in self.adjacency[to] if w != frm))
            return memo[key]

        for u, v in self.edges:
            branch(u, v)
            branch(v, u)
        return memo

    def branch(self, frm: Vertex, to: Vertex) -> frozenset[str]:
        """
        Leaves whose path from ``frm`` begins with the edge ``frm``-``to``.

        >>> star = PhyloTree.star(LeafSet.range(3))
        >>> sorted(star.branch(0, '2'))
        ['2']
        >>> sorted(star.branch('2', 0))
        ['1', '3']

        :raise InputError: if ``frm``-``to`` is not an edge.
        """
        try:
            return self._branches[(frm, to)]
        except KeyError:
            raise InputError(f"{frm!r}-{to!r} is not an edge of the tree.") from None

    def internal_edges(self) -> list[tuple[int, int]]:
        """
        :return: edges joining two internal vertices.
        """
        return [(u, v) for u, v in self.edges if isinstance(u, int) and isinstance(v, int)]

    def name_of(self, v: Vertex) -> str:
        """
        :return: label of a leaf, display name of an internal vertex (or its index when unnamed).
        """
        if isinstance(v, str):
            return v
        return self.names[v] if self.names else str(v)

    def validate(self, cap: int = DEFAULT_VIOLATION_CAP) -> ValidationReport:
        return validate_tree(self.edges, self.leaves, self.internal, cap)


def median_vertex(tree: PhyloTree, triple: Iterable[str]) -> int:
    """
    The unique internal vertex from which the paths to the three leaves of ``triple`` are pairwise edge-disjoint. It
    is the last common vertex of the paths from ``i`` to ``j`` and from ``i`` to ``k``.

    >>> tree = PhyloTree.from_edges([('1', 'a'), ('2', 'a'), ('a', 'b'), ('3', 'b'), ('4', 'b')], LeafSet.range(4))
    >>> tree.names[median_vertex(tree, {'1', '2', '4'})]
    'a'
    >>> tree.names[median_vertex(tree, {'1', '3', '4'})]
    'b'

    :raise InputError: if ``triple`` is not three distinct leaves of ``tree``.
    """
    labels = tree.leaves.require_subset(triple, 'triple')
    if len(labels) != 3:
        raise InputError(f"A triple needs 3 distinct leaves, got {fmt_set(labels)}.")
    i, j, k = sorted(labels, key=label_key)
    to_j = nx.shortest_path(tree.graph, i, j)
    to_k = nx.shortest_path(tree.graph, i, k)
    median = to_j[0]
    for a, b in zip(to_j, to_k):
        if a != b:
            break
        median = a
    logger.debug("median of %s is %s", fmt_set(labels), tree.name_of(median))
    return median
