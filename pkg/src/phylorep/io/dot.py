#!/usr/bin/env python3
# coding=utf-8

"""
DOT (Graphviz) text for trees and cut graphs.
"""
from collections.abc import Iterator, Hashable

import networkx as nx

from phylorep.core import PhyloTree
from phylorep.utils import label_key


def _quote(s: str) -> str:
    return '"{}"'.format(s.replace('\\', '\\\\').replace('"', r'\"'))


def _node(node_id: str, label: str, leaf: bool) -> str:
    if leaf:
        return f"  {_quote(node_id)} [shape=box, label={_quote(label)}];\n"
    return f"  {_quote(node_id)} [shape=circle, style=filled, fillcolor=grey, width=0.2, label={_quote(label)}];\n"


def graphviz(graph: nx.Graph, name: str = 'tree') -> Iterator[str]:
    """
    Produce an undirected DOT graph as an iterable of lines. Nodes must carry the attributes ``leaf`` and ``label``;
    leaves are listed first, each group in label order, and named ``n0``, ``n1``, ...

    Use like so::

        with open('tree.dot', 'w') as f:
            f.writelines(graphviz(g))
    """
    ordered = sorted(graph.nodes(data=True), key=lambda nd: (not nd[1]['leaf'], label_key(nd[1]['label'])))
    index: dict[Hashable, int] = {v: i for i, (v, _) in enumerate(ordered)}
    yield f"graph {_quote(name)} {{\n"
    for v, data in ordered:
        yield _node(f"n{index[v]}", data['label'], data['leaf'])
    for u, v in sorted(tuple(sorted((index[u], index[v]))) for u, v in graph.edges):
        yield f"  \"n{u}\" -- \"n{v}\";\n"
    yield "}\n"


def tree_graph(tree: PhyloTree) -> nx.Graph:
    """
    ``tree`` as a graph with the node attributes ``graphviz`` expects. Internal vertices are labelled by their display
    names, or left blank.
    """
    g = nx.Graph()
    for label in tree.leaves:
        g.add_node(label, leaf=True, label=label)
    for v in tree.internal:
        g.add_node(v, leaf=False, label=tree.names[v] if tree.names else '')
    g.add_edges_from(tree.edges)
    return g


def to_dot(x: PhyloTree | nx.Graph, name: str = 'tree') -> str:
    """
    >>> from phylorep.core import LeafSet
    >>> print(to_dot(PhyloTree.star(LeafSet.range(3))), end='')
    graph "tree" {
      "n0" [shape=box, label="1"];
      "n1" [shape=box, label="2"];
      "n2" [shape=box, label="3"];
      "n3" [shape=circle, style=filled, fillcolor=grey, width=0.2, label=""];
      "n0" -- "n3";
      "n1" -- "n3";
      "n2" -- "n3";
    }

    :param x: a tree, or a graph whose nodes carry ``leaf`` and ``label`` attributes such as a cut graph.
    :param name: graph name.
    """
    graph = tree_graph(x) if isinstance(x, PhyloTree) else x
    return ''.join(graphviz(graph, name))
