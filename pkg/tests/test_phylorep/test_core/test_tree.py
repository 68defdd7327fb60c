#!/usr/bin/env python3
# coding=utf-8

"""
Tests for leaf sets, phylogenetic trees and medians.
"""
import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from phylorep.core import LeafSet, PhyloTree, validate_tree, median_vertex
from phylorep.errors import LeafSetError, InputError, NotPhylogeneticError
from test_phylorep.conftest import NINE_LEAF_EDGES

NINE_LEAF = PhyloTree.from_edges(NINE_LEAF_EDGES, LeafSet.range(9))


class TestLeafSet:
    def test_natural_order(self):
        assert LeafSet.of('10', '9', 'b', '1').labels == ('1', '9', '10', 'b')

    @pytest.mark.parametrize('labels', [('1', '2'), ('1', '2', '2'), ('1', '', '3'), ('a b', 'c', 'd'), ('(', 'b', 'c'),
                                        ('1', ',', '3'), ('²', '2', '3'), ('a;', 'b', 'c')])
    def test_rejects(self, labels):
        with pytest.raises(LeafSetError):
            LeafSet(labels)

    def test_require_subset(self):
        with pytest.raises(InputError, match=r"triple \{7\} not in leaf set"):
            LeafSet.range(3).require_subset({'1', '7'}, 'triple')


class TestValidateTree:
    def test_nine_leaf_is_phylogenetic(self, n9):
        assert validate_tree(NINE_LEAF_EDGES, n9).valid

    def test_degree_2_vertex(self, n9):
        edges = [e for e in NINE_LEAF_EDGES if e != ('b', 'c')] + [('b', 'z'), ('z', 'c')]
        report = validate_tree(edges, n9)
        assert report.axioms() == {'tree:degree-2'}
        assert report.of('tree:degree-2')[0].witness == ('z',)

    def test_disconnected_and_cyclic(self, n9):
        edges = [e for e in NINE_LEAF_EDGES if e != ('b', 'c')] + [('d', 'e')]
        report = validate_tree(edges, n9)
        assert {'tree:connected', 'tree:acyclic'} <= report.axioms()

    def test_forest_is_only_disconnected(self):
        edges = [('1', 'x'), ('2', 'x'), ('3', 'x'), ('4', 'y'), ('5', 'y'), ('6', 'y')]
        report = validate_tree(edges, LeafSet.range(6))
        assert report.axioms() == {'tree:connected'}
        assert report.violations[0].witness == (('1', '2', '3', 'x'), ('4', '5', '6', 'y'))

    @pytest.mark.parametrize('edges', [
        [e for e in NINE_LEAF_EDGES if e != ('b', 'c')] + [('d', 'e')],
        [('1', 'x'), ('2', 'x'), ('3', 'x'), ('4', 'y'), ('5', 'y'), ('6', 'y')],
        [('1', 'x'), ('2', 'x'), ('3', 'x'), ('x', 'y'), ('y', 'z'), ('z', 'x'), ('4', 'y'), ('5', 'z'), ('6', 'z')],
        [('1', 'x'), ('2', 'x'), ('x', 'y'), ('y', '3'), ('y', '4'), ('y', '5'), ('5', 'w'), ('6', 'w')],
    ])
    def test_witnesses_replay(self, edges):
        graph = nx.Graph(edges)
        report = validate_tree(edges, LeafSet.range(max(int(v) for e in edges for v in e if v.isdecimal())))
        assert not report.valid
        for v in report.violations:
            match v.axiom:
                case 'tree:connected':
                    first, *others = v.witness
                    assert all(not nx.has_path(graph, first[0], other[0]) for other in others)
                    assert sorted(u for c in v.witness for u in c) == sorted(graph.nodes)
                case 'tree:acyclic':
                    cycle = v.witness
                    assert len(cycle) >= 3
                    assert all(graph.has_edge(cycle[i - 1], cycle[i]) for i in range(len(cycle)))
                case 'tree:leaf-degree':
                    leaf, degree = v.witness
                    assert graph.degree[leaf] == degree != 1
                case 'tree:leaf-set' | 'tree:degree-2':
                    (u,) = v.witness
                    assert graph.degree[u] == (1 if v.axiom == 'tree:leaf-set' else 2)

    def test_undeclared_leaf(self):
        report = validate_tree([('1', 'x'), ('2', 'x'), ('3', 'y'), ('y', 'x'), ('y', 'w')], LeafSet.range(3))
        assert 'tree:leaf-set' in report.axioms()

    def test_leaf_with_degree_2(self):
        report = validate_tree([('1', 'x'), ('2', 'x'), ('3', 'x'), ('1', 'y'), ('y', 'z'), ('y', 'w')],
                               LeafSet.range(3))
        assert 'tree:leaf-degree' in report.axioms()

    @pytest.mark.parametrize('edges, msg', [
        ([('1', 'x'), ('2', 'x'), ('3', 'x'), ('x', 'x')], 'Self-loop'),
        ([('1', 'x'), ('2', 'x'), ('3', 'x'), ('x', '1')], 'Duplicate edge'),
        ([('1', 'x'), ('2', 'x')], 'do not occur'),
    ])
    def test_malformed(self, edges, msg):
        with pytest.raises(InputError, match=msg):
            validate_tree(edges, LeafSet.range(3))

    def test_unknown_vertex(self):
        with pytest.raises(InputError, match="Unknown vertex id 'q'"):
            validate_tree([('1', 'x'), ('2', 'x'), ('3', 'q')], LeafSet.range(3), internal=['x'])


class TestPhyloTree:
    def test_from_edges_names(self, nine_leaf_tree):
        assert nine_leaf_tree.names == ('a', 'b', 'c', 'd', 'e')
        assert nine_leaf_tree.internal_count == 5
        assert len(nine_leaf_tree.internal_edges()) == 4

    def test_from_edges_rejects(self, n9):
        with pytest.raises(NotPhylogeneticError) as e:
            PhyloTree.from_edges([e for e in NINE_LEAF_EDGES if e != ('b', 'c')] + [('b', 'z'), ('z', 'c')], n9)
        assert e.value.report is not None
        assert not e.value.report.valid

    def test_edge_order_irrelevant(self, n9):
        shuffled = NINE_LEAF_EDGES.copy()
        random.Random(7).shuffle(shuffled)
        assert PhyloTree.from_edges(shuffled, n9) == PhyloTree.from_edges(NINE_LEAF_EDGES, n9)

    def test_names_not_compared(self):
        n3 = LeafSet.range(3)
        assert PhyloTree(n3, 1, (('1', 0), ('2', 0), ('3', 0)), ('root',)) == PhyloTree.star(n3)

    def test_branch(self, nine_leaf_tree):
        b, c = nine_leaf_tree.names.index('b'), nine_leaf_tree.names.index('c')
        assert nine_leaf_tree.branch(b, c) == frozenset('6789')
        assert nine_leaf_tree.branch(c, b) == frozenset('12345')
        with pytest.raises(InputError, match='is not an edge'):
            nine_leaf_tree.branch(0, 4)

    @pytest.mark.parametrize('internal_count, edges', [(1, (('1', 1),)), (1, (('7', 0),)), (-1, ())])
    def test_bad_vertex_ids(self, internal_count, edges):
        with pytest.raises(InputError):
            PhyloTree(LeafSet.range(3), internal_count, edges)


class TestMedianVertex:
    @pytest.mark.parametrize('triple, vertex', [('123', 'a'), ('145', 'b'), ('168', 'c'), ('367', 'd'),
                                                ('489', 'e'), ('124', 'a'), ('469', 'c')])
    def test_nine_leaf(self, nine_leaf_tree, triple, vertex):
        assert nine_leaf_tree.names[median_vertex(nine_leaf_tree, triple)] == vertex

    def test_rejects_non_triples(self, nine_leaf_tree):
        with pytest.raises(InputError):
            median_vertex(nine_leaf_tree, '12')
        with pytest.raises(InputError):
            median_vertex(nine_leaf_tree, '12x')

    @given(st.permutations('123456789'))
    def test_paths_from_median_are_disjoint(self, labels):
        triple = labels[:3]
        m = median_vertex(NINE_LEAF, triple)
        paths = [set(nx.shortest_path(NINE_LEAF.graph, m, leaf)) for leaf in triple]
        for p, q in combinations(paths, 2):
            assert p & q == {m}
