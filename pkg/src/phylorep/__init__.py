#!/usr/bin/env python3
# coding=utf-8

"""
Five equivalent representations of phylogenetic trees: trees, partition collections, cut sets, crossing relations
and triple equivalences. Each comes with a validator for its axioms, and any one converts into any other.

Quick start::

    >>> from phylorep import parse_newick, convert
    >>> tree = parse_newick('((1,2),3,(4,5));')
    >>> [str(c) for c in convert(tree, to='cuts')]
    ['12|345', '123|45']

Library modules only log through ``logging.getLogger(__name__)``; see ``phylorep.logs`` to configure output.
"""

# region errors re-exports
from phylorep.errors import errmsg_creator as errmsg_creator
from phylorep.errors import PhyloRepError as PhyloRepError
from phylorep.errors import InputError as InputError
from phylorep.errors import LeafSetError as LeafSetError
from phylorep.errors import NewickSyntaxError as NewickSyntaxError
from phylorep.errors import NotPhylogeneticError as NotPhylogeneticError
# endregion

# region core re-exports
from phylorep.core import LeafSet as LeafSet
from phylorep.core import ValidationReport as ValidationReport
from phylorep.core import Violation as Violation
from phylorep.core import PhyloTree as PhyloTree
from phylorep.core import Partition as Partition
from phylorep.core import PartitionCollection as PartitionCollection
from phylorep.core import Cut as Cut
from phylorep.core import CutSet as CutSet
from phylorep.core import Cross as Cross
from phylorep.core import CrossingRelation as CrossingRelation
from phylorep.core import TripleEquivalence as TripleEquivalence
from phylorep.core import Structure as Structure
from phylorep.core import KINDS as KINDS
from phylorep.core import kind_of as kind_of
from phylorep.core import validate as validate
# endregion

# region convert re-exports
from phylorep.convert import convert as convert
from phylorep.convert import to_tree as to_tree
# endregion

# region io re-exports
from phylorep.io import parse_newick as parse_newick
from phylorep.io import write_newick as write_newick
from phylorep.io import serialize_structure as serialize_structure
from phylorep.io import parse_document as parse_document
from phylorep.io import to_dot as to_dot
# endregion

# region enumeration re-exports
from phylorep.enumeration import enumerate_trees as enumerate_trees
from phylorep.enumeration import count_trees as count_trees
from phylorep.enumeration import trees_isomorphic as trees_isomorphic
from phylorep.enumeration import roundtrip as roundtrip
# endregion
