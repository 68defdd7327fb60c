#!/usr/bin/env python3
# coding=utf-8

"""
Conversion maps between trees, partition collections, cut sets, crossing relations and triple equivalences.
"""

# region partitions re-exports
from phylorep.convert.partitions import tree_to_partitions as tree_to_partitions
from phylorep.convert.partitions import partitions_to_tree as partitions_to_tree
from phylorep.convert.partitions import partitions_to_cuts as partitions_to_cuts
# endregion

# region cuts re-exports
from phylorep.convert.cuts import HasseDiagram as HasseDiagram
from phylorep.convert.cuts import tree_to_cuts as tree_to_cuts
from phylorep.convert.cuts import cut_graph as cut_graph
from phylorep.convert.cuts import cuts_to_tree as cuts_to_tree
# endregion

# region crossing re-exports
from phylorep.convert.crossing import PartialCut as PartialCut
from phylorep.convert.crossing import cuts_to_crossing as cuts_to_crossing
from phylorep.convert.crossing import is_compatible as is_compatible
from phylorep.convert.crossing import crossing_to_cuts as crossing_to_cuts
from phylorep.convert.crossing import extend_partial_cut as extend_partial_cut
from phylorep.convert.crossing import complete_partial_cut as complete_partial_cut
from phylorep.convert.crossing import cross_to_cut as cross_to_cut
# endregion

# region equivalence re-exports
from phylorep.convert.equivalence import tree_to_equivalence as tree_to_equivalence
from phylorep.convert.equivalence import separating_partition as separating_partition
from phylorep.convert.equivalence import separated_triples as separated_triples
from phylorep.convert.equivalence import class_partition as class_partition
from phylorep.convert.equivalence import equivalence_to_partitions as equivalence_to_partitions
from phylorep.convert.equivalence import partitions_to_equivalence as partitions_to_equivalence
# endregion

from phylorep.convert.route import convert as convert
from phylorep.convert.route import to_tree as to_tree
