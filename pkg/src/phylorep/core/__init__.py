#!/usr/bin/env python3
# coding=utf-8

"""
Domain types of the five tree representations and their axiom validators.
"""

# region leaves and reports re-exports
from phylorep.core.leaves import LeafSet as LeafSet
from phylorep.core.report import Violation as Violation
from phylorep.core.report import ValidationReport as ValidationReport
from phylorep.core.report import ViolationCollector as ViolationCollector
# endregion

# region tree re-exports
from phylorep.core.tree import PhyloTree as PhyloTree
from phylorep.core.tree import validate_tree as validate_tree
from phylorep.core.tree import median_vertex as median_vertex
# endregion

# region partitions re-exports
from phylorep.core.partitions import Partition as Partition
from phylorep.core.partitions import PartitionCollection as PartitionCollection
from phylorep.core.partitions import validate_partitions as validate_partitions
from phylorep.core.partitions import check_unique_separation as check_unique_separation
# endregion

# region cuts re-exports
from phylorep.core.cuts import Cut as Cut
from phylorep.core.cuts import CutSet as CutSet
from phylorep.core.cuts import clusters as clusters
from phylorep.core.cuts import validate_cuts as validate_cuts
# endregion

# region crossing re-exports
from phylorep.core.crossing import Cross as Cross
from phylorep.core.crossing import CrossingRelation as CrossingRelation
from phylorep.core.crossing import crosses_of as crosses_of
from phylorep.core.crossing import validate_crossing as validate_crossing
# endregion

# region equivalence re-exports
from phylorep.core.equivalence import TripleEquivalence as TripleEquivalence
from phylorep.core.equivalence import is_diverse as is_diverse
from phylorep.core.equivalence import validate_equivalence as validate_equivalence
# endregion

type Structure = PhyloTree | PartitionCollection | CutSet | CrossingRelation | TripleEquivalence
"""
Any of the five representations.
"""

KINDS: dict[str, type] = {
    'tree': PhyloTree,
    'partitions': PartitionCollection,
    'cuts': CutSet,
    'crossing': CrossingRelation,
    'equivalence': TripleEquivalence,
}
"""
Kind names used by documents and the command line, mapped to their types.
"""


def kind_of(x: Structure) -> str:
    """
    >>> kind_of(PhyloTree.star(LeafSet.range(3)))
    'tree'

    :raise TypeError: if ``x`` is none of the five structures.
    """
    for kind, cls in KINDS.items():
        if isinstance(x, cls):
            return kind
    raise TypeError(f"Unexpected type: {type(x).__name__}")


def validate(x: Structure, cap: int | None = None) -> ValidationReport:
    """
    Run the validator matching the kind of ``x``.
    """
    kw = {} if cap is None else {'cap': cap}
    match x:
        case PhyloTree():
            return x.validate(**kw)
        case PartitionCollection():
            return validate_partitions(x, **kw)
        case CutSet():
            return validate_cuts(x, **kw)
        case CrossingRelation():
            return validate_crossing(x, **kw)
        case TripleEquivalence():
            return validate_equivalence(x, **kw)
    raise TypeError(f"Unexpected type: {type(x).__name__}")
