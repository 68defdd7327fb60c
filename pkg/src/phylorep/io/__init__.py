#!/usr/bin/env python3
# coding=utf-8

"""
Newick, canonical JSON and DOT for the five representations.
"""

from phylorep.io.newick import parse_newick as parse_newick
from phylorep.io.newick import write_newick as write_newick

# region json re-exports
from phylorep.io.jsondoc import BODY_KEYS as BODY_KEYS
from phylorep.io.jsondoc import Document as Document
from phylorep.io.jsondoc import to_document as to_document
from phylorep.io.jsondoc import from_document as from_document
from phylorep.io.jsondoc import serialize_structure as serialize_structure
from phylorep.io.jsondoc import parse_document as parse_document
# endregion

from phylorep.io.dot import to_dot as to_dot
from phylorep.io.dot import tree_graph as tree_graph
