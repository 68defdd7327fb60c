#!/usr/bin/env python3
# coding=utf-8


"""
Global constants for phylorep.
"""

MIN_LEAVES = 3
"""
No structure is defined on fewer leaves than this.
"""

DEFAULT_VIOLATION_CAP = 32
"""
Validators stop recording violations after this many and mark their report as truncated.
"""

PHYLOREP_MAX_N_ENV_VAR = 'PHYLOREP_MAX_N'
"""
Caps the leaf count the command line front end is willing to enumerate.
"""

DEFAULT_MAX_N = 7
"""
Enumeration cap used when ``PHYLOREP_MAX_N`` is not set.
"""

HARD_MAX_N = 8
"""
Largest leaf count the enumerator ever accepts. There are 39208 trees on 8 leaves.
"""

PHYLOREP_LOG_ENV_VAR = 'PHYLOREP_LOG'
"""
Log level for the ``phylorep`` logger, takes precedence over ``-v``/``-q``.
"""

LABEL_PATTERN = r'[A-Za-z0-9_.|-]+'
"""
Leaf labels, and Newick names, are made of these characters only.
"""
