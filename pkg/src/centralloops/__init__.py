"""Computational tools for central loops: autotopisms, parastrophes and triple systems."""

from .perm import Perm, compose, format_cycles, identity_perm, invert, parse_cycles, power
from .magma import (
    CayleyTable,
    LoopStructure,
    as_loop,
    element_power,
    from_table,
    left_translation,
    read_table_file,
    right_translation,
    right_translations,
    write_table_file,
)

__version__ = "0.1.0"
