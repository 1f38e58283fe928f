"""Exact p-element counting, Sylow statistics and subnormalizers for permutation groups."""

import sys

# Witnesses such as |C(P)|^((p-1)|P|) run to thousands of digits and are
# always rendered in full.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

from .perm import CapExceeded, FiniteGroup, Permutation, Subgroup, closure, element_order, parse_permutation

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "FiniteGroup",
    "Permutation",
    "Subgroup",
    "closure",
    "element_order",
    "parse_permutation",
]
