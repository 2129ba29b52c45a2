"""Exact computation in right-angled Artin groups.

Canonical normal forms, conjugacy with explicit witnesses, centralizers,
double cosets, and residual separation in finite p-groups and torsion-free
nilpotent quotients.
"""

from .graphs import Graph, load_graph
from .words import Element, gen, parse

__all__ = ["Graph", "load_graph", "Element", "gen", "parse"]

__version__ = "0.1.0"
