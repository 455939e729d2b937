"""Rigidity algorithms for fixed-lattice periodic and cone frameworks."""
from .colored import (
    Z2,
    ColoredGraph,
    Component,
    GraphError,
    GroupDescriptor,
    spanned,
    subgraph,
    validate,
    zk,
)
from .cone import ConeRun, cone_components, cone_decide, cone_extract
from .development import cone3_components, cone3_decide, develop
from .fixed_lattice import RossRun, ross_components, ross_decide, ross_extract
from .gamma import build_forest, fundamental_cycle_image, is_trivial_image, lca
from .graphio import dump, load, parse, serialize
from .pebble import PebbleGame, new_game

__version__ = "0.1.0"
