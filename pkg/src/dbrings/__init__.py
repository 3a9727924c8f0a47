"""De Bruijn rings and almost perfect maps over composite alphabets."""

from .composer import (
    CompositionSpec,
    ProductMap,
    build_almost_perfect,
    compose_product,
    plan_composition,
    prime_square_size,
    rotate90,
    square_map_size,
)
from .decoder import DecoderIndex, Position, build_index, decode, split_window
from .errors import (
    ArgumentError,
    ConstructionError,
    DBError,
    EnumerationTooLarge,
    InfeasibleTrim,
    NotInMap,
    ResourceBudgetError,
)
from .maps import CyclicMap, read_map, write_map
from .ring_builder import build_ring, stair_column, trim_ring
from .ring_graph import RingGraph, build_ring_graph, euler_cycle
from .verifier import VerificationReport, coverage, verify
from .words import Alphabet, debruijn_sequence, is_aperiodic, is_lyndon, lexmin_rotation, mobius, necklace_poly

__version__ = "0.1.0"
