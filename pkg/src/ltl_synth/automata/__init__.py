"""On-the-fly deterministic parity automata for annotated formulas."""

from .base import Automaton, LeafAutomaton
from .cubes import TRUE_CUBE, Cube, cover, submasks
from .handle import DpaHandle, TransitionCell, TransitionGroup, build, dump_hoa
from .leaves import BuchiLeaf, CoBuchiLeaf, WeakLeaf
from .products import Biconditional, BinaryProduct, Composite, ProductRule, RoundRobin
from .states import BuchiState, ProductState, Sink, State, format_state, swap_sink

__all__ = [
    "TRUE_CUBE",
    "Automaton",
    "Biconditional",
    "BinaryProduct",
    "BuchiLeaf",
    "BuchiState",
    "CoBuchiLeaf",
    "Composite",
    "Cube",
    "DpaHandle",
    "LeafAutomaton",
    "ProductRule",
    "ProductState",
    "RoundRobin",
    "Sink",
    "State",
    "TransitionCell",
    "TransitionGroup",
    "WeakLeaf",
    "build",
    "cover",
    "dump_hoa",
    "format_state",
    "submasks",
    "swap_sink",
]
