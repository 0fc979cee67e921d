"""Incrementally explored synthesis arena with Mealy semantics.

Environment nodes are automaton states. From an environment node the environment picks an
input class (neutral edge to an intermediate node); from the intermediate node the controller
picks an output cell, reaching the successor state with the automaton colour. The two global
sinks loop on themselves.
"""

import logging
from collections.abc import Iterable

from ..automata.handle import DpaHandle, TransitionCell
from ..automata.states import Sink, State, format_state
from ..core.models import Player
from .graph import NEUTRAL, ParityGame, format_game

logger = logging.getLogger(__name__)


class Arena(ParityGame):
    """Parity game under construction, with the boundary of unexplored environment nodes.

    Attributes:
        initial: Node of the initial automaton state.
        bottom: Node of the rejecting sink (won by the environment).
        top: Node of the accepting sink (won by the controller).
        states: Automaton state of every environment node.
        ids: Inverse of ``states``.
        cells: Transition cell behind every intermediate-to-environment edge.
        input_sets: Input class (projected input letters) of every intermediate node.
        parent: Environment node owning every intermediate node.
        depth: Discovery depth of every environment node.
    """

    def __init__(self, initial: State, parity: int) -> None:
        super().__init__(parity)
        self.states: dict[int, State] = {}
        self.ids: dict[State, int] = {}
        self.cells: dict[int, TransitionCell] = {}
        self.input_sets: dict[int, frozenset[int]] = {}
        self.input_care: dict[int, int] = {}
        self.parent: dict[int, int] = {}
        self.depth: dict[int, int] = {}
        if not isinstance(initial, Sink):
            self.initial = self.add_state(initial, depth=0)
        self.bottom = self.add_state(Sink.BOTTOM, depth=0)
        self.top = self.add_state(Sink.TOP, depth=0)
        if isinstance(initial, Sink):
            self.initial = self.ids[initial]
        self.add_edge(self.bottom, self.bottom, 1 - parity)
        self.add_edge(self.top, self.top, parity)
        self.sink_winner[self.bottom] = Player.ENVIRONMENT
        self.sink_winner[self.top] = Player.CONTROLLER

    def add_state(self, state: State, depth: int) -> int:
        node = self.add_node(Player.ENVIRONMENT, boundary=not isinstance(state, Sink))
        self.states[node] = state
        self.ids[state] = node
        self.depth[node] = depth
        return node

    def is_environment(self, node: int) -> bool:
        return node in self.states

    def environment_nodes(self) -> list[int]:
        return list(self.states)

    def intermediate_nodes(self) -> list[int]:
        return list(self.parent)

    def label(self, node: int, names: tuple[str, ...] | None = None) -> str:
        if node in self.states:
            return format_state(self.states[node], names)
        parent = self.parent[node]
        inputs = ",".join(str(i) for i in sorted(self.input_sets[node]))
        return f"{format_state(self.states[parent], names)} / inputs {{{inputs}}}"


def init_arena(initial: State, parity: int) -> Arena:
    """Arena with the initial node and the two sinks; the initial node is the only boundary node."""
    return Arena(initial, parity)


def boundary(arena: Arena) -> set[int]:
    return set(arena.boundary)


def expand(arena: Arena, nodes: Iterable[int], handle: DpaHandle) -> list[int]:
    """Expand boundary nodes with their automaton transitions.

    Every input class of a node becomes an intermediate node; every cell becomes an edge from it
    to the successor state with the cell's colour. Unseen successors join the boundary.

    Args:
        arena: The arena to grow.
        nodes: Boundary nodes to expand, processed in the given order.
        handle: Automaton providing the transitions.

    Returns:
        The newly discovered environment nodes.

    Raises:
        ValueError: If a node is not on the boundary.
    """
    batch = list(nodes)
    discovered: list[int] = []
    for node in batch:
        if node not in arena.boundary:
            raise ValueError(f"Node {node} is not on the boundary")
        del arena.boundary[node]
        intermediates: dict[frozenset[int], int] = {}
        for cell in handle.successors(arena.states[node]):
            middle = intermediates.get(cell.input_set)
            if middle is None:
                middle = arena.add_node(Player.CONTROLLER)
                intermediates[cell.input_set] = middle
                arena.input_sets[middle] = cell.input_set
                arena.input_care[middle] = cell.input_care
                arena.parent[middle] = node
                arena.add_edge(node, middle, NEUTRAL)
            target = arena.ids.get(cell.successor)
            if target is None:
                target = arena.add_state(cell.successor, arena.depth[node] + 1)
                discovered.append(target)
            edge = arena.add_edge(middle, target, cell.colour)
            arena.cells[edge] = cell
    logger.debug(
        "Expanded %d node(s): %d new, boundary %d, arena %d nodes / %d edges",
        len(batch),
        len(discovered),
        len(arena.boundary),
        arena.n_nodes,
        len(arena.edges),
    )
    return discovered


def dump_arena(arena: Arena, names: tuple[str, ...] | None = None) -> str:
    """Explicit game listing of the arena with state labels."""
    labels = {v: arena.label(v, names) for v in arena.nodes()}
    return format_game(arena, labels)
