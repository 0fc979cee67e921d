"""Base exploration oracle interface."""

import logging
from abc import ABC, abstractmethod
from collections.abc import Collection

from ..automata.handle import DpaHandle
from ..game.arena import Arena
from .filtering import filter_boundary

logger = logging.getLogger(__name__)


class Explorer(ABC):
    """Abstract base class for exploration oracles.

    An oracle picks the boundary nodes to expand next. Filtering variants only consider nodes
    reachable from the initial node through undecided nodes and fall back to the whole boundary
    when nothing is left.
    """

    filtered: bool = False

    def __init__(self, handle: DpaHandle | None = None, layer_mode: bool = False) -> None:
        """Initialize the oracle.

        Args:
            handle: Automaton of the arena, needed by oracles that score transitions.
            layer_mode: Let breadth-first oracles return a whole depth layer.
        """
        self.handle = handle
        self.layer_mode = layer_mode
        self.fallbacks = 0

    def discovered(self, arena: Arena, expanded: list[int], new_nodes: list[int]) -> None:
        """Hook called after ``expanded`` were expanded and ``new_nodes`` joined the boundary."""

    def candidates(self, arena: Arena, decided: Collection[int]) -> list[int]:
        nodes = list(arena.boundary)
        if not self.filtered:
            return nodes
        kept = filter_boundary(arena, decided)
        if not kept:
            self.fallbacks += 1
            logger.warning(
                "No boundary node reachable through undecided nodes; using all %d", len(nodes)
            )
            return nodes
        return kept

    def explore(self, arena: Arena, decided: Collection[int] = ()) -> list[int]:
        """Boundary nodes to expand next.

        Args:
            arena: The current arena.
            decided: Nodes won by either player in the latest solver calls.

        Raises:
            ValueError: If the boundary is empty.
        """
        if not arena.boundary:
            raise ValueError("Cannot explore an empty boundary")
        return self.select(arena, self.candidates(arena, decided))

    @abstractmethod
    def select(self, arena: Arena, candidates: list[int]) -> list[int]:
        """Pick nodes among the non-empty list ``candidates`` (in boundary order)."""
        raise NotImplementedError
