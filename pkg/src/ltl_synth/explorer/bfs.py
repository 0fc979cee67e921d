"""Breadth-first exploration."""

from ..game.arena import Arena
from .base import Explorer


class BfsExplorer(Explorer):
    """Expand the boundary node closest to the initial node (first discovered on ties)."""

    def select(self, arena: Arena, candidates: list[int]) -> list[int]:
        shallowest = min(arena.depth[v] for v in candidates)
        layer = [v for v in candidates if arena.depth[v] == shallowest]
        return layer if self.layer_mode else layer[:1]


class BfsPlusExplorer(BfsExplorer):
    """Breadth-first exploration restricted to nodes that can still matter."""

    filtered = True
