"""Boundary filtering: keep the boundary nodes that can still influence the initial node."""

from collections.abc import Collection

import networkx as nx

from ..game.arena import Arena


def filter_boundary(arena: Arena, decided: Collection[int]) -> list[int]:
    """Boundary nodes reachable from the initial node through undecided nodes only.

    Args:
        arena: The current arena.
        decided: Nodes already won by one of the players.

    Returns:
        The reachable boundary nodes in boundary order; empty if the initial node is decided.
    """
    if arena.initial in decided:
        return []
    view = nx.restricted_view(arena.graph, list(decided), [])
    reachable = nx.descendants(view, arena.initial) | {arena.initial}
    return [v for v in arena.boundary if v in reachable]
