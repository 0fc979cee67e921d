"""Classical recursive parity game solver, used as an independent oracle.

Edge colours are moved onto nodes by splitting every edge with a fresh node carrying its colour.
The original nodes and the neutral edges get a colour above all real colours, so they never
decide a play.
"""

import networkx as nx

from ..core.models import Player
from .graph import NEUTRAL, ParityGame

_Split = tuple[nx.DiGraph, dict[object, int], dict[object, Player]]


def _split(game: ParityGame) -> _Split:
    graph = nx.DiGraph()
    high = game.max_colour + 1
    colour: dict[object, int] = {}
    owner: dict[object, Player] = {}
    for v in game.nodes():
        graph.add_node(v)
        colour[v] = high
        owner[v] = game.owner[v]
    for e, edge in enumerate(game.edges):
        middle = ("edge", e)
        graph.add_edge(edge.source, middle)
        graph.add_edge(middle, edge.target)
        colour[middle] = high if edge.colour == NEUTRAL else edge.colour
        owner[middle] = game.owner[edge.source]
    return graph, colour, owner


def attractor(
    graph: nx.DiGraph,
    nodes: set[object],
    target: set[object],
    player: Player,
    owner: dict[object, Player],
) -> set[object]:
    """Nodes of the subgame ``nodes`` from which ``player`` can force a visit to ``target``."""
    attracted = set(target)
    remaining = {
        v: sum(1 for w in graph.successors(v) if w in nodes) for v in nodes if v not in target
    }
    queue = list(target)
    while queue:
        w = queue.pop()
        for v in graph.predecessors(w):
            if v not in nodes or v in attracted:
                continue
            if owner[v] is player:
                attracted.add(v)
                queue.append(v)
            else:
                remaining[v] -= 1
                if remaining[v] == 0:
                    attracted.add(v)
                    queue.append(v)
    return attracted


def _solve(
    graph: nx.DiGraph,
    nodes: set[object],
    colour: dict[object, int],
    owner: dict[object, Player],
    parity: int,
) -> dict[Player, set[object]]:
    if not nodes:
        return {Player.CONTROLLER: set(), Player.ENVIRONMENT: set()}
    least = min(colour[v] for v in nodes)
    player = Player.CONTROLLER if least % 2 == parity else Player.ENVIRONMENT
    opponent = player.opponent
    top = {v for v in nodes if colour[v] == least}
    first = attractor(graph, nodes, top, player, owner)
    sub = _solve(graph, nodes - first, colour, owner, parity)
    if not sub[opponent]:
        return {player: set(nodes), opponent: set()}
    lost = attractor(graph, nodes, sub[opponent], opponent, owner)
    rest = _solve(graph, nodes - lost, colour, owner, parity)
    return {player: rest[player], opponent: rest[opponent] | lost}


def solve_zielonka(game: ParityGame) -> dict[Player, set[int]]:
    """Winning regions of both players on a fully explored, total game.

    The controller wins a play iff the least colour occurring infinitely often has the parity
    of the game.

    Raises:
        ValueError: If the game has boundary nodes or dead ends.
    """
    if game.boundary or not game.is_total():
        raise ValueError("The recursive solver needs a fully explored total game")
    graph, colour, owner = _split(game)
    regions = _solve(graph, set(graph.nodes), colour, owner, game.parity)
    return {
        player: {v for v in region if isinstance(v, int)} for player, region in regions.items()
    }
