"""Explicit edge-coloured parity games.

Nodes are consecutive integers owned by one of the two players. Edges carry a colour or the
neutral colour :data:`NEUTRAL` (written ``inf``), which contributes nothing to a play. A play
is won by the controller iff the least colour occurring infinitely often has the game's parity.

The game keeps a networkx ``MultiDiGraph`` in sync for graph searches.
"""

from collections.abc import Iterable
from dataclasses import dataclass

import networkx as nx

from ..core.models import Player

NEUTRAL = -1


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    colour: int

    @property
    def neutral(self) -> bool:
        return self.colour == NEUTRAL


class ParityGame:
    """Edge-coloured parity game with an optional boundary of unexplored nodes.

    Boundary nodes have no outgoing edges yet; solvers treat them as lost for the player being
    solved for. ``sink_winner`` fixes the winner of nodes whose value is known in advance.
    """

    def __init__(self, parity: int = 0) -> None:
        if parity not in (0, 1):
            raise ValueError(f"Parity must be 0 or 1, got {parity}")
        self.parity = parity
        self.owner: list[Player] = []
        self.edges: list[Edge] = []
        self.out_edges: list[list[int]] = []
        self.in_edges: list[list[int]] = []
        self.boundary: dict[int, None] = {}
        self.sink_winner: dict[int, Player] = {}
        self.graph = nx.MultiDiGraph()

    @property
    def n_nodes(self) -> int:
        return len(self.owner)

    @property
    def max_colour(self) -> int:
        return max((e.colour for e in self.edges), default=0)

    def nodes(self) -> range:
        return range(len(self.owner))

    def add_node(self, owner: Player, boundary: bool = False) -> int:
        node = len(self.owner)
        self.owner.append(owner)
        self.out_edges.append([])
        self.in_edges.append([])
        self.graph.add_node(node, owner=owner.value)
        if boundary:
            self.boundary[node] = None
        return node

    def add_edge(self, source: int, target: int, colour: int) -> int:
        """Add an edge and return its id; parallel edges are allowed."""
        if colour < NEUTRAL:
            raise ValueError(f"Invalid colour: {colour}")
        edge_id = len(self.edges)
        self.edges.append(Edge(source, target, colour))
        self.out_edges[source].append(edge_id)
        self.in_edges[target].append(edge_id)
        self.graph.add_edge(source, target, key=edge_id, colour=colour)
        return edge_id

    def successors(self, node: int) -> list[int]:
        return [self.edges[e].target for e in self.out_edges[node]]

    def is_total(self) -> bool:
        """Every node outside the boundary has a successor."""
        return all(self.out_edges[v] or v in self.boundary for v in self.nodes())


def format_game(game: ParityGame, labels: dict[int, str] | None = None) -> str:
    """Render ``game`` in the explicit text format.

    The first line is ``parity <p>``. Every node follows on its own line as
    ``<id> <owner> [boundary|won-by-<player>] <target>:<colour> ...`` where the owner is ``C``
    or ``E`` and the neutral colour is written ``inf``. A ``# label`` suffix is appended when
    labels are given.
    """
    lines = [f"parity {game.parity}"]
    for v in game.nodes():
        parts = [str(v), "C" if game.owner[v] is Player.CONTROLLER else "E"]
        if v in game.boundary:
            parts.append("boundary")
        if v in game.sink_winner:
            parts.append(f"won-by-{game.sink_winner[v].value}")
        for e in game.out_edges[v]:
            edge = game.edges[e]
            colour = "inf" if edge.neutral else str(edge.colour)
            parts.append(f"{edge.target}:{colour}")
        line = " ".join(parts)
        if labels is not None and v in labels:
            line += f" # {labels[v]}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_game(text: str) -> ParityGame:
    """Parse the text format written by :func:`format_game`.

    Raises:
        ValueError: On malformed lines, unknown owners or node ids out of order.
    """
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines or not lines[0].startswith("parity "):
        raise ValueError("Game text must start with 'parity <p>'")
    game = ParityGame(int(lines[0].split()[1]))
    pending: list[tuple[int, list[str]]] = []
    for expected, line in enumerate(lines[1:]):
        fields = line.split()
        if len(fields) < 2 or int(fields[0]) != expected:
            raise ValueError(f"Expected node {expected}, got {line!r}")
        if fields[1] not in ("C", "E"):
            raise ValueError(f"Unknown owner {fields[1]!r} for node {expected}")
        owner = Player.CONTROLLER if fields[1] == "C" else Player.ENVIRONMENT
        rest = fields[2:]
        boundary = "boundary" in rest
        node = game.add_node(owner, boundary=boundary)
        for flag in rest:
            if flag.startswith("won-by-"):
                game.sink_winner[node] = Player(flag[len("won-by-") :])
        pending.append((node, [f for f in rest if ":" in f]))
    for node, edges in pending:
        for item in edges:
            target, colour = item.split(":")
            if int(target) >= game.n_nodes:
                raise ValueError(f"Edge from {node} to unknown node {target}")
            game.add_edge(node, int(target), NEUTRAL if colour == "inf" else int(colour))
    return game


def reachable_from(game: ParityGame, nodes: Iterable[int]) -> set[int]:
    """Nodes reachable from any of ``nodes``, the nodes themselves included."""
    reached: set[int] = set()
    for v in nodes:
        if v not in reached:
            reached.add(v)
            reached |= nx.descendants(game.graph, v)
    return reached
