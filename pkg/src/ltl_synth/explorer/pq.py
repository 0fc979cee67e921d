"""Score-guided exploration with a double-ended priority queue."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from ..automata.handle import DpaHandle
from ..automata.states import format_state
from ..game.arena import Arena
from .base import Explorer
from .scoring import Score, score

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScoredEdge:
    """One scored arena edge, kept for score traces."""

    source: int
    target: int
    colour: int
    score: Score


class PqExplorer(Explorer):
    """Expand the boundary node with the lowest incoming score and the one with the highest.

    Every boundary node remembers the least and the greatest score of the edges reaching it;
    the lowest is the most promising refutation, the highest the most promising win. Ties go
    to the node that joined the boundary first.
    """

    def __init__(self, handle: DpaHandle | None = None, layer_mode: bool = False) -> None:
        super().__init__(handle, layer_mode)
        self.low: dict[int, float] = {}
        self.high: dict[int, float] = {}
        self.trace: list[ScoredEdge] = []

    def discovered(self, arena: Arena, expanded: list[int], new_nodes: list[int]) -> None:
        if self.handle is None:
            raise ValueError("Score-guided exploration needs the automaton handle")
        root = self.handle.root
        for node in expanded:
            state = arena.states[node]
            for middle in arena.successors(node):
                for e in arena.out_edges[middle]:
                    edge = arena.edges[e]
                    if edge.target not in arena.boundary:
                        continue
                    cell = arena.cells[e]
                    letter = min(cell.input_set) | min(cell.output_set)
                    result = score(root, state, letter, arena.states[edge.target])
                    self.trace.append(ScoredEdge(node, edge.target, edge.colour, result))
                    low = self.low.get(edge.target, result.value)
                    high = self.high.get(edge.target, result.value)
                    self.low[edge.target] = min(low, result.value)
                    self.high[edge.target] = max(high, result.value)

    def select(self, arena: Arena, candidates: list[int]) -> list[int]:
        order = {v: k for k, v in enumerate(candidates)}
        worst = min(candidates, key=lambda v: (self.low.get(v, 0.5), order[v]))
        best = min(candidates, key=lambda v: (-self.high.get(v, 0.5), order[v]))
        logger.debug(
            "pq picks %d (low %.3f) and %d (high %.3f)",
            worst,
            self.low.get(worst, 0.5),
            best,
            self.high.get(best, 0.5),
        )
        return [worst] if worst == best else [worst, best]


class PqPlusExplorer(PqExplorer):
    """Score-guided exploration restricted to nodes that can still matter."""

    filtered = True


def format_score_trace(
    trace: Sequence[ScoredEdge], arena: Arena, names: tuple[str, ...] | None = None
) -> str:
    """One line per scored edge: ``source -> target colour w s`` with state labels."""
    lines = []
    for item in trace:
        source = format_state(arena.states[item.source], names)
        target = format_state(arena.states[item.target], names)
        lines.append(
            f"{item.source} -> {item.target} colour {item.colour} "
            f"w={item.score.weight:.4f} s={item.score.value:.4f}  {source} => {target}"
        )
    return "\n".join(lines) + ("\n" if lines else "")
