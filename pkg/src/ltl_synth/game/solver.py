"""Strategy iteration with nondeterministic strategies and colour-count weights.

A weight counts how often each colour occurs on a path. Weights are ordered from the point of
view of the player ``P`` being solved for, whose parity is ``p``: compare at the least colour
where two weights differ; more occurrences are better if that colour has parity ``p`` and worse
otherwise. Distances extend weights with -inf and +inf.

``P`` fixes a nondeterministic strategy (a set of edges per node, or the give-up move which
ends the play at weight zero); the opponent plays optimally against it. Improvement switches
every node to all of its strictly better moves until nothing improves; the nodes at distance
+inf are exactly the nodes won by ``P``. Boundary nodes count as distance zero, so partial
arenas are solved conservatively.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import IntEnum

from ..core.exceptions import SolverError
from ..core.models import Player
from .graph import NEUTRAL, ParityGame

logger = logging.getLogger(__name__)

GIVE_UP = -1

Weight = tuple[int, ...]
Distance = tuple[int, ...]
Strategy = dict[int, frozenset[int]]

MINUS_INFINITY: Distance = (0,)
PLUS_INFINITY: Distance = (2,)


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _key(g: Weight, parity: int) -> tuple[int, ...]:
    # lexicographic order on the key is the player order on weights
    return tuple(count if c % 2 == parity else -count for c, count in enumerate(g))


def cmp(g: Weight, other: Weight, parity: int) -> Ordering:
    """Compare two weights over the same colours for a player of the given parity."""
    if len(g) != len(other):
        raise ValueError("Weights must range over the same colours")
    a, b = _key(g, parity), _key(other, parity)
    if a == b:
        return Ordering.EQUAL
    return Ordering.LESS if a < b else Ordering.GREATER


def finite(g: Weight, parity: int) -> Distance:
    return (1, *_key(g, parity))


def weight_of(d: Distance, parity: int) -> Weight | None:
    """The weight of a finite distance, None for the infinite ones."""
    if d[0] != 1:
        return None
    return tuple(v if c % 2 == parity else -v for c, v in enumerate(d[1:]))


def _zero(colours: int) -> Distance:
    return (1,) + (0,) * colours


def _extend(d: Distance, colour: int, parity: int) -> Distance:
    if colour == NEUTRAL or d[0] != 1:
        return d
    values = list(d)
    values[1 + colour] += 1 if colour % 2 == parity else -1
    return tuple(values)


def _colours(game: ParityGame) -> int:
    return max(game.max_colour, 1) + 1


def _fixed_values(game: ParityGame, player: Player, colours: int) -> dict[int, Distance]:
    fixed: dict[int, Distance] = {}
    zero = _zero(colours)
    for v in game.boundary:
        fixed[v] = zero
    for v, winner in game.sink_winner.items():
        fixed[v] = PLUS_INFINITY if winner is player else MINUS_INFINITY
    for v in game.nodes():
        if v not in fixed and not game.out_edges[v]:
            fixed[v] = MINUS_INFINITY if game.owner[v] is player else PLUS_INFINITY
    return fixed


def _moves(
    game: ParityGame, v: int, values: list[Distance], parity: int, zero: Distance
) -> dict[int, Distance]:
    moves = {GIVE_UP: zero}
    for e in game.out_edges[v]:
        edge = game.edges[e]
        moves[e] = _extend(values[edge.target], edge.colour, parity)
    return moves


def evaluate(
    game: ParityGame, strategy: Mapping[int, frozenset[int]], player: Player, parity: int
) -> list[Distance]:
    """Distances of all nodes when ``player`` is restricted to ``strategy``.

    Values are computed by in-place relaxation downwards from +inf. The player's nodes take the
    best of their strategy moves, the opponent's nodes the worst of all their edges.

    Raises:
        SolverError: If the values do not stabilise, i.e. the strategy lets the opponent close
            a cycle that is bad for the player.
    """
    colours = _colours(game)
    zero = _zero(colours)
    fixed = _fixed_values(game, player, colours)
    values = [PLUS_INFINITY] * game.n_nodes
    for v, value in fixed.items():
        values[v] = value
    free = [v for v in reversed(game.nodes()) if v not in fixed]
    for _ in range(game.n_nodes + 2):
        changed = False
        for v in free:
            if game.owner[v] is player:
                best = MINUS_INFINITY
                for e in strategy.get(v, frozenset({GIVE_UP})):
                    if e == GIVE_UP:
                        candidate = zero
                    else:
                        edge = game.edges[e]
                        candidate = _extend(values[edge.target], edge.colour, parity)
                    if candidate > best:
                        best = candidate
                new = best
            else:
                new = PLUS_INFINITY
                for e in game.out_edges[v]:
                    edge = game.edges[e]
                    candidate = _extend(values[edge.target], edge.colour, parity)
                    if candidate < new:
                        new = candidate
            if new != values[v]:
                values[v] = new
                changed = True
        if not changed:
            return values
    raise SolverError("Strategy evaluation did not stabilise; the strategy admits a losing cycle")


def improve(
    game: ParityGame,
    strategy: Mapping[int, frozenset[int]],
    values: list[Distance],
    player: Player,
    parity: int,
) -> Strategy | None:
    """Switch every node with a strictly better move to the set of all its best moves.

    Returns:
        The improved strategy, or None if ``strategy`` is already a fixpoint.
    """
    zero = _zero(_colours(game))
    improved = dict(strategy)
    switched = False
    for v in strategy:
        moves = _moves(game, v, values, parity, zero)
        best = max(moves.values())
        if best > values[v]:
            improved[v] = frozenset(e for e, value in moves.items() if value == best)
            switched = True
    return improved if switched else None


@dataclass
class SolveResult:
    """Outcome of :func:`solve` for one player.

    ``won[v]`` holds iff the final distance of ``v`` is +inf. For won nodes of the player the
    strategy only keeps moves into won nodes.
    """

    player: Player
    parity: int
    values: list[Distance]
    strategy: Strategy
    improvements: int = 0
    won: list[bool] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.won:
            self.won = [value == PLUS_INFINITY for value in self.values]

    def wins(self, node: int) -> bool:
        return self.won[node]

    @property
    def winning_region(self) -> set[int]:
        return {v for v, won in enumerate(self.won) if won}


def initial_strategy(
    game: ParityGame, player: Player, previous: Mapping[int, frozenset[int]] | None = None
) -> Strategy:
    """Previous moves of every free node of ``player`` where still valid, give up elsewhere."""
    strategy: Strategy = {}
    for v in game.nodes():
        if game.owner[v] is not player or v in game.boundary or v in game.sink_winner:
            continue
        if not game.out_edges[v]:
            continue
        moves = previous.get(v) if previous is not None else None
        valid = set(game.out_edges[v]) | {GIVE_UP}
        if moves and moves <= valid:
            strategy[v] = frozenset(moves)
        else:
            strategy[v] = frozenset({GIVE_UP})
    return strategy


def _check_progress(before: list[Distance], after: list[Distance]) -> None:
    if any(a < b for a, b in zip(after, before)):
        raise SolverError("Improvement decreased a distance")
    if after == before:
        raise SolverError("Improvement did not increase any distance")


def solve(
    game: ParityGame,
    player: Player,
    parity: int,
    previous: Mapping[int, frozenset[int]] | None = None,
    check_progress: bool = False,
) -> SolveResult:
    """Solve ``game`` for ``player`` with parity ``parity``.

    Args:
        game: The game; boundary nodes are losing for ``player``.
        player: The player to solve for.
        parity: Winning parity of ``player``.
        previous: Strategy of an earlier call to start from (nodes it does not cover give up).
        check_progress: Assert that every improvement strictly increases the distances.

    Returns:
        The winning nodes, the final distances and the final strategy.

    Raises:
        SolverError: If ``check_progress`` is set and an improvement does not make progress.
    """
    strategy = initial_strategy(game, player, previous)
    try:
        values = evaluate(game, strategy, player, parity)
    except SolverError:
        if previous is None:
            raise
        logger.debug("Reused strategy is not valid on the grown game, restarting from give-up")
        strategy = initial_strategy(game, player)
        values = evaluate(game, strategy, player, parity)
    improvements = 0
    while True:
        improved = improve(game, strategy, values, player, parity)
        if improved is None:
            break
        strategy = improved
        improvements += 1
        updated = evaluate(game, strategy, player, parity)
        if check_progress:
            _check_progress(values, updated)
        values = updated
    for v, moves in strategy.items():
        if values[v] == PLUS_INFINITY:
            strategy[v] = frozenset(
                e for e in moves if e != GIVE_UP and values[game.edges[e].target] == PLUS_INFINITY
            )
    result = SolveResult(player, parity, values, strategy, improvements)
    logger.debug(
        "Solved for %s (parity %d): %d improvement(s), %d winning node(s)",
        player.value,
        parity,
        improvements,
        len(result.winning_region),
    )
    return result
