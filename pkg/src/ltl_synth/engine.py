"""Forward-explorative, incremental synthesis loop."""

import logging
import time
from dataclasses import dataclass

from .automata.handle import DpaHandle, build
from .core.config import get_settings
from .core.exceptions import ResourceLimitExceeded, SolverError
from .core.models import ExplorationStrategy, Player, SynthesisOptions, SynthesisStats
from .explorer import get_explorer
from .game.arena import Arena, expand, init_arena
from .game.solver import SolveResult, Strategy, solve
from .ltl.alphabet import Alphabet
from .ltl.annotation import annotate
from .ltl.formula import Formula

logger = logging.getLogger(__name__)


@dataclass
class SynthesisOutcome:
    """Result of :func:`synthesize`.

    Attributes:
        winner: Player winning the initial node.
        strategy: The winner's nondeterministic strategy.
        arena: The arena explored so far.
        handle: The automaton the arena was built from.
        controller: Last solver result for the controller.
        stats: Counters of the run.
    """

    winner: Player
    strategy: Strategy
    arena: Arena
    handle: DpaHandle
    controller: SolveResult
    stats: SynthesisStats

    @property
    def realizable(self) -> bool:
        return self.winner is Player.CONTROLLER


def default_options() -> SynthesisOptions:
    """Options taken from the application settings."""
    settings = get_settings()
    return SynthesisOptions(
        exploration=ExplorationStrategy(settings.EXPLORATION),
        max_states=settings.MAX_STATES,
        bfs_layer_mode=settings.BFS_LAYER_MODE,
        check_progress=settings.SOLVER_CHECK_PROGRESS,
    )


def synthesize(
    formula: Formula, alphabet: Alphabet, options: SynthesisOptions | None = None
) -> SynthesisOutcome:
    """Decide who wins the synthesis game of ``formula`` and return the winning strategy.

    Each iteration expands the boundary nodes picked by the exploration oracle and then solves
    the partial arena twice, first for the controller (boundary losing for it) and then for the
    environment with the complementary parity. Strategies are reused across iterations. The
    loop ends as soon as one of the players wins the initial node.

    Args:
        formula: The formula as parsed; its syntax tree drives the decomposition.
        alphabet: Input/output partition.
        options: Run options; defaults come from the settings.

    Returns:
        The outcome with winner, strategy, arena and statistics.

    Raises:
        UnsupportedFragment: If the decomposition has a leaf of parity type.
        ResourceLimitExceeded: If more than ``max_states`` environment nodes are explored.
    """
    options = options or default_options()
    started = time.perf_counter()
    alpha = annotate(formula)
    handle = build(alpha, alphabet)
    parity = handle.parity
    arena = init_arena(handle.initial(), parity)
    explorer = get_explorer(
        options.exploration.value, handle=handle, layer_mode=options.bfs_layer_mode
    )
    logger.debug("Decomposition %s, parity %d", alpha.describe(), parity)

    stats = SynthesisStats()
    sigma: Strategy | None = None
    tau: Strategy | None = None
    decided: set[int] = set()
    while True:
        stats.iterations += 1
        if arena.boundary:
            chosen = explorer.explore(arena, decided)
            discovered = expand(arena, chosen, handle)
            explorer.discovered(arena, chosen, discovered)
            if len(arena.states) > options.max_states:
                raise ResourceLimitExceeded(options.max_states)

        controller = solve(arena, Player.CONTROLLER, parity, sigma, options.check_progress)
        sigma = controller.strategy
        stats.solver_calls += 1
        stats.improvements += controller.improvements
        if controller.wins(arena.initial):
            winner, strategy = Player.CONTROLLER, sigma
            break

        environment = solve(arena, Player.ENVIRONMENT, 1 - parity, tau, options.check_progress)
        tau = environment.strategy
        stats.solver_calls += 1
        stats.improvements += environment.improvements
        if environment.wins(arena.initial):
            winner, strategy = Player.ENVIRONMENT, tau
            break

        if not arena.boundary:
            raise SolverError("Fully explored arena with an undecided initial node")
        decided = controller.winning_region | environment.winning_region
        logger.debug(
            "Iteration %d: %d environment nodes, boundary %d, %d decided",
            stats.iterations,
            len(arena.states),
            len(arena.boundary),
            len(decided),
        )

    stats.env_nodes = len(arena.states)
    stats.intermediate_nodes = len(arena.parent)
    stats.edges = len(arena.edges)
    stats.wall_time = time.perf_counter() - started
    logger.info(
        "%s wins after %d iteration(s) with %d environment nodes",
        winner.value,
        stats.iterations,
        stats.env_nodes,
    )
    return SynthesisOutcome(winner, strategy, arena, handle, controller, stats)
