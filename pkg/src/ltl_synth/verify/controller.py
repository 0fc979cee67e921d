"""Model checking extracted controllers against the parity automaton."""

import logging

import networkx as nx

from ..automata.handle import DpaHandle
from ..automata.states import State
from ..core.config import get_settings
from ..core.exceptions import AlphabetMismatch
from ..core.models import CompletionMode
from ..extract.mealy import MealyMachine

logger = logging.getLogger(__name__)

ProductNode = tuple[int, State]


def product_graph(
    machine: MealyMachine, handle: DpaHandle, mode: CompletionMode = CompletionMode.DEFAULT
) -> nx.MultiDiGraph:
    """Reachable product of ``machine`` and ``handle`` where only inputs are chosen freely.

    In default mode unspecified outputs are 0. In ``all`` mode every completion becomes an edge
    as long as a transition leaves at most ``VERIFY_COMPLETION_LIMIT`` outputs unspecified;
    wider transitions fall back to the default completion with a warning.

    Raises:
        AlphabetMismatch: If machine and automaton disagree on the propositions.
    """
    alphabet = machine.alphabet
    if alphabet != handle.alphabet:
        raise AlphabetMismatch(
            f"Controller over {alphabet.names} checked against automaton over "
            f"{handle.alphabet.names}"
        )
    limit = get_settings().VERIFY_COMPLETION_LIMIT
    full = (1 << alphabet.n_outputs) - 1
    fallbacks = 0
    start: ProductNode = (0, handle.initial())
    graph = nx.MultiDiGraph()
    graph.add_node(start)
    stack = [start]
    while stack:
        node = stack.pop()
        q, state = node
        for inputs in alphabet.input_letters():
            successor, cube = machine.transitions[q][inputs]
            outputs = [cube.value]
            if mode is CompletionMode.ALL:
                if alphabet.n_outputs - cube.literals <= limit:
                    outputs = list(cube.minterms(full))
                else:
                    fallbacks += 1
            for out in outputs:
                target_state, colour = handle.step(state, alphabet.letter(inputs, out))
                target: ProductNode = (successor, target_state)
                if target not in graph:
                    stack.append(target)
                graph.add_edge(node, target, colour=colour)
    if fallbacks:
        logger.warning(
            "%d transition(s) leave more than %d outputs unspecified; checked default completion",
            fallbacks,
            limit,
        )
    return graph


def rejecting_colour(graph: nx.MultiDiGraph, parity: int) -> int | None:
    """Least colour of the wrong parity that is the minimum of some cycle, if any.

    For each such colour ``c`` the edges of colour at least ``c`` are kept; a cycle with
    minimum ``c`` exists iff an edge of colour ``c`` lies inside a strongly connected component.
    """
    colours = sorted({c for _, _, c in graph.edges(data="colour") if c % 2 != parity})
    for bad in colours:
        kept = nx.MultiDiGraph()
        kept.add_edges_from(
            (u, v, data) for u, v, data in graph.edges(data=True) if data["colour"] >= bad
        )
        component: dict[ProductNode, int] = {}
        for k, scc in enumerate(nx.strongly_connected_components(kept)):
            for node in scc:
                component[node] = k
        for u, v, c in kept.edges(data="colour"):
            if c == bad and component[u] == component[v]:
                return bad
    return None


def verify_controller(
    machine: MealyMachine, handle: DpaHandle, mode: CompletionMode = CompletionMode.DEFAULT
) -> bool:
    """Whether every run of the controller in closed loop with any environment is accepted.

    Args:
        machine: Controller to check.
        handle: Automaton of the specification.
        mode: Check the default completion of unspecified outputs, or all of them.

    Raises:
        AlphabetMismatch: If machine and automaton disagree on the propositions.
    """
    graph = product_graph(machine, handle, mode)
    bad = rejecting_colour(graph, handle.parity)
    if bad is not None:
        logger.info("Controller admits a cycle with least colour %d", bad)
        return False
    logger.debug("Controller verified on %d product node(s)", graph.number_of_nodes())
    return True
