"""Incompletely specified Mealy machines extracted from winning controller strategies."""

import logging
from collections import deque
from collections.abc import Sequence, Set
from dataclasses import dataclass, field

from ..automata.cubes import TRUE_CUBE, Cube, cover, submasks
from ..automata.states import Sink, State, format_state
from ..core.config import get_settings
from ..core.exceptions import ExtractionError
from ..game.arena import Arena
from ..game.solver import GIVE_UP, Strategy
from ..ltl.alphabet import Alphabet

logger = logging.getLogger(__name__)

Transition = tuple[int, Cube]


@dataclass
class MealyMachine:
    """Mealy machine whose outputs may leave propositions unspecified.

    State 0 is the initial state. ``transitions[q][i]`` is the successor and the output cube of
    state ``q`` on input letter ``i``; output cubes range over output letters (bit ``j`` is
    output ``j``), bits outside the cube's care mask are unspecified.

    Attributes:
        alphabet: Input/output partition.
        states: Automaton state behind every Mealy state; empty when unknown, e.g. for
            machines read back from circuits.
        transitions: Total transition table over all input letters.
        shaped: Whether ``states`` still carry the product structure of the automaton. Merged
            machines lose it.
    """

    alphabet: Alphabet
    states: list[State]
    transitions: list[list[Transition]] = field(default_factory=list)
    shaped: bool = True

    @property
    def n_states(self) -> int:
        return len(self.transitions)

    def successor(self, state: int, inputs: int) -> int:
        return self.transitions[state][inputs][0]

    def output(self, state: int, inputs: int) -> Cube:
        return self.transitions[state][inputs][1]

    def label(self, state: int) -> str:
        if state < len(self.states):
            return format_state(self.states[state], self.alphabet.names)
        return f"q{state}"


def minimum_implicant(allowed: Set[int], width: int, exact_limit: int | None = None) -> Cube:
    """Product term with the fewest literals whose letters all lie in ``allowed``.

    Below ``exact_limit`` propositions all care masks are tried by increasing literal count
    (lowest mask first); above it literals are dropped greedily from the least allowed letter.

    Args:
        allowed: Allowed output letters, each a sub-mask of ``(1 << width) - 1``.
        width: Number of output propositions.
        exact_limit: Defaults to ``PRIME_IMPLICANT_EXACT_LIMIT``.

    Raises:
        ExtractionError: If ``allowed`` is empty.
    """
    if not allowed:
        raise ExtractionError("No allowed output to build an implicant from")
    full = (1 << width) - 1
    if len(allowed) == 1 << width:
        return TRUE_CUBE
    if exact_limit is None:
        exact_limit = get_settings().PRIME_IMPLICANT_EXACT_LIMIT
    letters = sorted(allowed)
    if width <= exact_limit:
        for care in sorted(submasks(full), key=lambda m: (m.bit_count(), m)):
            if 1 << (width - care.bit_count()) > len(allowed):
                continue
            tried: set[int] = set()
            for letter in letters:
                value = letter & care
                if value in tried:
                    continue
                tried.add(value)
                cube = Cube(care, value)
                if all(m in allowed for m in cube.minterms(full)):
                    return cube
    cube = Cube(full, letters[0])
    for k in range(width):
        bit = 1 << k
        trial = Cube(cube.care & ~bit, cube.value & ~bit)
        if all(m in allowed for m in trial.minterms(full)):
            cube = trial
    return cube


def _choose(
    arena: Arena, middle: int, moves: frozenset[int], alphabet: Alphabet, known: dict[int, int]
) -> tuple[int, set[int]]:
    flexibility: dict[int, int] = {}
    for e in moves:
        target = arena.edges[e].target
        flexibility[target] = flexibility.get(target, 0) + arena.cells[e].output_count(alphabet)
    target = min(flexibility, key=lambda v: (v not in known, -flexibility[v], v))
    allowed: set[int] = set()
    for e in moves:
        if arena.edges[e].target == target:
            allowed.update(
                out >> alphabet.n_inputs for out in arena.cells[e].output_letters(alphabet)
            )
    return target, allowed


def extract_mealy(arena: Arena, strategy: Strategy, alphabet: Alphabet) -> MealyMachine:
    """Build a Mealy machine from a controller strategy that wins the initial node.

    States are added breadth-first from the initial node. For every input class the strategy's
    moves are grouped by target; targets already in the machine are preferred, then the target
    allowing the most output letters, then the lowest node id. The output is a minimum-literal
    implicant of the outputs leading to the chosen target.

    Args:
        arena: Explored arena.
        strategy: Controller strategy, restricted to winning moves at won nodes.
        alphabet: Input/output partition of the automaton.

    Raises:
        ExtractionError: If the strategy gives up, leaves an input class without a move or
            reaches the boundary or the rejecting sink.
    """
    n_inputs = alphabet.n_inputs
    machine = MealyMachine(alphabet, [])
    known: dict[int, int] = {}

    def admit(node: int) -> int:
        if node == arena.bottom or node in arena.boundary:
            raise ExtractionError(f"Strategy is not winning: reaches {arena.label(node)}")
        if node not in known:
            known[node] = len(machine.states)
            machine.states.append(arena.states[node])
            queue.append(node)
        return known[node]

    queue: deque[int] = deque()
    admit(arena.initial)
    while queue:
        node = queue.popleft()
        if arena.states[node] is Sink.TOP:
            machine.transitions.append([(known[node], TRUE_CUBE)] * (1 << n_inputs))
            continue
        row: list[Transition | None] = [None] * (1 << n_inputs)
        for e in arena.out_edges[node]:
            middle = arena.edges[e].target
            moves = strategy.get(middle)
            if not moves or GIVE_UP in moves:
                raise ExtractionError(
                    f"Strategy is not winning: no move at {arena.label(middle, alphabet.names)}"
                )
            target, allowed = _choose(arena, middle, moves, alphabet, known)
            entry = (admit(target), minimum_implicant(allowed, alphabet.n_outputs))
            care = arena.input_care[middle]
            for inputs in range(1 << n_inputs):
                if inputs & care in arena.input_sets[middle]:
                    row[inputs] = entry
        if any(entry is None for entry in row):
            raise ExtractionError(f"Input classes of node {node} do not cover all inputs")
        machine.transitions.append([entry for entry in row if entry is not None])
    logger.debug("Extracted Mealy machine with %d state(s)", machine.n_states)
    return machine


def run(machine: MealyMachine, inputs: Sequence[int], state: int = 0) -> list[int]:
    """Outputs of ``machine`` on an input word, unspecified outputs set to 0."""
    outputs = []
    for letter in inputs:
        state, cube = machine.transitions[state][letter]
        outputs.append(cube.value)
    return outputs


def dump_mealy(machine: MealyMachine) -> str:
    """Text listing: one line ``state [input cube] -> successor / output cube`` per row group."""
    alphabet = machine.alphabet
    input_mask = alphabet.input_mask
    lines = [
        f"mealy {machine.n_states} "
        f"inputs {' '.join(alphabet.inputs) or '-'} outputs {' '.join(alphabet.outputs) or '-'}"
    ]
    for q in range(machine.n_states):
        lines.append(f"state {q} {machine.label(q)}")
        groups: dict[Transition, list[int]] = {}
        for inputs, entry in enumerate(machine.transitions[q]):
            groups.setdefault(entry, []).append(inputs)
        for (successor, output), letters in groups.items():
            for cube in cover(letters, input_mask):
                lines.append(
                    f"  {q} [{cube.format(alphabet.inputs)}] -> {successor} "
                    f"/ {output.format(alphabet.outputs)}"
                )
    return "\n".join(lines) + "\n"
