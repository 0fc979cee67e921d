"""Lazy deterministic parity automaton of an annotated formula and its transition oracle."""

import logging
from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass

from ..core.config import get_settings
from ..core.exceptions import UnsupportedFragment
from ..ltl.alphabet import Alphabet
from ..ltl.annotation import AcceptanceType, AnnotatedFormula, Connective
from ..ltl.formula import to_debug_text
from .base import Automaton
from .cubes import TRUE_CUBE, Cube, cover, submasks
from .leaves import BuchiLeaf, CoBuchiLeaf, WeakLeaf
from .products import Biconditional, BinaryProduct, RoundRobin
from .states import Sink, State, format_state

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TransitionCell:
    """Inputs × outputs sharing one colour and one successor.

    ``inputs``/``outputs`` are cube covers over full-letter bits; ``input_set``/``output_set``
    are the same sets projected onto the propositions the automaton reads (``input_care`` and
    ``output_care``). Propositions outside the care masks are unconstrained.
    """

    inputs: tuple[Cube, ...]
    outputs: tuple[Cube, ...]
    colour: int
    successor: State
    input_set: frozenset[int]
    output_set: frozenset[int]
    input_care: int
    output_care: int

    def contains(self, letter: int) -> bool:
        return (
            letter & self.input_care in self.input_set
            and letter & self.output_care in self.output_set
        )

    def accepts_input(self, letter: int) -> bool:
        return letter & self.input_care in self.input_set

    def accepts_output(self, letter: int) -> bool:
        return letter & self.output_care in self.output_set

    def output_count(self, alphabet: Alphabet) -> int:
        """Number of full output letters in the cell."""
        free = alphabet.n_outputs - self.output_care.bit_count()
        return len(self.output_set) << free

    def output_letters(self, alphabet: Alphabet) -> Iterator[int]:
        """Output parts (in full-letter bit positions) of all letters in the cell."""
        free_mask = alphabet.output_mask & ~self.output_care
        for projected in sorted(self.output_set):
            for free in submasks(free_mask):
                yield projected | free


TransitionGroup = tuple[TransitionCell, ...]


def _build_node(alpha: AnnotatedFormula, memoize: bool) -> Automaton:
    if alpha.is_leaf:
        if alpha.kind is AcceptanceType.WEAK:
            return WeakLeaf(alpha, memoize=memoize)
        if alpha.kind is AcceptanceType.BUCHI:
            return BuchiLeaf(alpha, memoize=memoize)
        if alpha.kind is AcceptanceType.COBUCHI:
            return CoBuchiLeaf(alpha, memoize=memoize)
        raise UnsupportedFragment(to_debug_text(alpha.formula))
    nodes = [_build_node(child, memoize) for child in alpha.children]
    if alpha.connective is Connective.IFF:
        return Biconditional(alpha, nodes)
    dual = alpha.connective is Connective.OR
    views = [child.kind.dual() if dual else child.kind for child in nodes]
    if len(nodes) > 2 or all(k is AcceptanceType.BUCHI for k in views):
        return RoundRobin(alpha, nodes)
    return BinaryProduct(alpha, nodes)


class DpaHandle:
    """Oracle access to the parity automaton of an annotated formula.

    States are only computed when queried. :meth:`successors` groups the letters leaving a state
    into cells and memoizes the result.
    """

    def __init__(self, alpha: AnnotatedFormula, alphabet: Alphabet, memoize: bool = True) -> None:
        self.alpha = alpha
        self.alphabet = alphabet
        self.memoize = memoize
        self.root = _build_node(alpha, memoize)
        self.input_care = self.root.props & alphabet.input_mask
        self.output_care = self.root.props & alphabet.output_mask
        self._initial: State | None = None
        self._transitions: dict[State, TransitionGroup] = {}

    @property
    def max_colour(self) -> int:
        return self.root.max_colour

    @property
    def parity(self) -> int:
        return self.root.parity

    def initial(self) -> State:
        if self._initial is None:
            self._initial = self.root.initial()
        return self._initial

    def step(self, state: State, letter: int) -> tuple[State, int]:
        """Successor and colour on a full letter."""
        return self.root.step(state, letter)

    def successors(self, state: State) -> TransitionGroup:
        """Partition of all letters leaving ``state`` into (inputs, outputs, colour, successor).

        Inputs with identical output behaviour form one class; each (colour, successor) group
        within a class is a cell. Cells are ordered by their least input and then by their least
        output. Sinks have a single cell covering every letter.
        """
        cached = self._transitions.get(state)
        if cached is not None:
            return cached
        if isinstance(state, Sink):
            colour = self.root.sink_colour(state)
            group: TransitionGroup = (
                TransitionCell(
                    (TRUE_CUBE,), (TRUE_CUBE,), colour, state, frozenset({0}), frozenset({0}), 0, 0
                ),
            )
        else:
            group = self._enumerate(state)
        if self.memoize:
            self._transitions[state] = group
        return group

    def _enumerate(self, state: State) -> TransitionGroup:
        outputs = submasks(self.output_care)
        classes: dict[tuple[tuple[tuple[int, State], frozenset[int]], ...], list[int]] = {}
        for inputs in submasks(self.input_care):
            targets: dict[tuple[int, State], list[int]] = {}
            for out in outputs:
                successor, colour = self.root.step(state, inputs | out)
                targets.setdefault((colour, successor), []).append(out)
            signature = tuple((target, frozenset(outs)) for target, outs in targets.items())
            classes.setdefault(signature, []).append(inputs)
        cells: list[TransitionCell] = []
        for signature, members in classes.items():
            input_set = frozenset(members)
            input_cover = cover(input_set, self.input_care)
            for (colour, successor), outs in signature:
                cells.append(
                    TransitionCell(
                        input_cover,
                        cover(outs, self.output_care),
                        colour,
                        successor,
                        input_set,
                        outs,
                        self.input_care,
                        self.output_care,
                    )
                )
        cells.sort(key=lambda c: (min(c.input_set), min(c.output_set)))
        return tuple(cells)

    def components(self, state: State) -> list[int]:
        """Per-component numbers of a product state (all zero for the global sinks)."""
        return self.root.component_values(state)

    def component_domains(self) -> list[int]:
        """Number of values seen so far for each component of the product state."""
        return self.root.component_sizes()

    def reachable(self, limit: int | None = None) -> list[State]:
        """States reachable from the initial state in breadth-first order."""
        start = self.initial()
        order = [start]
        seen = {start}
        queue = deque([start])
        while queue and (limit is None or len(order) < limit):
            for cell in self.successors(queue.popleft()):
                if cell.successor not in seen:
                    seen.add(cell.successor)
                    order.append(cell.successor)
                    queue.append(cell.successor)
        return order


def build(
    alpha: AnnotatedFormula, alphabet: Alphabet, memoize: bool | None = None
) -> DpaHandle:
    """Build the lazy parity automaton of ``alpha``.

    Args:
        alpha: Annotated formula.
        alphabet: Input/output partition used to group transitions.
        memoize: Cache transitions; defaults to ``MEMOIZE_TRANSITIONS``.

    Raises:
        UnsupportedFragment: If ``alpha`` has a leaf of parity type.
    """
    if memoize is None:
        memoize = get_settings().MEMOIZE_TRANSITIONS
    handle = DpaHandle(alpha, alphabet, memoize=memoize)
    logger.debug(
        "Built automaton %s with colours 0..%d and parity %d",
        alpha.describe(),
        handle.max_colour,
        handle.parity,
    )
    return handle


def _hoa_label(cube: Cube, alphabet: Alphabet) -> list[str]:
    parts = []
    for k in range(alphabet.size):
        if cube.care >> k & 1:
            parts.append(str(k) if cube.value >> k & 1 else f"!{k}")
    return parts


def dump_hoa(handle: DpaHandle, limit: int | None = None) -> str:
    """HOA-like listing of the reachable part.

    The header names the propositions and the acceptance (``parity min even|odd`` with the
    number of colours); every transition line is ``[label] successor {colour}``.
    """
    alphabet = handle.alphabet
    states = handle.reachable(limit)
    number = {state: k for k, state in enumerate(states)}
    parity = "even" if handle.parity == 0 else "odd"
    lines = [
        "HOA: v1",
        f"States: {len(states)}",
        "Start: 0",
        f"AP: {alphabet.size} " + " ".join(f'"{name}"' for name in alphabet.names),
        f"acc-name: parity min {parity} {handle.max_colour + 1}",
        "--BODY--",
    ]
    for state in states:
        lines.append(f'State: {number[state]} "{format_state(state, alphabet.names)}"')
        for cell in handle.successors(state):
            target = number.get(cell.successor)
            if target is None:
                continue
            for inputs in cell.inputs:
                for outputs in cell.outputs:
                    label = "&".join(_hoa_label(inputs.meet(outputs), alphabet)) or "t"
                    lines.append(f"[{label}] {target} {{{cell.colour}}}")
    lines.append("--END--")
    return "\n".join(lines) + "\n"
