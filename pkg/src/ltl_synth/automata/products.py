"""Product combinators over child automata.

Conjunctions are built directly. Disjunctions are built as conjunctions of the complemented
children ("views": parity flipped, acceptance type dualised, sinks exchanged) and complemented
back, which keeps the colours and only flips the parity.
"""

from enum import Enum

from ..ltl.annotation import AcceptanceType, AnnotatedFormula, Connective
from .base import Automaton
from .states import ProductState, Sink, State, swap_sink

_STATUS = {Sink.BOTTOM: 1, Sink.TOP: 2}


class ProductRule(str, Enum):
    """How a binary conjunction combines the colours of its two children."""

    WEAK = "weak"
    COBUCHI = "cobuchi"
    MEMORY = "memory"


class Composite(Automaton):
    """Common part of the product nodes: child stepping, sink collapse and state components."""

    def __init__(
        self, alpha: AnnotatedFormula, nodes: list[Automaton], max_colour: int, parity: int
    ) -> None:
        super().__init__(alpha, max_colour, parity)
        self.nodes = nodes
        self.dual = alpha.connective is Connective.OR
        self.reached_sink = False

    def children(self) -> list[Automaton]:
        return list(self.nodes)

    def view_kind(self, child: Automaton) -> AcceptanceType:
        return child.kind.dual() if self.dual else child.kind

    def view_parity(self, child: Automaton) -> int:
        return 1 - child.parity if self.dual else child.parity

    def collapse(self, states: list[State]) -> Sink | None:
        """Sink the product collapses to, if any: a rejecting conjunct rejects the product."""
        views = [swap_sink(s) if self.dual else s for s in states]
        result: Sink | None = None
        if any(v is Sink.BOTTOM for v in views):
            result = Sink.BOTTOM
        elif all(v is Sink.TOP for v in views):
            result = Sink.TOP
        if result is None:
            return None
        self.reached_sink = True
        return result.swap() if self.dual else result

    def _initial_children(self) -> list[State]:
        return [child.initial() for child in self.nodes]

    def _step_children(
        self, state: ProductState, letter: int
    ) -> tuple[list[State], list[int]]:
        steps = [child.step(s, letter) for child, s in zip(self.nodes, state.children)]
        return [s for s, _ in steps], [c for _, c in steps]

    def own_sizes(self) -> list[int]:
        return []

    def own_values(self, state: ProductState) -> list[int]:
        return []

    def component_sizes(self) -> list[int]:
        sizes: list[int] = []
        for child in self.nodes:
            if isinstance(child, Composite) and child.reached_sink:
                sizes.append(len(_STATUS) + 1)
            sizes.extend(child.component_sizes())
        sizes.extend(self.own_sizes())
        return sizes

    def component_values(self, state: State) -> list[int]:
        if isinstance(state, Sink):
            return [0] * len(self.component_sizes())
        assert isinstance(state, ProductState)
        values: list[int] = []
        for child, sub in zip(self.nodes, state.children):
            if isinstance(child, Composite) and child.reached_sink:
                values.append(_STATUS.get(sub, 0) if isinstance(sub, Sink) else 0)
            values.extend(child.component_values(sub))
        values.extend(self.own_values(state))
        return values


class BinaryProduct(Composite):
    """Conjunction (or, through views, disjunction) of two children.

    One child acts as a filter on the colours of the other. A weak filter passes the other
    child's colours while it is in its good phase and rejects otherwise. A co-Buchi filter
    overrides with colour 0 whenever it sees its bad colour. A Buchi child next to a parity
    child needs a memory of the least colour of the parity child since the last Buchi
    acceptance.
    """

    def __init__(self, alpha: AnnotatedFormula, nodes: list[Automaton]) -> None:
        if len(nodes) != 2:
            raise ValueError("A binary product needs exactly two children")
        dual = alpha.connective is Connective.OR
        kinds = [child.kind.dual() if dual else child.kind for child in nodes]
        if AcceptanceType.WEAK in kinds:
            rule, f = ProductRule.WEAK, kinds.index(AcceptanceType.WEAK)
        elif AcceptanceType.COBUCHI in kinds:
            rule, f = ProductRule.COBUCHI, kinds.index(AcceptanceType.COBUCHI)
        elif AcceptanceType.BUCHI in kinds:
            rule, f = ProductRule.MEMORY, kinds.index(AcceptanceType.BUCHI)
        else:
            raise ValueError("Two parity children cannot be combined by a product")
        other = nodes[1 - f]
        other_parity = 1 - other.parity if dual else other.parity
        self.rule = rule
        self.filter_index = f
        self.other_index = 1 - f
        self.filter_good = 1 - nodes[f].parity if dual else nodes[f].parity
        self.other_reject = 1 - other_parity
        self.shift = 1 if other_parity == 0 else 0
        self.memory_top = other.max_colour + self.shift
        if rule is ProductRule.WEAK:
            max_colour, view_parity = other.max_colour, other_parity
        elif rule is ProductRule.COBUCHI:
            max_colour, view_parity = other.max_colour + self.shift, 1
        else:
            max_colour, view_parity = self.memory_top + self.memory_top % 2, 1
        super().__init__(alpha, nodes, max_colour, 1 - view_parity if dual else view_parity)

    @property
    def uses_memory(self) -> bool:
        return self.rule is ProductRule.MEMORY

    def initial(self) -> State:
        states = self._initial_children()
        sink = self.collapse(states)
        if sink is not None:
            return sink
        return ProductState(tuple(states), memory=self.memory_top if self.uses_memory else 0)

    def _step(self, state: State, letter: int) -> tuple[State, int]:
        assert isinstance(state, ProductState)
        states, colours = self._step_children(state, letter)
        sink = self.collapse(states)
        if sink is not None:
            return sink, self.sink_colour(sink)
        filter_colour, other_colour = colours[self.filter_index], colours[self.other_index]
        memory = 0
        if self.rule is ProductRule.WEAK:
            colour = other_colour if filter_colour == self.filter_good else self.other_reject
        elif self.rule is ProductRule.COBUCHI:
            colour = 0 if filter_colour == 0 else other_colour + self.shift
        else:
            least = min(state.memory, other_colour + self.shift)
            if filter_colour == 0:
                colour, memory = least, self.memory_top
            else:
                colour, memory = self.max_colour, least
        return ProductState(tuple(states), memory=memory), colour

    def own_sizes(self) -> list[int]:
        return [self.memory_top + 1] if self.uses_memory else []

    def own_values(self, state: ProductState) -> list[int]:
        return [state.memory] if self.uses_memory else []


class RoundRobin(Composite):
    """Conjunction of n Buchi children with a counter cycling through them.

    The counter skips every child that accepts on the current letter, starting at its
    position; a full sweep emits colour 0 and restarts at the first child.
    """

    def __init__(self, alpha: AnnotatedFormula, nodes: list[Automaton]) -> None:
        dual = alpha.connective is Connective.OR
        for child in nodes:
            kind = child.kind.dual() if dual else child.kind
            if kind is not AcceptanceType.BUCHI:
                raise ValueError(f"Round-robin children must be Buchi, got {kind.value}")
        super().__init__(alpha, nodes, max_colour=1, parity=1 if dual else 0)

    def initial(self) -> State:
        states = self._initial_children()
        sink = self.collapse(states)
        if sink is not None:
            return sink
        return ProductState(tuple(states), counter=0)

    def advance(self, counter: int, colours: list[int]) -> int:
        """First position at or after ``counter`` whose child did not accept."""
        position = counter
        while position < len(colours) and colours[position] == 0:
            position += 1
        return position

    def _step(self, state: State, letter: int) -> tuple[State, int]:
        assert isinstance(state, ProductState)
        states, colours = self._step_children(state, letter)
        sink = self.collapse(states)
        if sink is not None:
            return sink, self.sink_colour(sink)
        position = self.advance(state.counter, colours)
        colour = 0 if position == len(self.nodes) else 1
        return ProductState(tuple(states), counter=position % len(self.nodes)), colour

    def own_sizes(self) -> list[int]:
        return [len(self.nodes)]

    def own_values(self, state: ProductState) -> list[int]:
        return [state.counter]


class Biconditional(Composite):
    """Bi-implication of two children.

    Two weak children compare their phases. Otherwise the non-parity child ``X1`` (weak
    children preferred) drives a minimal-colour memory over the other child's colours: when
    ``X1`` sees colour 0 the least colour since the previous such step is emitted, otherwise
    the other child's colour shifted by one.
    """

    def __init__(self, alpha: AnnotatedFormula, nodes: list[Automaton]) -> None:
        if len(nodes) != 2:
            raise ValueError("A bi-implication needs exactly two children")
        kinds = [child.kind for child in nodes]
        self.both_weak = all(k is AcceptanceType.WEAK for k in kinds)
        if AcceptanceType.WEAK in kinds:
            driver = kinds.index(AcceptanceType.WEAK)
        else:
            driver = next(i for i, k in enumerate(kinds) if k is not AcceptanceType.PARITY)
        self.driver_index = driver
        self.other_index = 1 - driver
        driving, other = nodes[driver], nodes[1 - driver]
        self.driver_weak = driving.kind is AcceptanceType.WEAK
        self.memory_top = other.max_colour
        if self.both_weak:
            max_colour, parity = 1, 0
        else:
            max_colour, parity = other.max_colour + 1, (driving.parity + other.parity) % 2
        super().__init__(alpha, nodes, max_colour, parity)

    @property
    def uses_memory(self) -> bool:
        return not self.both_weak and not self.driver_weak

    def collapse(self, states: list[State]) -> Sink | None:
        if not all(isinstance(s, Sink) for s in states):
            return None
        self.reached_sink = True
        return Sink.TOP if states[0] is states[1] else Sink.BOTTOM

    def initial(self) -> State:
        states = self._initial_children()
        sink = self.collapse(states)
        if sink is not None:
            return sink
        return ProductState(tuple(states), memory=0 if self.both_weak else self.memory_top)

    def _step(self, state: State, letter: int) -> tuple[State, int]:
        assert isinstance(state, ProductState)
        states, colours = self._step_children(state, letter)
        sink = self.collapse(states)
        if sink is not None:
            return sink, self.sink_colour(sink)
        if self.both_weak:
            good = [c == child.parity for c, child in zip(colours, self.nodes)]
            return ProductState(tuple(states)), 0 if good[0] == good[1] else 1
        driver_colour, other_colour = colours[self.driver_index], colours[self.other_index]
        least = min(state.memory, other_colour)
        if driver_colour == 0:
            colour, memory = least, self.memory_top
        else:
            colour = other_colour + 1
            memory = least if self.uses_memory else self.memory_top
        return ProductState(tuple(states), memory=memory), colour

    def own_sizes(self) -> list[int]:
        return [self.memory_top + 1] if self.uses_memory else []

    def own_values(self, state: ProductState) -> list[int]:
        return [state.memory] if self.uses_memory else []
