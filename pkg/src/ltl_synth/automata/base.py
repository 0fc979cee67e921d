"""Base interface of the automaton nodes making up a deterministic parity automaton."""

from abc import ABC, abstractmethod

from ..ltl.annotation import AcceptanceType, AnnotatedFormula, erase
from ..ltl.formula import prop_mask
from .states import Sink, State


class Automaton(ABC):
    """A deterministic, complete parity automaton with transition colours in ``0..max_colour``.

    A run is accepting iff the least colour seen infinitely often has the parity ``parity``.
    Every automaton shares the two global sinks: bottom loops with colour ``1 - parity`` and
    top loops with colour ``parity``.
    """

    def __init__(self, alpha: AnnotatedFormula, max_colour: int, parity: int) -> None:
        if max_colour < 1:
            raise ValueError("An automaton needs at least the colours 0 and 1")
        self.alpha = alpha
        self.kind: AcceptanceType = alpha.kind
        self.max_colour = max_colour
        self.parity = parity
        self.props = prop_mask(erase(alpha))

    @property
    def bottom_colour(self) -> int:
        return 1 - self.parity

    @property
    def top_colour(self) -> int:
        return self.parity

    def sink_colour(self, sink: Sink) -> int:
        return self.top_colour if sink is Sink.TOP else self.bottom_colour

    @abstractmethod
    def initial(self) -> State:
        """Initial state."""
        raise NotImplementedError

    @abstractmethod
    def _step(self, state: State, letter: int) -> tuple[State, int]:
        """Successor and colour for a state that is not a sink."""
        raise NotImplementedError

    def step(self, state: State, letter: int) -> tuple[State, int]:
        """Successor and colour of ``state`` on the full letter ``letter``."""
        if isinstance(state, Sink):
            return state, self.sink_colour(state)
        return self._step(state, letter)

    @abstractmethod
    def component_values(self, state: State) -> list[int]:
        """Per-component numbers of ``state`` for the structured state encoding."""
        raise NotImplementedError

    @abstractmethod
    def component_sizes(self) -> list[int]:
        """Domain size of every component, aligned with :meth:`component_values`."""
        raise NotImplementedError

    def children(self) -> list["Automaton"]:
        return []


class LeafAutomaton(Automaton):
    """Leaf translator with transition memoization and discovery-order state numbering."""

    def __init__(
        self, alpha: AnnotatedFormula, max_colour: int, parity: int, memoize: bool = True
    ) -> None:
        super().__init__(alpha, max_colour, parity)
        self.memoize = memoize
        self._memo: dict[tuple[State, int], tuple[State, int]] = {}
        self._numbering: dict[State, int] = {}

    def register(self, state: State) -> State:
        self._numbering.setdefault(state, len(self._numbering))
        return state

    def _step(self, state: State, letter: int) -> tuple[State, int]:
        key = (state, letter & self.props)
        if self.memoize:
            cached = self._memo.get(key)
            if cached is not None:
                return cached
        successor, colour = self._compute(state, key[1])
        self.register(successor)
        if self.memoize:
            self._memo[key] = (successor, colour)
        return successor, colour

    @abstractmethod
    def _compute(self, state: State, letter: int) -> tuple[State, int]:
        raise NotImplementedError

    def component_values(self, state: State) -> list[int]:
        return [self.register_index(state)]

    def register_index(self, state: State) -> int:
        self.register(state)
        return self._numbering[state]

    def component_sizes(self) -> list[int]:
        return [len(self._numbering)]
