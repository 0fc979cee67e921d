"""Base translators for weak, Buchi and co-Buchi leaves, built from formula derivatives."""

from ..ltl.annotation import AnnotatedFormula
from ..ltl.formula import FALSE, TRUE, Formula, af, conj, is_mu, negate, simplify
from .base import LeafAutomaton
from .states import BuchiState, Sink, State, swap_sink


def _as_state(f: Formula) -> State:
    if f is TRUE:
        return Sink.TOP
    if f is FALSE:
        return Sink.BOTTOM
    return f


class WeakLeaf(LeafAutomaton):
    """Weak automaton of a co-safety or safety formula; states are the derivatives.

    For co-safety formulas a transition is good (colour 0) iff it enters ``tt``; for safety
    formulas iff it avoids ``ff``.
    """

    def __init__(self, alpha: AnnotatedFormula, memoize: bool = True) -> None:
        super().__init__(alpha, max_colour=1, parity=0, memoize=memoize)
        self.formula = alpha.formula
        self.cosafety = is_mu(alpha.formula)

    def initial(self) -> State:
        return self.register(_as_state(simplify(self.formula)))

    def _compute(self, state: State, letter: int) -> tuple[State, int]:
        assert isinstance(state, Formula)
        successor = _as_state(af(state, letter))
        if self.cosafety:
            return successor, 0 if successor is Sink.TOP else 1
        return successor, 1 if successor is Sink.BOTTOM else 0


class BuchiLeaf(LeafAutomaton):
    """Buchi automaton for ``G ψ`` with ``ψ`` co-safety.

    A state is a breakpoint pair: ``current`` collects the copies of ψ being discharged,
    ``pending`` the copies started since the last accepting transition. A transition is
    accepting when ``current`` is discharged; ``pending`` then becomes the new batch.
    """

    def __init__(
        self, alpha: AnnotatedFormula, body: Formula | None = None, memoize: bool = True
    ) -> None:
        super().__init__(alpha, max_colour=1, parity=0, memoize=memoize)
        self.body = simplify(body if body is not None else alpha.formula.right)

    def _pair(self, current: Formula, pending: Formula) -> State:
        if current is FALSE or pending is FALSE:
            return Sink.BOTTOM
        if current is TRUE:
            current, pending = pending, TRUE
            if current is TRUE:
                return Sink.TOP
        if simplify(conj(current, pending)) is current:
            pending = TRUE
        return BuchiState(current, pending)

    def initial(self) -> State:
        return self.register(self._pair(self.body, TRUE))

    def _compute(self, state: State, letter: int) -> tuple[State, int]:
        assert isinstance(state, BuchiState)
        current = af(state.current, letter)
        pending = simplify(conj(af(state.pending, letter), self.body))
        if current is FALSE or pending is FALSE:
            return Sink.BOTTOM, 1
        if current is TRUE:
            return self._pair(pending, TRUE), 0
        return self._pair(current, pending), 1


class CoBuchiLeaf(LeafAutomaton):
    """Co-Buchi automaton for ``F ψ`` with ``ψ`` safety.

    Built as the complement of the Buchi automaton of ``G !ψ``: same states and colours,
    parity 1, and the two sinks exchanged.
    """

    def __init__(self, alpha: AnnotatedFormula, memoize: bool = True) -> None:
        super().__init__(alpha, max_colour=1, parity=1, memoize=memoize)
        self.inner = BuchiLeaf(alpha, body=negate(alpha.formula.right), memoize=memoize)

    def initial(self) -> State:
        return self.register(swap_sink(self.inner.initial()))

    def _compute(self, state: State, letter: int) -> tuple[State, int]:
        successor, colour = self.inner.step(swap_sink(state), letter)
        return swap_sink(successor), colour
