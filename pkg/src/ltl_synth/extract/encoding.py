"""Binary encodings of Mealy states for circuit latches."""

from dataclasses import dataclass

from ..automata.handle import DpaHandle
from ..automata.states import Sink
from ..core.exceptions import ExtractionError
from ..core.models import EncodingMode
from .mealy import MealyMachine


def bits_for(domain: int) -> int:
    """Bits needed to number ``domain`` values (0 for a single value)."""
    return max(domain - 1, 0).bit_length()


@dataclass(frozen=True)
class StateEncoding:
    """Latch values of every Mealy state; the initial state is all zero.

    Attributes:
        mode: How the codes were produced.
        width: Number of latches.
        codes: Code of every state, bit ``width - 1`` first when printed.
    """

    mode: EncodingMode
    width: int
    codes: tuple[int, ...]

    def code(self, state: int) -> int:
        return self.codes[state]

    def decode(self, code: int) -> int:
        """Mealy state with the given code.

        Raises:
            KeyError: If no state has this code.
        """
        try:
            return self.codes.index(code)
        except ValueError as exc:
            raise KeyError(code) from exc

    def format(self, state: int) -> str:
        return format(self.codes[state], f"0{self.width}b") if self.width else ""


def _normalised(mode: EncodingMode, width: int, codes: list[int]) -> StateEncoding:
    start = codes[0]
    return StateEncoding(mode, width, tuple(code ^ start for code in codes))


def encode_unstructured(machine: MealyMachine) -> StateEncoding:
    """State ``i`` gets code ``i`` on ``ceil(log2 |Q|)`` bits."""
    return _normalised(
        EncodingMode.UNSTRUCTURED, bits_for(machine.n_states), list(range(machine.n_states))
    )


def encode_structured(machine: MealyMachine, handle: DpaHandle) -> StateEncoding:
    """Concatenate the binary numbers of the product components, first component first.

    Every component gets ``ceil(log2 d)`` bits for its domain size ``d``. A trailing flag bit
    marks the accepting sink when it is a Mealy state.

    Raises:
        ExtractionError: If the machine's states no longer carry the product structure.
    """
    if not machine.shaped:
        raise ExtractionError("Structured encoding needs unmerged product states")
    values = [handle.components(state) for state in machine.states]
    widths = [bits_for(domain) for domain in handle.component_domains()]
    flag = any(state is Sink.TOP for state in machine.states)
    codes = []
    for state, parts in zip(machine.states, values, strict=True):
        code = 0
        for width, value in zip(widths, parts, strict=True):
            code = code << width | value
        if flag:
            code = code << 1 | int(state is Sink.TOP)
        codes.append(code)
    return _normalised(EncodingMode.STRUCTURED, sum(widths) + int(flag), codes)


def encode(
    machine: MealyMachine, mode: EncodingMode, handle: DpaHandle | None = None
) -> StateEncoding:
    """Encode the states of ``machine``.

    Args:
        machine: The Mealy machine.
        mode: ``unstructured`` or ``structured``.
        handle: Automaton the machine was extracted from; required for ``structured``.

    Raises:
        ExtractionError: For structured encodings without a handle or of merged machines.
        ValueError: For the portfolio mode, which is not a single encoding.
    """
    if mode is EncodingMode.UNSTRUCTURED:
        return encode_unstructured(machine)
    if mode is EncodingMode.STRUCTURED:
        if handle is None:
            raise ExtractionError("Structured encoding needs the automaton handle")
        return encode_structured(machine, handle)
    raise ValueError(f"Encoding mode '{mode.value}' does not name a single encoding")
