"""Controller construction: reduction, encoding and circuit in one step, or the best of three."""

import logging
from dataclasses import dataclass

from ..automata.handle import DpaHandle
from ..core.exceptions import ExtractionError
from ..core.models import EncodingMode
from .aiger import write_aiger
from .circuit import Circuit, to_circuit
from .encoding import StateEncoding, encode
from .mealy import MealyMachine
from .reduction import reduce_mealy

logger = logging.getLogger(__name__)


@dataclass
class Controller:
    """A Mealy machine together with the circuit built from it."""

    label: str
    machine: MealyMachine
    encoding: StateEncoding
    circuit: Circuit

    @property
    def size(self) -> int:
        return self.circuit.size


def build_controller(
    machine: MealyMachine,
    mode: EncodingMode,
    handle: DpaHandle | None = None,
    reduce: bool = False,
) -> Controller:
    """Encode ``machine`` (optionally reduced first) and lower it to a circuit.

    Args:
        machine: Extracted Mealy machine.
        mode: State encoding; ``portfolio`` delegates to :func:`portfolio` and ignores
            ``reduce``.
        handle: Automaton of the machine, needed by structured encodings.
        reduce: Merge compatible states first.

    Raises:
        ExtractionError: If a structured encoding is requested for a machine whose states were
            merged.
    """
    if mode is EncodingMode.PORTFOLIO:
        if handle is None:
            raise ExtractionError("Portfolio construction needs the automaton handle")
        return portfolio(machine, handle)
    if reduce:
        machine = reduce_mealy(machine)
    encoding = encode(machine, mode, handle)
    label = f"{'reduced' if reduce else 'raw'}+{mode.value}"
    return Controller(label, machine, encoding, to_circuit(machine, encoding))


def portfolio(machine: MealyMachine, handle: DpaHandle) -> Controller:
    """Smallest circuit among reduced+unstructured, raw+structured and raw+unstructured.

    Ties are broken by the AIGER text.
    """
    candidates = [
        build_controller(machine, EncodingMode.UNSTRUCTURED, reduce=True),
        build_controller(machine, EncodingMode.STRUCTURED, handle),
        build_controller(machine, EncodingMode.UNSTRUCTURED),
    ]
    for candidate in candidates:
        logger.debug("Portfolio candidate %s: size %d", candidate.label, candidate.size)
    return min(candidates, key=lambda c: (c.size, write_aiger(c.circuit)))
