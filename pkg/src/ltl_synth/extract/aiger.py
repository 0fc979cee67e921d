"""ASCII AIGER (``aag``) writer, reader and simulator."""

from collections.abc import Sequence

import networkx as nx

from ..automata.cubes import Cube
from ..core.exceptions import AlphabetMismatch
from ..ltl.alphabet import Alphabet
from .circuit import Circuit
from .mealy import MealyMachine


def write_aiger(circuit: Circuit) -> str:
    """Serialize ``circuit`` as ASCII AIGER with a symbol table.

    Inputs come in input-proposition order, outputs in output-proposition order, latches reset
    to 0.
    """
    lines = [
        f"aag {circuit.max_var} {len(circuit.input_lits)} {len(circuit.latches)} "
        f"{len(circuit.output_lits)} {len(circuit.ands)}"
    ]
    lines.extend(str(lit) for lit in circuit.input_lits)
    lines.extend(f"{cur} {nxt}" for cur, nxt in circuit.latches)
    lines.extend(str(lit) for lit in circuit.output_lits)
    lines.extend(f"{lhs} {r0} {r1}" for lhs, r0, r1 in circuit.ands)
    lines.extend(f"i{k} {name}" for k, name in enumerate(circuit.inputs))
    lines.extend(f"l{k} state_{k}" for k in range(len(circuit.latches)))
    lines.extend(f"o{k} {name}" for k, name in enumerate(circuit.outputs))
    return "\n".join(lines) + "\n"


def _ints(line: str, count: int, lineno: int) -> list[int]:
    parts = line.split()
    if len(parts) != count or not all(p.isdigit() for p in parts):
        raise ValueError(f"Line {lineno}: expected {count} unsigned integer(s), got {line!r}")
    return [int(p) for p in parts]


def read_aiger(text: str) -> Circuit:
    """Parse and check ASCII AIGER.

    Every variable is defined once (as input, latch or and-gate), definitions use even literals,
    all literals are within ``M`` and the and-gates are acyclic. Latch resets other than 0 are
    rejected. The gates of the result are in topological order.

    Raises:
        ValueError: On any violation of the format.
    """
    lines = text.splitlines()
    if not lines:
        raise ValueError("Empty AIGER file")
    header = lines[0].split()
    if len(header) != 6 or header[0] != "aag" or not all(p.isdigit() for p in header[1:]):
        raise ValueError(f"Invalid header {lines[0]!r}")
    m, i, latch_count, o, a = (int(p) for p in header[1:])
    if m < i + latch_count + a:
        raise ValueError("Header M is smaller than I + L + A")
    body_end = 1 + i + latch_count + o + a
    if len(lines) < body_end:
        raise ValueError("Truncated AIGER file")

    defined: set[int] = set()

    def define(lit: int, lineno: int) -> None:
        if lit < 2 or lit & 1 or lit >> 1 > m:
            raise ValueError(f"Line {lineno}: invalid definition literal {lit}")
        if lit >> 1 in defined:
            raise ValueError(f"Line {lineno}: variable {lit >> 1} defined twice")
        defined.add(lit >> 1)

    def check(lit: int, lineno: int) -> None:
        if lit >> 1 > m:
            raise ValueError(f"Line {lineno}: literal {lit} exceeds M")

    row = 1
    input_lits = []
    for _ in range(i):
        (lit,) = _ints(lines[row], 1, row + 1)
        define(lit, row + 1)
        input_lits.append(lit)
        row += 1
    latches = []
    for _ in range(latch_count):
        parts = lines[row].split()
        values = _ints(lines[row], len(parts) if len(parts) in (2, 3) else 2, row + 1)
        if len(values) == 3 and values[2] != 0:
            raise ValueError(f"Line {row + 1}: only reset value 0 is supported")
        define(values[0], row + 1)
        check(values[1], row + 1)
        latches.append((values[0], values[1]))
        row += 1
    output_lits = []
    for _ in range(o):
        (lit,) = _ints(lines[row], 1, row + 1)
        check(lit, row + 1)
        output_lits.append(lit)
        row += 1
    ands: dict[int, tuple[int, int, int]] = {}
    for _ in range(a):
        lhs, r0, r1 = _ints(lines[row], 3, row + 1)
        define(lhs, row + 1)
        check(r0, row + 1)
        check(r1, row + 1)
        ands[lhs >> 1] = (lhs, r0, r1)
        row += 1

    referenced = [nxt for _, nxt in latches] + output_lits
    referenced += [r for _, r0, r1 in ands.values() for r in (r0, r1)]
    for lit in referenced:
        if lit >> 1 and lit >> 1 not in defined:
            raise ValueError(f"Literal {lit} uses an undefined variable")

    graph = nx.DiGraph()
    graph.add_nodes_from(ands)
    for var, (_, r0, r1) in ands.items():
        for r in (r0, r1):
            if r >> 1 in ands:
                graph.add_edge(r >> 1, var)
    if not nx.is_directed_acyclic_graph(graph):
        raise ValueError("And-gates form a cycle")

    inputs = [f"i{k}" for k in range(i)]
    outputs = [f"o{k}" for k in range(o)]
    for line in lines[body_end:]:
        if line.startswith("c"):
            break
        kind, _, rest = line.partition(" ")
        if len(kind) < 2 or kind[0] not in "ilo" or not kind[1:].isdigit() or not rest:
            raise ValueError(f"Invalid symbol line {line!r}")
        k = int(kind[1:])
        names = {"i": inputs, "o": outputs}.get(kind[0])
        if names is not None:
            if k >= len(names):
                raise ValueError(f"Symbol {kind} out of range")
            names[k] = rest
    return Circuit(
        inputs,
        outputs,
        input_lits=input_lits,
        latches=latches,
        output_lits=output_lits,
        ands=[ands[var] for var in nx.topological_sort(graph)],
    )


def _value(values: dict[int, bool], lit: int) -> bool:
    return values[lit >> 1] ^ bool(lit & 1)


def step(circuit: Circuit, state: Sequence[bool], letter: int) -> tuple[int, tuple[bool, ...]]:
    """Output letter and next latch values for one input letter."""
    values = {0: False}
    for k, lit in enumerate(circuit.input_lits):
        values[lit >> 1] = bool(letter >> k & 1)
    for (cur, _), bit in zip(circuit.latches, state, strict=True):
        values[cur >> 1] = bit
    for lhs, r0, r1 in circuit.ands:
        values[lhs >> 1] = _value(values, r0) and _value(values, r1)
    output = sum(1 << j for j, lit in enumerate(circuit.output_lits) if _value(values, lit))
    return output, tuple(_value(values, nxt) for _, nxt in circuit.latches)


def simulate(circuit: Circuit, word: Sequence[int]) -> list[int]:
    """Output letters of ``circuit`` on a word of input letters, starting from the all-zero state.

    Bit ``k`` of an input letter drives input ``k``; bit ``j`` of an output letter is output
    ``j``.
    """
    state: tuple[bool, ...] = (False,) * len(circuit.latches)
    result = []
    for letter in word:
        output, state = step(circuit, state, letter)
        result.append(output)
    return result


def to_mealy(circuit: Circuit, alphabet: Alphabet) -> MealyMachine:
    """Fully specified Mealy machine over the reachable latch valuations of ``circuit``.

    Raises:
        AlphabetMismatch: If the circuit's input/output names differ from ``alphabet``.
    """
    if tuple(circuit.inputs) != alphabet.inputs or tuple(circuit.outputs) != alphabet.outputs:
        raise AlphabetMismatch(
            f"Circuit ports {circuit.inputs}/{circuit.outputs} do not match "
            f"{list(alphabet.inputs)}/{list(alphabet.outputs)}"
        )
    full = (1 << alphabet.n_outputs) - 1
    start: tuple[bool, ...] = (False,) * len(circuit.latches)
    number = {start: 0}
    order = [start]
    machine = MealyMachine(alphabet, [], shaped=False)
    for state in order:
        row = []
        for letter in alphabet.input_letters():
            output, successor = step(circuit, state, letter)
            if successor not in number:
                number[successor] = len(order)
                order.append(successor)
            row.append((number[successor], Cube(full, output)))
        machine.transitions.append(row)
    return machine
