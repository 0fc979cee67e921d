"""Lowering Mealy machines to and-inverter graphs through reduced ordered BDDs."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from dd.autoref import BDD, Function

from ..automata.cubes import Cube, cover
from .encoding import StateEncoding
from .mealy import MealyMachine

logger = logging.getLogger(__name__)

FALSE = 0
TRUE = 1


@dataclass
class Circuit:
    """And-inverter graph with latches, in AIGER literal numbering.

    Literal ``2 * v`` is variable ``v``, ``2 * v + 1`` its negation; 0 and 1 are the constants.
    Latches reset to 0 and ``ands`` are stored in topological order.

    Attributes:
        inputs: Input names (the input propositions, in order).
        outputs: Output names (the output propositions, in order).
        input_lits: Literal of every input.
        latches: Current-state literal and next-state literal of every latch.
        output_lits: Literal driving every output.
        ands: ``(lhs, rhs0, rhs1)`` of every and-gate.
    """

    inputs: list[str]
    outputs: list[str]
    input_lits: list[int] = field(default_factory=list)
    latches: list[tuple[int, int]] = field(default_factory=list)
    output_lits: list[int] = field(default_factory=list)
    ands: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def size(self) -> int:
        """And-gates plus latches."""
        return len(self.ands) + len(self.latches)

    @property
    def max_var(self) -> int:
        literals = [lit for lit, _ in self.latches] + self.input_lits + [a[0] for a in self.ands]
        return max(literals, default=0) >> 1


class AigBuilder:
    """Creates and-gates with structural hashing and constant propagation."""

    def __init__(self, first_var: int) -> None:
        self.next_var = first_var
        self.ands: list[tuple[int, int, int]] = []
        self._table: dict[tuple[int, int], int] = {}

    def conj(self, a: int, b: int) -> int:
        if a == FALSE or b == FALSE or a == b ^ 1:
            return FALSE
        if a == TRUE or a == b:
            return b
        if b == TRUE:
            return a
        key = (max(a, b), min(a, b))
        lit = self._table.get(key)
        if lit is None:
            lit = 2 * self.next_var
            self.next_var += 1
            self.ands.append((lit, *key))
            self._table[key] = lit
        return lit

    def disj(self, a: int, b: int) -> int:
        return self.conj(a ^ 1, b ^ 1) ^ 1

    def mux(self, select: int, high: int, low: int) -> int:
        """``select ? high : low``."""
        if high == low:
            return high
        if low == FALSE:
            return self.conj(select, high)
        if high == FALSE:
            return self.conj(select ^ 1, low)
        if high == TRUE:
            return self.disj(select, low)
        if low == TRUE:
            return self.disj(select ^ 1, high)
        return self.disj(self.conj(select, high), self.conj(select ^ 1, low))


def _lower(
    bdd: BDD, u: Function, lits: dict[str, int], aig: AigBuilder, memo: dict[int, int]
) -> int:
    if u == bdd.true:
        return TRUE
    if u == bdd.false:
        return FALSE
    key = u.node
    if key in memo:
        return memo[key]
    var = u.var
    low = _lower(bdd, bdd.let({var: False}, u), lits, aig, memo)
    high = _lower(bdd, bdd.let({var: True}, u), lits, aig, memo)
    result = aig.mux(lits[var], high, low)
    memo[key] = result
    return result


def _cube(bdd: BDD, cube: Cube, names: Sequence[str]) -> Function:
    term = bdd.true
    for k, name in enumerate(names):
        if cube.care >> k & 1:
            term &= bdd.var(name) if cube.value >> k & 1 else ~bdd.var(name)
    return term


def _resolve(on: Function, dont_care: Function) -> Function:
    """The smaller of the two extreme completions, the on-set on ties."""
    wide = on | dont_care
    return wide if wide.dag_size < on.dag_size else on


def _prune(circuit: Circuit) -> Circuit:
    """Drop gates outside the cone of the outputs and next-state functions, renumber the rest."""
    n_fixed = len(circuit.input_lits) + len(circuit.latches)
    used: set[int] = set()
    stack = [lit >> 1 for lit in circuit.output_lits + [nxt for _, nxt in circuit.latches]]
    definition = {lhs >> 1: (r0, r1) for lhs, r0, r1 in circuit.ands}
    while stack:
        var = stack.pop()
        if var in used or var not in definition:
            continue
        used.add(var)
        stack.extend(r >> 1 for r in definition[var])
    rename = {v: v for v in range(n_fixed + 1)}
    ands = []
    for lhs, r0, r1 in circuit.ands:
        if lhs >> 1 in used:
            rename[lhs >> 1] = n_fixed + 1 + len(ands)
            ands.append((lhs, r0, r1))

    def lit(x: int) -> int:
        return 2 * rename[x >> 1] | (x & 1)

    circuit.ands = [
        (lit(lhs), max(lit(r0), lit(r1)), min(lit(r0), lit(r1))) for lhs, r0, r1 in ands
    ]
    circuit.output_lits = [lit(x) for x in circuit.output_lits]
    circuit.latches = [(cur, lit(nxt)) for cur, nxt in circuit.latches]
    return circuit


def to_circuit(machine: MealyMachine, encoding: StateEncoding) -> Circuit:
    """Lower a Mealy machine to an and-inverter graph.

    Next-state and output bits are built as BDDs over the inputs followed by the state bits
    (no reordering). Unspecified outputs and unused state codes are don't-cares; each function
    takes whichever of its on-set and on-set-plus-don't-cares has the smaller BDD. The BDDs are
    lowered by multiplexer expansion.

    Args:
        machine: Mealy machine to implement.
        encoding: Latch codes of its states; the initial state has code 0.
    """
    alphabet = machine.alphabet
    n_in, n_out, width = alphabet.n_inputs, alphabet.n_outputs, encoding.width
    in_names = [f"i{k}" for k in range(n_in)]
    state_names = [f"s{k}" for k in range(width)]
    bdd = BDD()
    bdd.declare(*in_names, *state_names)
    bdd.configure(reordering=False)

    used = bdd.false
    next_on = [bdd.false] * width
    out_on = [bdd.false] * n_out
    out_free = [bdd.false] * n_out
    for q in range(machine.n_states):
        code = encoding.code(q)
        in_state = _cube(bdd, Cube((1 << width) - 1, code), state_names)
        used |= in_state
        groups: dict[tuple[int, Cube], list[int]] = {}
        for inputs, entry in enumerate(machine.transitions[q]):
            groups.setdefault(entry, []).append(inputs)
        for (successor, output), letters in groups.items():
            guard = bdd.false
            for cube in cover(letters, alphabet.input_mask):
                guard |= _cube(bdd, cube, in_names)
            term = in_state & guard
            target = encoding.code(successor)
            for k in range(width):
                if target >> k & 1:
                    next_on[k] |= term
            for j in range(n_out):
                if not output.care >> j & 1:
                    out_free[j] |= term
                elif output.value >> j & 1:
                    out_on[j] |= term
    unused = ~used
    next_fns = [_resolve(on, unused) for on in next_on]
    out_fns = [_resolve(on, free | unused) for on, free in zip(out_on, out_free, strict=True)]

    lits = {name: 2 * (k + 1) for k, name in enumerate(in_names + state_names)}
    aig = AigBuilder(first_var=n_in + width + 1)
    memo: dict[int, int] = {}
    circuit = Circuit(
        list(alphabet.inputs),
        list(alphabet.outputs),
        input_lits=[lits[name] for name in in_names],
        output_lits=[_lower(bdd, u, lits, aig, memo) for u in out_fns],
    )
    circuit.latches = [
        (lits[name], _lower(bdd, u, lits, aig, memo))
        for name, u in zip(state_names, next_fns, strict=True)
    ]
    circuit.ands = aig.ands
    circuit = _prune(circuit)
    logger.debug(
        "Circuit with %d latch(es) and %d and-gate(s) for %d state(s)",
        len(circuit.latches),
        len(circuit.ands),
        machine.n_states,
    )
    return circuit
