"""Tests for Mealy extraction, reduction, state encodings, circuits and AIGER."""

import pytest

from ltl_synth.automata import TRUE_CUBE, Cube
from ltl_synth.core.exceptions import AlphabetMismatch, ExtractionError
from ltl_synth.core.models import EncodingMode
from ltl_synth.extract import (
    MealyMachine,
    bits_for,
    build_controller,
    dump_mealy,
    encode,
    encode_structured,
    extract_mealy,
    minimum_implicant,
    read_aiger,
    reduce_mealy,
    run,
    simulate,
    step,
    to_circuit,
    to_mealy,
    write_aiger,
)
from ltl_synth.ltl import Alphabet

RG = Alphabet(inputs=("r",), outputs=("g",))


def assert_implements(machine: MealyMachine, circuit) -> None:
    """Every reachable pair of Mealy state and latch values agrees on all inputs."""
    start = (0, (False,) * len(circuit.latches))
    seen = {start}
    stack = [start]
    while stack:
        q, latches = stack.pop()
        for letter in machine.alphabet.input_letters():
            output, nxt = step(circuit, latches, letter)
            assert machine.output(q, letter).contains(output)
            pair = (machine.successor(q, letter), nxt)
            if pair not in seen:
                seen.add(pair)
                stack.append(pair)


def toggle_machine() -> MealyMachine:
    """g follows r with one step of delay, leaving g free in the first step."""
    return MealyMachine(
        RG,
        [],
        [
            [(1, TRUE_CUBE), (2, TRUE_CUBE)],
            [(1, Cube(1, 0)), (2, Cube(1, 0))],
            [(1, Cube(1, 1)), (2, Cube(1, 1))],
        ],
        shaped=False,
    )


def test_minimum_implicant():
    """Fewest literals first, lowest care mask first; greedy above the exact limit."""
    assert minimum_implicant({0b00, 0b01}, 2) == Cube(0b10, 0)
    assert minimum_implicant({0b00, 0b01}, 2, exact_limit=0) == Cube(0b10, 0)
    assert minimum_implicant({0b11}, 2) == Cube(0b11, 0b11)
    assert minimum_implicant({0, 1, 2, 3}, 2) == TRUE_CUBE
    with pytest.raises(ExtractionError):
        minimum_implicant(set(), 2)


def test_arbiter_machine(arbiter_machine):
    """The arbiter needs three states and withholds g1 while nothing is requested."""
    assert arbiter_machine.n_states == 3
    assert arbiter_machine.output(0, 0) == Cube(0b01, 0)
    assert arbiter_machine.output(0, 0).format(("g1", "g2")) == "!g1"
    for q in range(arbiter_machine.n_states):
        for inputs in range(4):
            cube = arbiter_machine.output(q, inputs)
            assert cube.value & cube.care & 0b11 != 0b11


def test_extraction_needs_a_winning_strategy(arbiter_outcome, arbiter_alphabet):
    with pytest.raises(ExtractionError):
        extract_mealy(arbiter_outcome.arena, {}, arbiter_alphabet)


def test_dump_and_run(arbiter_machine):
    text = dump_mealy(arbiter_machine)
    assert text.startswith("mealy 3 inputs r1 r2 outputs g1 g2\n")
    assert text.count("state ") == 3
    assert len(run(arbiter_machine, [0, 1, 2, 3])) == 4


def test_state_encodings(arbiter_machine, arbiter_outcome):
    """Unstructured codes count up; structured codes concatenate component numbers."""
    raw = encode(arbiter_machine, EncodingMode.UNSTRUCTURED)
    assert raw.width == bits_for(3) == 2
    assert [raw.format(q) for q in range(3)] == ["00", "01", "10"]
    assert raw.decode(2) == 2
    with pytest.raises(KeyError):
        raw.decode(3)
    structured = encode(arbiter_machine, EncodingMode.STRUCTURED, arbiter_outcome.handle)
    assert structured.code(0) == 0
    assert {structured.format(q) for q in range(3)} == {"0000", "0100", "0011"}
    with pytest.raises(ExtractionError):
        encode(arbiter_machine, EncodingMode.STRUCTURED)
    with pytest.raises(ValueError):
        encode(arbiter_machine, EncodingMode.PORTFOLIO)


def test_structured_encoding_needs_product_shape(arbiter_outcome):
    with pytest.raises(ExtractionError):
        encode_structured(toggle_machine(), arbiter_outcome.handle)


def test_single_state_encoding():
    machine = MealyMachine(RG, [], [[(0, Cube(1, 1))] * 2], shaped=False)
    encoding = encode(machine, EncodingMode.UNSTRUCTURED)
    assert encoding.width == 0
    assert encoding.format(0) == ""


def test_reduction_merges_compatible_states():
    """Rows agreeing wherever both are specified collapse; outputs become more specific."""
    machine = MealyMachine(
        RG,
        [],
        [[(1, TRUE_CUBE)] * 2, [(0, Cube(1, 1))] * 2],
        shaped=False,
    )
    reduced = reduce_mealy(machine)
    assert reduced.n_states == 1
    assert reduced.transitions[0] == [(0, Cube(1, 1))] * 2
    assert reduce_mealy(reduced) is reduced


def test_reduction_keeps_conflicting_states():
    machine = toggle_machine()
    reduced = reduce_mealy(machine)
    assert reduced.n_states == 2
    assert not reduced.shaped
    assert reduce_mealy(reduced) is reduced
    assert_implements(machine, to_circuit(reduced, encode(reduced, EncodingMode.UNSTRUCTURED)))


def test_constant_controller_has_no_gates():
    machine = MealyMachine(RG, [], [[(0, Cube(1, 1))] * 2], shaped=False)
    circuit = to_circuit(machine, encode(machine, EncodingMode.UNSTRUCTURED))
    assert circuit.size == 0
    assert write_aiger(circuit) == "aag 1 1 0 1 0\n2\n1\ni0 r\no0 g\n"


@pytest.mark.parametrize("mode", [EncodingMode.UNSTRUCTURED, EncodingMode.STRUCTURED])
def test_circuit_implements_arbiter(arbiter_machine, arbiter_outcome, mode):
    encoding = encode(arbiter_machine, mode, arbiter_outcome.handle)
    circuit = to_circuit(arbiter_machine, encoding)
    assert len(circuit.latches) == encoding.width
    assert_implements(arbiter_machine, circuit)


def test_circuit_implements_delay():
    machine = toggle_machine()
    circuit = to_circuit(machine, encode(machine, EncodingMode.UNSTRUCTURED))
    assert_implements(machine, circuit)
    assert simulate(circuit, [1, 0, 0, 1, 1])[1:] == [1, 0, 0, 1]


def test_portfolio_is_smallest(arbiter_machine, arbiter_outcome):
    handle = arbiter_outcome.handle
    best = build_controller(arbiter_machine, EncodingMode.PORTFOLIO, handle)
    candidates = [
        build_controller(arbiter_machine, EncodingMode.UNSTRUCTURED, reduce=True),
        build_controller(arbiter_machine, EncodingMode.STRUCTURED, handle),
        build_controller(arbiter_machine, EncodingMode.UNSTRUCTURED),
    ]
    assert best.size == min(c.size for c in candidates)
    assert best.label in {c.label for c in candidates}
    with pytest.raises(ExtractionError):
        build_controller(arbiter_machine, EncodingMode.PORTFOLIO)


def test_aiger_round_trip(arbiter_machine):
    circuit = to_circuit(arbiter_machine, encode(arbiter_machine, EncodingMode.UNSTRUCTURED))
    parsed = read_aiger(write_aiger(circuit))
    assert parsed.inputs == ["r1", "r2"]
    assert parsed.outputs == ["g1", "g2"]
    assert parsed.latches == circuit.latches
    assert parsed.output_lits == circuit.output_lits
    assert sorted(parsed.ands) == sorted(circuit.ands)
    words = [[a, b, c] for a in range(4) for b in range(4) for c in range(4)]
    for word in words:
        assert simulate(parsed, word) == simulate(circuit, word)


def test_read_aiger_minimal():
    circuit = read_aiger("aag 1 1 0 1 0\n2\n2\nc\ncomment\n")
    assert circuit.inputs == ["i0"]
    assert simulate(circuit, [0, 1, 1]) == [0, 1, 1]


@pytest.mark.parametrize(
    "text",
    [
        "",
        "aag 1 1 0 1\n",
        "aig 1 1 0 1 0\n2\n2\n",
        "aag 0 1 0 0 0\n2\n",
        "aag 1 1 0 1 0\n2\n",
        "aag 1 1 0 1 0\n3\n3\n",
        "aag 2 2 0 0 0\n2\n2\n",
        "aag 2 1 0 1 0\n2\n4\n",
        "aag 3 1 0 1 2\n2\n6\n4 6 2\n6 4 2\n",
        "aag 2 1 1 0 0\n2\n4 2 1\n",
        "aag 1 1 0 1 0\n2\n2\nx0 r\n",
        "aag 1 1 0 1 0\n2\n2\ni3 r\n",
    ],
)
def test_read_aiger_rejects(text):
    with pytest.raises(ValueError):
        read_aiger(text)


def test_to_mealy(arbiter_machine, arbiter_alphabet):
    """Reading a circuit back gives a fully specified machine within the original outputs."""
    circuit = to_circuit(arbiter_machine, encode(arbiter_machine, EncodingMode.UNSTRUCTURED))
    machine = to_mealy(circuit, arbiter_alphabet)
    assert machine.n_states <= 4
    assert all(cube.care == 0b11 for row in machine.transitions for _, cube in row)
    with pytest.raises(AlphabetMismatch):
        to_mealy(circuit, Alphabet(inputs=("a", "b"), outputs=("g1", "g2")))


def test_build_controller_labels(arbiter_machine, arbiter_outcome):
    handle = arbiter_outcome.handle
    reduced = build_controller(arbiter_machine, EncodingMode.UNSTRUCTURED, reduce=True)
    assert reduced.label == "reduced+unstructured"
    structured = build_controller(arbiter_machine, EncodingMode.STRUCTURED, handle)
    assert structured.label == "raw+structured"
    assert structured.size == len(structured.circuit.ands) + structured.encoding.width
