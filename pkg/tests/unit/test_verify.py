"""Tests for lasso membership, controller model checking and quality points."""

import pytest

from ltl_synth.automata import TRUE_CUBE, Cube, build
from ltl_synth.core.exceptions import AlphabetMismatch
from ltl_synth.core.models import CompletionMode
from ltl_synth.extract import MealyMachine, reduce_mealy
from ltl_synth.ltl import Alphabet, annotate, parse
from ltl_synth.verify import (
    LassoWord,
    accepts_lasso,
    product_graph,
    quality,
    rejecting_colour,
    run_colours,
    verify_controller,
)

RG = Alphabet(inputs=("r",), outputs=("g",))
R, G = 0b01, 0b10


def handle_for(text: str, alphabet: Alphabet = RG):
    return build(annotate(parse(text, alphabet)), alphabet)


def constant(cube: Cube, alphabet: Alphabet = RG) -> MealyMachine:
    return MealyMachine(alphabet, [], [[(0, cube)] * (1 << alphabet.n_inputs)], shaped=False)


def test_lasso_membership():
    """Acceptance depends on the loop only for prefix-independent formulas."""
    recurrence = handle_for("G F g")
    assert accepts_lasso(recurrence, LassoWord(loop=(G, 0)))
    assert not accepts_lasso(recurrence, LassoWord(prefix=(G, G), loop=(0,)))
    response = handle_for("G (r -> F g)")
    assert accepts_lasso(response, LassoWord(prefix=(R,), loop=(G,)))
    assert not accepts_lasso(response, LassoWord(prefix=(R,), loop=(0,)))
    assert accepts_lasso(response, LassoWord(loop=(R | G,)))


def test_run_colours_finds_the_cycle():
    colours, start = run_colours(handle_for("G F g"), LassoWord(prefix=(0,), loop=(G, 0)))
    assert 1 <= start < len(colours)
    assert (len(colours) - start) % 2 == 0


def test_lasso_loop_is_not_empty():
    with pytest.raises(ValueError):
        LassoWord(prefix=(0,), loop=())


def test_arbiter_controller_is_correct(arbiter_machine, arbiter_outcome):
    """The extracted arbiter is correct for every completion of its outputs."""
    handle = arbiter_outcome.handle
    assert verify_controller(arbiter_machine, handle)
    assert verify_controller(arbiter_machine, handle, CompletionMode.ALL)
    assert verify_controller(reduce_mealy(arbiter_machine), handle, CompletionMode.ALL)


def test_granting_everything_violates_mutual_exclusion(arbiter_outcome, arbiter_alphabet):
    machine = constant(Cube(0b11, 0b11), arbiter_alphabet)
    assert not verify_controller(machine, arbiter_outcome.handle)


def test_never_granting_starves_requests(arbiter_outcome, arbiter_alphabet):
    machine = constant(Cube(0b11, 0), arbiter_alphabet)
    assert not verify_controller(machine, arbiter_outcome.handle)


def test_completion_modes_differ_on_free_outputs():
    """Leaving g free passes with the default completion of G !g but not with all of them."""
    handle = handle_for("G !g")
    machine = constant(TRUE_CUBE)
    assert verify_controller(machine, handle)
    assert not verify_controller(machine, handle, CompletionMode.ALL)
    graph = product_graph(machine, handle, CompletionMode.ALL)
    assert rejecting_colour(graph, handle.parity) is not None


def test_safety_specification():
    handle = handle_for("G (r -> g)")
    assert verify_controller(constant(Cube(1, 1)), handle, CompletionMode.ALL)
    assert not verify_controller(constant(Cube(1, 0)), handle)


def test_verify_alphabet_mismatch(arbiter_machine):
    with pytest.raises(AlphabetMismatch):
        verify_controller(arbiter_machine, handle_for("G g"))


def test_product_graph_is_closed(arbiter_machine, arbiter_outcome):
    """Every product node has one edge per input under the default completion."""
    graph = product_graph(arbiter_machine, arbiter_outcome.handle)
    assert all(graph.out_degree(node) == 4 for node in graph.nodes)
    assert {q for q, _ in graph.nodes} == {0, 1, 2}


@pytest.mark.parametrize(
    "size,reference,points",
    [(0, 0, 2.0), (9, 0, 1.0), (999, 9, 0.0), (99999, 0, 0.0), (10, 10, 2.0)],
)
def test_quality(size, reference, points):
    assert quality(size, reference).points == pytest.approx(points)


def test_quality_above_two_for_small_solutions():
    assert quality(0, 99).points == pytest.approx(4.0)
    with pytest.raises(ValueError):
        quality(-1, 0)
