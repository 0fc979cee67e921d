"""Tests for the parity game graph, the arena, strategy iteration and the recursive oracle."""

import numpy as np
import pytest

from ltl_synth.automata import Sink, build
from ltl_synth.core.exceptions import SolverError
from ltl_synth.core.models import Player
from ltl_synth.game import (
    GIVE_UP,
    PLUS_INFINITY,
    Ordering,
    ParityGame,
    cmp,
    dump_arena,
    evaluate,
    expand,
    finite,
    format_game,
    init_arena,
    parse_game,
    solve,
    solve_zielonka,
    weight_of,
)
from ltl_synth.ltl import annotate


def random_game(rng: np.random.Generator, boundary_from: int | None = None) -> ParityGame:
    """Random bipartite game with up to 50 nodes and colours 0..3.

    Nodes from ``boundary_from`` on (in breadth-first order from node 0) are left unexplored.
    """
    n = int(rng.integers(2, 51))
    parity = int(rng.integers(0, 2))
    owners = [Player.CONTROLLER if v % 2 == 0 else Player.ENVIRONMENT for v in range(n)]
    targets = {}
    for v in range(n):
        other_side = [w for w in range(n) if w % 2 != v % 2]
        count = int(rng.integers(1, 4))
        targets[v] = [
            (int(rng.choice(other_side)), int(rng.integers(0, 4))) for _ in range(count)
        ]
    explored = set(range(n))
    if boundary_from is not None:
        order, seen = [0], {0}
        for v in order:
            for w, _ in targets[v]:
                if w not in seen:
                    seen.add(w)
                    order.append(w)
        explored = set(order[:boundary_from])
    game = ParityGame(parity)
    for v in range(n):
        game.add_node(owners[v], boundary=v not in explored)
    for v in sorted(explored):
        for w, colour in targets[v]:
            game.add_edge(v, w, colour)
    return game


def test_cmp_orders_weights_lexicographically_by_colour():
    """Low colours dominate; good colours count up, bad ones count down."""
    assert cmp((1, 0), (0, 0), parity=0) is Ordering.GREATER
    assert cmp((0, 1), (0, 0), parity=0) is Ordering.LESS
    assert cmp((0, 1), (0, 0), parity=1) is Ordering.GREATER
    assert cmp((1, 5), (2, 0), parity=0) is Ordering.LESS
    assert cmp((2, 3), (2, 3), parity=0) is Ordering.EQUAL
    with pytest.raises(ValueError):
        cmp((1,), (1, 0), parity=0)


@pytest.mark.parametrize("parity", [0, 1])
def test_cmp_is_a_strict_total_order(parity):
    """On random weight triples the order is antisymmetric and transitive; EQUAL means identical."""
    rng = np.random.default_rng(7 + parity)
    samples = rng.integers(0, 3, size=(10_000, 3, 4))
    for row in samples:
        a, b, c = (tuple(int(x) for x in w) for w in row)
        ab, bc, ac = cmp(a, b, parity), cmp(b, c, parity), cmp(a, c, parity)
        assert cmp(b, a, parity) == -ab
        assert (ab is Ordering.EQUAL) == (a == b)
        assert cmp(a, a, parity) is Ordering.EQUAL
        if ab == bc:
            assert ac == ab
        elif ab is Ordering.EQUAL:
            assert ac == bc
        elif bc is Ordering.EQUAL:
            assert ac == ab


def test_distances_embed_weights_between_the_infinities():
    """Finite distances sit strictly between -inf and +inf and keep their weight."""
    d = finite((1, 2), parity=0)
    assert (0,) < d < PLUS_INFINITY
    assert weight_of(d, parity=0) == (1, 2)
    assert weight_of(PLUS_INFINITY, parity=0) is None


def test_game_text_round_trip():
    """Parsing a formatted game and formatting again gives the same text."""
    text = "parity 0\n0 C 1:0 2:1\n1 E 1:0\n2 E boundary\n3 E won-by-controller 3:0\n"
    game = parse_game(text)
    assert game.n_nodes == 4
    assert list(game.boundary) == [2]
    assert game.sink_winner == {3: Player.CONTROLLER}
    assert format_game(game) == text


def test_parse_game_rejects_bad_text():
    """Missing header, unknown owners and dangling edges are errors."""
    for text in ["0 C 0:0\n", "parity 0\n0 X 0:0\n", "parity 0\n0 C 5:0\n", "parity 0\n1 C\n"]:
        with pytest.raises(ValueError):
            parse_game(text)


def test_solve_small_game():
    """The controller moves towards the good cycle and loses where the environment can trap it."""
    game = parse_game(
        "parity 0\n0 C 1:1 2:1\n1 E 0:1 3:1\n2 E 4:0\n3 C 1:1\n4 C 2:0\n"
    )
    result = solve(game, Player.CONTROLLER, 0)
    assert result.winning_region == {0, 2, 4}
    assert result.strategy[0] == frozenset({1})
    assert solve_zielonka(game)[Player.ENVIRONMENT] == {1, 3}


def test_evaluate_detects_a_losing_cycle_in_the_strategy():
    """A strategy closing a bad cycle the opponent can enter does not stabilise."""
    game = parse_game("parity 0\n0 C 1:1\n1 E 0:1 2:0\n2 C 1:0\n")
    with pytest.raises(SolverError):
        evaluate(game, {0: frozenset({0})}, Player.CONTROLLER, 0)
    values = evaluate(game, {0: frozenset({GIVE_UP})}, Player.CONTROLLER, 0)
    assert values[0] == finite((0, 0), parity=0)


def test_solver_agrees_with_recursive_oracle():
    """On random total games both solvers compute the same winners, for both players."""
    rng = np.random.default_rng(11)
    for _ in range(200):
        game = random_game(rng)
        regions = solve_zielonka(game)
        controller = solve(game, Player.CONTROLLER, game.parity, check_progress=True)
        environment = solve(game, Player.ENVIRONMENT, 1 - game.parity, check_progress=True)
        assert controller.winning_region == regions[Player.CONTROLLER]
        assert environment.winning_region == regions[Player.ENVIRONMENT]


def test_partial_games_under_approximate():
    """Nodes won with boundary losing stay won once the game is fully explored."""
    rng = np.random.default_rng(5)
    for _ in range(50):
        seed = int(rng.integers(0, 2**31))
        full = random_game(np.random.default_rng(seed))
        regions = solve_zielonka(full)
        for k in (1, 3, 8, 20):
            partial = random_game(np.random.default_rng(seed), boundary_from=k)
            won = solve(partial, Player.CONTROLLER, partial.parity).winning_region
            lost = solve(partial, Player.ENVIRONMENT, 1 - partial.parity).winning_region
            assert won <= regions[Player.CONTROLLER]
            assert lost <= regions[Player.ENVIRONMENT]


def test_reused_strategy_on_growing_arena(arbiter_formula, arbiter_alphabet):
    """Solving each layer from the previous strategy matches solving from scratch."""
    handle = build(annotate(arbiter_formula), arbiter_alphabet)
    arena = init_arena(handle.initial(), handle.parity)
    previous = None
    while arena.boundary:
        expand(arena, list(arena.boundary), handle)
        reused = solve(arena, Player.CONTROLLER, arena.parity, previous=previous)
        fresh = solve(arena, Player.CONTROLLER, arena.parity)
        assert reused.winning_region == fresh.winning_region
        previous = reused.strategy


def test_init_arena(arbiter_formula, arbiter_alphabet):
    """The initial node comes first, followed by the two sinks."""
    handle = build(annotate(arbiter_formula), arbiter_alphabet)
    arena = init_arena(handle.initial(), handle.parity)
    assert (arena.initial, arena.bottom, arena.top) == (0, 1, 2)
    assert list(arena.boundary) == [0]
    assert arena.states[arena.bottom] is Sink.BOTTOM
    assert arena.sink_winner == {1: Player.ENVIRONMENT, 2: Player.CONTROLLER}


def test_expand_arbiter_initial_node(arbiter_formula, arbiter_alphabet):
    """Expanding the initial state adds one controller node per input class."""
    handle = build(annotate(arbiter_formula), arbiter_alphabet)
    arena = init_arena(handle.initial(), handle.parity)
    new = expand(arena, [arena.initial], handle)
    assert len(new) == 3
    assert list(arena.boundary) == new
    assert len(arena.intermediate_nodes()) == 4
    assert all(arena.owner[m] is Player.CONTROLLER for m in arena.intermediate_nodes())
    assert all(arena.depth[v] == 1 for v in new)
    with pytest.raises(ValueError):
        expand(arena, [arena.initial], handle)
    assert "# " in dump_arena(arena, arbiter_alphabet.names)


def test_full_arbiter_arena(arbiter_formula, arbiter_alphabet):
    """On the fully explored arbiter arena both solvers let the controller win."""
    handle = build(annotate(arbiter_formula), arbiter_alphabet)
    arena = init_arena(handle.initial(), handle.parity)
    while arena.boundary:
        expand(arena, list(arena.boundary), handle)
    assert arena.is_total()
    assert solve(arena, Player.CONTROLLER, arena.parity).wins(arena.initial)
    regions = solve_zielonka(arena)
    assert arena.initial in regions[Player.CONTROLLER]
    assert arena.bottom in regions[Player.ENVIRONMENT]
